#pragma once

// Exhaustive commutativity checks: both sides of each equation are evaluated
// on every assignment of simples (and group elements) to the variables.
//
// Assignments are enumerated in a fixed order (grading-group variables most
// significant, then G variables, then object variables in index order), so
// the first failing assignment is well defined. Workers scan contiguous
// ranges and the smallest failing index wins, which keeps reports identical
// for any worker count.

#include <algorithm>
#include <atomic>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "tortile/evaluator.hpp"

namespace tortile {

struct Equation {
  MorTerm lhs, rhs;
};

struct DiagramSpec {
  std::vector<Equation> equations;
  /// Object variable -> required grade (its domain becomes one graded slice).
  std::vector<std::pair<int, GroupExpr>> restrictions;
  /// Compare per-simple blocks instead of whole matrices; endpoints need only
  /// agree as multisets of simples, each simple appearing at most once.
  bool literal = false;
};

struct DiagramWitness {
  Assignment assignment;
  std::string assignment_text;
  std::size_t equation = 0;
  std::string lhs, rhs;
  std::string message;
};

struct DiagramReport {
  bool pass = true;
  long long checked = 0;
  std::optional<DiagramWitness> witness;
};

inline std::string assignment_to_string(const Assignment& a, const StructureBundle& b, const TermContext* ctx) {
  std::string s;
  auto add = [&](const std::string& k, const std::string& v) {
    if (!s.empty()) s += ", ";
    s += k + "=" + v;
  };
  TermContext fallback;
  const TermContext& c = ctx ? *ctx : fallback;
  for (std::size_t i = 0; i < a.pi.size(); ++i)
    add(c.group_var(static_cast<int>(i), GroupDomain::Pi), b.pi().name(a.pi[i]));
  for (std::size_t i = 0; i < a.g.size(); ++i)
    add(c.group_var(static_cast<int>(i), GroupDomain::G), b.g_action ? b.g_action->G.name(a.g[i]) : std::to_string(a.g[i]));
  for (std::size_t i = 0; i < a.objects.size(); ++i)
    add(c.object_var(static_cast<int>(i)), b.cat.simple(a.objects[i]).name);
  return s.empty() ? "(no variables)" : s;
}

namespace detail {

template <class S>
class DiagramRunner {
 public:
  using Mor = typename Engine<S>::Mor;

  DiagramRunner(const Engine<S>& e, const DiagramSpec& spec) : e_(e), spec_(spec) {
    for (const auto& eq : spec.equations) {
      detail::count(eq.lhs, counts_);
      detail::count(eq.rhs, counts_);
    }
    for (const auto& [v, g] : spec.restrictions) {
      counts_.objects = std::max(counts_.objects, v + 1);
      detail::count(g, counts_);
    }
    const auto& b = e.bundle();
    radix_.assign(static_cast<std::size_t>(counts_.pi), b.pi().order());
    const int gorder = b.g_action ? b.g_action->G.order() : (counts_.g > 0 ? 0 : 1);
    radix_.insert(radix_.end(), static_cast<std::size_t>(counts_.g), gorder);
    radix_.insert(radix_.end(), static_cast<std::size_t>(counts_.objects), b.n());
    total_ = 1;
    for (int r : radix_) total_ *= r;
  }

  long long total() const { return total_; }

  Assignment decode(long long idx) const {
    std::vector<int> digits(radix_.size());
    for (std::size_t k = radix_.size(); k-- > 0;) {
      digits[k] = static_cast<int>(idx % radix_[k]);
      idx /= radix_[k];
    }
    Assignment a;
    auto it = digits.begin();
    a.pi.assign(it, it + counts_.pi);
    it += counts_.pi;
    a.g.assign(it, it + counts_.g);
    it += counts_.g;
    a.objects.assign(it, digits.end());
    return a;
  }

  bool admissible(const Assignment& a) const {
    for (const auto& [v, g] : spec_.restrictions)
      if (e_.bundle().grade(a.objects[static_cast<std::size_t>(v)]) != e_.eval_group(g, a)) return false;
    return true;
  }

  /// Failure description for one assignment, or nullopt when all equations hold.
  std::optional<DiagramWitness> check(const Assignment& a) const {
    for (std::size_t k = 0; k < spec_.equations.size(); ++k) {
      DiagramWitness w;
      w.assignment = a;
      w.equation = k;
      try {
        const Mor l = e_.eval_mor(spec_.equations[k].lhs, a);
        const Mor r = e_.eval_mor(spec_.equations[k].rhs, a);
        if (spec_.literal) {
          if (auto msg = literal_mismatch(l, r, w)) {
            w.message = *msg;
            return w;
          }
        } else if (!same_tree(l.src, r.src) || !same_tree(l.tgt, r.tgt)) {
          const auto& c = e_.bundle().cat;
          w.message = "endpoints differ: " + tree_to_string(l.src, c) + " -> " + tree_to_string(l.tgt, c) + " vs " +
                      tree_to_string(r.src, c) + " -> " + tree_to_string(r.tgt, c);
          return w;
        } else if (!(l.m == r.m)) {
          w.message = "matrices differ";
          w.lhs = l.m.to_string();
          w.rhs = r.m.to_string();
          return w;
        }
      } catch (const std::exception& ex) {
        w.message = std::string("evaluation error: ") + ex.what();
        return w;
      }
    }
    return std::nullopt;
  }

  DiagramReport run(int workers, const TermContext* ctx) const {
    workers = std::max(1, workers);
    if (total_ < workers) workers = static_cast<int>(std::max<long long>(1, total_));
    std::atomic<long long> best{std::numeric_limits<long long>::max()};
    struct Slot {
      long long fail_idx = -1;
      long long valid = 0;
      std::optional<DiagramWitness> w;
    };
    std::vector<Slot> slots(static_cast<std::size_t>(workers));
    auto work = [&](int w) {
      const long long lo = total_ * w / workers, hi = total_ * (w + 1) / workers;
      Slot& s = slots[static_cast<std::size_t>(w)];
      for (long long i = lo; i < hi; ++i) {
        if (i >= best.load(std::memory_order_relaxed)) return;
        const Assignment a = decode(i);
        bool ok_domain = true;
        try {
          ok_domain = admissible(a);
        } catch (const std::exception& ex) {
          DiagramWitness wit;
          wit.assignment = a;
          wit.message = std::string("evaluation error: ") + ex.what();
          record(s, best, i, std::move(wit));
          return;
        }
        if (!ok_domain) continue;
        ++s.valid;
        if (auto fail = check(a)) {
          record(s, best, i, std::move(*fail));
          return;
        }
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }
    DiagramReport rep;
    const Slot* first = nullptr;
    for (const auto& s : slots)
      if (s.fail_idx >= 0 && (!first || s.fail_idx < first->fail_idx)) first = &s;
    if (!first) {
      for (const auto& s : slots) rep.checked += s.valid;
      return rep;
    }
    rep.pass = false;
    rep.witness = first->w;
    rep.witness->assignment_text = assignment_to_string(rep.witness->assignment, e_.bundle(), ctx);
    for (long long i = 0; i <= first->fail_idx; ++i) {
      try {
        if (admissible(decode(i))) ++rep.checked;
      } catch (const std::exception&) {
        ++rep.checked;
      }
    }
    return rep;
  }

 private:
  template <class Slot>
  static void record(Slot& s, std::atomic<long long>& best, long long i, DiagramWitness w) {
    s.fail_idx = i;
    s.w = std::move(w);
    long long cur = best.load();
    while (i < cur && !best.compare_exchange_weak(cur, i)) {
    }
  }

  // Per-simple comparison; each simple may occur at most once per endpoint.
  std::optional<std::string> literal_mismatch(const Mor& l, const Mor& r, DiagramWitness& w) const {
    const int n = e_.bundle().n();
    auto positions = [&](const TreeP& t, std::vector<int>& pos) -> bool {
      pos.assign(static_cast<std::size_t>(n), -1);
      for (int i = 0; i < t->dim(); ++i) {
        int& p = pos[static_cast<std::size_t>(t->simple_at(i))];
        if (p >= 0) return false;
        p = i;
      }
      return true;
    };
    std::vector<int> ls, lt, rs, rt;
    if (!positions(l.src, ls) || !positions(l.tgt, lt) || !positions(r.src, rs) || !positions(r.tgt, rt))
      return std::string("literal comparison needs multiplicity-free endpoints");
    if (!same_support(ls, rs)) return std::string("sources contain different simples");
    if (!same_support(lt, rt)) return std::string("targets contain different simples");
    const auto& cat = e_.bundle().cat;
    for (int s = 0; s < n; ++s) {
      const std::size_t k = static_cast<std::size_t>(s);
      if (ls[k] < 0 || lt[k] < 0) continue;
      const S& a = l.m(static_cast<std::size_t>(lt[k]), static_cast<std::size_t>(ls[k]));
      const S& b = r.m(static_cast<std::size_t>(rt[k]), static_cast<std::size_t>(rs[k]));
      if (!(a == b)) {
        w.lhs = cat.simple(s).name + ": " + a.to_string();
        w.rhs = cat.simple(s).name + ": " + b.to_string();
        return "blocks differ at " + cat.simple(s).name;
      }
    }
    return std::nullopt;
  }

  static bool same_support(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if ((a[i] < 0) != (b[i] < 0)) return false;
    return true;
  }

  const Engine<S>& e_;
  const DiagramSpec& spec_;
  VarCounts counts_;
  std::vector<int> radix_;
  long long total_ = 1;
};

}  // namespace detail

template <class S>
DiagramReport check_diagram(const Engine<S>& engine, const DiagramSpec& spec, int workers = 1,
                            const TermContext* ctx = nullptr) {
  return detail::DiagramRunner<S>(engine, spec).run(workers, ctx);
}

/// Single-equation form over a bundle.
template <class S = Cyclotomic>
DiagramReport check_diagram(const MorTerm& lhs, const MorTerm& rhs, const StructureBundle& b, int workers = 1,
                            const TermContext* ctx = nullptr) {
  const Engine<S> engine(b);
  DiagramSpec spec;
  spec.equations.push_back({lhs, rhs});
  return check_diagram(engine, spec, workers, ctx);
}

}  // namespace tortile
