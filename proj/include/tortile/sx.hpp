#pragma once

// Evaluating cobordism words under an assignment of linear functors to the
// generators, checking the relation set, and reading a bundle back off an
// assignment. Functors between semisimple slices are recorded by their
// action on simple tuples (multiplicities of simple tuples of the target);
// the structure 2-cells are kept as explicit tables.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tortile/suites.hpp"
#include "tortile/surface.hpp"

namespace tortile {

class SXError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using SimpleTuple = std::vector<int>;
using TupleCounts = std::map<SimpleTuple, long long>;

/// A linear functor between products of graded slices, by its values on simple tuples.
struct FunctorTable {
  Signature source, target;
  std::map<SimpleTuple, TupleCounts> values;
  friend bool operator==(const FunctorTable&, const FunctorTable&) = default;
};

/// Components of the structure 2-cells: the reassociating and capping moves
/// of pants, the crossing moves, the untwisting diffeomorphism and the Dehn
/// twist. Keys follow the bundle sections of the same shape.
struct TwoCellTable {
  std::map<std::array<int, 4>, Mat> reassociate;
  std::vector<Cyclotomic> left_disc, right_disc;
  std::map<std::array<int, 4>, Mat> crossing;
  std::map<std::array<int, 3>, Mat> untwist;
  std::vector<Cyclotomic> dehn;
};

struct SXAssignment {
  StructureBundle bundle;  // the slices: simples, grades and pi; other sections unused
  std::optional<GroupTable> G;
  std::map<Generator, FunctorTable> generators;  // Cyl and Swap are fixed, never stored
  TwoCellTable cells;

  const GroupTable& pi() const { return bundle.pi(); }
  const GroupTable* g_group() const { return G ? &*G : nullptr; }
};

/// A bundle reduced to its slices.
inline StructureBundle slices_of(const StructureBundle& b) {
  StructureBundle s;
  s.cat = b.cat;
  return s;
}

inline std::string tuple_to_string(const SimpleTuple& t, const GradedCategory& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + c.simple(t[i]).name;
  return s + ")";
}

inline std::string counts_to_string(const TupleCounts& m, const GradedCategory& c) {
  if (m.empty()) return "0";
  std::string s;
  for (const auto& [t, k] : m) {
    if (!s.empty()) s += " + ";
    s += (k == 1 ? "" : std::to_string(k) + " ") + tuple_to_string(t, c);
  }
  return s;
}

namespace sx_detail {

/// Every simple tuple with the given grades, in lexicographic order.
inline std::vector<SimpleTuple> tuples(const GradedCategory& c, const Signature& sig) {
  std::vector<SimpleTuple> out{{}};
  for (int g : sig) {
    std::vector<SimpleTuple> next;
    const auto options = c.simples_of_grade(g);
    for (const auto& t : out)
      for (int s : options) {
        auto x = t;
        x.push_back(s);
        next.push_back(std::move(x));
      }
    out = std::move(next);
  }
  return out;
}

inline std::string gen_name(const Generator& g, const SXAssignment& a) {
  return surface_detail::gen_to_sexp(g, a.pi(), a.g_group());
}

inline TupleCounts apply_generator(const SXAssignment& a, const Generator& g, const SimpleTuple& in) {
  if (g.kind == GenKind::Cyl) return {{in, 1}};
  if (g.kind == GenKind::Swap) return {{{in[1], in[0]}, 1}};
  auto it = a.generators.find(g);
  if (it == a.generators.end()) throw SXError("unassigned generator " + gen_name(g, a));
  auto v = it->second.values.find(in);
  if (v == it->second.values.end())
    throw SXError("generator " + gen_name(g, a) + " has no value at " + tuple_to_string(in, a.bundle.cat));
  return v->second;
}

inline TupleCounts apply_layer(const SXAssignment& a, const Layer& layer, const SimpleTuple& in) {
  TupleCounts acc{{{}, 1}};
  std::size_t pos = 0;
  for (const auto& g : layer) {
    const std::size_t k = gen_inputs(g, a.pi()).size();
    const SimpleTuple part(in.begin() + static_cast<std::ptrdiff_t>(pos), in.begin() + static_cast<std::ptrdiff_t>(pos + k));
    pos += k;
    const TupleCounts out = apply_generator(a, g, part);
    TupleCounts next;
    for (const auto& [t1, k1] : acc)
      for (const auto& [t2, k2] : out) {
        auto t = t1;
        t.insert(t.end(), t2.begin(), t2.end());
        next[t] += k1 * k2;
      }
    acc = std::move(next);
  }
  return acc;
}

inline TupleCounts apply_word(const SXAssignment& a, const CobordismWord& w, const SimpleTuple& in) {
  TupleCounts cur{{in, 1}};
  for (const auto& layer : w.slices) {
    TupleCounts next;
    for (const auto& [t, k] : cur)
      for (const auto& [t2, k2] : apply_layer(a, layer, t)) next[t2] += k * k2;
    cur.clear();
    for (auto& [t, k] : next)
      if (k != 0) cur[t] = k;
  }
  return cur;
}

inline bool uses_only_assigned(const SXAssignment& a, const CobordismWord& w) {
  for (const auto& l : w.slices)
    for (const auto& g : l)
      if (g.kind != GenKind::Cyl && g.kind != GenKind::Swap && !a.generators.count(g)) return false;
  return true;
}

inline int single_simple(const TupleCounts& m) {
  if (m.size() != 1 || m.begin()->second != 1 || m.begin()->first.size() != 1) return -1;
  return m.begin()->first[0];
}

}  // namespace sx_detail

/// The functor a word evaluates to, on every simple tuple of its source.
inline FunctorTable eval_word(const CobordismWord& w, const SXAssignment& a) {
  validate_word(w, a.pi());
  FunctorTable f{w.source, w.target, {}};
  for (const auto& t : sx_detail::tuples(a.bundle.cat, w.source)) f.values[t] = sx_detail::apply_word(a, w, t);
  return f;
}

// ---------------------------------------------------------------------------
// Reading a bundle off the tables.

namespace sx_detail {

inline const FunctorTable& table(const SXAssignment& a, const Generator& g) {
  auto it = a.generators.find(g);
  if (it == a.generators.end()) throw SXError("unassigned generator " + gen_name(g, a));
  return it->second;
}

inline bool has_all(const SXAssignment& a, GenKind kind, int count) {
  for (int x = 0; x < count; ++x)
    if (!a.generators.count({kind, x, 0})) return false;
  return true;
}

}  // namespace sx_detail

/// The bundle the assignment describes, without checking any relation.
inline StructureBundle assemble_bundle(const SXAssignment& a) {
  using namespace sx_detail;
  const auto& cat = a.bundle.cat;
  const auto& pi = a.pi();
  const int n = cat.size();
  StructureBundle b;
  b.cat = cat;
  b.fusion.assign(static_cast<std::size_t>(n) * n * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const auto& t = table(a, gen::pants(cat.grade(x), cat.grade(y)));
      auto v = t.values.find({x, y});
      if (v == t.values.end()) throw SXError("pants table misses " + tuple_to_string({x, y}, cat));
      for (const auto& [out, k] : v->second) {
        if (out.size() != 1) throw SXError("pants value is not a single-slice object");
        b.set_N(x, y, out[0], static_cast<int>(k));
      }
    }
  const auto& cod = table(a, gen::codisc());
  const int unit = cod.values.count({}) ? single_simple(cod.values.at({})) : -1;
  if (unit != cat.unit()) throw SXError("the capping disc does not produce the unit simple");

  b.sigma.assign(static_cast<std::size_t>(pi.order()), std::vector<int>(static_cast<std::size_t>(n), -1));
  for (int g = 0; g < pi.order(); ++g)
    for (int x = 0; x < n; ++x) {
      const auto& t = table(a, gen::crosscyl(cat.grade(x), g));
      auto v = t.values.find({x});
      const int s = v == t.values.end() ? -1 : single_simple(v->second);
      if (s < 0) throw SXError("crossing cylinder does not send " + cat.simple(x).name + " to a simple");
      b.sigma[static_cast<std::size_t>(g)][static_cast<std::size_t>(x)] = s;
    }

  b.F = a.cells.reassociate;
  b.l = a.cells.left_disc;
  b.r = a.cells.right_disc;
  b.mu = a.cells.crossing;
  if (!a.cells.untwist.empty()) b.braiding = BraidingData{a.cells.untwist};
  if (!a.cells.dehn.empty()) b.theta = a.cells.dehn;

  if (has_all(a, GenKind::Pair, pi.order()) && has_all(a, GenKind::CoPair, pi.order())) {
    FormData f;
    for (int al = 0; al < pi.order(); ++al) {
      for (const auto& [in, out] : table(a, gen::pair(al)).values) {
        auto it = out.find({});
        if (it != out.end() && it->second != 0) f.pairing[{in[0], in[1]}] = static_cast<int>(it->second);
      }
      const auto& cp = table(a, gen::copair(al));
      if (cp.values.count({}))
        for (const auto& [t, k] : cp.values.at({}))
          if (k != 0) f.E[{t[0], t[1]}] = static_cast<int>(k);
    }
    b.forms = std::move(f);
  }
  if (a.G && has_all(a, GenKind::Pi2Cyl, a.G->order())) {
    GActionData ga;
    ga.G = *a.G;
    for (int g = 0; g < a.G->order(); ++g) {
      const auto& t = table(a, gen::pi2cyl(g));
      auto v = t.values.find({cat.unit()});
      const int s = v == t.values.end() ? -1 : single_simple(v->second);
      if (s < 0) throw SXError("sphere cylinder " + a.G->name(g) + " does not send the unit to a simple");
      ga.rho.push_back(s);
    }
    b.g_action = std::move(ga);
  }
  return b;
}

// ---------------------------------------------------------------------------
// Relations.

namespace sx_detail {

// Every table stays inside its declared slices.
inline RowResult grading_row(const SXAssignment& a) {
  RowResult r{"rel.grading", "generator values lie in the target slices", true, 0, "", "", ""};
  const auto& cat = a.bundle.cat;
  for (const auto& [g, t] : a.generators) {
    const Signature in = gen_inputs(g, a.pi()), out = gen_outputs(g, a.pi());
    for (const auto& src : tuples(cat, in)) {
      ++r.checked;
      auto v = t.values.find(src);
      std::string problem;
      if (v == t.values.end()) {
        problem = "no value";
      } else {
        for (const auto& [tu, k] : v->second) {
          bool ok = tu.size() == out.size() && k >= 0;
          for (std::size_t i = 0; ok && i < tu.size(); ++i)
            ok = tu[i] >= 0 && tu[i] < cat.size() && cat.grade(tu[i]) == out[i];
          if (!ok) problem = "value " + counts_to_string(v->second, cat) + " leaves the target slices";
        }
      }
      if (!problem.empty() && r.pass) {
        r.pass = false;
        r.witness = gen_name(g, a) + " at " + tuple_to_string(src, cat) + ": " + problem;
      }
    }
  }
  return r;
}

}  // namespace sx_detail

/// Relation rows: table grading, every word-relation family whose generators
/// are assigned, then the 2-cell relations on the bundle the tables describe.
inline SuiteReport check_relations(const SXAssignment& a, int workers = 1) {
  using namespace sx_detail;
  SuiteReport rep;
  rep.suite = "relations";
  rep.rows.push_back(grading_row(a));
  const auto& cat = a.bundle.cat;
  const RelationSet rs = builtin_relations(a.pi(), a.g_group());

  std::vector<std::string> order;
  std::map<std::string, std::vector<const WordRelation*>> families;
  for (const auto& rel : rs.words) {
    if (!families.count(rel.id)) order.push_back(rel.id);
    families[rel.id].push_back(&rel);
  }
  for (const auto& id : order) {
    const auto& list = families[id];
    bool assigned = true;
    for (const auto* rel : list) assigned = assigned && uses_only_assigned(a, rel->lhs) && uses_only_assigned(a, rel->rhs);
    if (!assigned) continue;
    RowResult r{id, "", true, 0, "", "", ""};
    for (const auto* rel : list) {
      for (const auto& t : tuples(cat, rel->lhs.source)) {
        ++r.checked;
        TupleCounts l, rr;
        std::string err;
        try {
          l = apply_word(a, rel->lhs, t);
          rr = apply_word(a, rel->rhs, t);
        } catch (const SXError& e) {
          err = e.what();
        }
        if ((!err.empty() || l != rr) && r.pass) {
          r.pass = false;
          r.witness = "labels " + rel->labels + " at " + tuple_to_string(t, cat) + ": " + (err.empty() ? "values differ" : err);
          r.lhs = counts_to_string(l, cat);
          r.rhs = counts_to_string(rr, cat);
        }
      }
      if (!r.pass) break;
    }
    rep.rows.push_back(std::move(r));
  }

  std::optional<StructureBundle> cb;
  RowResult tables{"cell.tables", "2-cell tables assemble into a bundle", true, 1, "", "", ""};
  try {
    cb = assemble_bundle(a);
    auto v = validate_bundle(*cb);
    if (auto* f = v.first_failure()) {
      tables.pass = false;
      tables.witness = f->check + ": " + f->witness;
    }
  } catch (const std::exception& e) {
    tables.pass = false;
    tables.witness = e.what();
  }
  rep.rows.push_back(tables);
  if (!tables.pass || !cb->braiding || !cb->theta) return rep;
  const Engine<Cyclotomic> engine(*cb);
  for (const auto& row : balanced_rows()) {
    RowResult r = run_row(engine, row, workers);
    r.id = "cell." + r.id;
    rep.rows.push_back(std::move(r));
  }
  return rep;
}

/// The balanced structure read off an assignment whose relations all hold.
inline StructureBundle derive_balanced(const SXAssignment& a, int workers = 1) {
  const SuiteReport rep = check_relations(a, workers);
  if (const RowResult* f = rep.first_failure()) throw SXError("relation " + f->id + " fails: " + f->witness);
  StructureBundle b = assemble_bundle(a);
  if (!b.braiding || !b.theta) throw SXError("untwisting or Dehn twist components are missing");
  return b;
}

/// The sphere-group action, after its relations are checked.
inline GActionData derive_pi2_action(const SXAssignment& a) {
  if (!a.G) {
    GActionData ga;
    ga.rho = {a.bundle.cat.unit()};
    return ga;
  }
  if (!sx_detail::has_all(a, GenKind::Pi2Cyl, a.G->order())) throw SXError("sphere cylinders are not all assigned");
  const SuiteReport rep = check_relations(a);
  for (const auto& r : rep.rows)
    if (r.id.rfind("rel.pi2", 0) == 0 && !r.pass) throw SXError("relation " + r.id + " fails: " + r.witness);
  return *assemble_bundle(a).g_action;
}

/// a -> J(hom(a, -)) from the forms, after the pairing identities are checked.
inline std::vector<int> derive_involution(const StructureBundle& b) {
  if (!b.forms) throw SXError("bundle has no forms");
  for (const auto& row : forms_rows()) {
    if (row.id == "F.frobenius") continue;
    RowResult r = row.data(b);
    if (!r.pass) throw SXError("degenerate form (" + row.id + "): " + r.witness);
  }
  return suite_detail::form_involution(b);
}

// ---------------------------------------------------------------------------
// Self-duality with respect to hom.

/// Component isomorphisms for the hom self-duality, one scalar per simple
/// datum (multiplicity-free bundles only).
struct SelfDualWitness {
  std::vector<Cyclotomic> eps;                   // hom(U,U) = <U*,U>
  std::map<std::array<int, 3>, Cyclotomic> q;    // pants: hom(U*V, W) = hom(U, W*V*), (U,V,W)
  std::map<std::pair<int, int>, Cyclotomic> w;   // crossing cylinder (gamma, U)
  std::map<std::pair<int, int>, Cyclotomic> v;   // sphere cylinder (g, U)
  std::vector<Cyclotomic> t;                     // Dehn twist square, per simple
  std::map<std::array<int, 3>, Cyclotomic> u;    // untwisting square, (U,V,W)
};

namespace sx_detail {

inline Cyclotomic scalar_of(const Mat& m) {
  if (m.rows() != 1 || m.cols() != 1) throw SXError("expected a 1x1 component");
  return m(0, 0);
}

inline Cyclotomic r_scalar(const StructureBundle& b, int x, int y, int c) {
  auto it = b.braiding->R.find({x, y, c});
  if (it == b.braiding->R.end()) throw SXError("missing untwisting component");
  return scalar_of(it->second);
}

}  // namespace sx_detail

/// The witness induced by a delta-type pairing: identity components on every
/// generator, with the twist and untwisting squares read off the data.
inline SelfDualWitness standard_witness(const SXAssignment& a) {
  const StructureBundle b = assemble_bundle(a);
  if (!b.multiplicity_free()) throw SXError("self-dual witnesses need a multiplicity-free bundle");
  if (!b.forms || !b.braiding || !b.theta) throw SXError("witness needs forms, untwisting and Dehn twist");
  const auto inv = suite_detail::form_involution(b);
  for (int x : inv)
    if (x < 0) throw SXError("forms do not induce an involution on simples");
  const int n = b.n();
  SelfDualWitness w;
  w.eps.assign(static_cast<std::size_t>(n), Cyclotomic(1));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int c : b.channels(x, y)) {
        w.q[{x, y, c}] = Cyclotomic(1);
        const int xs = inv[static_cast<std::size_t>(x)], ys = inv[static_cast<std::size_t>(y)];
        const int cs = inv[static_cast<std::size_t>(c)];
        w.u[{x, y, c}] = sx_detail::r_scalar(b, ys, xs, cs) / sx_detail::r_scalar(b, x, y, c);
      }
  for (int g = 0; g < b.pi().order(); ++g)
    for (int x = 0; x < n; ++x) w.w[{g, x}] = Cyclotomic(1);
  if (b.g_action)
    for (int g = 0; g < b.g_action->G.order(); ++g)
      for (int x = 0; x < n; ++x) w.v[{g, x}] = Cyclotomic(1);
  for (int x = 0; x < n; ++x) w.t.push_back((*b.theta)[static_cast<std::size_t>(inv[static_cast<std::size_t>(x)])] / (*b.theta)[static_cast<std::size_t>(x)]);
  return w;
}

inline SuiteReport check_self_dual(const SXAssignment& a, const SelfDualWitness& w) {
  SuiteReport rep;
  rep.suite = "self-dual";
  StructureBundle b;
  try {
    b = assemble_bundle(a);
  } catch (const std::exception& e) {
    rep.rows.push_back({"SD.tables", "assignment assembles into a bundle", false, 1, e.what(), "", ""});
    return rep;
  }
  const auto& cat = b.cat;
  const int n = b.n();
  auto nm = [&](int x) { return cat.simple(x).name; };
  auto lookup = [](const auto& m, const auto& k) -> std::optional<Cyclotomic> {
    auto it = m.find(k);
    if (it == m.end()) return std::nullopt;
    return it->second;
  };
  auto nonzero = [](const std::optional<Cyclotomic>& c) { return c && !(*c == Cyclotomic(0)); };
  std::vector<int> inv;
  if (b.forms) inv = suite_detail::form_involution(b);

  auto row = [&](std::string id, std::string desc, auto body) {
    RowResult r{std::move(id), std::move(desc), true, 0, "", "", ""};
    auto fail = [&](const std::string& msg) {
      if (r.pass) {
        r.pass = false;
        r.witness = msg;
      }
    };
    body(r, fail);
    rep.rows.push_back(std::move(r));
  };

  row("SD.hom-pairing", "hom dimensions match the pairing and the identification is invertible",
      [&](RowResult& r, auto fail) {
        if (!b.forms) return fail("assignment has no pairing generators");
        RowResult dims = suite_detail::hom_pairing_row(b);
        r.checked += dims.checked;
        if (!dims.pass) fail(dims.witness);
        for (int x = 0; x < n; ++x) {
          ++r.checked;
          if (static_cast<int>(w.eps.size()) != n || w.eps[static_cast<std::size_t>(x)] == Cyclotomic(0))
            fail("component at " + nm(x) + " is missing or zero");
        }
      });
  row("SD.S-I.cyl", "collapsed cylinders carry the identity", [&](RowResult& r, auto fail) {
    for (int x = 0; x < n; ++x) {
      ++r.checked;
      auto c = lookup(w.w, std::pair<int, int>{b.pi().identity(), x});
      if (!c || !(*c == Cyclotomic(1))) fail("crossing by the identity at " + nm(x) + " is not the identity");
    }
  });
  row("SD.S-I.pants", "pants adjunction: hom(U*V, W) = hom(U, W*V*) with the cap normalised",
      [&](RowResult& r, auto fail) {
        if (inv.empty()) return fail("no involution without forms");
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y)
            for (int c = 0; c < n; ++c) {
              ++r.checked;
              const int ys = inv[static_cast<std::size_t>(y)];
              if (ys < 0) return fail("no dual for " + nm(y));
              if (b.N(x, y, c) != b.N(c, ys, x))
                fail("dim hom(" + nm(x) + "*" + nm(y) + "," + nm(c) + ") differs from dim hom(" + nm(x) + "," + nm(c) +
                     "*" + nm(ys) + ")");
              if (b.N(x, y, c) == 0) continue;
              auto q = lookup(w.q, std::array<int, 3>{x, y, c});
              if (!nonzero(q)) fail("component at " + nm(x) + "," + nm(y) + ";" + nm(c) + " is missing or zero");
              if (c == cat.unit() && y == inv[static_cast<std::size_t>(x)] && q && !(*q == Cyclotomic(1)))
                fail("cap component at " + nm(x) + "," + nm(y) + " is not the identity");
            }
      });
  row("SD.S-I.crossing", "crossing cylinders are invertible and preserve the pairing", [&](RowResult& r, auto fail) {
    for (int g = 0; g < b.pi().order(); ++g)
      for (int x = 0; x < n; ++x) {
        ++r.checked;
        if (!nonzero(lookup(w.w, std::pair<int, int>{g, x})))
          fail("component at " + b.pi().name(g) + ";" + nm(x) + " is missing or zero");
        if (!b.forms) continue;
        for (int y = 0; y < n; ++y) {
          auto p = [&](int s, int t) { return suite_detail::pairing(*b.forms, s, t); };
          if (p(b.sig(g, x), b.sig(g, y)) != p(x, y))
            fail("<" + nm(x) + "," + nm(y) + "> changes under crossing by " + b.pi().name(g));
        }
      }
  });
  if (b.g_action)
    row("SD.S-I.sphere", "sphere cylinders are invertible and reflect to the inverse class",
        [&](RowResult& r, auto fail) {
          const auto& G = b.g_action->G;
          for (int g = 0; g < G.order(); ++g) {
            ++r.checked;
            const int rg = b.g_action->rho[static_cast<std::size_t>(g)];
            const int rinv = b.g_action->rho[static_cast<std::size_t>(G.inv(g))];
            if (inv.empty() || inv[static_cast<std::size_t>(rg)] != rinv)
              fail("reflection of the sphere cylinder " + G.name(g) + " is not the inverse class");
            for (int x = 0; x < n; ++x)
              if (!nonzero(lookup(w.v, std::pair<int, int>{g, x})))
                fail("component at " + G.name(g) + ";" + nm(x) + " is missing or zero");
          }
        });
  row("SD.S-II.dehn", "Dehn twist square: t_U theta_U = theta_U*", [&](RowResult& r, auto fail) {
    if (!b.theta || inv.empty()) return fail("needs Dehn twist components and forms");
    for (int x = 0; x < n; ++x) {
      ++r.checked;
      if (static_cast<int>(w.t.size()) != n) return fail("twist square has the wrong length");
      const auto lhs = w.t[static_cast<std::size_t>(x)] * (*b.theta)[static_cast<std::size_t>(x)];
      const auto rhs = (*b.theta)[static_cast<std::size_t>(inv[static_cast<std::size_t>(x)])];
      if (!(lhs == rhs)) {
        fail("square fails at " + nm(x));
        r.lhs = lhs.to_string();
        r.rhs = rhs.to_string();
      }
    }
  });
  row("SD.S-II.untwist", "untwisting square: u R(U,V) = R(V*,U*)", [&](RowResult& r, auto fail) {
    if (!b.braiding || inv.empty()) return fail("needs untwisting components and forms");
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int c : b.channels(x, y)) {
          ++r.checked;
          auto u = lookup(w.u, std::array<int, 3>{x, y, c});
          if (!u) return fail("component at " + nm(x) + "," + nm(y) + ";" + nm(c) + " is missing");
          try {
            const auto lhs = *u * sx_detail::r_scalar(b, x, y, c);
            const auto rhs = sx_detail::r_scalar(b, inv[static_cast<std::size_t>(y)], inv[static_cast<std::size_t>(x)],
                                                 inv[static_cast<std::size_t>(c)]);
            if (!(lhs == rhs)) fail("square fails at " + nm(x) + "," + nm(y) + ";" + nm(c));
          } catch (const SXError& e) {
            fail(e.what());
          }
        }
  });
  return rep;
}

/// Duality read off a hom self-dual assignment: duals from the forms, b from
/// the pairing identification, d from the pants adjunction evaluated through
/// the zig-zag chain, and the lax isomorphisms from the cylinder components.
inline StructureBundle derive_duality(const SXAssignment& a, const SelfDualWitness& w, int workers = 1) {
  const SuiteReport sd = check_self_dual(a, w);
  if (const RowResult* f = sd.first_failure()) throw SXError("witness check " + f->id + " fails: " + f->witness);
  StructureBundle b = derive_balanced(a, workers);
  if (!b.multiplicity_free()) throw SXError("duality derivation needs a multiplicity-free bundle");
  const std::vector<int> inv = derive_involution(b);
  const int n = b.n();

  DualityData du;
  du.dual = inv;
  du.b = w.eps;
  du.d.assign(static_cast<std::size_t>(n), Cyclotomic(1));
  for (int g = 0; g < b.pi().order(); ++g)
    for (int x = 0; x < n; ++x) du.c_lax[{g, x}] = w.w.at({g, x});
  if (b.g_action)
    for (int g = 0; g < b.g_action->G.order(); ++g)
      for (int x = 0; x < n; ++x) du.h_lax[{g, x}] = w.v.at({g, x});
  b.duality = du;

  MorTerm chain;
  for (const auto& row : tortile_rows())
    if (row.id == "D.zigzag-left") chain = row.spec.equations.front().lhs;
  const Engine<Cyclotomic> unit_d(b);
  std::vector<Cyclotomic> d(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    Assignment as;
    as.objects = {x};
    const auto m = unit_d.eval_mor(chain, as).m;
    if (m.rows() != 1 || m.cols() != 1 || m(0, 0) == Cyclotomic(0))
      throw SXError("zig-zag chain at " + b.cat.simple(x).name + " hits a zero hom space");
    const Cyclotomic cap = w.q.at({x, inv[static_cast<std::size_t>(x)], b.unit()});
    d[static_cast<std::size_t>(x)] = cap / m(0, 0);
  }
  b.duality->d = std::move(d);
  return b;
}

}  // namespace tortile
