#pragma once

// Pointed examples: one simple per element of a finite group A, fusion given
// by the group law, associator by a 3-cochain. Also the brute-force search
// for braidings over roots of unity and the named builtin bundles.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "tortile/suites.hpp"
#include "tortile/sx.hpp"

namespace tortile {

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PointedSpec {
  GroupTable A;
  std::vector<std::string> names;  // simple names, defaults to A's element names
  GroupTable pi;
  std::vector<int> grading;  // A -> pi, defaults to the trivial map
  std::map<std::array<int, 3>, Cyclotomic> omega;  // missing entries are 1
  std::optional<std::vector<std::vector<int>>> sigma;  // [gamma][a]; derived when absent
  unsigned root_order = 8;
};

/// R(a, b) and theta(a) for a pointed bundle, indexed by elements of A.
struct PointedScalars {
  std::vector<std::vector<Cyclotomic>> R;
  std::vector<Cyclotomic> theta;
};

namespace catalog_detail {

inline Cyclotomic omega_at(const PointedSpec& s, int a, int b, int c) {
  auto it = s.omega.find({a, b, c});
  return it == s.omega.end() ? Cyclotomic(1) : it->second;
}

inline std::vector<int> grading_of(const PointedSpec& s) {
  if (s.grading.empty()) return std::vector<int>(static_cast<std::size_t>(s.A.order()), s.pi.identity());
  if (static_cast<int>(s.grading.size()) != s.A.order()) throw CatalogError("grading must list one grade per element of A");
  for (int a = 0; a < s.A.order(); ++a)
    for (int b = 0; b < s.A.order(); ++b)
      if (s.grading[static_cast<std::size_t>(s.A.mul(a, b))] !=
          s.pi.mul(s.grading[static_cast<std::size_t>(a)], s.grading[static_cast<std::size_t>(b)]))
        throw CatalogError("grading is not a homomorphism");
  return s.grading;
}

// Trivial crossing for abelian pi; conjugation when the grading is a bijection.
inline std::vector<std::vector<int>> sigma_of(const PointedSpec& s, const std::vector<int>& grading) {
  const int n = s.A.order(), k = s.pi.order();
  if (s.sigma) {
    if (static_cast<int>(s.sigma->size()) != k) throw CatalogError("sigma must have one row per element of pi");
    return *s.sigma;
  }
  std::vector<std::vector<int>> sig(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(n)));
  if (s.pi.is_abelian()) {
    for (auto& row : sig)
      for (int a = 0; a < n; ++a) row[static_cast<std::size_t>(a)] = a;
    return sig;
  }
  std::vector<int> pre(static_cast<std::size_t>(k), -1);
  for (int a = 0; a < n; ++a) pre[static_cast<std::size_t>(grading[static_cast<std::size_t>(a)])] = a;
  if (n != k || std::count(pre.begin(), pre.end(), -1) > 0)
    throw CatalogError("nonabelian pi needs an explicit sigma unless the grading is a bijection");
  for (int g = 0; g < k; ++g)
    for (int a = 0; a < n; ++a)
      sig[static_cast<std::size_t>(g)][static_cast<std::size_t>(a)] =
          pre[static_cast<std::size_t>(s.pi.conj(g, grading[static_cast<std::size_t>(a)]))];
  return sig;
}

inline StructureBundle base_bundle(const PointedSpec& s) {
  const int n = s.A.order();
  if (!s.names.empty() && static_cast<int>(s.names.size()) != n) throw CatalogError("names must list one name per element of A");
  const auto grading = grading_of(s);
  std::vector<SimpleObject> simples;
  for (int a = 0; a < n; ++a)
    simples.push_back({a, grading[static_cast<std::size_t>(a)], s.names.empty() ? s.A.name(a) : s.names[static_cast<std::size_t>(a)]});
  StructureBundle b;
  b.cat = GradedCategory(s.pi, simples, s.A.identity());
  b.fusion.assign(static_cast<std::size_t>(n) * n * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) b.set_N(x, y, s.A.mul(x, y), 1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        b.F[{x, y, z, s.A.mul(s.A.mul(x, y), z)}] = Mat::scalar(omega_at(s, x, y, z));
  b.l.assign(static_cast<std::size_t>(n), Cyclotomic(1));
  b.r.assign(static_cast<std::size_t>(n), Cyclotomic(1));
  b.sigma = sigma_of(s, grading);
  for (int g = 0; g < s.pi.order(); ++g)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) b.mu[{g, x, y, s.A.mul(x, y)}] = Mat::scalar(Cyclotomic(1));
  return b;
}

}  // namespace catalog_detail

/// Right duality a* = a^-1 with b_a = 1 and d_a fixed by the zig-zags, trivial
/// lax isomorphisms, and the delta pairing with E = sum a (x) a*.
inline void add_pointed_duality(StructureBundle& b, const PointedSpec& s) {
  const int n = s.A.order();
  DualityData du;
  for (int a = 0; a < n; ++a) {
    const int ai = s.A.inv(a);
    du.dual.push_back(ai);
    du.b.push_back(Cyclotomic(1));
    const Cyclotomic w = catalog_detail::omega_at(s, ai, a, ai);
    if (w == Cyclotomic(0)) throw CatalogError("associator scalar is not invertible");
    du.d.push_back(w.inverse());
    for (int g = 0; g < s.pi.order(); ++g) du.c_lax[{g, a}] = Cyclotomic(1);
  }
  b.duality = std::move(du);
  FormData f;
  for (int a = 0; a < n; ++a) {
    f.pairing[{a, s.A.inv(a)}] = 1;
    f.E[{a, s.A.inv(a)}] = 1;
  }
  b.forms = std::move(f);
}

/// Balanced pointed bundle from braiding and twist scalars. Adds the standard
/// duality and forms when with_duality is set.
inline StructureBundle build_pointed(const PointedSpec& s, const PointedScalars& sc, bool with_duality = true) {
  const int n = s.A.order();
  if (static_cast<int>(sc.R.size()) != n || static_cast<int>(sc.theta.size()) != n)
    throw CatalogError("braiding and twist tables must cover every element of A");
  for (const auto& row : sc.R)
    if (static_cast<int>(row.size()) != n) throw CatalogError("braiding table must be |A| x |A|");
  StructureBundle b = catalog_detail::base_bundle(s);
  BraidingData br;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      br.R[{x, y, s.A.mul(x, y)}] = Mat::scalar(sc.R[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]);
  b.braiding = std::move(br);
  b.theta = sc.theta;
  if (with_duality) add_pointed_duality(b, s);
  return b;
}

struct EnumerationResult {
  std::vector<std::vector<int>> exponents;  // R(a,b) = zeta_M^e, row-major over A x A
  std::vector<StructureBundle> bundles;
};

namespace catalog_detail {

// Hexagon equations on the pointed bundle; evaluations needing an
// unassigned braiding entry are skipped.
class HexagonPruner {
 public:
  explicit HexagonPruner(std::vector<SuiteRow> rows) {
    for (auto& r : rows)
      if (r.id == "A3.1.hex-left" || r.id == "A3.1.hex-right" || r.id == "A3.3.equivariant")
        for (auto& eq : r.spec.equations) eqs_.push_back(eq);
  }

  bool consistent(const StructureBundle& b) const {
    const Engine<Cyclotomic> e(b);
    const int n = b.n();
    Assignment a;
    a.objects.assign(3, 0);
    a.pi.assign(1, 0);
    for (int p = 0; p < b.pi().order(); ++p)
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z) {
            a.pi[0] = p;
            a.objects = {x, y, z};
            for (const auto& eq : eqs_) {
              try {
                const auto l = e.eval_mor(eq.lhs, a);
                const auto r = e.eval_mor(eq.rhs, a);
                if (!(l.m == r.m)) return false;
              } catch (const EvalError&) {
              }
            }
          }
    return true;
  }

 private:
  std::vector<Equation> eqs_;
};

}  // namespace catalog_detail

/// Every braiding over M-th roots of unity for which the bundle with twist
/// theta(a) = R(a,a) passes the balanced suite, in lexicographic order of
/// the exponent tables.
inline EnumerationResult enumerate_pointed(const PointedSpec& s, int workers = 1) {
  const int n = s.A.order();
  const unsigned M = s.root_order;
  if (n > 6 || M > 24 || M == 0) throw CatalogError("enumeration guard: need |A| <= 6 and 1 <= M <= 24");
  for (const auto& [k, w] : s.omega)
    if (!(w.pow(M) == Cyclotomic(1)))
      throw CatalogError("omega(" + s.A.name(k[0]) + "," + s.A.name(k[1]) + "," + s.A.name(k[2]) +
                         ") is not a root of unity of order dividing " + std::to_string(M));
  const StructureBundle base = catalog_detail::base_bundle(s);
  const catalog_detail::HexagonPruner pruner(balanced_rows());

  std::vector<Cyclotomic> roots;
  for (unsigned k = 0; k < M; ++k) roots.push_back(Cyclotomic::root_of_unity(static_cast<long long>(k), M));

  // Depth-first over entries in row-major order, pruning on decided hexagons.
  std::vector<std::vector<int>> candidates;
  std::vector<int> exps;
  StructureBundle work = base;
  work.braiding = BraidingData{};
  auto key = [&](int idx) {
    const int x = idx / n, y = idx % n;
    return std::array<int, 3>{x, y, s.A.mul(x, y)};
  };
  auto dfs = [&](auto&& self, int idx) -> void {
    if (idx == n * n) {
      candidates.push_back(exps);
      return;
    }
    for (unsigned k = 0; k < M; ++k) {
      work.braiding->R[key(idx)] = Mat::scalar(roots[k]);
      exps.push_back(static_cast<int>(k));
      if (pruner.consistent(work)) self(self, idx + 1);
      exps.pop_back();
    }
    work.braiding->R.erase(key(idx));
  };
  dfs(dfs, 0);

  auto assemble = [&](const std::vector<int>& e) {
    PointedScalars sc;
    sc.R.assign(static_cast<std::size_t>(n), std::vector<Cyclotomic>(static_cast<std::size_t>(n)));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        sc.R[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
            roots[static_cast<std::size_t>(e[static_cast<std::size_t>(x * n + y)])];
    for (int x = 0; x < n; ++x) sc.theta.push_back(sc.R[static_cast<std::size_t>(x)][static_cast<std::size_t>(x)]);
    return build_pointed(s, sc, false);
  };

  // Full suite on each candidate; candidates are split across workers and
  // merged back in candidate order.
  std::vector<char> keep(candidates.size(), 0);
  workers = std::max(1, std::min<int>(workers, static_cast<int>(std::max<std::size_t>(1, candidates.size()))));
  auto verify = [&](int w) {
    const std::size_t lo = candidates.size() * static_cast<std::size_t>(w) / static_cast<std::size_t>(workers);
    const std::size_t hi = candidates.size() * static_cast<std::size_t>(w + 1) / static_cast<std::size_t>(workers);
    for (std::size_t i = lo; i < hi; ++i) keep[i] = check_balanced_pi(assemble(candidates[i])).ok() ? 1 : 0;
  };
  if (workers == 1) {
    verify(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(verify, w);
    for (auto& t : pool) t.join();
  }
  EnumerationResult out;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (keep[i]) {
      out.exponents.push_back(candidates[i]);
      out.bundles.push_back(assemble(candidates[i]));
    }
  return out;
}

// ---------------------------------------------------------------------------
// Builtins.

struct NamedBundle {
  std::string name;
  std::string description;
  StructureBundle bundle;
  std::vector<SuiteKind> suites;  // suites the bundle is declared to pass
  bool self_dual = false;         // listed for the duality derivation
};

namespace catalog_detail {

inline PointedSpec cyclic_spec(int n, std::vector<std::string> names) {
  PointedSpec s;
  s.A = GroupTable::cyclic(n);
  s.names = std::move(names);
  s.pi = GroupTable();
  return s;
}

inline PointedScalars bicharacter(const PointedSpec& s, long long rk, long long tk, unsigned order) {
  // R(a,b) = zeta^(rk*a*b), theta(a) = zeta^(tk*a*a) on Z/n with a, b in 0..n-1
  const int n = s.A.order();
  PointedScalars sc;
  sc.R.assign(static_cast<std::size_t>(n), std::vector<Cyclotomic>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      sc.R[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = Cyclotomic::root_of_unity(rk * a * b, order);
    sc.theta.push_back(Cyclotomic::root_of_unity(tk * a * a, order));
  }
  return sc;
}

}  // namespace catalog_detail

inline std::vector<NamedBundle> builtin_examples() {
  using catalog_detail::bicharacter;
  using catalog_detail::cyclic_spec;
  const std::vector<SuiteKind> rigid = {SuiteKind::Balanced, SuiteKind::Tortile, SuiteKind::Forms};
  std::vector<NamedBundle> out;

  {
    const auto s = cyclic_spec(1, {"1"});
    out.push_back({"trivial", "one simple object, all structure trivial", build_pointed(s, bicharacter(s, 0, 0, 1)),
                   rigid, true});
  }
  {
    const auto s = cyclic_spec(2, {"1", "b"});
    out.push_back({"z2-boson", "Z/2 pointed, symmetric braiding", build_pointed(s, bicharacter(s, 0, 0, 2)), rigid, true});
  }
  {
    const auto s = cyclic_spec(2, {"1", "f"});
    out.push_back({"z2-fermion", "Z/2 pointed, R(f,f) = -1 and theta(f) = -1", build_pointed(s, bicharacter(s, 1, 1, 2)),
                   rigid, true});
  }
  {
    auto s = cyclic_spec(2, {"1", "s"});
    s.omega[{1, 1, 1}] = Cyclotomic(-1);
    out.push_back({"semion", "Z/2 pointed with F(s,s,s) = -1, R(s,s) = i, theta(s) = i",
                   build_pointed(s, bicharacter(s, 1, 1, 4)), rigid, true});
    out.push_back({"anti-semion", "complex conjugate of the semion", build_pointed(s, bicharacter(s, 3, 3, 4)), rigid,
                   true});
  }
  {
    const auto s = cyclic_spec(3, {"1", "a", "a2"});
    out.push_back({"z3-pointed-dual", "Z/3 pointed, R(a,b) = zeta3^(ab), with duality",
                   build_pointed(s, bicharacter(s, 1, 1, 3)), rigid, true});
  }
  {
    PointedSpec s;
    s.A = GroupTable::cyclic(4);
    s.names = {"1", "t", "t2", "t3"};
    s.pi = GroupTable::cyclic(2);
    s.grading = {0, 1, 0, 1};
    out.push_back({"z2-crossed", "Z/4 pointed, graded mod 2 over pi = Z/2",
                   build_pointed(s, bicharacter(s, 1, 1, 4)), rigid, false});
  }
  {
    PointedSpec s;
    s.A = GroupTable::symmetric3();
    s.pi = GroupTable::symmetric3();
    s.grading = {0, 1, 2, 3, 4, 5};
    PointedScalars sc;
    sc.R.assign(6, std::vector<Cyclotomic>(6, Cyclotomic(1)));
    sc.theta.assign(6, Cyclotomic(1));
    out.push_back({"s3-crossed", "Vec(S3) graded by itself, crossing by conjugation", build_pointed(s, sc), rigid, true});
  }
  {
    auto s = cyclic_spec(4, {"1", "u", "u2", "u3"});
    NamedBundle nb{"z4-gaction", "Z/4 pointed with G = Z/2 acting by the simple u2",
                   build_pointed(s, bicharacter(s, 2, 2, 4)),
                   {SuiteKind::Balanced, SuiteKind::Tortile, SuiteKind::GAction, SuiteKind::Forms},
                   true};
    GActionData ga;
    ga.G = GroupTable::cyclic(2);
    ga.rho = {0, 2};
    nb.bundle.g_action = std::move(ga);
    for (int g = 0; g < 2; ++g)
      for (int a = 0; a < 4; ++a) nb.bundle.duality->h_lax[{g, a}] = Cyclotomic(1);
    out.push_back(std::move(nb));
  }
  return out;
}

inline std::optional<NamedBundle> find_builtin(const std::string& name) {
  for (auto& nb : builtin_examples())
    if (nb.name == name) return nb;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Packaging a bundle as a surface assignment.

/// Generator tables and 2-cells for a bundle that passes the balanced suite.
/// Pair and CoPair are filled when the bundle carries forms (which must pass
/// their suite); require_pairing turns their absence into an error. Sphere
/// cylinders are filled from a G-action when present.
inline SXAssignment package_assignment(const StructureBundle& b, bool require_pairing = false, int workers = 1) {
  const SuiteReport bal = check_balanced_pi(b, workers);
  if (const RowResult* f = bal.first_failure()) throw CatalogError("bundle fails " + f->id + ": " + f->witness);
  if (require_pairing && !b.forms) throw CatalogError("pairing requested but the bundle has no forms");
  if (b.forms) {
    const SuiteReport fr = check_forms(b, workers);
    if (const RowResult* f = fr.first_failure()) throw CatalogError("bundle fails " + f->id + ": " + f->witness);
  }
  const auto& cat = b.cat;
  const auto& pi = b.pi();
  const int n = b.n();
  SXAssignment a;
  a.bundle = slices_of(b);
  auto put = [&](const Generator& g, SimpleTuple in, TupleCounts out) {
    auto& t = a.generators[g];
    t.source = gen_inputs(g, pi);
    t.target = gen_outputs(g, pi);
    t.values[std::move(in)] = std::move(out);
  };
  for (int al = 0; al < pi.order(); ++al)
    for (int be = 0; be < pi.order(); ++be) {
      for (int x : cat.simples_of_grade(al))
        for (int y : cat.simples_of_grade(be)) {
          TupleCounts m;
          for (int c = 0; c < n; ++c)
            if (b.N(x, y, c) > 0) m[{c}] = b.N(x, y, c);
          put(gen::pants(al, be), {x, y}, std::move(m));
        }
      for (int c : cat.simples_of_grade(pi.mul(al, be))) {
        TupleCounts m;
        for (int x : cat.simples_of_grade(al))
          for (int y : cat.simples_of_grade(be))
            if (b.N(x, y, c) > 0) m[{x, y}] = b.N(x, y, c);
        put(gen::copants(al, be), {c}, std::move(m));
      }
    }
  for (int x : cat.simples_of_grade(pi.identity()))
    put(gen::disc(), {x}, x == cat.unit() ? TupleCounts{{{}, 1}} : TupleCounts{});
  put(gen::codisc(), {}, {{{cat.unit()}, 1}});
  for (int g = 0; g < pi.order(); ++g)
    for (int x = 0; x < n; ++x) put(gen::crosscyl(cat.grade(x), g), {x}, {{{b.sig(g, x)}, 1}});
  if (b.forms) {
    for (int al = 0; al < pi.order(); ++al) {
      TupleCounts e;
      for (int x : cat.simples_of_grade(al))
        for (int y : cat.simples_of_grade(pi.inv(al))) {
          const int p = suite_detail::pairing(*b.forms, x, y);
          put(gen::pair(al), {x, y}, p > 0 ? TupleCounts{{{}, p}} : TupleCounts{});
          auto it = b.forms->E.find({x, y});
          if (it != b.forms->E.end() && it->second > 0) e[{x, y}] = it->second;
        }
      put(gen::copair(al), {}, std::move(e));
    }
  }
  if (b.g_action) {
    a.G = b.g_action->G;
    for (int g = 0; g < a.G->order(); ++g)
      for (int x : cat.simples_of_grade(pi.identity())) {
        TupleCounts m;
        for (int c = 0; c < n; ++c)
          if (b.N(b.rho_of(g), x, c) > 0) m[{c}] = b.N(b.rho_of(g), x, c);
        put(gen::pi2cyl(g), {x}, std::move(m));
      }
  }
  a.cells.reassociate = b.F;
  a.cells.left_disc = b.l;
  a.cells.right_disc = b.r;
  a.cells.crossing = b.mu;
  a.cells.untwist = b.braiding->R;
  a.cells.dehn = *b.theta;
  return a;
}

}  // namespace tortile
