#pragma once

// Symbol data for a crossed, braided, balanced, dualized pi-graded category.
//
// Basis conventions. hom(d, a*b) has the basis mu = 0..N(a,b,d)-1.
// hom(d, (a*b)*c) is spanned by left-comb trees (e, mu, nu), e ascending,
// mu < N(a,b,e), nu < N(e,c,d); hom(d, a*(b*c)) by right-comb trees
// (f, mu', nu') in the same order. F(a,b,c;d) maps left trees to right
// trees: rows are right trees, columns left trees.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tortile/category.hpp"

namespace tortile {

using Mat = Matrix<Cyclotomic>;

struct BraidingData {
  // (a, b, c) -> matrix N(sigma_alpha(b), a, c) x N(a, b, c), alpha = grade(a).
  std::map<std::array<int, 3>, Mat> R;
};

struct DualityData {
  std::vector<int> dual;
  std::vector<Cyclotomic> b;  // b_a : 1 -> a* * a
  std::vector<Cyclotomic> d;  // d_a : a * a* -> 1
  std::map<std::pair<int, int>, Cyclotomic> c_lax;  // (gamma, a)
  std::map<std::pair<int, int>, Cyclotomic> h_lax;  // (g, a), only with a G-action
};

struct FormData {
  std::map<std::pair<int, int>, int> pairing;  // dim <a, b>, grade(b) = grade(a)^-1
  std::map<std::pair<int, int>, int> E;        // multiplicity of a (x) b in E_alpha
};

struct GActionData {
  GroupTable G;
  std::vector<int> rho;  // g -> simple rho(g)1
};

struct StructureBundle {
  GradedCategory cat;
  std::vector<int> fusion;  // N(a,b,c) at (a*n + b)*n + c
  std::map<std::array<int, 4>, Mat> F;
  std::vector<Cyclotomic> l, r;
  std::vector<std::vector<int>> sigma;                // [gamma][a]
  std::map<std::array<int, 4>, Mat> mu;               // (gamma, a, b, c)
  std::optional<BraidingData> braiding;
  std::optional<std::vector<Cyclotomic>> theta;
  std::optional<DualityData> duality;
  std::optional<FormData> forms;
  std::optional<GActionData> g_action;

  int n() const { return cat.size(); }
  const GroupTable& pi() const { return cat.pi(); }
  int unit() const { return cat.unit(); }
  int grade(int a) const { return cat.grade(a); }

  int N(int a, int b, int c) const { return fusion[(static_cast<std::size_t>(a) * n() + b) * n() + c]; }
  void set_N(int a, int b, int c, int v) { fusion[(static_cast<std::size_t>(a) * n() + b) * n() + c] = v; }

  /// Simples c with N(a,b,c) > 0, ascending.
  std::vector<int> channels(int a, int b) const {
    std::vector<int> out;
    for (int c = 0; c < n(); ++c)
      if (N(a, b, c) > 0) out.push_back(c);
    return out;
  }

  /// dim hom(d, a*b*c), the size of both fusion-tree bases.
  int tree_dim(int a, int b, int c, int d) const {
    int s = 0;
    for (int e = 0; e < n(); ++e) s += N(a, b, e) * N(e, c, d);
    return s;
  }

  int sig(int gamma, int a) const { return sigma.at(gamma).at(a); }
  int dual_of(int a) const { return duality->dual.at(a); }
  int rho_of(int g) const { return g_action->rho.at(g); }

  bool multiplicity_free() const {
    for (int v : fusion)
      if (v > 1) return false;
    return true;
  }

  bool is_invertible_simple(int a) const {
    for (int b = 0; b < n(); ++b) {
      int total = 0;
      for (int c = 0; c < n(); ++c) total += N(a, b, c);
      if (total != 1) return false;
    }
    return true;
  }

  /// The unique simple in a*b when a is invertible, else -1.
  int product_simple(int a, int b) const {
    int found = -1;
    for (int c = 0; c < n(); ++c) {
      if (N(a, b, c) == 0) continue;
      if (found >= 0 || N(a, b, c) > 1) return -1;
      found = c;
    }
    return found;
  }

  /// Trivial one-simple bundle over the given group.
  static StructureBundle trivial() {
    StructureBundle b;
    b.cat = GradedCategory();
    b.fusion = {1};
    b.F[{0, 0, 0, 0}] = Mat::scalar(Cyclotomic(1));
    b.l = {Cyclotomic(1)};
    b.r = {Cyclotomic(1)};
    b.sigma = {{0}};
    b.mu[{0, 0, 0, 0}] = Mat::scalar(Cyclotomic(1));
    return b;
  }
};

/// Every scalar slot of a bundle, addressable for mutation.
struct ScalarSlot {
  std::string section;
  std::string key;
  Cyclotomic* value;
};

inline std::vector<ScalarSlot> scalar_slots(StructureBundle& b) {
  std::vector<ScalarSlot> out;
  auto key4 = [](const std::array<int, 4>& k) {
    return std::to_string(k[0]) + "," + std::to_string(k[1]) + "," + std::to_string(k[2]) + ";" +
           std::to_string(k[3]);
  };
  auto add_matrix = [&](const std::string& sec, const std::string& key, Mat& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        out.push_back({sec, key + "[" + std::to_string(i) + "," + std::to_string(j) + "]", &m(i, j)});
  };
  for (auto& [k, m] : b.F) add_matrix("F", key4(k), m);
  for (int a = 0; a < b.n(); ++a) out.push_back({"l", std::to_string(a), &b.l[a]});
  for (int a = 0; a < b.n(); ++a) out.push_back({"r", std::to_string(a), &b.r[a]});
  for (auto& [k, m] : b.mu) add_matrix("mu", key4(k), m);
  if (b.braiding)
    for (auto& [k, m] : b.braiding->R)
      add_matrix("R", std::to_string(k[0]) + "," + std::to_string(k[1]) + ";" + std::to_string(k[2]), m);
  if (b.theta)
    for (int a = 0; a < b.n(); ++a) out.push_back({"theta", std::to_string(a), &(*b.theta)[a]});
  if (b.duality) {
    auto& du = *b.duality;
    for (int a = 0; a < b.n(); ++a) out.push_back({"b", std::to_string(a), &du.b[a]});
    for (int a = 0; a < b.n(); ++a) out.push_back({"d", std::to_string(a), &du.d[a]});
    for (auto& [k, v] : du.c_lax)
      out.push_back({"c_lax", std::to_string(k.first) + ";" + std::to_string(k.second), &v});
    for (auto& [k, v] : du.h_lax)
      out.push_back({"h_lax", std::to_string(k.first) + ";" + std::to_string(k.second), &v});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Structural validation (no coherence axioms).

struct ValidationEntry {
  std::string check;
  bool pass = true;
  std::string witness;
};

struct ValidationReport {
  std::vector<ValidationEntry> entries;
  bool ok() const {
    for (const auto& e : entries)
      if (!e.pass) return false;
    return true;
  }
  const ValidationEntry* first_failure() const {
    for (const auto& e : entries)
      if (!e.pass) return &e;
    return nullptr;
  }
};

namespace detail {

class Validator {
 public:
  explicit Validator(const StructureBundle& b) : b_(b) {}

  ValidationReport run() {
    shapes();
    if (!report_.ok()) return report_;
    fusion_checks();
    associator_checks();
    crossing_checks();
    if (b_.braiding) braiding_checks();
    if (b_.theta) twist_checks();
    if (b_.duality) duality_checks();
    if (b_.forms) form_checks();
    if (b_.g_action) action_checks();
    return report_;
  }

 private:
  std::string nm(int a) const { return b_.cat.simple(a).name; }
  std::string gn(int g) const { return b_.pi().name(g); }

  // Records one check; the first failing witness is kept.
  struct Check {
    ValidationEntry e;
    void fail(const std::string& w) {
      if (e.pass) {
        e.pass = false;
        e.witness = w;
      }
    }
  };
  Check open(const std::string& id) { return Check{{id, true, ""}}; }
  void close(Check& c) { report_.entries.push_back(c.e); }

  void shapes() {
    auto c = open("shape");
    const auto n = static_cast<std::size_t>(b_.n());
    if (b_.fusion.size() != n * n * n) c.fail("fusion table has the wrong size");
    if (b_.l.size() != n || b_.r.size() != n) c.fail("unit scalars l/r must cover every simple");
    if (b_.sigma.size() != static_cast<std::size_t>(b_.pi().order())) c.fail("sigma must cover every group element");
    for (const auto& row : b_.sigma)
      if (row.size() != n) c.fail("sigma row has the wrong length");
    if (b_.theta && b_.theta->size() != n) c.fail("theta must cover every simple");
    if (b_.duality) {
      const auto& du = *b_.duality;
      if (du.dual.size() != n || du.b.size() != n || du.d.size() != n) c.fail("duality tables must cover every simple");
    }
    if (b_.g_action && b_.g_action->rho.size() != static_cast<std::size_t>(b_.g_action->G.order()))
      c.fail("rho must cover every element of G");
    close(c);
  }

  void fusion_checks() {
    const int n = b_.n(), u = b_.unit();
    auto grading = open("fusion.grading");
    auto unit = open("fusion.unit");
    auto nonneg = open("fusion.nonnegative");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          const int v = b_.N(a, b, c);
          if (v < 0) nonneg.fail("N(" + nm(a) + "," + nm(b) + "," + nm(c) + ") < 0");
          if (v > 0 && b_.grade(c) != b_.pi().mul(b_.grade(a), b_.grade(b)))
            grading.fail("N(" + nm(a) + "," + nm(b) + "," + nm(c) + ") > 0 across grades");
        }
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c) {
        const int want = a == c ? 1 : 0;
        if (b_.N(u, a, c) != want || b_.N(a, u, c) != want)
          unit.fail("unit fusion with " + nm(a) + " -> " + nm(c));
      }
    close(nonneg);
    close(grading);
    close(unit);
  }

  void associator_checks() {
    const int n = b_.n();
    auto complete = open("F.complete");
    auto inv = open("F.invertible");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d) {
            const int dim = b_.tree_dim(a, b, c, d);
            auto it = b_.F.find({a, b, c, d});
            const std::string q = "(" + nm(a) + "," + nm(b) + "," + nm(c) + ";" + nm(d) + ")";
            if (dim == 0) {
              if (it != b_.F.end()) complete.fail("F" + q + " given for an empty fusion space");
              continue;
            }
            if (it == b_.F.end()) {
              complete.fail("missing F" + q);
              continue;
            }
            if (it->second.rows() != static_cast<std::size_t>(dim) || it->second.cols() != static_cast<std::size_t>(dim)) {
              complete.fail("F" + q + " has the wrong shape");
              continue;
            }
            if (!it->second.is_invertible()) inv.fail("F" + q + " is singular");
          }
    auto units = open("unit.nonzero");
    for (int a = 0; a < n; ++a)
      if (b_.l[a].is_zero() || b_.r[a].is_zero()) units.fail("l or r vanishes at " + nm(a));
    close(complete);
    close(inv);
    close(units);
  }

  void crossing_checks() {
    const int n = b_.n();
    const auto& pi = b_.pi();
    auto perm = open("sigma.permutation");
    auto grade = open("sigma.grade");
    auto action = open("sigma.strict-action");
    auto unit = open("sigma.unit");
    auto fusion = open("sigma.fusion");
    for (int g = 0; g < pi.order(); ++g) {
      std::vector<int> seen(n, 0);
      for (int a = 0; a < n; ++a) {
        const int s = b_.sig(g, a);
        if (s < 0 || s >= n) {
          perm.fail("sigma_" + gn(g) + " leaves the simple set");
          continue;
        }
        seen[s]++;
      }
      for (int a = 0; a < n; ++a)
        if (seen[a] != 1) perm.fail("sigma_" + gn(g) + " is not a permutation");
    }
    close(perm);
    if (!report_.entries.back().pass) return;
    for (int g = 0; g < pi.order(); ++g) {
      for (int a = 0; a < n; ++a)
        if (b_.grade(b_.sig(g, a)) != pi.conj(g, b_.grade(a)))
          grade.fail("grade(sigma_" + gn(g) + "(" + nm(a) + ")) != conjugated grade");
      if (b_.sig(g, b_.unit()) != b_.unit()) unit.fail("sigma_" + gn(g) + " moves the unit");
      for (int h = 0; h < pi.order(); ++h)
        for (int a = 0; a < n; ++a)
          if (b_.sig(pi.mul(g, h), a) != b_.sig(g, b_.sig(h, a)))
            action.fail("sigma_" + gn(pi.mul(g, h)) + " != sigma_" + gn(g) + " sigma_" + gn(h) + " at " + nm(a));
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c)
            if (b_.N(b_.sig(g, a), b_.sig(g, b), b_.sig(g, c)) != b_.N(a, b, c))
              fusion.fail("sigma_" + gn(g) + " does not preserve N(" + nm(a) + "," + nm(b) + "," + nm(c) + ")");
    }
    for (int a = 0; a < n; ++a)
      if (b_.sig(pi.identity(), a) != a) action.fail("sigma_e is not the identity");
    auto mu = open("mu.complete");
    for (int g = 0; g < pi.order(); ++g)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c) {
            const int dim = b_.N(a, b, c);
            auto it = b_.mu.find({g, a, b, c});
            const std::string q = "mu_" + gn(g) + "(" + nm(a) + "," + nm(b) + ";" + nm(c) + ")";
            if (dim == 0) {
              if (it != b_.mu.end()) mu.fail(q + " given for an empty channel");
              continue;
            }
            if (it == b_.mu.end()) {
              mu.fail("missing " + q);
              continue;
            }
            if (it->second.rows() != static_cast<std::size_t>(dim) || it->second.cols() != static_cast<std::size_t>(dim))
              mu.fail(q + " has the wrong shape");
            else if (!it->second.is_invertible())
              mu.fail(q + " is singular");
          }
    close(grade);
    close(action);
    close(unit);
    close(fusion);
    close(mu);
  }

  void braiding_checks() {
    const int n = b_.n();
    auto complete = open("R.complete");
    auto inv = open("R.invertible");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const int sb = b_.sig(b_.grade(a), b);
        for (int c = 0; c < n; ++c) {
          const int dim = b_.N(a, b, c);
          auto it = b_.braiding->R.find({a, b, c});
          const std::string q = "R(" + nm(a) + "," + nm(b) + ";" + nm(c) + ")";
          if (dim == 0) {
            if (it != b_.braiding->R.end()) complete.fail(q + " given for an empty channel");
            continue;
          }
          if (b_.N(sb, a, c) != dim) {
            complete.fail(q + ": target channel dimension differs");
            continue;
          }
          if (it == b_.braiding->R.end()) {
            complete.fail("missing " + q);
            continue;
          }
          if (it->second.rows() != static_cast<std::size_t>(dim) || it->second.cols() != static_cast<std::size_t>(dim))
            complete.fail(q + " has the wrong shape");
          else if (!it->second.is_invertible())
            inv.fail(q + " is not invertible");
        }
      }
    close(complete);
    close(inv);
  }

  void twist_checks() {
    auto fixed = open("theta.grade-fixed");
    auto nonzero = open("theta.invertible");
    for (int a = 0; a < b_.n(); ++a) {
      if (b_.sig(b_.grade(a), a) != a)
        fixed.fail("theta(" + nm(a) + "): sigma_grade fixes no iso, hom(a, phi(alpha)a) = 0");
      if ((*b_.theta)[a].is_zero()) nonzero.fail("theta(" + nm(a) + ") = 0");
    }
    close(fixed);
    close(nonzero);
  }

  void duality_checks() {
    const auto& du = *b_.duality;
    const int n = b_.n(), u = b_.unit();
    auto grade = open("dual.grade");
    auto inv = open("dual.involution");
    auto hom = open("dual.fusion");
    auto bd = open("dual.bd-nonzero");
    for (int a = 0; a < n; ++a) {
      const int s = du.dual[a];
      if (s < 0 || s >= n) {
        grade.fail("dual of " + nm(a) + " out of range");
        continue;
      }
      if (b_.grade(s) != b_.pi().inv(b_.grade(a))) grade.fail("grade(" + nm(a) + "*) != grade^-1");
      if (du.dual[s] != a) inv.fail(nm(a) + "** != " + nm(a));
      if (b_.N(s, a, u) != 1 || b_.N(a, s, u) != 1) hom.fail("the unit is not a simple summand of " + nm(a) + "* * " + nm(a));
      if (du.b[a].is_zero() || du.d[a].is_zero()) bd.fail("b or d vanishes at " + nm(a));
    }
    close(grade);
    close(inv);
    close(hom);
    close(bd);
    if (!report_.ok()) return;
    auto lax = open("c_lax.complete");
    for (int g = 0; g < b_.pi().order(); ++g)
      for (int a = 0; a < n; ++a) {
        auto it = du.c_lax.find({g, a});
        const std::string q = "c_lax(" + gn(g) + ";" + nm(a) + ")";
        if (it == du.c_lax.end()) lax.fail("missing " + q);
        else if (it->second.is_zero()) lax.fail(q + " = 0");
        else if (du.dual[b_.sig(g, a)] != b_.sig(g, du.dual[a])) lax.fail(q + ": (phi a)* != phi(a*)");
      }
    close(lax);
    if (b_.g_action) {
      auto h = open("h_lax.complete");
      const auto& G = b_.g_action->G;
      for (int g = 0; g < G.order(); ++g)
        for (int a = 0; a < n; ++a) {
          auto it = du.h_lax.find({g, a});
          const std::string q = "h_lax(" + G.name(g) + ";" + nm(a) + ")";
          const int lhs = b_.product_simple(b_.rho_of(g), a);
          const int rhs = b_.product_simple(b_.rho_of(G.inv(g)), du.dual[a]);
          if (it == du.h_lax.end()) h.fail("missing " + q);
          else if (it->second.is_zero()) h.fail(q + " = 0");
          else if (lhs < 0 || rhs < 0 || du.dual[lhs] != rhs) h.fail(q + ": endpoints differ");
        }
      close(h);
    } else if (!du.h_lax.empty()) {
      auto h = open("h_lax.complete");
      h.fail("h_lax given without a G-action");
      close(h);
    }
  }

  void form_checks() {
    const auto& f = *b_.forms;
    auto grade = open("forms.grade");
    for (auto& [k, v] : f.pairing) {
      if (b_.grade(k.second) != b_.pi().inv(b_.grade(k.first)))
        grade.fail("pairing <" + nm(k.first) + "," + nm(k.second) + "> across incompatible grades");
      if (v < 0) grade.fail("negative pairing dimension");
    }
    for (auto& [k, v] : f.E) {
      if (b_.grade(k.second) != b_.pi().inv(b_.grade(k.first)))
        grade.fail("E term " + nm(k.first) + "(x)" + nm(k.second) + " across incompatible grades");
      if (v < 0) grade.fail("negative E multiplicity");
    }
    close(grade);
  }

  void action_checks() {
    const auto& ga = *b_.g_action;
    auto grade = open("rho.grade");
    auto invertible = open("rho.invertible");
    auto hom = open("rho.homomorphism");
    for (int g = 0; g < ga.G.order(); ++g) {
      const int r = ga.rho[g];
      if (r < 0 || r >= b_.n()) {
        grade.fail("rho(" + ga.G.name(g) + ") out of range");
        continue;
      }
      if (b_.grade(r) != b_.pi().identity()) grade.fail("rho(" + ga.G.name(g) + ")1 has non-identity grade");
      if (!b_.is_invertible_simple(r)) invertible.fail("rho(" + ga.G.name(g) + ")1 is not invertible");
    }
    close(grade);
    close(invertible);
    if (!report_.ok()) return;
    if (ga.rho[ga.G.identity()] != b_.unit()) hom.fail("rho(e)1 is not the unit");
    for (int g = 0; g < ga.G.order(); ++g)
      for (int h = 0; h < ga.G.order(); ++h)
        if (b_.product_simple(ga.rho[g], ga.rho[h]) != ga.rho[ga.G.mul(g, h)])
          hom.fail("rho(" + ga.G.name(g) + ")1 * rho(" + ga.G.name(h) + ")1 != rho(gh)1");
    close(hom);
  }

  const StructureBundle& b_;
  ValidationReport report_;
};

}  // namespace detail

inline ValidationReport validate_bundle(const StructureBundle& b) { return detail::Validator(b).run(); }

}  // namespace tortile
