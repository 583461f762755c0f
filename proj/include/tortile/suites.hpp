#pragma once

// Axiom batteries. Each row is either a diagram (equations between morphism
// terms, checked exhaustively over simples) or a table-level check on the
// bundle data. Row ids are stable and used by reports and the CLI.
//
// Naturality rows use a braiding as the test morphism: it is a generic
// non-identity map between composite objects available in every balanced
// bundle, and by semisimplicity naturality on simples plus such composites
// covers direct sums.

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tortile/diagram.hpp"

namespace tortile {

class SuiteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RowResult {
  std::string id;
  std::string description;
  bool pass = true;
  long long checked = 0;
  std::string witness;  // empty on pass
  std::string lhs, rhs;
};

struct SuiteReport {
  std::string suite;
  std::vector<RowResult> rows;

  bool ok() const {
    for (const auto& r : rows)
      if (!r.pass) return false;
    return true;
  }
  const RowResult* first_failure() const {
    for (const auto& r : rows)
      if (!r.pass) return &r;
    return nullptr;
  }
};

struct SuiteRow {
  std::string id;
  std::string description;
  DiagramSpec spec;
  std::function<RowResult(const StructureBundle&)> data;  // set for table-level rows
  bool needs_coherence = false;  // relies on bracket repair
};

namespace suite_detail {

using namespace term;
inline ObjTerm X() { return var(0); }
inline ObjTerm Y() { return var(1); }
inline ObjTerm Z() { return var(2); }
inline ObjTerm W() { return var(3); }
inline GroupExpr P() { return gvar(0, GroupDomain::Pi); }
inline GroupExpr Gv() { return gvar(0, GroupDomain::G); }

inline SuiteRow diagram(std::string id, std::string desc, std::vector<Equation> eqs, bool literal = false) {
  SuiteRow r;
  r.id = std::move(id);
  r.description = std::move(desc);
  r.spec.equations = std::move(eqs);
  r.spec.literal = literal;
  return r;
}

inline SuiteRow table(std::string id, std::string desc, std::function<RowResult(const StructureBundle&)> f) {
  SuiteRow r;
  r.id = std::move(id);
  r.description = std::move(desc);
  r.data = std::move(f);
  return r;
}

inline std::string nm(const StructureBundle& b, int a) { return b.cat.simple(a).name; }

inline RowResult grading_row(const StructureBundle& b) {
  RowResult r;
  for (int x = 0; x < b.n(); ++x)
    for (int y = 0; y < b.n(); ++y) {
      ++r.checked;
      for (int c : b.channels(x, y))
        if (b.grade(c) != b.pi().mul(b.grade(x), b.grade(y)) && r.pass) {
          r.pass = false;
          r.witness = "x=" + nm(b, x) + ", y=" + nm(b, y) + ": channel " + nm(b, c) + " has grade " +
                      b.pi().name(b.grade(c));
        }
    }
  return r;
}

// mu_{gd}(a,b) = phi_g(mu_d(a,b)) . mu_g(phi_d a, phi_d b)
inline RowResult crossing_hom_row(const StructureBundle& b) {
  RowResult r;
  const auto& pi = b.pi();
  for (int g = 0; g < pi.order(); ++g)
    for (int d = 0; d < pi.order(); ++d)
      for (int x = 0; x < b.n(); ++x)
        for (int y = 0; y < b.n(); ++y)
          for (int c : b.channels(x, y)) {
            ++r.checked;
            auto get = [&](int gamma, int p, int q, int s) -> const Mat* {
              auto it = b.mu.find({gamma, p, q, s});
              return it == b.mu.end() ? nullptr : &it->second;
            };
            const Mat* whole = get(pi.mul(g, d), x, y, c);
            const Mat* inner = get(d, x, y, c);
            const Mat* outer = get(g, b.sig(d, x), b.sig(d, y), b.sig(d, c));
            bool ok = whole && inner && outer && inner->cols() == outer->rows() && *whole == *inner * *outer;
            if (!ok && r.pass) {
              r.pass = false;
              r.witness = "p=" + pi.name(g) + ", q=" + pi.name(d) + ", x=" + nm(b, x) + ", y=" + nm(b, y) +
                          ", channel " + nm(b, c) + ": mu_pq differs from the composite";
              if (whole) r.lhs = whole->to_string();
              if (inner && outer && inner->cols() == outer->rows()) r.rhs = (*inner * *outer).to_string();
            }
          }
  return r;
}

inline int pairing(const FormData& f, int a, int b) {
  auto it = f.pairing.find({a, b});
  return it == f.pairing.end() ? 0 : it->second;
}
inline int e_mult(const FormData& f, int a, int b) {
  auto it = f.E.find({a, b});
  return it == f.E.end() ? 0 : it->second;
}

// J(I(y)) = sum_q (sum_p <y,p> E(p,q)) q must be y.
inline RowResult ji_row(const StructureBundle& b) {
  RowResult r;
  const auto& f = *b.forms;
  for (int y = 0; y < b.n(); ++y) {
    ++r.checked;
    for (int q = 0; q < b.n(); ++q) {
      int m = 0;
      for (int p = 0; p < b.n(); ++p) m += pairing(f, y, p) * e_mult(f, p, q);
      if (m != (q == y ? 1 : 0) && r.pass) {
        r.pass = false;
        r.witness = "J(I(" + nm(b, y) + ")) contains " + nm(b, q) + " with multiplicity " + std::to_string(m);
      }
    }
  }
  return r;
}

// I(J(delta_p)) evaluated at b' must be delta_{p,b'}.
inline RowResult ij_row(const StructureBundle& b) {
  RowResult r;
  const auto& f = *b.forms;
  for (int p = 0; p < b.n(); ++p) {
    ++r.checked;
    for (int t = 0; t < b.n(); ++t) {
      int m = 0;
      for (int q = 0; q < b.n(); ++q) m += e_mult(f, p, q) * pairing(f, q, t);
      if (m != (t == p ? 1 : 0) && r.pass) {
        r.pass = false;
        r.witness = "I(J(" + nm(b, p) + ")) at " + nm(b, t) + " has dimension " + std::to_string(m);
      }
    }
  }
  return r;
}

/// The involution induced by the forms: p -> J(hom(p, -)); -1 where not simple.
inline std::vector<int> form_involution(const StructureBundle& b) {
  std::vector<int> inv(static_cast<std::size_t>(b.n()), -1);
  const auto& f = *b.forms;
  for (int p = 0; p < b.n(); ++p) {
    int total = 0, last = -1;
    for (int q = 0; q < b.n(); ++q) {
      const int m = e_mult(f, p, q);
      total += m;
      if (m > 0) last = q;
    }
    if (total == 1) inv[static_cast<std::size_t>(p)] = last;
  }
  return inv;
}

inline RowResult involution_row(const StructureBundle& b) {
  RowResult r;
  const auto inv = form_involution(b);
  for (int p = 0; p < b.n(); ++p) {
    ++r.checked;
    const int q = inv[static_cast<std::size_t>(p)];
    const bool ok = q >= 0 && inv[static_cast<std::size_t>(q)] == p;
    if (!ok && r.pass) {
      r.pass = false;
      r.witness = q < 0 ? nm(b, p) + "* is not a simple object" : nm(b, p) + "** = " + (inv[static_cast<std::size_t>(q)] < 0 ? std::string("(not simple)") : nm(b, inv[static_cast<std::size_t>(q)]));
    }
  }
  return r;
}

// dim hom(y, z) = <y*, z>
inline RowResult hom_pairing_row(const StructureBundle& b) {
  RowResult r;
  const auto inv = form_involution(b);
  for (int y = 0; y < b.n(); ++y)
    for (int z = 0; z < b.n(); ++z) {
      if (b.grade(y) != b.grade(z)) continue;
      ++r.checked;
      const int ys = inv[static_cast<std::size_t>(y)];
      const int have = ys < 0 ? -1 : pairing(*b.forms, ys, z);
      const int want = y == z ? 1 : 0;
      if (have != want && r.pass) {
        r.pass = false;
        r.witness = "dim hom(" + nm(b, y) + "," + nm(b, z) + ") = " + std::to_string(want) + " but <" +
                    (ys < 0 ? std::string("?") : nm(b, ys)) + "," + nm(b, z) + "> = " + std::to_string(have);
      }
    }
  return r;
}

// <u, v*w> = <u*v, w> as dimensions
inline RowResult frobenius_row(const StructureBundle& b) {
  RowResult r;
  const auto& f = *b.forms;
  const auto& pi = b.pi();
  for (int u = 0; u < b.n(); ++u)
    for (int v = 0; v < b.n(); ++v)
      for (int w = 0; w < b.n(); ++w) {
        if (pi.mul(pi.mul(b.grade(u), b.grade(v)), b.grade(w)) != pi.identity()) continue;
        ++r.checked;
        int left = 0, right = 0;
        for (int c = 0; c < b.n(); ++c) {
          left += b.N(v, w, c) * pairing(f, u, c);
          right += b.N(u, v, c) * pairing(f, c, w);
        }
        if (left != right && r.pass) {
          r.pass = false;
          r.witness = "u=" + nm(b, u) + ", v=" + nm(b, v) + ", w=" + nm(b, w) + ": <u,v*w> has dimension " +
                      std::to_string(left) + ", <u*v,w> has " + std::to_string(right);
        }
      }
  return r;
}

}  // namespace suite_detail

inline std::vector<SuiteRow> balanced_rows() {
  using namespace suite_detail;
  const auto x = X(), y = Y(), z = Z(), w = W();
  const auto p = P();
  std::vector<SuiteRow> rows;
  rows.push_back(table("A1.grading", "products of graded simples land in the product grade", grading_row));
  rows.push_back(diagram("M.pentagon", "associator pentagon",
                         {{seq({assoc(star(x, y), z, w), assoc(x, y, star(z, w))}),
                           seq({term::star(assoc(x, y, z), id(w)), assoc(x, star(y, z), w),
                                term::star(id(x), assoc(y, z, w))})}}));
  rows.push_back(diagram("M.triangle", "unit triangle",
                         {{term::star(runit(x), id(y)), seq({assoc(x, unit(), y), term::star(id(x), lunit(y))})}}));
  rows.push_back(table("A2.hom", "the crossing is a homomorphism of monoidal functors", crossing_hom_row));
  rows.push_back(diagram("A2.monoidal-assoc", "each crossing functor preserves the associator",
                         {{term::phi(p, assoc(x, y, z)), assoc(phi(p, x), phi(p, y), phi(p, z))}}));
  rows.push_back(diagram("A2.monoidal-unit", "each crossing functor preserves the unitors",
                         {{term::phi(p, lunit(x)), lunit(phi(p, x))}, {term::phi(p, runit(x)), runit(phi(p, x))}}));
  rows.push_back(diagram(
      "A3.1.hex-left", "braiding a product past an object",
      {{braid(star(x, y), z),
        seq({assoc(x, y, z), term::star(id(x), braid(y, z)), assoc_inv(x, phi(grade(y), z), y),
             term::star(braid(x, phi(grade(y), z)), id(y)), assoc(phi(grade(x), phi(grade(y), z)), x, y)})}}));
  rows.push_back(diagram(
      "A3.1.hex-right", "braiding an object past a product",
      {{braid(x, star(y, z)),
        seq({assoc_inv(x, y, z), term::star(braid(x, y), id(z)), assoc(phi(grade(x), y), x, z),
             term::star(id(phi(grade(x), y)), braid(x, z)), assoc_inv(phi(grade(x), y), phi(grade(x), z), x)})}}));
  {
    const auto u = star(x, y), v = star(z, w);
    const auto f = braid(x, y), g = braid(z, w);
    const auto u2 = star(phi(grade(x), y), x), v2 = star(phi(grade(z), w), z);
    rows.push_back(diagram("A3.2.natural", "braiding is natural in both arguments",
                           {{seq({term::star(f, g), braid(u2, v2)}),
                             seq({braid(u, v), term::star(term::phi(grade(u), g), f)})}}));
  }
  rows.push_back(diagram("A3.3.equivariant", "crossing functors commute with the braiding",
                         {{braid(phi(p, x), phi(p, y)), term::phi(p, braid(x, y))}}));
  rows.push_back(diagram("A4.1.unit", "twist on the unit is the identity", {{twist(unit()), id(unit())}}));
  rows.push_back(diagram("A4.2.product", "twist of a product through the braiding",
                         {{twist(star(x, y)),
                           seq({braid(x, y), term::star(twist(phi(grade(x), y)), twist(x)),
                                braid(phi(gmul(grade(x), grade(y)), y), phi(grade(x), x))})}}));
  {
    const auto u = star(x, y), v = star(phi(grade(x), y), x);
    const auto f = braid(x, y);
    rows.push_back(diagram("A4.3.natural", "twist is natural",
                           {{seq({f, twist(v)}), seq({twist(u), term::phi(grade(u), f)})}}));
  }
  rows.push_back(diagram("A4.4.equivariant", "crossing functors commute with the twist",
                         {{twist(phi(p, x)), term::phi(p, twist(x))}}));
  return rows;
}

inline std::vector<SuiteRow> tortile_rows() {
  using namespace suite_detail;
  const auto x = X(), y = Y();
  const auto p = P();
  std::vector<SuiteRow> rows;
  rows.push_back(diagram("D.zigzag-left", "first zig-zag identity on duals",
                         {{seq({inv(lunit(dual(x))), term::star(birth(x), id(dual(x))), assoc(dual(x), x, dual(x)),
                                term::star(id(dual(x)), death(x)), runit(dual(x))}),
                           id(dual(x))}}));
  rows.push_back(diagram("D.zigzag-right", "second zig-zag identity",
                         {{seq({inv(runit(x)), term::star(id(x), birth(x)), assoc_inv(x, dual(x), x),
                                term::star(death(x), id(x)), lunit(x)}),
                           id(x)}}));
  {
    const auto u = star(x, y), v = star(phi(grade(x), y), x);
    const auto f = braid(x, y);
    rows.push_back(diagram("A6.1.natural", "lax isomorphisms are natural",
                           {{seq({term::dual(term::phi(p, f)), laxc(p, u)}),
                             seq({laxc(p, v), term::phi(p, term::dual(f))})}}));
  }
  rows.push_back(diagram("A6.2.twist", "lax isomorphism against the dual of the twist",
                         {{seq({laxc(grade(x), x), twist(phi(grade(x), dual(x)))}), term::dual(twist(x))}}));
  rows.push_back(diagram("A6.3.birth", "lax isomorphism carries b to its image",
                         {{seq({birth(phi(p, x)), term::star(laxc(p, x), id(phi(p, x)))}), term::phi(p, birth(x))}}));
  rows.push_back(diagram("A6.3.death", "lax isomorphism carries d to its image",
                         {{seq({term::star(id(phi(p, x)), inv(laxc(p, x))), death(phi(p, x))}), term::phi(p, death(x))}}));
  SuiteRow pc = diagram("P4.3.pc-commute", "product flip commutes with the lax isomorphisms",
                        {{seq({pairflip(phi(p, x), phi(p, y)), term::star(laxc(p, y), laxc(p, x))}),
                          seq({laxc(p, star(x, y)), term::phi(p, pairflip(x, y))})}});
  pc.needs_coherence = true;
  rows.push_back(pc);
  return rows;
}

inline std::vector<SuiteRow> g_action_rows() {
  using namespace suite_detail;
  const auto x = X(), y = Y(), z = Z(), w = W();
  const auto g = Gv();
  const bool lit = true;
  std::vector<SuiteRow> rows;
  rows.push_back(diagram("A7.1", "the action on objects is multiplication by rho(g)1 on either side",
                         {{id(star(rho(g, x), y)), id(rho(g, star(x, y)))},
                          {id(rho(g, star(x, y))), id(star(x, rho(g, y)))}},
                         lit));
  const auto f = braid(x, y), h = braid(z, w);
  rows.push_back(diagram("A7.2.left", "action on a product of morphisms, left factor",
                         {{term::star(term::rho(g, f), h), term::rho(g, term::star(f, h))}}, lit));
  rows.push_back(diagram("A7.2.right", "action on a product of morphisms, right factor",
                         {{term::rho(g, term::star(f, h)), term::star(f, term::rho(g, h))}}, lit));
  rows.push_back(diagram("A7.3", "action preserves the associator in each slot",
                         {{term::rho(g, assoc(x, y, z)), assoc(rho(g, x), y, z)},
                          {term::rho(g, assoc(x, y, z)), assoc(x, rho(g, y), z)},
                          {term::rho(g, assoc(x, y, z)), assoc(x, y, rho(g, z))}},
                         lit));
  rows.push_back(diagram("A7.4", "action preserves the unitors",
                         {{term::rho(g, runit(x)), runit(rho(g, x))}, {term::rho(g, lunit(x)), lunit(rho(g, x))}}, lit));
  rows.push_back(diagram("A7.5", "action preserves the braiding in each slot",
                         {{braid(rho(g, x), y), term::rho(g, braid(x, y))}, {term::rho(g, braid(x, y)), braid(x, rho(g, y))}},
                         lit));
  rows.push_back(diagram("A7.6", "action preserves the twist", {{twist(rho(g, x)), term::rho(g, twist(x))}}, lit));
  {
    const auto u = star(x, y), v = star(phi(grade(x), y), x);
    rows.push_back(diagram("A8.1.natural", "lax action isomorphisms are natural",
                           {{seq({term::dual(term::rho(g, f)), laxh(g, u)}),
                             seq({laxh(g, v), term::rho(ginv(g), term::dual(f))})}}));
  }
  rows.push_back(diagram("A8.2.birth", "lax action isomorphism carries b_{rho U} to b_U",
                         {{seq({birth(rho(g, x)), term::star(laxh(g, x), id(rho(g, x)))}), birth(x)}}, lit));
  rows.push_back(diagram("A8.2.death", "lax action isomorphism carries d_{rho U} to d_U",
                         {{seq({term::star(id(rho(g, x)), inv(laxh(g, x))), death(rho(g, x))}), death(x)}}, lit));
  return rows;
}

inline std::vector<SuiteRow> forms_rows() {
  using namespace suite_detail;
  return {
      table("B.IJ", "I after J is isomorphic to the identity", ij_row),
      table("B.JI", "J after I is isomorphic to the identity", ji_row),
      table("B.involution", "the induced involution squares to the identity", involution_row),
      table("B.hom-pairing", "hom dimensions equal pairing dimensions under the involution", hom_pairing_row),
      table("F.frobenius", "Frobenius isomorphisms <U, V*W> = <U*V, W>", frobenius_row),
  };
}

/// Rows per definition group, keyed by the id prefix before the item number.
inline std::map<std::string, int> manifest_counts(const std::vector<SuiteRow>& rows) {
  std::map<std::string, int> out;
  for (const auto& r : rows) {
    const auto& id = r.id;
    if (id.size() >= 2 && id[0] == 'A' && std::isdigit(static_cast<unsigned char>(id[1])))
      out[std::string("A.") + id[1]]++;
    else
      out[id.substr(0, id.find('.'))]++;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Running rows.

template <class S>
RowResult run_row(const Engine<S>& engine, const SuiteRow& row, int workers) {
  if (row.data) {
    RowResult r = row.data(engine.bundle());
    r.id = row.id;
    r.description = row.description;
    return r;
  }
  const DiagramReport d = check_diagram(engine, row.spec, workers);
  RowResult r;
  r.id = row.id;
  r.description = row.description;
  r.pass = d.pass;
  r.checked = d.checked;
  if (d.witness) {
    r.witness = d.witness->assignment_text + ": " + d.witness->message;
    if (row.spec.equations.size() > 1) r.witness += " (equation " + std::to_string(d.witness->equation + 1) + ")";
    r.lhs = d.witness->lhs;
    r.rhs = d.witness->rhs;
  }
  return r;
}

enum class SuiteKind { Balanced, Tortile, GAction, Forms };

inline const char* suite_name(SuiteKind k) {
  switch (k) {
    case SuiteKind::Balanced: return "balanced";
    case SuiteKind::Tortile: return "tortile";
    case SuiteKind::GAction: return "gaction";
    case SuiteKind::Forms: return "forms";
  }
  return "?";
}

inline std::vector<SuiteRow> suite_rows(SuiteKind k) {
  switch (k) {
    case SuiteKind::Balanced: return balanced_rows();
    case SuiteKind::Tortile: return tortile_rows();
    case SuiteKind::GAction: return g_action_rows();
    case SuiteKind::Forms: return forms_rows();
  }
  return {};
}

/// Missing bundle sections for a suite, empty when it can run.
inline std::string suite_missing(const StructureBundle& b, SuiteKind k) {
  std::string m;
  auto need = [&](bool have, const char* what) {
    if (!have) m += (m.empty() ? "" : ", ") + std::string(what);
  };
  switch (k) {
    case SuiteKind::Balanced:
      need(b.braiding.has_value(), "R");
      need(b.theta.has_value(), "theta");
      break;
    case SuiteKind::Tortile:
      need(b.braiding.has_value(), "R");
      need(b.theta.has_value(), "theta");
      need(b.duality.has_value(), "dual/b/d/c_lax");
      break;
    case SuiteKind::GAction:
      need(b.g_action.has_value(), "rho");
      need(b.braiding.has_value(), "R");
      need(b.theta.has_value(), "theta");
      need(b.duality.has_value(), "dual/b/d/h_lax");
      break;
    case SuiteKind::Forms: need(b.forms.has_value(), "pairing/E"); break;
  }
  return m;
}

template <class S = Cyclotomic>
SuiteReport run_suite(const StructureBundle& b, SuiteKind k, int workers = 1) {
  const std::string missing = suite_missing(b, k);
  if (!missing.empty()) throw SuiteError(std::string(suite_name(k)) + " suite needs bundle sections: " + missing);
  const Engine<S> engine(b);
  SuiteReport rep;
  rep.suite = suite_name(k);
  std::optional<bool> coherent;
  for (const auto& row : suite_rows(k)) {
    if (row.needs_coherence) {
      if (!coherent) {
        coherent = true;
        for (const auto& m : balanced_rows())
          if (m.id == "M.pentagon" || m.id == "M.triangle") coherent = *coherent && run_row(engine, m, workers).pass;
      }
      if (!*coherent) {
        rep.rows.push_back({row.id, row.description, false, 0, "not evaluated: pentagon or triangle fails", "", ""});
        continue;
      }
    }
    rep.rows.push_back(run_row(engine, row, workers));
  }
  return rep;
}

template <class S = Cyclotomic>
SuiteReport check_balanced_pi(const StructureBundle& b, int workers = 1) {
  return run_suite<S>(b, SuiteKind::Balanced, workers);
}
template <class S = Cyclotomic>
SuiteReport check_tortile(const StructureBundle& b, int workers = 1) {
  return run_suite<S>(b, SuiteKind::Tortile, workers);
}
template <class S = Cyclotomic>
SuiteReport check_G_action(const StructureBundle& b, int workers = 1) {
  return run_suite<S>(b, SuiteKind::GAction, workers);
}
template <class S = Cyclotomic>
SuiteReport check_forms(const StructureBundle& b, int workers = 1) {
  return run_suite<S>(b, SuiteKind::Forms, workers);
}

}  // namespace tortile
