#pragma once

// Evaluation of object and morphism terms to concrete matrices.
//
// An evaluated object is a fusion tree: a leaf (one simple), a formal sum of
// simples, or a product of two trees. The basis of a product L*R is the list
// of (i, j, c, mu): i indexes L's basis, j indexes R's basis, c is a channel
// of simple(i)*simple(j) and mu < N(simple(i), simple(j), c). Elements are
// ordered by i, then j, then c ascending, then mu. A morphism between two
// trees is a dense matrix (target dimension x source dimension) that only
// connects basis elements carrying the same simple.

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tortile/bundle.hpp"
#include "tortile/terms.hpp"

namespace tortile {

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BasisElt {
  int simple = 0;
  int left = -1;
  int right = -1;
  int mu = 0;
};

struct Tree;
using TreeP = std::shared_ptr<const Tree>;

struct Tree {
  enum class Kind { Leaf, Star, Sum } kind = Kind::Leaf;
  int grade = 0;
  TreeP l, r;
  std::vector<int> items;  // Leaf: {simple}; Sum: the summands in order
  std::vector<BasisElt> basis;
  std::vector<int> block;  // Star: first basis index of block (i, j); one extra sentinel

  int dim() const { return static_cast<int>(basis.size()); }
  int simple_at(int i) const { return basis[static_cast<std::size_t>(i)].simple; }
};

inline bool same_tree(const TreeP& a, const TreeP& b) {
  if (a == b) return true;
  if (a->kind != b->kind) return false;
  if (a->kind == Tree::Kind::Star) return same_tree(a->l, b->l) && same_tree(a->r, b->r);
  return a->items == b->items && (a->kind == Tree::Kind::Leaf || a->grade == b->grade);
}

inline void tree_atoms(const TreeP& t, std::vector<TreeP>& out) {
  if (t->kind == Tree::Kind::Star) {
    tree_atoms(t->l, out);
    tree_atoms(t->r, out);
  } else {
    out.push_back(t);
  }
}

inline bool same_atoms(const TreeP& a, const TreeP& b) {
  std::vector<TreeP> xa, xb;
  tree_atoms(a, xa);
  tree_atoms(b, xb);
  if (xa.size() != xb.size()) return false;
  for (std::size_t i = 0; i < xa.size(); ++i)
    if (!same_tree(xa[i], xb[i])) return false;
  return true;
}

inline std::string tree_to_string(const TreeP& t, const GradedCategory& c) {
  switch (t->kind) {
    case Tree::Kind::Leaf: return c.simple(t->items[0]).name;
    case Tree::Kind::Star: return "(" + tree_to_string(t->l, c) + "*" + tree_to_string(t->r, c) + ")";
    case Tree::Kind::Sum: {
      std::string s = "[";
      for (std::size_t i = 0; i < t->items.size(); ++i) s += (i ? "+" : "") + c.simple(t->items[i]).name;
      return s + "]";
    }
  }
  return "?";
}

/// Values of the variables of a term: simples, grading-group and G elements.
struct Assignment {
  std::vector<int> objects;
  std::vector<int> pi;
  std::vector<int> g;
};

template <class S>
class Engine {
 public:
  using M = Matrix<S>;
  struct Mor {
    TreeP src, tgt;
    M m;
  };

  explicit Engine(const StructureBundle& b) : b_(b) {
    auto conv = [](const Mat& m) { return m.template map<S>([](const Cyclotomic& c) { return ScalarTraits<S>::from(c); }); };
    auto sc = [](const Cyclotomic& c) { return ScalarTraits<S>::from(c); };
    for (const auto& [k, m] : b.F) {
      F_[k] = conv(m);
      auto inv = m.try_inverse();
      if (inv) Finv_[k] = conv(*inv);
    }
    for (const auto& [k, m] : b.mu) {
      auto inv = m.try_inverse();
      if (inv) muinv_[k] = conv(*inv);
    }
    for (const auto& v : b.l) l_.push_back(sc(v));
    for (const auto& v : b.r) r_.push_back(sc(v));
    if (b.braiding)
      for (const auto& [k, m] : b.braiding->R) R_[k] = conv(m);
    if (b.theta)
      for (const auto& v : *b.theta) theta_.push_back(sc(v));
    if (b.duality) {
      for (const auto& v : b.duality->b) bb_.push_back(sc(v));
      for (const auto& v : b.duality->d) dd_.push_back(sc(v));
      for (const auto& [k, v] : b.duality->c_lax) c_[k] = sc(v);
      for (const auto& [k, v] : b.duality->h_lax) h_[k] = sc(v);
      for (int s = 0; s < b.n(); ++s) kappa_.push_back(snake_scalar(s));
    }
  }

  const StructureBundle& bundle() const { return b_; }

  // ---- trees ---------------------------------------------------------------

  TreeP leaf(int s) const {
    auto t = std::make_shared<Tree>();
    t->kind = Tree::Kind::Leaf;
    t->grade = b_.grade(s);
    t->items = {s};
    t->basis = {BasisElt{s, -1, -1, 0}};
    return t;
  }

  /// Formal sum in the given order; a single summand collapses to a leaf.
  TreeP sum(std::vector<int> items, int grade) const {
    if (items.size() == 1) return leaf(items[0]);
    auto t = std::make_shared<Tree>();
    t->kind = Tree::Kind::Sum;
    t->grade = grade;
    for (std::size_t k = 0; k < items.size(); ++k) t->basis.push_back(BasisElt{items[k], static_cast<int>(k), -1, 0});
    t->items = std::move(items);
    return t;
  }

  TreeP star(const TreeP& a, const TreeP& b) const {
    auto t = std::make_shared<Tree>();
    t->kind = Tree::Kind::Star;
    t->grade = b_.pi().mul(a->grade, b->grade);
    t->l = a;
    t->r = b;
    t->block.reserve(static_cast<std::size_t>(a->dim() * b->dim() + 1));
    for (int i = 0; i < a->dim(); ++i)
      for (int j = 0; j < b->dim(); ++j) {
        t->block.push_back(t->dim());
        const int x = a->simple_at(i), y = b->simple_at(j);
        for (int c = 0; c < b_.n(); ++c)
          for (int mu = 0; mu < b_.N(x, y, c); ++mu) t->basis.push_back(BasisElt{c, i, j, mu});
      }
    t->block.push_back(t->dim());
    return t;
  }

  /// Basis position of (i, j, c, mu) in a product tree, or -1.
  static int star_index(const Tree& t, int i, int j, int c, int mu) {
    const std::size_t blk = static_cast<std::size_t>(i * t.r->dim() + j);
    for (int p = t.block[blk]; p < t.block[blk + 1]; ++p)
      if (t.basis[static_cast<std::size_t>(p)].simple == c && t.basis[static_cast<std::size_t>(p)].mu == mu) return p;
    return -1;
  }

  /// phi(gamma) pushed through products, summands re-sorted.
  TreeP push_phi(int gamma, const TreeP& t) const {
    switch (t->kind) {
      case Tree::Kind::Leaf: return leaf(b_.sig(gamma, t->items[0]));
      case Tree::Kind::Star: return star(push_phi(gamma, t->l), push_phi(gamma, t->r));
      case Tree::Kind::Sum: {
        std::vector<int> items;
        for (int s : t->items) items.push_back(b_.sig(gamma, s));
        std::stable_sort(items.begin(), items.end());
        return sum(std::move(items), b_.pi().conj(gamma, t->grade));
      }
    }
    throw EvalError("bad tree");
  }

  TreeP dual_tree(const TreeP& t) const {
    need_duality();
    const auto pos = dual_positions(t);
    std::vector<int> items(static_cast<std::size_t>(t->dim()));
    for (int i = 0; i < t->dim(); ++i) items[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)])] = b_.dual_of(t->simple_at(i));
    return sum(std::move(items), b_.pi().inv(t->grade));
  }

  /// Position of the dual of basis element i inside dual_tree(t).
  std::vector<int> dual_positions(const TreeP& t) const {
    std::vector<int> order(static_cast<std::size_t>(t->dim()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return b_.dual_of(t->simple_at(x)) < b_.dual_of(t->simple_at(y)); });
    std::vector<int> pos(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) pos[static_cast<std::size_t>(order[k])] = static_cast<int>(k);
    return pos;
  }

  // ---- structural morphisms ------------------------------------------------

  Mor id(const TreeP& x) const { return {x, x, M::identity(static_cast<std::size_t>(x->dim()))}; }

  Mor assoc(const TreeP& x, const TreeP& y, const TreeP& z, bool inverse = false) const {
    const TreeP xy = star(x, y), yz = star(y, z);
    const TreeP left = star(xy, z), right = star(x, yz);
    M m = inverse ? M(static_cast<std::size_t>(left->dim()), static_cast<std::size_t>(right->dim()))
                  : M(static_cast<std::size_t>(right->dim()), static_cast<std::size_t>(left->dim()));
    for (int p = 0; p < left->dim(); ++p) {
      const auto& e = left->basis[static_cast<std::size_t>(p)];
      const auto& exy = xy->basis[static_cast<std::size_t>(e.left)];
      const int i = exy.left, j = exy.right, k = e.right;
      const int a = x->simple_at(i), b = y->simple_at(j), c = z->simple_at(k), d = e.simple;
      const M& F = lookup(inverse ? Finv_ : F_, std::array<int, 4>{a, b, c, d}, "F", inverse ? "singular" : "missing");
      const int col = left_pos(a, b, c, d, exy.simple, exy.mu, e.mu);
      for (int f = 0; f < b_.n(); ++f)
        for (int mu2 = 0; mu2 < b_.N(b, c, f); ++mu2)
          for (int nu2 = 0; nu2 < b_.N(a, f, d); ++nu2) {
            const int row = right_pos(a, b, c, d, f, mu2, nu2);
            const S& v = inverse ? F(static_cast<std::size_t>(col), static_cast<std::size_t>(row))
                                 : F(static_cast<std::size_t>(row), static_cast<std::size_t>(col));
            if (v.is_zero()) continue;
            const int q = star_index(*yz, j, k, f, mu2);
            const int t = star_index(*right, i, q, d, nu2);
            if (inverse)
              m(static_cast<std::size_t>(p), static_cast<std::size_t>(t)) = v;
            else
              m(static_cast<std::size_t>(t), static_cast<std::size_t>(p)) = v;
          }
    }
    if (inverse) return {right, left, std::move(m)};
    return {left, right, std::move(m)};
  }

  Mor lunit(const TreeP& x) const {
    const TreeP src = star(leaf(b_.unit()), x);
    M m(static_cast<std::size_t>(x->dim()), static_cast<std::size_t>(src->dim()));
    for (int i = 0; i < x->dim(); ++i) {
      const int p = star_index(*src, 0, i, x->simple_at(i), 0);
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(p)) = l_[static_cast<std::size_t>(x->simple_at(i))];
    }
    return {src, x, std::move(m)};
  }

  Mor runit(const TreeP& x) const {
    const TreeP src = star(x, leaf(b_.unit()));
    M m(static_cast<std::size_t>(x->dim()), static_cast<std::size_t>(src->dim()));
    for (int i = 0; i < x->dim(); ++i) {
      const int p = star_index(*src, i, 0, x->simple_at(i), 0);
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(p)) = r_[static_cast<std::size_t>(x->simple_at(i))];
    }
    return {src, x, std::move(m)};
  }

  Mor braid(const TreeP& x, const TreeP& y) const {
    if (!b_.braiding) throw EvalError("bundle has no braiding");
    const int alpha = x->grade;
    auto [py, iy] = phi_iso(alpha, y);
    const TreeP ny = naive_phi(alpha, y);
    const TreeP src = star(x, y), mid = star(ny, x), tgt = star(py, x);
    M rm(static_cast<std::size_t>(mid->dim()), static_cast<std::size_t>(src->dim()));
    for (int p = 0; p < src->dim(); ++p) {
      const auto& e = src->basis[static_cast<std::size_t>(p)];
      const int a = x->simple_at(e.left), b = y->simple_at(e.right);
      const M& R = lookup(R_, std::array<int, 3>{a, b, e.simple}, "R", "missing");
      for (std::size_t mu2 = 0; mu2 < R.rows(); ++mu2) {
        const int t = star_index(*mid, e.right, e.left, e.simple, static_cast<int>(mu2));
        if (t < 0) throw EvalError("braiding channel mismatch");
        rm(static_cast<std::size_t>(t), static_cast<std::size_t>(p)) = R(mu2, static_cast<std::size_t>(e.mu));
      }
    }
    M out = star_matrix(iy, M::identity(static_cast<std::size_t>(x->dim())), mid, tgt) * rm;
    return {src, tgt, std::move(out)};
  }

  Mor twist(const TreeP& x) const {
    if (!b_.theta) throw EvalError("bundle has no twist");
    auto [px, ix] = phi_iso(x->grade, x);
    M d(static_cast<std::size_t>(x->dim()), static_cast<std::size_t>(x->dim()));
    for (int i = 0; i < x->dim(); ++i) {
      const int s = x->simple_at(i);
      if (b_.sig(x->grade, s) != s) throw EvalError("twist on a simple not fixed by its grade");
      d(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = theta_[static_cast<std::size_t>(s)];
    }
    return {x, px, ix * d};
  }

  Mor birth(const TreeP& x) const {
    need_duality();
    const TreeP dx = dual_tree(x);
    const auto pos = dual_positions(x);
    const TreeP tgt = star(dx, x);
    M m(static_cast<std::size_t>(tgt->dim()), 1);
    for (int i = 0; i < x->dim(); ++i) {
      const int t = star_index(*tgt, pos[static_cast<std::size_t>(i)], i, b_.unit(), 0);
      m(static_cast<std::size_t>(t), 0) = bb_[static_cast<std::size_t>(x->simple_at(i))];
    }
    return {leaf(b_.unit()), tgt, std::move(m)};
  }

  Mor death(const TreeP& x) const {
    need_duality();
    const TreeP dx = dual_tree(x);
    const auto pos = dual_positions(x);
    const TreeP src = star(x, dx);
    M m(1, static_cast<std::size_t>(src->dim()));
    for (int i = 0; i < x->dim(); ++i) {
      const int p = star_index(*src, i, pos[static_cast<std::size_t>(i)], b_.unit(), 0);
      m(0, static_cast<std::size_t>(p)) = dd_[static_cast<std::size_t>(x->simple_at(i))];
    }
    return {src, leaf(b_.unit()), std::move(m)};
  }

  /// f* : B* -> A* for f : A -> B, through b/d conjugation.
  Mor dual_mor(const Mor& f) const { return dual_matrix(f, true); }

  Mor laxc(int gamma, const TreeP& x) const {
    need_duality();
    auto [px, ix] = phi_iso(gamma, x);
    const TreeP nx = naive_phi(gamma, x);
    const Mor back = dual_matrix(Mor{nx, px, ix}, false);  // (phi x)* -> (naive phi x)*
    const TreeP dx = dual_tree(x);
    const auto px_pos = dual_positions(x);
    const auto nq = dual_positions(nx);
    auto [pdx, idx] = phi_iso(gamma, dx);
    const TreeP ndx = naive_phi(gamma, dx);
    M c(static_cast<std::size_t>(ndx->dim()), static_cast<std::size_t>(back.tgt->dim()));
    for (int i = 0; i < x->dim(); ++i) {
      auto it = c_.find({gamma, x->simple_at(i)});
      if (it == c_.end()) throw EvalError("missing c_lax");
      c(static_cast<std::size_t>(px_pos[static_cast<std::size_t>(i)]), static_cast<std::size_t>(nq[static_cast<std::size_t>(i)])) = it->second;
    }
    return {back.src, pdx, idx * c * back.m};
  }

  Mor laxh(int g, const TreeP& x) const {
    need_duality();
    if (!b_.g_action) throw EvalError("bundle has no G-action");
    const auto& G = b_.g_action->G;
    const TreeP rx = star(leaf(b_.rho_of(g)), x);
    const TreeP src = dual_tree(rx);
    const auto prx = dual_positions(rx);
    const TreeP dx = dual_tree(x);
    const auto px = dual_positions(x);
    const TreeP tgt = star(leaf(b_.rho_of(G.inv(g))), dx);
    M m(static_cast<std::size_t>(tgt->dim()), static_cast<std::size_t>(src->dim()));
    for (int i = 0; i < x->dim(); ++i) {
      const int s = rx->block[static_cast<std::size_t>(i)];
      const int t = tgt->block[static_cast<std::size_t>(px[static_cast<std::size_t>(i)])];
      if (rx->block[static_cast<std::size_t>(i) + 1] - s != 1) throw EvalError("rho(g)1 is not invertible");
      auto it = h_.find({g, x->simple_at(i)});
      if (it == h_.end()) throw EvalError("missing h_lax");
      m(static_cast<std::size_t>(t), static_cast<std::size_t>(prx[static_cast<std::size_t>(s)])) = it->second;
    }
    return {src, tgt, std::move(m)};
  }

  /// p_{X,Y} : (X*Y)* -> Y* * X*, the canonical composite through b and d.
  Mor pairflip(const TreeP& x, const TreeP& y) const {
    const TreeP du = dual_tree(x), dv = dual_tree(y), uv = star(x, y), duv = dual_tree(uv);
    const TreeP vu = star(dv, du);
    Mor bp = compose(birth(y), star_mor(id(dv), inverse(lunit(y))));
    bp = compose(bp, star_mor(id(dv), star_mor(birth(x), id(y))));
    bp = compose(bp, rebracket(bp.tgt, star(vu, uv)));
    Mor out = compose(inverse(lunit(duv)), star_mor(bp, id(duv)));
    out = compose(out, assoc(vu, uv, duv));
    out = compose(out, star_mor(id(vu), death(uv)));
    return compose(out, runit(vu));
  }

  Mor star_mor(const Mor& f, const Mor& g) const {
    const TreeP src = star(f.src, g.src), tgt = star(f.tgt, g.tgt);
    return {src, tgt, star_matrix(f.m, g.m, src, tgt)};
  }

  Mor phi_mor(int gamma, const Mor& f) const {
    auto [ps, is] = phi_iso(gamma, f.src);
    auto [pt, it] = phi_iso(gamma, f.tgt);
    return {ps, pt, it * f.m * invert(is)};
  }

  Mor rho_mor(int g, const Mor& f) const {
    if (!b_.g_action) throw EvalError("bundle has no G-action");
    return star_mor(id(leaf(b_.rho_of(g))), f);
  }

  Mor inverse(const Mor& f) const { return {f.tgt, f.src, invert(f.m)}; }

  /// g . f, inserting associators when the endpoints differ only in bracketing.
  Mor compose(const Mor& f, const Mor& g) const {
    if (same_tree(f.tgt, g.src)) return {f.src, g.tgt, g.m * f.m};
    if (!same_atoms(f.tgt, g.src))
      throw EvalError("endpoint mismatch: " + tree_to_string(f.tgt, b_.cat) + " vs " + tree_to_string(g.src, b_.cat));
    const Mor r = rebracket(f.tgt, g.src);
    return {f.src, g.tgt, g.m * r.m * f.m};
  }

  /// Associator composite between two bracketings of one atom sequence.
  Mor rebracket(const TreeP& a, const TreeP& b) const {
    const Mor la = to_left_comb(a), lb = to_left_comb(b);
    return {a, b, invert(lb.m) * la.m};
  }

  /// phi(gamma) applied to every simple of t, in t's basis order.
  TreeP naive_phi(int gamma, const TreeP& t) const {
    std::vector<int> items;
    for (int i = 0; i < t->dim(); ++i) items.push_back(b_.sig(gamma, t->simple_at(i)));
    return sum(std::move(items), b_.pi().conj(gamma, t->grade));
  }

  /// Iso from naive_phi(gamma, t) to push_phi(gamma, t), built from mu^-1.
  std::pair<TreeP, M> phi_iso(int gamma, const TreeP& t) const {
    switch (t->kind) {
      case Tree::Kind::Leaf: return {leaf(b_.sig(gamma, t->items[0])), M::identity(1)};
      case Tree::Kind::Sum: {
        const std::size_t n = t->items.size();
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int x, int y) { return b_.sig(gamma, t->items[static_cast<std::size_t>(x)]) < b_.sig(gamma, t->items[static_cast<std::size_t>(y)]); });
        std::vector<int> items;
        M iso(n, n);
        for (std::size_t k = 0; k < n; ++k) {
          items.push_back(b_.sig(gamma, t->items[static_cast<std::size_t>(order[k])]));
          iso(k, static_cast<std::size_t>(order[k])) = S(1);
        }
        return {sum(std::move(items), b_.pi().conj(gamma, t->grade)), std::move(iso)};
      }
      case Tree::Kind::Star: {
        auto [pl, il] = phi_iso(gamma, t->l);
        auto [pr, ir] = phi_iso(gamma, t->r);
        const TreeP ns = star(naive_phi(gamma, t->l), naive_phi(gamma, t->r));
        const TreeP pushed = star(pl, pr);
        M minv(static_cast<std::size_t>(ns->dim()), static_cast<std::size_t>(t->dim()));
        for (int p = 0; p < t->dim(); ++p) {
          const auto& e = t->basis[static_cast<std::size_t>(p)];
          const int a = t->l->simple_at(e.left), b = t->r->simple_at(e.right);
          const M& mi = lookup(muinv_, std::array<int, 4>{gamma, a, b, e.simple}, "mu", "missing or singular");
          for (std::size_t mu2 = 0; mu2 < mi.rows(); ++mu2) {
            const S& v = mi(mu2, static_cast<std::size_t>(e.mu));
            if (v.is_zero()) continue;
            const int q = star_index(*ns, e.left, e.right, b_.sig(gamma, e.simple), static_cast<int>(mu2));
            minv(static_cast<std::size_t>(q), static_cast<std::size_t>(p)) = v;
          }
        }
        return {pushed, star_matrix(il, ir, ns, pushed) * minv};
      }
    }
    throw EvalError("bad tree");
  }

  // ---- terms -----------------------------------------------------------------

  int eval_group(const GroupExpr& e, const Assignment& a) const {
    using K = GrpNode::Kind;
    const GroupTable& t = table(e->domain);
    switch (e->kind) {
      case K::Const:
        if (e->index < 0 || e->index >= t.order()) throw EvalError("group constant out of range");
        return e->index;
      case K::Var: {
        const auto& v = e->domain == GroupDomain::Pi ? a.pi : a.g;
        if (e->index >= static_cast<int>(v.size())) throw EvalError("unassigned group variable");
        return v[static_cast<std::size_t>(e->index)];
      }
      case K::GradeOf: return eval_obj(e->obj, a)->grade;
      case K::Inv: return t.inv(eval_group(e->a, a));
      case K::Mul: return t.mul(eval_group(e->a, a), eval_group(e->b, a));
    }
    throw EvalError("bad group expression");
  }

  TreeP eval_obj(const ObjTerm& o, const Assignment& a) const {
    using K = ObjNode::Kind;
    switch (o->kind) {
      case K::Var:
        if (o->index >= static_cast<int>(a.objects.size())) throw EvalError("unassigned object variable");
        return leaf(a.objects[static_cast<std::size_t>(o->index)]);
      case K::Unit: return leaf(b_.unit());
      case K::Const:
        if (o->index < 0 || o->index >= b_.n()) throw EvalError("unknown simple in term");
        return leaf(o->index);
      case K::Star: return star(eval_obj(o->a, a), eval_obj(o->b, a));
      case K::Phi: return push_phi(eval_group(o->g, a), eval_obj(o->a, a));
      case K::Rho:
        if (!b_.g_action) throw EvalError("bundle has no G-action");
        return star(leaf(b_.rho_of(eval_group(o->g, a))), eval_obj(o->a, a));
      case K::Dual: return dual_tree(eval_obj(o->a, a));
    }
    throw EvalError("bad object term");
  }

  Mor eval_mor(const MorTerm& m, const Assignment& a) const {
    using K = MorNode::Kind;
    auto obj = [&](std::size_t i) { return eval_obj(m->objs.at(i), a); };
    switch (m->kind) {
      case K::Id: return id(obj(0));
      case K::Assoc: return assoc(obj(0), obj(1), obj(2));
      case K::AssocInv: return assoc(obj(0), obj(1), obj(2), true);
      case K::LeftUnit: return lunit(obj(0));
      case K::RightUnit: return runit(obj(0));
      case K::Braid: return braid(obj(0), obj(1));
      case K::Twist: return twist(obj(0));
      case K::Birth: return birth(obj(0));
      case K::Death: return death(obj(0));
      case K::LaxC: return laxc(eval_group(m->g, a), obj(0));
      case K::LaxH: return laxh(eval_group(m->g, a), obj(0));
      case K::PairFlip: return pairflip(obj(0), obj(1));
      case K::Compose: return compose(eval_mor(m->f, a), eval_mor(m->h, a));
      case K::StarMor: return star_mor(eval_mor(m->f, a), eval_mor(m->h, a));
      case K::PhiMor: return phi_mor(eval_group(m->g, a), eval_mor(m->f, a));
      case K::RhoMor: return rho_mor(eval_group(m->g, a), eval_mor(m->f, a));
      case K::DualMor: return dual_mor(eval_mor(m->f, a));
      case K::Inverse: return inverse(eval_mor(m->f, a));
    }
    throw EvalError("bad morphism term");
  }

  /// Scalar of the first zig-zag on a simple; 1 exactly when it holds.
  const S& kappa(int s) const { return kappa_.at(static_cast<std::size_t>(s)); }

 private:
  template <class Map, class Key>
  static const M& lookup(const Map& m, const Key& k, const char* what, const char* why) {
    auto it = m.find(k);
    if (it == m.end()) throw EvalError(std::string(what) + " symbol " + why);
    return it->second;
  }

  const GroupTable& table(GroupDomain d) const {
    if (d == GroupDomain::Pi) return b_.pi();
    if (!b_.g_action) throw EvalError("bundle has no G-action");
    return b_.g_action->G;
  }

  void need_duality() const {
    if (!b_.duality) throw EvalError("bundle has no duality");
  }

  static M invert(const M& m) {
    auto inv = m.try_inverse();
    if (!inv) throw EvalError("morphism is not invertible");
    return std::move(*inv);
  }

  int left_pos(int a, int b, int c, int d, int e, int mu, int nu) const {
    int off = 0;
    for (int x = 0; x < e; ++x) off += b_.N(a, b, x) * b_.N(x, c, d);
    return off + mu * b_.N(e, c, d) + nu;
  }
  int right_pos(int a, int b, int c, int d, int f, int mu, int nu) const {
    int off = 0;
    for (int x = 0; x < f; ++x) off += b_.N(b, c, x) * b_.N(a, x, d);
    return off + mu * b_.N(a, f, d) + nu;
  }

  M star_matrix(const M& fm, const M& gm, const TreeP& src, const TreeP& tgt) const {
    M m(static_cast<std::size_t>(tgt->dim()), static_cast<std::size_t>(src->dim()));
    for (int p = 0; p < src->dim(); ++p) {
      const auto& e = src->basis[static_cast<std::size_t>(p)];
      for (std::size_t i2 = 0; i2 < fm.rows(); ++i2) {
        const S& fv = fm(i2, static_cast<std::size_t>(e.left));
        if (fv.is_zero()) continue;
        for (std::size_t j2 = 0; j2 < gm.rows(); ++j2) {
          const S& gv = gm(j2, static_cast<std::size_t>(e.right));
          if (gv.is_zero()) continue;
          const int t = star_index(*tgt, static_cast<int>(i2), static_cast<int>(j2), e.simple, e.mu);
          if (t < 0) throw EvalError("product of morphisms leaves its fusion channel");
          m(static_cast<std::size_t>(t), static_cast<std::size_t>(p)) += fv * gv;
        }
      }
    }
    return m;
  }

  Mor dual_matrix(const Mor& f, bool with_snake) const {
    const TreeP da = dual_tree(f.src), db = dual_tree(f.tgt);
    const auto pa = dual_positions(f.src), pb = dual_positions(f.tgt);
    M m(static_cast<std::size_t>(da->dim()), static_cast<std::size_t>(db->dim()));
    for (int i = 0; i < f.src->dim(); ++i)
      for (int j = 0; j < f.tgt->dim(); ++j) {
        const S& v = f.m(static_cast<std::size_t>(j), static_cast<std::size_t>(i));
        if (v.is_zero()) continue;
        m(static_cast<std::size_t>(pa[static_cast<std::size_t>(i)]), static_cast<std::size_t>(pb[static_cast<std::size_t>(j)])) =
            with_snake ? v * kappa_[static_cast<std::size_t>(f.src->simple_at(i))] : v;
      }
    return {db, da, std::move(m)};
  }

  Mor to_left_comb(const TreeP& t) const {
    if (t->kind != Tree::Kind::Star) return id(t);
    const Mor parts = star_mor(to_left_comb(t->l), to_left_comb(t->r));
    const Mor tail = absorb(parts.tgt->l, parts.tgt->r);
    return {t, tail.tgt, tail.m * parts.m};
  }

  // Star(l, r) -> left comb, for l and r already left combs.
  Mor absorb(const TreeP& l, const TreeP& r) const {
    if (r->kind != Tree::Kind::Star) return id(star(l, r));
    const Mor a = assoc(l, r->l, r->r, true);
    const Mor inner = absorb(l, r->l);
    const Mor s = star_mor(inner, id(r->r));
    return {a.src, s.tgt, s.m * a.m};
  }

  S snake_scalar(int s) const {
    const TreeP x = leaf(s), dx = dual_tree(x);
    Mor m = compose(inverse(lunit(dx)), star_mor(birth(x), id(dx)));
    m = compose(m, assoc(dx, x, dx));
    m = compose(m, star_mor(id(dx), death(x)));
    m = compose(m, runit(dx));
    return m.m(0, 0);
  }

  const StructureBundle& b_;
  std::map<std::array<int, 4>, M> F_, Finv_, muinv_;
  std::map<std::array<int, 3>, M> R_;
  std::vector<S> l_, r_, theta_, bb_, dd_, kappa_;
  std::map<std::pair<int, int>, S> c_, h_;
};

}  // namespace tortile
