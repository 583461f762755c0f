#pragma once

// Object and morphism expression trees plus their s-expression syntax.
//
//   obj  := NAME | unit | (const SIMPLE) | (star obj obj) | (phi grp obj)
//         | (rho grp obj) | (dual obj)
//   grp  := NAME | (grade obj) | (inv grp) | (mul grp grp)
//   mor  := (id obj) | (assoc obj obj obj) | (assoc-inv obj obj obj)
//         | (lunit obj) | (runit obj) | (braid obj obj) | (twist obj)
//         | (birth obj) | (death obj) | (laxc grp obj) | (laxh grp obj)
//         | (pairflip obj obj) | (compose mor mor ...) | (star mor mor)
//         | (phi grp mor) | (rho grp mor) | (dual mor) | (inv mor)
//
// A bare NAME in object position is an object variable. In group position it
// is a group element when the relevant group has an element of that name,
// otherwise a group variable.

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tortile/group.hpp"

namespace tortile {

class TermError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ObjNode;
struct GrpNode;
struct MorNode;
using ObjTerm = std::shared_ptr<const ObjNode>;
using GroupExpr = std::shared_ptr<const GrpNode>;
using MorTerm = std::shared_ptr<const MorNode>;

/// Which group a group expression lives in.
enum class GroupDomain { Pi, G };

struct GrpNode {
  enum class Kind { Const, Var, GradeOf, Inv, Mul } kind;
  GroupDomain domain = GroupDomain::Pi;
  int index = 0;  // element for Const, variable index for Var
  ObjTerm obj;    // GradeOf
  GroupExpr a, b;
};

struct ObjNode {
  enum class Kind { Var, Unit, Const, Star, Phi, Rho, Dual } kind;
  int index = 0;  // Var index or Const simple
  ObjTerm a, b;
  GroupExpr g;
};

struct MorNode {
  enum class Kind {
    Id, Assoc, AssocInv, LeftUnit, RightUnit, Braid, Twist, Birth, Death, LaxC, LaxH, PairFlip,
    Compose, StarMor, PhiMor, RhoMor, DualMor, Inverse
  } kind;
  std::vector<ObjTerm> objs;
  GroupExpr g;
  MorTerm f, h;
};

namespace term {

inline ObjTerm var(int i) { return std::make_shared<ObjNode>(ObjNode{ObjNode::Kind::Var, i, nullptr, nullptr, nullptr}); }
inline ObjTerm unit() { return std::make_shared<ObjNode>(ObjNode{ObjNode::Kind::Unit, 0, nullptr, nullptr, nullptr}); }
inline ObjTerm simple(int s) { return std::make_shared<ObjNode>(ObjNode{ObjNode::Kind::Const, s, nullptr, nullptr, nullptr}); }
inline ObjTerm star(ObjTerm a, ObjTerm b) {
  return std::make_shared<ObjNode>(ObjNode{ObjNode::Kind::Star, 0, std::move(a), std::move(b), nullptr});
}
inline ObjTerm phi(GroupExpr g, ObjTerm a) {
  return std::make_shared<ObjNode>(ObjNode{ObjNode::Kind::Phi, 0, std::move(a), nullptr, std::move(g)});
}
inline ObjTerm rho(GroupExpr g, ObjTerm a) {
  return std::make_shared<ObjNode>(ObjNode{ObjNode::Kind::Rho, 0, std::move(a), nullptr, std::move(g)});
}
inline ObjTerm dual(ObjTerm a) { return std::make_shared<ObjNode>(ObjNode{ObjNode::Kind::Dual, 0, std::move(a), nullptr, nullptr}); }

inline GroupExpr gconst(int e, GroupDomain d = GroupDomain::Pi) {
  return std::make_shared<GrpNode>(GrpNode{GrpNode::Kind::Const, d, e, nullptr, nullptr, nullptr});
}
inline GroupExpr gvar(int i, GroupDomain d = GroupDomain::Pi) {
  return std::make_shared<GrpNode>(GrpNode{GrpNode::Kind::Var, d, i, nullptr, nullptr, nullptr});
}
inline GroupExpr grade(ObjTerm o) {
  return std::make_shared<GrpNode>(GrpNode{GrpNode::Kind::GradeOf, GroupDomain::Pi, 0, std::move(o), nullptr, nullptr});
}
inline GroupExpr ginv(GroupExpr a) {
  const auto d = a->domain;
  return std::make_shared<GrpNode>(GrpNode{GrpNode::Kind::Inv, d, 0, nullptr, std::move(a), nullptr});
}
inline GroupExpr gmul(GroupExpr a, GroupExpr b) {
  const auto d = a->domain;
  return std::make_shared<GrpNode>(GrpNode{GrpNode::Kind::Mul, d, 0, nullptr, std::move(a), std::move(b)});
}

inline MorTerm make(MorNode::Kind k, std::vector<ObjTerm> objs, GroupExpr g = nullptr, MorTerm f = nullptr,
                    MorTerm h = nullptr) {
  return std::make_shared<MorNode>(MorNode{k, std::move(objs), std::move(g), std::move(f), std::move(h)});
}
using K = MorNode::Kind;
inline MorTerm id(ObjTerm x) { return make(K::Id, {std::move(x)}); }
inline MorTerm assoc(ObjTerm x, ObjTerm y, ObjTerm z) { return make(K::Assoc, {x, y, z}); }
inline MorTerm assoc_inv(ObjTerm x, ObjTerm y, ObjTerm z) { return make(K::AssocInv, {x, y, z}); }
inline MorTerm lunit(ObjTerm x) { return make(K::LeftUnit, {std::move(x)}); }
inline MorTerm runit(ObjTerm x) { return make(K::RightUnit, {std::move(x)}); }
inline MorTerm braid(ObjTerm x, ObjTerm y) { return make(K::Braid, {x, y}); }
inline MorTerm twist(ObjTerm x) { return make(K::Twist, {std::move(x)}); }
inline MorTerm birth(ObjTerm x) { return make(K::Birth, {std::move(x)}); }
inline MorTerm death(ObjTerm x) { return make(K::Death, {std::move(x)}); }
inline MorTerm laxc(GroupExpr g, ObjTerm x) { return make(K::LaxC, {std::move(x)}, std::move(g)); }
inline MorTerm laxh(GroupExpr g, ObjTerm x) { return make(K::LaxH, {std::move(x)}, std::move(g)); }
inline MorTerm pairflip(ObjTerm x, ObjTerm y) { return make(K::PairFlip, {x, y}); }
inline MorTerm compose(MorTerm f, MorTerm g) { return make(K::Compose, {}, nullptr, std::move(f), std::move(g)); }
/// Left-to-right composite: the first argument is applied first.
inline MorTerm seq(std::initializer_list<MorTerm> fs) {
  MorTerm out;
  for (const auto& f : fs) out = out ? compose(out, f) : f;
  return out;
}
inline MorTerm star(MorTerm f, MorTerm g) { return make(K::StarMor, {}, nullptr, std::move(f), std::move(g)); }
inline MorTerm phi(GroupExpr g, MorTerm f) { return make(K::PhiMor, {}, std::move(g), std::move(f)); }
inline MorTerm rho(GroupExpr g, MorTerm f) { return make(K::RhoMor, {}, std::move(g), std::move(f)); }
inline MorTerm dual(MorTerm f) { return make(K::DualMor, {}, nullptr, std::move(f)); }
inline MorTerm inv(MorTerm f) { return make(K::Inverse, {}, nullptr, std::move(f)); }

}  // namespace term

// ---------------------------------------------------------------------------
// Source/target inference at the term level.

inline ObjTerm source_of(const MorTerm& m);
inline ObjTerm target_of(const MorTerm& m);

namespace detail {
inline std::pair<ObjTerm, ObjTerm> endpoints(const MorTerm& m) {
  using K = MorNode::Kind;
  using namespace term;
  const auto& o = m->objs;
  switch (m->kind) {
    case K::Id: return {o[0], o[0]};
    case K::Assoc: return {star(star(o[0], o[1]), o[2]), star(o[0], star(o[1], o[2]))};
    case K::AssocInv: return {star(o[0], star(o[1], o[2])), star(star(o[0], o[1]), o[2])};
    case K::LeftUnit: return {star(unit(), o[0]), o[0]};
    case K::RightUnit: return {star(o[0], unit()), o[0]};
    case K::Braid: return {star(o[0], o[1]), star(phi(grade(o[0]), o[1]), o[0])};
    case K::Twist: return {o[0], phi(grade(o[0]), o[0])};
    case K::Birth: return {unit(), star(dual(o[0]), o[0])};
    case K::Death: return {star(o[0], dual(o[0])), unit()};
    case K::LaxC: return {dual(phi(m->g, o[0])), phi(m->g, dual(o[0]))};
    case K::LaxH: return {dual(rho(m->g, o[0])), rho(ginv(m->g), dual(o[0]))};
    case K::PairFlip: return {dual(star(o[0], o[1])), star(dual(o[1]), dual(o[0]))};
    case K::Compose: return {source_of(m->f), target_of(m->h)};
    case K::StarMor: return {star(source_of(m->f), source_of(m->h)), star(target_of(m->f), target_of(m->h))};
    case K::PhiMor: return {phi(m->g, source_of(m->f)), phi(m->g, target_of(m->f))};
    case K::RhoMor: return {rho(m->g, source_of(m->f)), rho(m->g, target_of(m->f))};
    case K::DualMor: return {dual(target_of(m->f)), dual(source_of(m->f))};
    case K::Inverse: return {target_of(m->f), source_of(m->f)};
  }
  throw TermError("unknown morphism kind");
}
}  // namespace detail

inline ObjTerm source_of(const MorTerm& m) { return detail::endpoints(m).first; }
inline ObjTerm target_of(const MorTerm& m) { return detail::endpoints(m).second; }

// ---------------------------------------------------------------------------
// Variable bookkeeping.

struct VarCounts {
  int objects = 0;
  int pi = 0;
  int g = 0;
};

namespace detail {
inline void count(const GroupExpr& e, VarCounts& c);
inline void count(const ObjTerm& o, VarCounts& c) {
  if (!o) return;
  if (o->kind == ObjNode::Kind::Var) c.objects = std::max(c.objects, o->index + 1);
  count(o->a, c);
  count(o->b, c);
  if (o->g) count(o->g, c);
}
inline void count(const GroupExpr& e, VarCounts& c) {
  if (!e) return;
  if (e->kind == GrpNode::Kind::Var) {
    if (e->domain == GroupDomain::Pi)
      c.pi = std::max(c.pi, e->index + 1);
    else
      c.g = std::max(c.g, e->index + 1);
  }
  count(e->obj, c);
  count(e->a, c);
  count(e->b, c);
}
inline void count(const MorTerm& m, VarCounts& c) {
  if (!m) return;
  for (const auto& o : m->objs) count(o, c);
  if (m->g) count(m->g, c);
  count(m->f, c);
  count(m->h, c);
}
}  // namespace detail

inline VarCounts variables_of(std::initializer_list<MorTerm> ms) {
  VarCounts c;
  for (const auto& m : ms) detail::count(m, c);
  return c;
}

// ---------------------------------------------------------------------------
// s-expressions.

/// Names used when parsing and printing terms.
struct TermContext {
  const GroupTable* pi = nullptr;
  const GroupTable* G = nullptr;
  std::vector<std::string> simple_names;
  std::vector<std::string> object_vars;
  std::vector<std::string> pi_vars;
  std::vector<std::string> g_vars;

  static std::string default_object_var(int i) {
    static const char* names[] = {"x", "y", "z", "w", "u", "v"};
    return i < 6 ? names[i] : "x" + std::to_string(i);
  }
  std::string object_var(int i) const {
    return i < static_cast<int>(object_vars.size()) ? object_vars[i] : default_object_var(i);
  }
  std::string group_var(int i, GroupDomain d) const {
    const auto& v = d == GroupDomain::Pi ? pi_vars : g_vars;
    if (i < static_cast<int>(v.size())) return v[i];
    return (d == GroupDomain::Pi ? "p" : "g") + std::to_string(i);
  }
};

namespace detail {

struct Sexp {
  std::string atom;
  std::vector<Sexp> list;
  bool is_atom = true;
  std::size_t pos = 0;
};

inline Sexp read_sexp(std::string_view s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  if (i >= s.size()) throw TermError("unexpected end of term");
  Sexp out;
  out.pos = i;
  if (s[i] == '(') {
    out.is_atom = false;
    ++i;
    for (;;) {
      while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
      if (i >= s.size()) throw TermError("unbalanced '(' at offset " + std::to_string(out.pos));
      if (s[i] == ')') {
        ++i;
        break;
      }
      out.list.push_back(read_sexp(s, i));
    }
    if (out.list.empty()) throw TermError("empty list at offset " + std::to_string(out.pos));
    return out;
  }
  if (s[i] == ')') throw TermError("unexpected ')' at offset " + std::to_string(i));
  while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) && s[i] != '(' && s[i] != ')')
    out.atom += s[i++];
  return out;
}

class TermParser {
 public:
  explicit TermParser(TermContext& ctx) : ctx_(ctx) {}

  ObjTerm obj(const Sexp& e) {
    using namespace term;
    if (e.is_atom) {
      if (e.atom == "unit") return unit();
      return var(intern(ctx_.object_vars, e.atom));
    }
    const auto& h = head(e);
    if (h == "const") {
      arity(e, 1);
      const auto& name = e.list[1].atom;
      for (std::size_t i = 0; i < ctx_.simple_names.size(); ++i)
        if (ctx_.simple_names[i] == name) return simple(static_cast<int>(i));
      throw TermError("unknown simple '" + name + "'");
    }
    if (h == "star") return arity(e, 2), star(obj(e.list[1]), obj(e.list[2]));
    if (h == "phi") return arity(e, 2), phi(grp(e.list[1], GroupDomain::Pi), obj(e.list[2]));
    if (h == "rho") return arity(e, 2), rho(grp(e.list[1], GroupDomain::G), obj(e.list[2]));
    if (h == "dual") return arity(e, 1), dual(obj(e.list[1]));
    throw TermError("unknown object form '" + h + "'");
  }

  GroupExpr grp(const Sexp& e, GroupDomain d) {
    using namespace term;
    if (e.is_atom) {
      const GroupTable* t = d == GroupDomain::Pi ? ctx_.pi : ctx_.G;
      if (t) {
        const int k = t->find(e.atom);
        if (k >= 0) return gconst(k, d);
      }
      return gvar(intern(d == GroupDomain::Pi ? ctx_.pi_vars : ctx_.g_vars, e.atom), d);
    }
    const auto& h = head(e);
    if (h == "grade") {
      if (d != GroupDomain::Pi) throw TermError("grade(...) is a grading-group element");
      return arity(e, 1), grade(obj(e.list[1]));
    }
    if (h == "inv") return arity(e, 1), ginv(grp(e.list[1], d));
    if (h == "mul") return arity(e, 2), gmul(grp(e.list[1], d), grp(e.list[2], d));
    throw TermError("unknown group form '" + h + "'");
  }

  MorTerm mor(const Sexp& e) {
    using namespace term;
    if (e.is_atom) throw TermError("expected a morphism, got '" + e.atom + "'");
    const auto& h = head(e);
    if (h == "id") return arity(e, 1), id(obj(e.list[1]));
    if (h == "assoc") return arity(e, 3), assoc(obj(e.list[1]), obj(e.list[2]), obj(e.list[3]));
    if (h == "assoc-inv") return arity(e, 3), assoc_inv(obj(e.list[1]), obj(e.list[2]), obj(e.list[3]));
    if (h == "lunit") return arity(e, 1), lunit(obj(e.list[1]));
    if (h == "runit") return arity(e, 1), runit(obj(e.list[1]));
    if (h == "braid") return arity(e, 2), braid(obj(e.list[1]), obj(e.list[2]));
    if (h == "twist") return arity(e, 1), twist(obj(e.list[1]));
    if (h == "birth") return arity(e, 1), birth(obj(e.list[1]));
    if (h == "death") return arity(e, 1), death(obj(e.list[1]));
    if (h == "laxc") return arity(e, 2), laxc(grp(e.list[1], GroupDomain::Pi), obj(e.list[2]));
    if (h == "laxh") return arity(e, 2), laxh(grp(e.list[1], GroupDomain::G), obj(e.list[2]));
    if (h == "pairflip") return arity(e, 2), pairflip(obj(e.list[1]), obj(e.list[2]));
    if (h == "compose") {
      if (e.list.size() < 3) throw TermError("compose needs at least two morphisms");
      MorTerm out = mor(e.list[1]);
      for (std::size_t i = 2; i < e.list.size(); ++i) out = compose(out, mor(e.list[i]));
      return out;
    }
    if (h == "star") return arity(e, 2), star(mor(e.list[1]), mor(e.list[2]));
    if (h == "phi") return arity(e, 2), phi(grp(e.list[1], GroupDomain::Pi), mor(e.list[2]));
    if (h == "rho") return arity(e, 2), rho(grp(e.list[1], GroupDomain::G), mor(e.list[2]));
    if (h == "dual") return arity(e, 1), dual(mor(e.list[1]));
    if (h == "inv") return arity(e, 1), inv(mor(e.list[1]));
    throw TermError("unknown morphism form '" + h + "'");
  }

 private:
  static const std::string& head(const Sexp& e) {
    if (!e.list[0].is_atom) throw TermError("form head must be a symbol");
    return e.list[0].atom;
  }
  static void arity(const Sexp& e, std::size_t n) {
    if (e.list.size() != n + 1)
      throw TermError("'" + e.list[0].atom + "' takes " + std::to_string(n) + " argument(s)");
  }
  static int intern(std::vector<std::string>& names, const std::string& s) {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == s) return static_cast<int>(i);
    names.push_back(s);
    return static_cast<int>(names.size() - 1);
  }

  TermContext& ctx_;
};

inline Sexp read_all(std::string_view text) {
  std::size_t i = 0;
  Sexp e = read_sexp(text, i);
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i != text.size()) throw TermError("trailing input at offset " + std::to_string(i));
  return e;
}

}  // namespace detail

inline ObjTerm parse_obj(std::string_view text, TermContext& ctx) {
  return detail::TermParser(ctx).obj(detail::read_all(text));
}
inline MorTerm parse_mor(std::string_view text, TermContext& ctx) {
  return detail::TermParser(ctx).mor(detail::read_all(text));
}

inline std::string to_sexp(const GroupExpr& e, const TermContext& ctx);

inline std::string to_sexp(const ObjTerm& o, const TermContext& ctx) {
  using K = ObjNode::Kind;
  switch (o->kind) {
    case K::Var: return ctx.object_var(o->index);
    case K::Unit: return "unit";
    case K::Const:
      return "(const " +
             (o->index < static_cast<int>(ctx.simple_names.size()) ? ctx.simple_names[o->index] : std::to_string(o->index)) +
             ")";
    case K::Star: return "(star " + to_sexp(o->a, ctx) + " " + to_sexp(o->b, ctx) + ")";
    case K::Phi: return "(phi " + to_sexp(o->g, ctx) + " " + to_sexp(o->a, ctx) + ")";
    case K::Rho: return "(rho " + to_sexp(o->g, ctx) + " " + to_sexp(o->a, ctx) + ")";
    case K::Dual: return "(dual " + to_sexp(o->a, ctx) + ")";
  }
  return "?";
}

inline std::string to_sexp(const GroupExpr& e, const TermContext& ctx) {
  using K = GrpNode::Kind;
  switch (e->kind) {
    case K::Const: {
      const GroupTable* t = e->domain == GroupDomain::Pi ? ctx.pi : ctx.G;
      return t ? t->name(e->index) : std::to_string(e->index);
    }
    case K::Var: return ctx.group_var(e->index, e->domain);
    case K::GradeOf: return "(grade " + to_sexp(e->obj, ctx) + ")";
    case K::Inv: return "(inv " + to_sexp(e->a, ctx) + ")";
    case K::Mul: return "(mul " + to_sexp(e->a, ctx) + " " + to_sexp(e->b, ctx) + ")";
  }
  return "?";
}

inline std::string to_sexp(const MorTerm& m, const TermContext& ctx) {
  using K = MorNode::Kind;
  auto objs = [&](const char* head) {
    std::string s = std::string("(") + head;
    for (const auto& o : m->objs) s += " " + to_sexp(o, ctx);
    return s + ")";
  };
  switch (m->kind) {
    case K::Id: return objs("id");
    case K::Assoc: return objs("assoc");
    case K::AssocInv: return objs("assoc-inv");
    case K::LeftUnit: return objs("lunit");
    case K::RightUnit: return objs("runit");
    case K::Braid: return objs("braid");
    case K::Twist: return objs("twist");
    case K::Birth: return objs("birth");
    case K::Death: return objs("death");
    case K::LaxC: return "(laxc " + to_sexp(m->g, ctx) + " " + to_sexp(m->objs[0], ctx) + ")";
    case K::LaxH: return "(laxh " + to_sexp(m->g, ctx) + " " + to_sexp(m->objs[0], ctx) + ")";
    case K::PairFlip: return objs("pairflip");
    case K::Compose: {
      // Flatten left-nested chains into one n-ary compose.
      std::vector<MorTerm> chain;
      MorTerm cur = m;
      while (cur->kind == K::Compose) {
        chain.push_back(cur->h);
        cur = cur->f;
      }
      std::string s = "(compose " + to_sexp(cur, ctx);
      for (auto it = chain.rbegin(); it != chain.rend(); ++it) s += " " + to_sexp(*it, ctx);
      return s + ")";
    }
    case K::StarMor: return "(star " + to_sexp(m->f, ctx) + " " + to_sexp(m->h, ctx) + ")";
    case K::PhiMor: return "(phi " + to_sexp(m->g, ctx) + " " + to_sexp(m->f, ctx) + ")";
    case K::RhoMor: return "(rho " + to_sexp(m->g, ctx) + " " + to_sexp(m->f, ctx) + ")";
    case K::DualMor: return "(dual " + to_sexp(m->f, ctx) + ")";
    case K::Inverse: return "(inv " + to_sexp(m->f, ctx) + ")";
  }
  return "?";
}

}  // namespace tortile
