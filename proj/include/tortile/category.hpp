#pragma once

// Skeletal finite semisimple k-linear categories graded over a finite group.
// Objects are multiplicity vectors over the simples; morphisms are one
// matrix block per simple.

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "tortile/group.hpp"
#include "tortile/matrix.hpp"

namespace tortile {

class CategoryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SimpleObject {
  int id = 0;
  int grade = 0;
  std::string name;
};

class GradedCategory {
 public:
  GradedCategory() : GradedCategory(GroupTable{}, {SimpleObject{0, 0, "1"}}, 0) {}

  GradedCategory(GroupTable pi, std::vector<SimpleObject> simples, int unit_simple)
      : pi_(std::move(pi)), simples_(std::move(simples)), unit_(unit_simple) {
    if (simples_.empty()) throw CategoryError("a category needs at least one simple");
    for (int i = 0; i < size(); ++i) {
      if (simples_[i].id != i) throw CategoryError("simple ids must be 0..n-1 in order");
      if (simples_[i].grade < 0 || simples_[i].grade >= pi_.order())
        throw CategoryError("simple '" + simples_[i].name + "' has a grade outside the group");
      if (simples_[i].name.empty()) simples_[i].name = "x" + std::to_string(i);
    }
    std::vector<std::string> names;
    for (const auto& s : simples_) names.push_back(s.name);
    std::sort(names.begin(), names.end());
    if (std::adjacent_find(names.begin(), names.end()) != names.end())
      throw CategoryError("simple names must be unique");
    if (unit_ < 0 || unit_ >= size()) throw CategoryError("unit simple out of range");
    if (simples_[unit_].grade != pi_.identity()) throw CategoryError("unit simple must have identity grade");
  }

  const GroupTable& pi() const { return pi_; }
  int size() const { return static_cast<int>(simples_.size()); }
  const std::vector<SimpleObject>& simples() const { return simples_; }
  const SimpleObject& simple(int id) const { return simples_.at(id); }
  int grade(int id) const { return simples_.at(id).grade; }
  int unit() const { return unit_; }

  std::vector<int> simples_of_grade(int g) const {
    std::vector<int> out;
    for (const auto& s : simples_)
      if (s.grade == g) out.push_back(s.id);
    return out;
  }

  int find(const std::string& name) const {
    for (const auto& s : simples_)
      if (s.name == name) return s.id;
    throw CategoryError("unknown simple '" + name + "'");
  }

 private:
  GroupTable pi_;
  std::vector<SimpleObject> simples_;
  int unit_;
};

/// A finite direct sum of simples, all of one grade.
struct ObjectExpr {
  std::map<int, int> mult;  // simple id -> multiplicity (> 0)
  int grade = 0;

  static ObjectExpr simple(const GradedCategory& c, int id, int count = 1) {
    ObjectExpr o;
    o.grade = c.grade(id);
    if (count > 0) o.mult[id] = count;
    return o;
  }
  static ObjectExpr zero(int grade) {
    ObjectExpr o;
    o.grade = grade;
    return o;
  }

  int multiplicity(int id) const {
    auto it = mult.find(id);
    return it == mult.end() ? 0 : it->second;
  }
  int total() const {
    int t = 0;
    for (auto& [id, m] : mult) t += m;
    return t;
  }
  bool is_zero() const { return mult.empty(); }

  void add(int id, int count) {
    if (count == 0) return;
    int& m = mult[id];
    m += count;
    if (m == 0) mult.erase(id);
    if (m < 0) throw CategoryError("negative multiplicity");
  }

  /// Equality on multiplicities; zero objects of different declared grade are equal.
  friend bool operator==(const ObjectExpr& a, const ObjectExpr& b) {
    if (a.mult != b.mult) return false;
    return a.mult.empty() || a.grade == b.grade;
  }
  friend bool operator!=(const ObjectExpr& a, const ObjectExpr& b) { return !(a == b); }

  std::string to_string(const GradedCategory& c) const {
    if (mult.empty()) return "0";
    std::string s;
    for (auto& [id, m] : mult) {
      if (!s.empty()) s += " + ";
      if (m != 1) s += std::to_string(m) + "*";
      s += c.simple(id).name;
    }
    return s;
  }
};

inline void check_homogeneous(const GradedCategory& c, const ObjectExpr& o) {
  for (auto& [id, m] : o.mult) {
    if (id < 0 || id >= c.size()) throw CategoryError("object references an unknown simple");
    if (c.grade(id) != o.grade) throw CategoryError("object mixes simples of different grades");
  }
}

/// dim Hom(U, V); zero across grades.
inline int hom_dim(const ObjectExpr& u, const ObjectExpr& v) {
  if (!u.mult.empty() && !v.mult.empty() && u.grade != v.grade) return 0;
  int d = 0;
  for (auto& [id, m] : u.mult) d += m * v.multiplicity(id);
  return d;
}

template <class S>
struct Morphism {
  ObjectExpr source;
  ObjectExpr target;
  std::map<int, Matrix<S>> blocks;  // simple -> (target mult x source mult)

  static Morphism identity(const ObjectExpr& u) {
    Morphism f{u, u, {}};
    for (auto& [id, m] : u.mult) f.blocks[id] = Matrix<S>::identity(static_cast<std::size_t>(m));
    return f;
  }
  static Morphism zero(const ObjectExpr& u, const ObjectExpr& v) {
    Morphism f{u, v, {}};
    for (auto& [id, m] : u.mult) {
      const int n = v.multiplicity(id);
      if (n > 0) f.blocks[id] = Matrix<S>(static_cast<std::size_t>(n), static_cast<std::size_t>(m));
    }
    return f;
  }

  const Matrix<S>* block(int id) const {
    auto it = blocks.find(id);
    return it == blocks.end() ? nullptr : &it->second;
  }

  bool is_zero() const {
    for (auto& [id, b] : blocks)
      if (!b.is_zero_matrix()) return false;
    return true;
  }

  bool is_isomorphism() const {
    if (source != target) return false;
    for (auto& [id, b] : blocks)
      if (!b.is_invertible()) return false;
    return true;
  }

  Morphism inverse() const {
    if (source != target) throw CategoryError("inverse: source and target differ");
    Morphism g{target, source, {}};
    for (auto& [id, b] : blocks) {
      auto inv = b.try_inverse();
      if (!inv) throw CategoryError("inverse: morphism is not an isomorphism");
      g.blocks[id] = std::move(*inv);
    }
    return g;
  }

  friend bool operator==(const Morphism& a, const Morphism& b) {
    return a.source == b.source && a.target == b.target && a.blocks == b.blocks;
  }
};

/// compose(f, g) = g . f; requires target(f) == source(g).
template <class S>
Morphism<S> compose(const Morphism<S>& f, const Morphism<S>& g) {
  if (f.target != g.source) throw CategoryError("compose: target of first differs from source of second");
  Morphism<S> h = Morphism<S>::zero(f.source, g.target);
  for (auto& [id, blk] : h.blocks) {
    const Matrix<S>* fb = f.block(id);
    const Matrix<S>* gb = g.block(id);
    if (fb && gb) blk = *gb * *fb;
  }
  return h;
}

inline ObjectExpr direct_sum(const std::vector<ObjectExpr>& xs) {
  if (xs.empty()) throw CategoryError("direct_sum of an empty list");
  ObjectExpr out = ObjectExpr::zero(xs.front().grade);
  for (const auto& x : xs) {
    if (!x.mult.empty() && !out.mult.empty() && x.grade != out.grade)
      throw CategoryError("direct_sum: mixed grades");
    if (!x.mult.empty()) out.grade = x.grade;
    for (auto& [id, m] : x.mult) out.add(id, m);
  }
  return out;
}

template <class S>
Morphism<S> direct_sum(const std::vector<Morphism<S>>& fs) {
  if (fs.empty()) throw CategoryError("direct_sum of an empty list");
  std::vector<ObjectExpr> srcs, tgts;
  for (const auto& f : fs) {
    srcs.push_back(f.source);
    tgts.push_back(f.target);
  }
  Morphism<S> out = Morphism<S>::zero(direct_sum(srcs), direct_sum(tgts));
  for (auto& [id, blk] : out.blocks) {
    std::size_t r0 = 0, c0 = 0;
    for (const auto& f : fs) {
      const Matrix<S>* b = f.block(id);
      if (b) {
        for (std::size_t i = 0; i < b->rows(); ++i)
          for (std::size_t j = 0; j < b->cols(); ++j) blk(r0 + i, c0 + j) = (*b)(i, j);
      }
      r0 += static_cast<std::size_t>(f.target.multiplicity(id));
      c0 += static_cast<std::size_t>(f.source.multiplicity(id));
    }
  }
  return out;
}

/// Deligne-style product of two categories over the same grading group.
inline GradedCategory tensor_categories(const GradedCategory& a, const GradedCategory& b) {
  if (!(a.pi() == b.pi())) throw CategoryError("tensor_categories: grading groups differ");
  std::vector<SimpleObject> simples;
  for (const auto& x : a.simples())
    for (const auto& y : b.simples()) {
      const int id = static_cast<int>(simples.size());
      simples.push_back({id, a.pi().mul(x.grade, y.grade), "(" + x.name + "," + y.name + ")"});
    }
  return GradedCategory(a.pi(), std::move(simples), a.unit() * b.size() + b.unit());
}

}  // namespace tortile
