#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace tortile {

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite group as an explicit multiplication table; element 0 is the identity.
class GroupTable {
 public:
  GroupTable() : GroupTable(std::vector<std::vector<int>>{{0}}, {"e"}) {}

  GroupTable(std::vector<std::vector<int>> mul, std::vector<std::string> names = {})
      : mul_(std::move(mul)), names_(std::move(names)) {
    const int n = static_cast<int>(mul_.size());
    if (n == 0) throw GroupError("group must have at least one element");
    for (const auto& row : mul_) {
      if (static_cast<int>(row.size()) != n) throw GroupError("multiplication table is not square");
      for (int v : row)
        if (v < 0 || v >= n) throw GroupError("multiplication table entry out of range");
    }
    for (int a = 0; a < n; ++a)
      if (mul_[0][a] != a || mul_[a][0] != a) throw GroupError("element 0 is not a two-sided identity");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
            throw GroupError("multiplication is not associative at (" + std::to_string(a) + "," +
                             std::to_string(b) + "," + std::to_string(c) + ")");
    inv_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b)
        if (mul_[a][b] == 0 && mul_[b][a] == 0) inv_[a] = b;
      if (inv_[a] < 0) throw GroupError("element " + std::to_string(a) + " has no two-sided inverse");
    }
    if (names_.empty())
      for (int a = 0; a < n; ++a) names_.push_back(a == 0 ? "e" : "g" + std::to_string(a));
    if (static_cast<int>(names_.size()) != n) throw GroupError("group name list has the wrong length");
    auto sorted = names_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw GroupError("group element names must be unique");
  }

  static GroupTable cyclic(int n, const std::string& prefix = "") {
    if (n <= 0) throw GroupError("cyclic group order must be positive");
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    std::vector<std::string> names;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
      names.push_back(prefix.empty() ? std::to_string(a) : (a == 0 ? "e" : prefix + std::to_string(a)));
    }
    return GroupTable(std::move(mul), std::move(names));
  }

  /// Symmetric group on three letters; elements are permutations in lexicographic order.
  static GroupTable symmetric3() {
    const std::vector<std::vector<int>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    const std::vector<std::string> names = {"e", "s12", "s01", "c1", "c2", "s02"};
    auto index_of = [&](const std::vector<int>& p) {
      return static_cast<int>(std::find(perms.begin(), perms.end(), p) - perms.begin());
    };
    std::vector<std::vector<int>> mul(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b) {
        // (a*b)(x) = a(b(x))
        std::vector<int> p(3);
        for (int x = 0; x < 3; ++x) p[x] = perms[a][perms[b][x]];
        mul[a][b] = index_of(p);
      }
    return GroupTable(std::move(mul), names);
  }

  int order() const { return static_cast<int>(mul_.size()); }
  int identity() const { return 0; }
  int mul(int a, int b) const { return mul_.at(a).at(b); }
  int inv(int a) const { return inv_.at(a); }
  int conj(int g, int a) const { return mul(mul(g, a), inv(g)); }
  const std::vector<std::vector<int>>& table() const { return mul_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int a) const { return names_.at(a); }
  bool is_abelian() const {
    for (int a = 0; a < order(); ++a)
      for (int b = 0; b < order(); ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  /// Index of the named element, or -1.
  int find(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
  }

  friend bool operator==(const GroupTable& a, const GroupTable& b) { return a.mul_ == b.mul_; }

 private:
  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
  std::vector<std::string> names_;
};

}  // namespace tortile
