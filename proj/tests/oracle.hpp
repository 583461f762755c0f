#pragma once

#include <set>
#include <vector>

#include "tortile/catalog.hpp"

namespace tortile::testing {

// Independent reference: every table c : A x A -> mu_M on a cyclic group,
// kept when both hexagon identities of an abelian 3-cocycle (omega, c) hold,
// checked by a plain loop over all triples. Exponents come out row-major.
inline std::set<std::vector<int>> naive_braidings(const PointedSpec& s) {
  const int n = s.A.order();
  const unsigned M = s.root_order;
  auto w = [&](int a, int b, int c) {
    auto it = s.omega.find({a, b, c});
    return it == s.omega.end() ? Cyclotomic(1) : it->second;
  };
  std::set<std::vector<int>> out;
  std::vector<int> e(static_cast<std::size_t>(n * n), 0);
  long long total = 1;
  for (int i = 0; i < n * n; ++i) total *= M;
  for (long long code = 0; code < total; ++code) {
    long long c0 = code;
    for (int i = n * n - 1; i >= 0; --i) {
      e[static_cast<std::size_t>(i)] = static_cast<int>(c0 % M);
      c0 /= M;
    }
    auto c = [&](int a, int b) { return Cyclotomic::root_of_unity(e[static_cast<std::size_t>(a * n + b)], M); };
    bool ok = true;
    for (int x = 0; ok && x < n; ++x)
      for (int y = 0; ok && y < n; ++y)
        for (int z = 0; ok && z < n; ++z) {
          const int yz = s.A.mul(y, z), xy = s.A.mul(x, y);
          ok = w(y, z, x) * c(x, yz) * w(x, y, z) == c(x, z) * w(y, x, z) * c(x, y) &&
               w(z, x, y).inverse() * c(xy, z) * w(x, y, z).inverse() == c(x, z) * w(x, z, y).inverse() * c(y, z);
        }
    if (ok) out.insert(e);
  }
  return out;
}

}  // namespace tortile::testing
