#include <catch_amalgamated.hpp>

#include <set>

#include "tortile/bundle_io.hpp"
#include "tortile/catalog.hpp"
#include "oracle.hpp"

using namespace tortile;

namespace {

PointedSpec cyclic(int n, unsigned M) {
  PointedSpec s;
  s.A = GroupTable::cyclic(n);
  s.root_order = M;
  return s;
}

std::set<std::vector<int>> as_set(const EnumerationResult& r) { return {r.exponents.begin(), r.exponents.end()}; }

}  // namespace

TEST_CASE("Z/2 with trivial associator has two braidings") {
  const auto s = cyclic(2, 8);
  const auto r = enumerate_pointed(s);
  REQUIRE(r.bundles.size() == 2);
  CHECK(as_set(r) == tortile::testing::naive_braidings(s));
  std::set<std::string> R11;
  for (const auto& b : r.bundles) R11.insert(b.braiding->R.at({1, 1, 0})(0, 0).to_string());
  CHECK(R11 == std::set<std::string>{"1", "-1"});
}

TEST_CASE("Z/2 with the sign associator has the semion pair") {
  auto s = cyclic(2, 8);
  s.omega[{1, 1, 1}] = Cyclotomic(-1);
  const auto r = enumerate_pointed(s);
  REQUIRE(r.bundles.size() == 2);
  CHECK(as_set(r) == tortile::testing::naive_braidings(s));
  for (const auto& b : r.bundles) {
    const auto x = b.braiding->R.at({1, 1, 0})(0, 0);
    CHECK(x * x == Cyclotomic(-1));
  }
}

TEST_CASE("trivial group has one structure") {
  const auto r = enumerate_pointed(cyclic(1, 8));
  CHECK(r.bundles.size() == 1);
}

TEST_CASE("Z/3 matches the reference") {
  const auto s = cyclic(3, 3);
  const auto r = enumerate_pointed(s);
  CHECK(r.bundles.size() == 3);
  CHECK(as_set(r) == tortile::testing::naive_braidings(s));
}

TEST_CASE("enumeration is identical across worker counts") {
  auto s = cyclic(2, 8);
  s.omega[{1, 1, 1}] = Cyclotomic(-1);
  std::string ref;
  for (int workers : {1, 2, 8}) {
    const auto r = enumerate_pointed(s, workers);
    std::string text;
    for (const auto& b : r.bundles) text += serialize_bundle(b);
    if (workers == 1) ref = text;
    CHECK(text == ref);
  }
}

TEST_CASE("enumeration guard") {
  CHECK_THROWS_AS(enumerate_pointed(cyclic(7, 2)), CatalogError);
  CHECK_THROWS_AS(enumerate_pointed(cyclic(2, 30)), CatalogError);
}

TEST_CASE("enumeration is closed under complex conjugation") {
  for (bool sign : {false, true}) {
    auto s = cyclic(2, 8);
    if (sign) s.omega[{1, 1, 1}] = Cyclotomic(-1);
    const auto r = enumerate_pointed(s);
    std::set<std::string> seen;
    for (const auto& b : r.bundles) seen.insert(serialize_bundle(b));
    for (auto b : r.bundles) {
      for (auto& [k, m] : b.braiding->R) m(0, 0) = m(0, 0).conjugate();
      for (auto& t : *b.theta) t = t.conjugate();
      CHECK(seen.count(serialize_bundle(b)) == 1);
    }
  }
}
