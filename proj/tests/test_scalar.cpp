#include <catch_amalgamated.hpp>

#include <random>

#include "tortile/matrix.hpp"

using tortile::Cyclotomic;
using tortile::Rational;
using tortile::root_of_unity;

namespace {

Cyclotomic random_cyclotomic(std::mt19937& rng) {
  static const unsigned conductors[] = {1, 3, 4, 5, 8, 12};
  const unsigned n = conductors[rng() % 6];
  std::vector<Rational> coeffs(n);
  for (auto& q : coeffs) q = Rational(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1);
  return Cyclotomic(n, coeffs);
}

}  // namespace

TEST_CASE("cube roots sum to zero") {
  auto z = root_of_unity(1, 3);
  CHECK((z + z * z) + Cyclotomic(1) == Cyclotomic(0));
  CHECK(((z + z * z) + Cyclotomic(1)).is_zero());
}

TEST_CASE("zeta8 squared canonicalizes to i") {
  auto z8 = root_of_unity(1, 8);
  auto sq = (z8 * z8).canonical();
  CHECK(sq.conductor() == 4);
  CHECK(sq == root_of_unity(1, 4));
  CHECK(root_of_unity(2, 8) == root_of_unity(1, 4));
}

TEST_CASE("inverse of a fifth root") {
  CHECK(Cyclotomic(1) / root_of_unity(1, 5) == root_of_unity(4, 5));
  CHECK_THROWS_AS(Cyclotomic(1) / Cyclotomic(0), tortile::ScalarError);
}

TEST_CASE("roots of unity and conjugation") {
  auto i = root_of_unity(1, 4);
  CHECK(tortile::conjugate(i) == -i);
  CHECK(root_of_unity(0, 7) == Cyclotomic(1));
  CHECK(root_of_unity(3, 7).pow(7) == Cyclotomic(1));
  CHECK(root_of_unity(-1, 6) == root_of_unity(5, 6));
  CHECK_THROWS_AS(root_of_unity(1, 0), tortile::ScalarError);
  for (unsigned n : {3u, 5u, 8u, 9u, 12u}) {
    auto z = root_of_unity(1, n);
    CHECK(tortile::conjugate(z) * z == Cyclotomic(1));
  }
}

TEST_CASE("field axioms on random samples across conductors") {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    auto x = random_cyclotomic(rng), y = random_cyclotomic(rng), z = random_cyclotomic(rng);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x - x).is_zero());
    CHECK(tortile::conjugate(tortile::conjugate(x)) == x);
    if (!y.is_zero()) CHECK((x / y) * y == x);
  }
}

TEST_CASE("promotion then canonicalization reproduces the value") {
  std::mt19937 rng(11);
  for (int t = 0; t < 50; ++t) {
    auto x = random_cyclotomic(rng);
    auto up = x.promote(x.conductor() * 6);
    CHECK(up == x);
    CHECK(up.canonical().to_string() == x.canonical().to_string());
  }
}

TEST_CASE("text format round-trips exactly") {
  std::mt19937 rng(3);
  for (int t = 0; t < 100; ++t) {
    auto x = random_cyclotomic(rng).canonical();
    auto s = x.to_string();
    auto y = Cyclotomic::parse(s);
    CHECK(y == x);
    CHECK(y.to_string() == s);
  }
  CHECK(Cyclotomic::parse("z(4)^1") == root_of_unity(1, 4));
  CHECK(Cyclotomic::parse("-1/2") == Cyclotomic(Rational(-1, 2)));
  CHECK(Cyclotomic::parse("1 + 2*z(3)^1") == Cyclotomic(1) + Cyclotomic(2) * root_of_unity(1, 3));
  CHECK_THROWS_AS(Cyclotomic::parse("z(0)^1"), tortile::ScalarError);
  CHECK_THROWS_AS(Cyclotomic::parse("banana"), tortile::ScalarError);
}

TEST_CASE("float mode follows the exact values") {
  auto z = root_of_unity(1, 8);
  auto f = tortile::ScalarTraits<tortile::ComplexScalar>::from(z);
  auto g = tortile::ScalarTraits<tortile::ComplexScalar>::from(z * z);
  CHECK(f * f == g);
  CHECK(!(f == g));
}

TEST_CASE("matrix inverse and products") {
  using M = tortile::Matrix<Cyclotomic>;
  M a(2, 2, {Cyclotomic(1), root_of_unity(1, 4), Cyclotomic(2), Cyclotomic(0)});
  auto inv = a.inverse();
  CHECK(a * inv == M::identity(2));
  CHECK(inv * a == M::identity(2));
  M sing(2, 2, {Cyclotomic(1), Cyclotomic(2), Cyclotomic(2), Cyclotomic(4)});
  CHECK_FALSE(sing.is_invertible());
  CHECK_THROWS_AS(sing.inverse(), tortile::MatrixError);
  auto k = kron(M::identity(2), a);
  CHECK(k.rows() == 4);
  CHECK(k(2, 3) == root_of_unity(1, 4));
}

TEST_CASE("non-canonical rational inputs are normalized") {
  CHECK(Cyclotomic(Rational(2, 2)) == Cyclotomic(1));
  CHECK(Cyclotomic(4, {Rational(-4, 2), Rational(0)}) == Cyclotomic(-2));
}
