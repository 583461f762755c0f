#include <catch_amalgamated.hpp>

#include <random>

#include "tortile/category.hpp"

using namespace tortile;
using Mor = Morphism<Cyclotomic>;
using Mat = Matrix<Cyclotomic>;

namespace {

GradedCategory two_simples() {
  return GradedCategory(GroupTable::cyclic(1), {{0, 0, "a"}, {1, 0, "b"}}, 0);
}

Mat random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
  Mat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Cyclotomic(static_cast<long>(rng() % 5) - 2);
  return m;
}

Mor random_morphism(std::mt19937& rng, const ObjectExpr& u, const ObjectExpr& v) {
  Mor f = Mor::zero(u, v);
  for (auto& [id, b] : f.blocks) b = random_matrix(rng, b.rows(), b.cols());
  return f;
}

}  // namespace

TEST_CASE("group tables") {
  auto s3 = GroupTable::symmetric3();
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());
  for (int a = 0; a < 6; ++a) CHECK(s3.mul(a, s3.inv(a)) == 0);
  CHECK_THROWS_AS(GroupTable({{0, 1}, {0, 1}}), GroupError);
  CHECK(GroupTable::cyclic(4).mul(3, 2) == 1);
}

TEST_CASE("hom dimensions") {
  auto c = two_simples();
  auto a = ObjectExpr::simple(c, 0), b = ObjectExpr::simple(c, 1);
  CHECK(hom_dim(a, a) == 1);
  CHECK(hom_dim(a, b) == 0);
  CHECK(hom_dim(ObjectExpr::simple(c, 0, 2), ObjectExpr::simple(c, 0, 3)) == 6);
  auto ab = direct_sum(std::vector<ObjectExpr>{a, b});
  CHECK(hom_dim(ab, ab) == 2);
  CHECK(direct_sum(std::vector<ObjectExpr>{a, a}) == ObjectExpr::simple(c, 0, 2));
}

TEST_CASE("grades are respected") {
  GradedCategory c(GroupTable::cyclic(2), {{0, 0, "1"}, {1, 1, "m"}}, 0);
  auto one = ObjectExpr::simple(c, 0), m = ObjectExpr::simple(c, 1);
  CHECK(hom_dim(one, m) == 0);
  CHECK_THROWS_AS(direct_sum(std::vector<ObjectExpr>{one, m}), CategoryError);
  CHECK_THROWS_AS(GradedCategory(GroupTable::cyclic(2), {{0, 1, "x"}}, 0), CategoryError);
}

TEST_CASE("composition is blockwise") {
  auto c = two_simples();
  auto a = ObjectExpr::simple(c, 0), b = ObjectExpr::simple(c, 1);
  Mor f = Mor::identity(a);
  f.blocks[0] = Mat::scalar(Cyclotomic(3));
  Mor g = Mor::identity(a);
  g.blocks[0] = Mat::scalar(root_of_unity(1, 4));
  CHECK(compose(f, g).blocks.at(0)(0, 0) == Cyclotomic(3) * root_of_unity(1, 4));
  CHECK(compose(Mor::identity(a), f) == f);
  CHECK(Mor::zero(a, b).is_zero());
  CHECK(Mor::zero(a, b).blocks.empty());
  CHECK_THROWS_AS(compose(Mor::identity(a), Mor::identity(b)), CategoryError);
  auto z = direct_sum(std::vector<Mor>{Mor::zero(a, a), Mor::zero(b, b)});
  CHECK(z.is_zero());
}

TEST_CASE("composition is associative and unital on random blocks") {
  std::mt19937 rng(5);
  auto c = two_simples();
  for (int t = 0; t < 30; ++t) {
    ObjectExpr u, v, w, x;
    for (auto* o : {&u, &v, &w, &x}) {
      o->add(0, static_cast<int>(rng() % 3));
      o->add(1, static_cast<int>(rng() % 3));
    }
    auto f = random_morphism(rng, u, v), g = random_morphism(rng, v, w), h = random_morphism(rng, w, x);
    CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    CHECK(compose(Mor::identity(u), f) == f);
    CHECK(compose(f, Mor::identity(v)) == f);
    CHECK(hom_dim(u, v) == hom_dim(v, u));
  }
}

TEST_CASE("isomorphisms invert blockwise") {
  auto c = two_simples();
  ObjectExpr u;
  u.add(0, 2);
  u.add(1, 1);
  Mor f = Mor::identity(u);
  f.blocks[0] = Mat(2, 2, {Cyclotomic(1), Cyclotomic(1), Cyclotomic(0), Cyclotomic(1)});
  f.blocks[1] = Mat::scalar(Cyclotomic(-2));
  REQUIRE(f.is_isomorphism());
  CHECK(compose(f, f.inverse()) == Mor::identity(u));
  f.blocks[1] = Mat::scalar(Cyclotomic(0));
  CHECK_FALSE(f.is_isomorphism());
}

TEST_CASE("tensor product of categories") {
  GradedCategory khat;
  auto c = two_simples();
  CHECK(tensor_categories(c, khat).size() == c.size());
  GradedCategory three(GroupTable::cyclic(1), {{0, 0, "p"}, {1, 0, "q"}, {2, 0, "r"}}, 0);
  CHECK(tensor_categories(c, three).size() == 6);

  // S3 graded: simples are the group elements with grade = themselves.
  auto s3 = GroupTable::symmetric3();
  std::vector<SimpleObject> simples;
  for (int g = 0; g < 6; ++g) simples.push_back({g, g, s3.name(g)});
  GradedCategory vs3(s3, simples, 0);
  auto t = tensor_categories(vs3, vs3);
  REQUIRE(t.size() == 36);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      // Independent recomputation of the product through the permutation action.
      int pa[3], pb[3], prod[3];
      auto perm = [](int g, int* p) {
        static const int table[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (int i = 0; i < 3; ++i) p[i] = table[g][i];
      };
      perm(a, pa);
      perm(b, pb);
      for (int i = 0; i < 3; ++i) prod[i] = pa[pb[i]];
      int expected = -1;
      for (int g = 0; g < 6; ++g) {
        int pg[3];
        perm(g, pg);
        if (pg[0] == prod[0] && pg[1] == prod[1] && pg[2] == prod[2]) expected = g;
      }
      CHECK(t.grade(a * 6 + b) == expected);
    }
}
