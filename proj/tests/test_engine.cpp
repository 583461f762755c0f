#include <catch_amalgamated.hpp>

#include "tortile/catalog.hpp"

using namespace tortile;

namespace {

const RowResult* row(const SuiteReport& r, const std::string& id) {
  for (const auto& x : r.rows)
    if (x.id == id) return &x;
  return nullptr;
}

}  // namespace

TEST_CASE("semion twist and braiding values") {
  const auto b = find_builtin("semion")->bundle;
  const Cyclotomic i = Cyclotomic::root_of_unity(1, 4);
  CHECK((*b.theta)[1] == i);
  CHECK(b.braiding->R.at({1, 1, 0})(0, 0) == i);
  const Engine<Cyclotomic> e(b);
  TermContext ctx;
  const MorTerm twist = parse_mor("(twist x)", ctx);
  Assignment a;
  a.objects = {1};
  CHECK(e.eval_mor(twist, a).m(0, 0) == i);
}

TEST_CASE("corrupted braiding is caught by a hexagon with a witness") {
  auto b = find_builtin("z3-pointed-dual")->bundle;
  b.braiding->R.at({1, 2, 0})(0, 0) = Cyclotomic(1);
  const auto rep = check_balanced_pi(b);
  const RowResult* f = rep.first_failure();
  REQUIRE(f != nullptr);
  CHECK(f->id.rfind("A3.1.hex", 0) == 0);
  CHECK_FALSE(f->witness.empty());
  CHECK(f->checked > 0);
}

TEST_CASE("nontrivial Z/3 cocycle: zig-zags hold, hexagons need a braiding") {
  PointedSpec s;
  s.A = GroupTable::cyclic(3);
  const Cyclotomic z = Cyclotomic::root_of_unity(1, 3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        if (b + c >= 3 && a > 0) s.omega[{a, b, c}] = a == 1 ? z : z * z;
  PointedScalars sc;
  sc.R.assign(3, std::vector<Cyclotomic>(3, Cyclotomic(1)));
  sc.theta.assign(3, Cyclotomic(1));
  const auto b = build_pointed(s, sc);
  const auto tor = check_tortile(b);
  REQUIRE(row(tor, "D.zigzag-left") != nullptr);
  CHECK(row(tor, "D.zigzag-left")->pass);
  CHECK(row(tor, "D.zigzag-right")->pass);
  const auto bal = check_balanced_pi(b);
  REQUIRE(row(bal, "M.pentagon") != nullptr);
  CHECK(row(bal, "M.pentagon")->pass);
  CHECK_FALSE(row(bal, "A3.1.hex-left")->pass);
  CHECK(enumerate_pointed([&] {
          auto t = s;
          t.root_order = 9;
          return t;
        }()).bundles.empty());
}

TEST_CASE("float mode agrees with exact mode on builtins") {
  for (const auto& nb : builtin_examples()) {
    INFO(nb.name);
    CHECK(check_tortile<ComplexScalar>(nb.bundle).ok() == check_tortile(nb.bundle).ok());
  }
}

TEST_CASE("report is identical across worker counts") {
  auto b = find_builtin("s3-crossed")->bundle;
  b.F.begin()->second(0, 0) = Cyclotomic(-1);
  const auto one = check_balanced_pi(b, 1);
  for (int w : {2, 8}) {
    const auto many = check_balanced_pi(b, w);
    REQUIRE(many.rows.size() == one.rows.size());
    for (std::size_t k = 0; k < one.rows.size(); ++k) {
      CHECK(many.rows[k].pass == one.rows[k].pass);
      CHECK(many.rows[k].witness == one.rows[k].witness);
      CHECK(many.rows[k].checked == one.rows[k].checked);
    }
  }
}
