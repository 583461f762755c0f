#include <catch_amalgamated.hpp>

#include "tortile/bundle_io.hpp"
#include "tortile/catalog.hpp"
#include "tortile/sx_io.hpp"

using namespace tortile;

namespace {

std::string failures(const SuiteReport& r) {
  std::string s;
  for (const auto& row : r.rows)
    if (!row.pass) s += row.id + ": " + row.witness + "\n";
  return s;
}

StructureBundle without_duality(StructureBundle b) {
  b.duality.reset();
  return b;
}

}  // namespace

TEST_CASE("packaged builtins satisfy the relations and derive back") {
  for (const auto& nb : builtin_examples()) {
    INFO(nb.name);
    const SXAssignment a = package_assignment(nb.bundle, true);
    const auto rel = check_relations(a);
    CHECK(failures(rel) == "");
    CHECK(rel.rows.size() > 10);
    const StructureBundle back = derive_balanced(a);
    CHECK(failures(check_balanced_pi(back)) == "");
    CHECK(serialize_bundle(back) == serialize_bundle(without_duality(nb.bundle)));
    CHECK(failures(check_forms(back)) == "");
  }
}

TEST_CASE("self-dual builtins derive a tortile duality") {
  for (const auto& nb : builtin_examples()) {
    if (!nb.self_dual) continue;
    INFO(nb.name);
    const SXAssignment a = package_assignment(nb.bundle, true);
    const SelfDualWitness w = standard_witness(a);
    CHECK(failures(check_self_dual(a, w)) == "");
    const StructureBundle d = derive_duality(a, w);
    CHECK(failures(check_tortile(d)) == "");
    if (d.g_action) CHECK(failures(check_G_action(d)) == "");
  }
}

TEST_CASE("word evaluation composes generator tables") {
  const auto nb = *find_builtin("z3-pointed-dual");
  const SXAssignment a = package_assignment(nb.bundle);
  const auto& pi = a.pi();
  const CobordismWord w = parse_word("(word (layer (pants e e)) (layer (crosscyl e e)))", pi, nullptr);
  const FunctorTable f = eval_word(w, a);
  CHECK(f.values.size() == 9);
  CHECK(f.values.at({1, 1}) == TupleCounts{{{2}, 1}});
  CHECK(f.values.at({1, 2}) == TupleCounts{{{0}, 1}});
}

TEST_CASE("relation failures are reported with a witness") {
  const auto nb = *find_builtin("z2-fermion");
  SECTION("grade-violating pants") {
    SXAssignment a = package_assignment(find_builtin("z2-crossed")->bundle);
    a.generators[gen::pants(1, 1)].values[{1, 1}] = {{{3}, 1}};
    const auto rep = check_relations(a);
    REQUIRE(rep.first_failure() != nullptr);
    CHECK(rep.first_failure()->id == "rel.grading");
    CHECK_THROWS_AS(derive_balanced(a), SXError);
  }
  SECTION("missing pairing") {
    StructureBundle b = nb.bundle;
    b.forms.reset();
    CHECK_THROWS_AS(package_assignment(b, true), CatalogError);
    const SXAssignment a = package_assignment(b);
    CHECK(a.generators.count(gen::pair(0)) == 0);
    CHECK_THROWS_AS(derive_involution(derive_balanced(a)), SXError);
  }
  SECTION("corrupted dehn twist") {
    SXAssignment a = package_assignment(find_builtin("semion")->bundle);
    a.cells.dehn[1] = Cyclotomic(1);
    const auto rep = check_relations(a);
    REQUIRE(rep.first_failure() != nullptr);
    CHECK(rep.first_failure()->id.rfind("cell.", 0) == 0);
  }
  SECTION("unassigned generator") {
    SXAssignment a = package_assignment(nb.bundle);
    a.generators.erase(gen::copants(0, 0));
    const CobordismWord w = parse_word("(word (layer (copants e e)))", a.pi(), nullptr);
    CHECK_THROWS_AS(eval_word(w, a), SXError);
  }
}

TEST_CASE("a bad witness is rejected") {
  const auto nb = *find_builtin("semion");
  const SXAssignment a = package_assignment(nb.bundle, true);
  SelfDualWitness w = standard_witness(a);
  w.t[1] = Cyclotomic(-1);
  const auto rep = check_self_dual(a, w);
  REQUIRE(rep.first_failure() != nullptr);
  CHECK(rep.first_failure()->id == "SD.S-II.dehn");
  CHECK_THROWS_AS(derive_duality(a, w), SXError);
}

TEST_CASE("assignment and witness json round trip") {
  for (const auto& name : {"semion", "z2-crossed", "z4-gaction", "s3-crossed"}) {
    INFO(name);
    const SXAssignment a = package_assignment(find_builtin(name)->bundle, true);
    const std::string text = serialize_assignment(a);
    const SXAssignment b = parse_assignment(text);
    CHECK(serialize_assignment(b) == text);
    CHECK(b.generators == a.generators);
    const SelfDualWitness w = standard_witness(a);
    const std::string wt = witness_to_json(w, a).dump(2);
    CHECK(witness_to_json(parse_witness(wt, b), b).dump(2) == wt);
  }
}

TEST_CASE("assignment parse errors") {
  const SXAssignment a = package_assignment(find_builtin("z2-fermion")->bundle);
  json j = assignment_to_json(a);
  SECTION("fixed generators cannot be assigned") {
    j["generators"]["(cyl e)"] = json::object();
    CHECK_THROWS_WITH(parse_assignment(j.dump()), Catch::Matchers::ContainsSubstring("fixed value"));
  }
  SECTION("unknown simple in a tuple key") {
    j["generators"]["(pants e e)"]["1,q"] = json::object();
    CHECK_THROWS_WITH(parse_assignment(j.dump()), Catch::Matchers::ContainsSubstring("unknown simple 'q'"));
  }
  SECTION("syntax error carries a position") {
    try {
      parse_assignment("{\n  \"group\": ,\n}");
      FAIL("no error");
    } catch (const BundleError& e) {
      CHECK(e.line() == 2);
    }
  }
}
