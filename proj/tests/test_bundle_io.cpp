#include <catch_amalgamated.hpp>

#include "tortile/bundle_io.hpp"
#include "tortile/catalog.hpp"

using namespace tortile;
using Catch::Matchers::ContainsSubstring;

TEST_CASE("builtins round trip through json") {
  for (const auto& nb : builtin_examples()) {
    INFO(nb.name);
    const std::string text = serialize_bundle(nb.bundle);
    const StructureBundle back = load_bundle(text);
    CHECK(serialize_bundle(back) == text);
    CHECK(check_balanced_pi(back).ok());
  }
}

TEST_CASE("syntax errors report line and column") {
  try {
    parse_bundle("{\n  \"simples\": [\n    {\"name\": \"1\" \"grade\": \"e\"}\n  ]\n}");
    FAIL("no error");
  } catch (const BundleError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() > 1);
    CHECK_THAT(std::string(e.what()), ContainsSubstring("line 3"));
  }
}

TEST_CASE("structural errors name the section") {
  json j = bundle_to_json(find_builtin("z2-fermion")->bundle);
  SECTION("unknown section") {
    j["extra"] = 1;
    CHECK_THROWS_WITH(parse_bundle(j.dump()), ContainsSubstring("unknown section 'extra'"));
  }
  SECTION("unknown simple in a key") {
    j["theta"]["q"] = "1";
    CHECK_THROWS_WITH(parse_bundle(j.dump()), ContainsSubstring("unknown simple 'q'"));
  }
  SECTION("missing unit scalar") {
    j["l"].erase("f");
    CHECK_THROWS_WITH(parse_bundle(j.dump()), ContainsSubstring("missing unit scalar"));
  }
  SECTION("bad scalar") {
    j["theta"]["f"] = "zeta(";
    CHECK_THROWS_WITH(parse_bundle(j.dump()), ContainsSubstring("theta[f]"));
  }
  SECTION("fusion that breaks the unit fails validation") {
    j["fusion"]["1,f,1"] = 1;
    CHECK_NOTHROW(parse_bundle(j.dump()));
    CHECK_THROWS_WITH(load_bundle(j.dump()), ContainsSubstring("fusion.unit"));
  }
}

TEST_CASE("absent sections serialize as null") {
  StructureBundle b = find_builtin("z2-boson")->bundle;
  b.braiding.reset();
  b.theta.reset();
  b.duality.reset();
  const json j = bundle_to_json(b);
  CHECK(j.at("R").is_null());
  CHECK(j.at("theta").is_null());
  CHECK(j.at("dual").is_null());
  CHECK(serialize_bundle(parse_bundle(j.dump())) == serialize_bundle(b));
}
