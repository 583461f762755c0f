#include <catch_amalgamated.hpp>

#include "tortile/catalog.hpp"
#include "tortile/report.hpp"

using namespace tortile;

TEST_CASE("empty suite renders only its header") {
  SuiteReport r;
  r.suite = "balanced";
  CHECK(report_to_text(r) == "suite balanced: pass\n");
  CHECK(report_to_json(r).at("rows").empty());
}

TEST_CASE("json report keeps row ids, witness and both sides") {
  auto b = find_builtin("z2-fermion")->bundle;
  b.braiding->R.at({1, 1, 0})(0, 0) = Cyclotomic::root_of_unity(1, 8);
  const SuiteReport rep = check_balanced_pi(b);
  const json j = json::parse(reports_to_json({rep}));
  REQUIRE(j.size() == 1);
  CHECK(j[0].at("suite") == "balanced");
  CHECK(j[0].at("pass") == false);
  REQUIRE(j[0].at("rows").size() == rep.rows.size());
  for (std::size_t k = 0; k < rep.rows.size(); ++k) {
    const auto& row = j[0].at("rows")[k];
    CHECK(row.at("id") == rep.rows[k].id);
    CHECK(row.at("checked") == rep.rows[k].checked);
    if (!rep.rows[k].pass) {
      CHECK(row.at("witness") == rep.rows[k].witness);
      CHECK(row.at("lhs") == rep.rows[k].lhs);
      CHECK(row.at("rhs") == rep.rows[k].rhs);
      CHECK_FALSE(row.at("lhs").get<std::string>().empty());
    }
  }
  const std::string text = report_to_text(rep);
  CHECK(text.find("FAIL A3.1.hex-left") != std::string::npos);
  CHECK(text.find("x=f, y=f") != std::string::npos);
}
