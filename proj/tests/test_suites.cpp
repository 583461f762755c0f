#include <catch_amalgamated.hpp>

#include "tortile/catalog.hpp"

using namespace tortile;

namespace {

std::string failures(const SuiteReport& r) {
  std::string s;
  for (const auto& row : r.rows)
    if (!row.pass) s += row.id + ": " + row.witness + " | " + row.lhs + " vs " + row.rhs + "\n";
  return s;
}

}  // namespace

TEST_CASE("builtins pass their declared suites") {
  for (const auto& nb : builtin_examples()) {
    for (SuiteKind k : nb.suites) {
      INFO(nb.name << " / " << suite_name(k));
      const auto rep = run_suite(nb.bundle, k);
      CHECK(failures(rep) == "");
    }
  }
}
