#pragma once

// Mutation scan: multiply one scalar slot at a time by a root of unity and
// confirm that some row of the declared suites notices. Rows most likely to
// see a given section run first and the scan stops at the first failure.

#include <string>
#include <vector>

#include "tortile/suites.hpp"

namespace tortile {

struct MutationOutcome {
  std::string section, key;
  std::string caught_by;  // empty for a silent pass
};

struct MutationScan {
  std::size_t slots = 0;
  std::vector<MutationOutcome> outcomes;
  std::size_t silent() const {
    std::size_t k = 0;
    for (const auto& o : outcomes) k += o.caught_by.empty();
    return k;
  }
};

namespace mutation_detail {

inline std::vector<std::string> preferred_prefixes(const std::string& section) {
  if (section == "F") return {"M.pentagon", "A2.", "A3.1"};
  if (section == "l" || section == "r") return {"M.triangle", "A2.monoidal-unit"};
  if (section == "mu") return {"A2.", "A3."};
  if (section == "R") return {"A3.1", "A4.", "A3."};
  if (section == "theta") return {"A4.", "A6.2"};
  if (section == "b" || section == "d") return {"D.", "A6.3"};
  if (section == "c_lax") return {"A6.", "P4.3"};
  if (section == "h_lax") return {"A8.", "A7."};
  return {};
}

inline bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

}  // namespace mutation_detail

/// Rows of the given suites, reordered for a mutated section.
inline std::vector<SuiteRow> rows_for_section(const std::vector<SuiteKind>& suites, const std::string& section) {
  std::vector<SuiteRow> all;
  for (SuiteKind k : suites)
    for (auto& r : suite_rows(k)) all.push_back(std::move(r));
  std::vector<SuiteRow> out;
  std::vector<char> used(all.size(), 0);
  for (const auto& p : mutation_detail::preferred_prefixes(section))
    for (std::size_t i = 0; i < all.size(); ++i)
      if (!used[i] && mutation_detail::starts_with(all[i].id, p)) {
        used[i] = 1;
        out.push_back(all[i]);
      }
  for (std::size_t i = 0; i < all.size(); ++i)
    if (!used[i]) out.push_back(all[i]);
  return out;
}

/// Id of the first row that fails on b, or empty when every row passes.
inline std::string first_failing_row(const StructureBundle& b, const std::vector<SuiteRow>& rows, int workers = 1) {
  try {
    const Engine<Cyclotomic> engine(b);
    for (const auto& row : rows)
      if (!run_row(engine, row, workers).pass) return row.id;
  } catch (const std::exception& e) {
    return std::string("engine: ") + e.what();
  }
  return "";
}

inline MutationScan mutation_scan(const StructureBundle& bundle, const std::vector<SuiteKind>& suites,
                                  const Cyclotomic& factor, int workers = 1) {
  MutationScan scan;
  StructureBundle probe = bundle;
  const auto base = scalar_slots(probe);
  scan.slots = base.size();
  std::string last_section;
  std::vector<SuiteRow> rows;
  for (std::size_t i = 0; i < base.size(); ++i) {
    StructureBundle b = bundle;
    auto slots = scalar_slots(b);
    *slots[i].value = *slots[i].value * factor;
    if (slots[i].section != last_section) {
      last_section = slots[i].section;
      rows = rows_for_section(suites, last_section);
    }
    scan.outcomes.push_back({slots[i].section, slots[i].key, first_failing_row(b, rows, workers)});
  }
  return scan;
}

}  // namespace tortile
