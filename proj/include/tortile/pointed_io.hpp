#pragma once

// Pointed-spec files for the enumeration command:
//   {"A": {"elements": [...], "table": [[...]]}  or  {"cyclic": 2},
//    "names": ["1", "s"],                  optional simple names
//    "group": {"elements": ..., "table": ...},   optional grading group, trivial when absent
//    "grading": ["e", ...],                optional, one pi element per element of A
//    "omega": {"1,1,1": "-1"},             keys name elements of A; missing entries are 1
//    "root_order": 8}

#include <string_view>

#include "tortile/bundle_io.hpp"
#include "tortile/catalog.hpp"

namespace tortile {

inline PointedSpec parse_pointed_spec(std::string_view text) {
  using namespace io;
  const json root = parse_json(text);
  if (!root.is_object()) throw BundleError("pointed spec must be a JSON object");
  for (auto& [k, v] : root.items())
    if (k != "A" && k != "names" && k != "group" && k != "grading" && k != "omega" && k != "root_order")
      throw BundleError("unknown section '" + k + "'");
  PointedSpec s;
  if (!present(root, "A") || !root.at("A").is_object()) throw BundleError("section 'A' must be an object");
  const json& A = root.at("A");
  if (A.contains("cyclic")) {
    if (!A.at("cyclic").is_number_integer() || A.at("cyclic").get<int>() < 1)
      throw BundleError("A: 'cyclic' must be a positive integer");
    s.A = GroupTable::cyclic(A.at("cyclic").get<int>());
  } else {
    s.A = group_from_json(A, "A");
  }
  if (present(root, "names")) {
    try {
      s.names = root.at("names").get<std::vector<std::string>>();
    } catch (const json::exception&) {
      throw BundleError("names: expected an array of strings");
    }
    if (static_cast<int>(s.names.size()) != s.A.order()) throw BundleError("names: need one name per element of A");
  }
  if (present(root, "group")) s.pi = group_from_json(root.at("group"), "group");
  if (present(root, "grading")) {
    if (!root.at("grading").is_array()) throw BundleError("grading: expected an array");
    for (const auto& g : root.at("grading")) {
      const int v = g.is_string() ? s.pi.find(g.get<std::string>()) : -1;
      if (v < 0) throw BundleError("grading: unknown element " + g.dump() + " of the grading group");
      s.grading.push_back(v);
    }
  }
  if (present(root, "omega")) {
    for (auto& [k, v] : object_at(root, "omega").items()) {
      const auto parts = split(k, ',');
      if (parts.size() != 3) throw BundleError("omega: key '" + k + "' needs three elements");
      std::array<int, 3> key{};
      for (int i = 0; i < 3; ++i) {
        key[static_cast<std::size_t>(i)] = s.A.find(parts[static_cast<std::size_t>(i)]);
        if (key[static_cast<std::size_t>(i)] < 0) throw BundleError("omega: unknown element '" + parts[static_cast<std::size_t>(i)] + "'");
      }
      s.omega[key] = scalar_from_json(v, "omega[" + k + "]");
    }
  }
  if (present(root, "root_order")) {
    if (!root.at("root_order").is_number_integer() || root.at("root_order").get<int>() < 1)
      throw BundleError("root_order: expected a positive integer");
    s.root_order = root.at("root_order").get<unsigned>();
  }
  return s;
}

}  // namespace tortile
