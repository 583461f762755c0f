#pragma once

// Bundle file format: UTF-8 JSON, documented in docs/formats.md.

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "tortile/bundle.hpp"

namespace tortile {

using json = nlohmann::json;

/// Malformed input. line/column are 1-based and 0 when unknown.
class BundleError : public std::runtime_error {
 public:
  BundleError(const std::string& msg, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg
                                : msg),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

namespace io {

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

inline json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte ? e.byte - 1 : 0);
    std::string what = e.what();
    auto pos = what.find("] ");
    throw BundleError(pos == std::string::npos ? what : what.substr(pos + 2), line, col);
  }
}

inline json group_to_json(const GroupTable& g) {
  return json{{"elements", g.names()}, {"table", g.table()}};
}

inline GroupTable group_from_json(const json& j, const char* where) {
  try {
    auto names = j.at("elements").get<std::vector<std::string>>();
    auto table = j.at("table").get<std::vector<std::vector<int>>>();
    return GroupTable(std::move(table), std::move(names));
  } catch (const GroupError& e) {
    throw BundleError(std::string(where) + ": " + e.what());
  } catch (const json::exception& e) {
    throw BundleError(std::string(where) + ": " + e.what());
  }
}

inline json matrix_to_json(const Mat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Cyclotomic scalar_from_json(const json& j, const std::string& where) {
  if (!j.is_string()) throw BundleError(where + ": scalars are strings");
  try {
    return Cyclotomic::parse(j.get<std::string>());
  } catch (const ScalarError& e) {
    throw BundleError(where + ": " + e.what());
  }
}

inline Mat matrix_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw BundleError(where + ": matrices are arrays of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j[0].size() : 0;
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw BundleError(where + ": ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = scalar_from_json(j[i][c], where);
  }
  return m;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

/// Resolves names against the category and groups while reading keys.
class KeyReader {
 public:
  KeyReader(const GradedCategory& c, const GroupTable* g) : c_(c), g_(g) {}

  int simple(const std::string& s, const std::string& where) const {
    for (const auto& x : c_.simples())
      if (x.name == s) return x.id;
    throw BundleError(where + ": unknown simple '" + s + "'");
  }
  int pi(const std::string& s, const std::string& where) const {
    const int v = c_.pi().find(s);
    if (v < 0) throw BundleError(where + ": unknown element '" + s + "' of the grading group");
    return v;
  }
  int G(const std::string& s, const std::string& where) const {
    const int v = g_ ? g_->find(s) : -1;
    if (v < 0) throw BundleError(where + ": unknown element '" + s + "' of G");
    return v;
  }
  std::vector<int> simples(const std::string& s, std::size_t count, const std::string& where) const {
    auto parts = split(s, ',');
    if (parts.size() != count) throw BundleError(where + ": key '" + s + "' needs " + std::to_string(count) + " simples");
    std::vector<int> out;
    for (auto& p : parts) out.push_back(simple(p, where));
    return out;
  }
  /// "x;y" with exactly two parts.
  std::pair<std::string, std::string> halves(const std::string& s, const std::string& where) const {
    auto parts = split(s, ';');
    if (parts.size() != 2) throw BundleError(where + ": key '" + s + "' needs one ';'");
    return {parts[0], parts[1]};
  }

 private:
  const GradedCategory& c_;
  const GroupTable* g_;
};

inline bool present(const json& root, const char* key) { return root.contains(key) && !root.at(key).is_null(); }

inline const json& object_at(const json& root, const char* key) {
  if (!present(root, key)) throw BundleError(std::string("missing section '") + key + "'");
  const json& j = root.at(key);
  if (!j.is_object()) throw BundleError(std::string("section '") + key + "' must be an object");
  return j;
}

}  // namespace io

/// Parses a bundle without running validation.
inline StructureBundle parse_bundle(std::string_view text) {
  using namespace io;
  json root = parse_json(text);
  if (!root.is_object()) throw BundleError("bundle must be a JSON object");
  static const std::vector<std::string> known = {"group", "g_group", "simples", "fusion", "F",     "l",      "r",
                                                 "sigma", "mu",      "R",       "theta",  "dual",  "b",      "d",
                                                 "c_lax", "h_lax",   "pairing", "E",      "rho"};
  for (auto& [k, v] : root.items())
    if (std::find(known.begin(), known.end(), k) == known.end()) throw BundleError("unknown section '" + k + "'");

  StructureBundle b;
  GroupTable pi = present(root, "group") ? group_from_json(root.at("group"), "group") : GroupTable{};
  std::optional<GroupTable> G;
  if (present(root, "g_group")) G = group_from_json(root.at("g_group"), "g_group");

  if (!present(root, "simples") || !root.at("simples").is_array() || root.at("simples").empty())
    throw BundleError("section 'simples' must be a non-empty array");
  std::vector<SimpleObject> simples;
  for (const auto& s : root.at("simples")) {
    if (!s.is_object() || !s.contains("name") || !s.contains("grade"))
      throw BundleError("simples: each entry needs 'name' and 'grade'");
    const auto name = s.at("name").get<std::string>();
    if (name.empty() || name.find_first_of(",; \t\n") != std::string::npos)
      throw BundleError("simples: name '" + name + "' must be non-empty without ',', ';' or spaces");
    const int g = pi.find(s.at("grade").get<std::string>());
    if (g < 0) throw BundleError("simples: unknown grade '" + s.at("grade").get<std::string>() + "'");
    simples.push_back({static_cast<int>(simples.size()), g, name});
  }
  try {
    b.cat = GradedCategory(pi, std::move(simples), 0);
  } catch (const CategoryError& e) {
    throw BundleError(std::string("simples: ") + e.what());
  }
  const int n = b.n();
  KeyReader keys(b.cat, G ? &*G : nullptr);

  b.fusion.assign(static_cast<std::size_t>(n) * n * n, 0);
  for (auto& [k, v] : object_at(root, "fusion").items()) {
    auto s = keys.simples(k, 3, "fusion");
    if (!v.is_number_integer()) throw BundleError("fusion: multiplicities are integers");
    b.set_N(s[0], s[1], s[2], v.get<int>());
  }
  for (auto& [k, v] : object_at(root, "F").items()) {
    auto [abc, d] = keys.halves(k, "F");
    auto s = keys.simples(abc, 3, "F");
    b.F[{s[0], s[1], s[2], keys.simple(d, "F")}] = matrix_from_json(v, "F[" + k + "]");
  }
  b.l.assign(n, Cyclotomic(1));
  b.r.assign(n, Cyclotomic(1));
  std::vector<bool> seen_l(n), seen_r(n);
  for (auto& [k, v] : object_at(root, "l").items()) {
    const int a = keys.simple(k, "l");
    b.l[a] = scalar_from_json(v, "l[" + k + "]");
    seen_l[a] = true;
  }
  for (auto& [k, v] : object_at(root, "r").items()) {
    const int a = keys.simple(k, "r");
    b.r[a] = scalar_from_json(v, "r[" + k + "]");
    seen_r[a] = true;
  }
  for (int a = 0; a < n; ++a)
    if (!seen_l[a] || !seen_r[a]) throw BundleError("l/r: missing unit scalar for '" + b.cat.simple(a).name + "'");

  b.sigma.assign(pi.order(), std::vector<int>(n, -1));
  for (auto& [k, v] : object_at(root, "sigma").items()) {
    const int g = keys.pi(k, "sigma");
    if (!v.is_object()) throw BundleError("sigma[" + k + "] must be an object");
    for (auto& [a, s] : v.items())
      b.sigma[g][keys.simple(a, "sigma[" + k + "]")] = keys.simple(s.get<std::string>(), "sigma[" + k + "]");
  }
  for (int g = 0; g < pi.order(); ++g)
    for (int a = 0; a < n; ++a)
      if (b.sigma[g][a] < 0)
        throw BundleError("sigma: missing image of '" + b.cat.simple(a).name + "' under '" + pi.name(g) + "'");

  for (auto& [k, v] : object_at(root, "mu").items()) {
    auto parts = split(k, ';');
    if (parts.size() != 3) throw BundleError("mu: key '" + k + "' must read gamma;a,b;c");
    auto ab = keys.simples(parts[1], 2, "mu");
    b.mu[{keys.pi(parts[0], "mu"), ab[0], ab[1], keys.simple(parts[2], "mu")}] = matrix_from_json(v, "mu[" + k + "]");
  }

  if (present(root, "R")) {
    BraidingData br;
    for (auto& [k, v] : object_at(root, "R").items()) {
      auto [ab, c] = keys.halves(k, "R");
      auto s = keys.simples(ab, 2, "R");
      br.R[{s[0], s[1], keys.simple(c, "R")}] = matrix_from_json(v, "R[" + k + "]");
    }
    b.braiding = std::move(br);
  }
  if (present(root, "theta")) {
    std::vector<Cyclotomic> th(n);
    std::vector<bool> seen(n);
    for (auto& [k, v] : object_at(root, "theta").items()) {
      const int a = keys.simple(k, "theta");
      th[a] = scalar_from_json(v, "theta[" + k + "]");
      seen[a] = true;
    }
    for (int a = 0; a < n; ++a)
      if (!seen[a]) throw BundleError("theta: missing twist for '" + b.cat.simple(a).name + "'");
    b.theta = std::move(th);
  }

  if (present(root, "rho")) {
    if (!G) throw BundleError("rho: section 'g_group' is required");
    GActionData ga{*G, std::vector<int>(G->order(), -1)};
    for (auto& [k, v] : object_at(root, "rho").items())
      ga.rho[keys.G(k, "rho")] = keys.simple(v.get<std::string>(), "rho");
    for (int g = 0; g < G->order(); ++g)
      if (ga.rho[g] < 0) throw BundleError("rho: missing rho(" + G->name(g) + ")1");
    b.g_action = std::move(ga);
  }

  if (present(root, "dual")) {
    DualityData du;
    du.dual.assign(n, -1);
    du.b.assign(n, Cyclotomic(0));
    du.d.assign(n, Cyclotomic(0));
    for (auto& [k, v] : object_at(root, "dual").items())
      du.dual[keys.simple(k, "dual")] = keys.simple(v.get<std::string>(), "dual");
    std::vector<bool> sb(n), sd(n);
    for (auto& [k, v] : object_at(root, "b").items()) {
      const int a = keys.simple(k, "b");
      du.b[a] = scalar_from_json(v, "b[" + k + "]");
      sb[a] = true;
    }
    for (auto& [k, v] : object_at(root, "d").items()) {
      const int a = keys.simple(k, "d");
      du.d[a] = scalar_from_json(v, "d[" + k + "]");
      sd[a] = true;
    }
    for (int a = 0; a < n; ++a)
      if (du.dual[a] < 0 || !sb[a] || !sd[a])
        throw BundleError("duality: incomplete entry for '" + b.cat.simple(a).name + "'");
    for (auto& [k, v] : object_at(root, "c_lax").items()) {
      auto [g, a] = keys.halves(k, "c_lax");
      du.c_lax[{keys.pi(g, "c_lax"), keys.simple(a, "c_lax")}] = scalar_from_json(v, "c_lax[" + k + "]");
    }
    if (present(root, "h_lax")) {
      for (auto& [k, v] : object_at(root, "h_lax").items()) {
        auto [g, a] = keys.halves(k, "h_lax");
        du.h_lax[{keys.G(g, "h_lax"), keys.simple(a, "h_lax")}] = scalar_from_json(v, "h_lax[" + k + "]");
      }
    }
    b.duality = std::move(du);
  }

  if (present(root, "pairing")) {
    FormData f;
    for (auto& [k, v] : object_at(root, "pairing").items()) {
      auto s = keys.simples(k, 2, "pairing");
      if (!v.is_number_integer()) throw BundleError("pairing: dimensions are integers");
      if (v.get<int>() != 0) f.pairing[{s[0], s[1]}] = v.get<int>();
    }
    for (auto& [k, v] : object_at(root, "E").items()) {
      auto s = keys.simples(k, 2, "E");
      if (!v.is_number_integer()) throw BundleError("E: multiplicities are integers");
      if (v.get<int>() != 0) f.E[{s[0], s[1]}] = v.get<int>();
    }
    b.forms = std::move(f);
  }
  return b;
}

/// Parses and validates; validation failures throw naming the first violated invariant.
inline StructureBundle load_bundle(std::string_view text) {
  StructureBundle b = parse_bundle(text);
  auto report = validate_bundle(b);
  if (auto* f = report.first_failure()) throw BundleError("validation failed [" + f->check + "]: " + f->witness);
  return b;
}

inline json bundle_to_json(const StructureBundle& b) {
  const int n = b.n();
  auto nm = [&](int a) { return b.cat.simple(a).name; };
  const auto& pi = b.pi();
  json root;
  root["group"] = io::group_to_json(pi);
  root["g_group"] = b.g_action ? io::group_to_json(b.g_action->G) : json(nullptr);
  json simples = json::array();
  for (const auto& s : b.cat.simples()) simples.push_back({{"name", s.name}, {"grade", pi.name(s.grade)}});
  root["simples"] = simples;

  json fusion = json::object();
  for (int a = 0; a < n; ++a)
    for (int c1 = 0; c1 < n; ++c1)
      for (int c = 0; c < n; ++c)
        if (b.N(a, c1, c)) fusion[nm(a) + "," + nm(c1) + "," + nm(c)] = b.N(a, c1, c);
  root["fusion"] = fusion;

  json F = json::object();
  for (auto& [k, m] : b.F) F[nm(k[0]) + "," + nm(k[1]) + "," + nm(k[2]) + ";" + nm(k[3])] = io::matrix_to_json(m);
  root["F"] = F;
  json l = json::object(), r = json::object();
  for (int a = 0; a < n; ++a) {
    l[nm(a)] = b.l[a].to_string();
    r[nm(a)] = b.r[a].to_string();
  }
  root["l"] = l;
  root["r"] = r;

  json sigma = json::object();
  for (int g = 0; g < pi.order(); ++g) {
    json row = json::object();
    for (int a = 0; a < n; ++a) row[nm(a)] = nm(b.sig(g, a));
    sigma[pi.name(g)] = row;
  }
  root["sigma"] = sigma;
  json mu = json::object();
  for (auto& [k, m] : b.mu) mu[pi.name(k[0]) + ";" + nm(k[1]) + "," + nm(k[2]) + ";" + nm(k[3])] = io::matrix_to_json(m);
  root["mu"] = mu;

  if (b.braiding) {
    json R = json::object();
    for (auto& [k, m] : b.braiding->R) R[nm(k[0]) + "," + nm(k[1]) + ";" + nm(k[2])] = io::matrix_to_json(m);
    root["R"] = R;
  } else {
    root["R"] = nullptr;
  }
  if (b.theta) {
    json th = json::object();
    for (int a = 0; a < n; ++a) th[nm(a)] = (*b.theta)[a].to_string();
    root["theta"] = th;
  } else {
    root["theta"] = nullptr;
  }

  if (b.duality) {
    const auto& du = *b.duality;
    json dual = json::object(), bb = json::object(), dd = json::object(), c = json::object();
    for (int a = 0; a < n; ++a) {
      dual[nm(a)] = nm(du.dual[a]);
      bb[nm(a)] = du.b[a].to_string();
      dd[nm(a)] = du.d[a].to_string();
    }
    for (auto& [k, v] : du.c_lax) c[pi.name(k.first) + ";" + nm(k.second)] = v.to_string();
    root["dual"] = dual;
    root["b"] = bb;
    root["d"] = dd;
    root["c_lax"] = c;
    if (b.g_action) {
      json h = json::object();
      for (auto& [k, v] : du.h_lax) h[b.g_action->G.name(k.first) + ";" + nm(k.second)] = v.to_string();
      root["h_lax"] = h;
    } else {
      root["h_lax"] = nullptr;
    }
  } else {
    for (const char* k : {"dual", "b", "d", "c_lax", "h_lax"}) root[k] = nullptr;
  }

  if (b.forms) {
    json p = json::object(), e = json::object();
    for (auto& [k, v] : b.forms->pairing) p[nm(k.first) + "," + nm(k.second)] = v;
    for (auto& [k, v] : b.forms->E) e[nm(k.first) + "," + nm(k.second)] = v;
    root["pairing"] = p;
    root["E"] = e;
  } else {
    root["pairing"] = nullptr;
    root["E"] = nullptr;
  }
  if (b.g_action) {
    json rho = json::object();
    for (int g = 0; g < b.g_action->G.order(); ++g) rho[b.g_action->G.name(g)] = nm(b.g_action->rho[g]);
    root["rho"] = rho;
  } else {
    root["rho"] = nullptr;
  }
  return root;
}

/// Canonical text: sorted keys, two-space indent, trailing newline.
inline std::string serialize_bundle(const StructureBundle& b) { return bundle_to_json(b).dump(2) + "\n"; }

}  // namespace tortile
