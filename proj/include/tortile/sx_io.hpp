#pragma once

// JSON forms of surface assignments and self-duality witnesses.
//
// Assignment:
//   {"group": ..., "g_group": ..., "simples": [...],        as in a bundle
//    "generators": {"(pants a b)": {"x,y": {"z": 1}}, "(codisc)": {"": {"1": 1}}, ...},
//    "cells": {"F": ..., "l": ..., "r": ..., "mu": ..., "R": ..., "theta": ...}}
// Tuple keys join simple names with ','; the empty tuple is "".
//
// Witness: {"eps": {"x": s}, "q": {"x,y;z": s}, "w": {"gamma;x": s},
//           "v": {"g;x": s}, "t": {"x": s}, "u": {"x,y;z": s}}

#include <string>
#include <string_view>

#include "tortile/bundle_io.hpp"
#include "tortile/sx.hpp"

namespace tortile {

namespace sx_io_detail {

inline std::string tuple_key(const SimpleTuple& t, const GradedCategory& c) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + c.simple(t[i]).name;
  return s;
}

inline SimpleTuple parse_tuple(const std::string& k, const io::KeyReader& keys, const std::string& where) {
  if (k.empty()) return {};
  SimpleTuple t;
  for (const auto& p : io::split(k, ',')) t.push_back(keys.simple(p, where));
  return t;
}

inline Generator parse_generator(const std::string& text, const GroupTable& pi, const GroupTable* G) {
  CobordismWord w;
  try {
    w = parse_word("(word (layer " + text + "))", pi, G);
  } catch (const SurfaceError& e) {
    throw BundleError("generators: '" + text + "': " + e.what());
  }
  if (w.slices.size() != 1 || w.slices[0].size() != 1) throw BundleError("generators: '" + text + "' is not one generator");
  const Generator g = w.slices[0][0];
  if (g.kind == GenKind::Cyl || g.kind == GenKind::Swap)
    throw BundleError("generators: '" + text + "' has a fixed value and cannot be assigned");
  return g;
}

const char* const cell_keys[] = {"F", "l", "r", "mu", "R", "theta"};

}  // namespace sx_io_detail

inline json assignment_to_json(const SXAssignment& a) {
  using namespace sx_io_detail;
  const auto& cat = a.bundle.cat;
  StructureBundle cb = a.bundle;
  const int n = cat.size();
  cb.fusion.assign(static_cast<std::size_t>(n) * n * n, 0);
  cb.sigma.assign(static_cast<std::size_t>(a.pi().order()), std::vector<int>(static_cast<std::size_t>(n)));
  for (auto& row : cb.sigma)
    for (int x = 0; x < n; ++x) row[static_cast<std::size_t>(x)] = x;
  cb.F = a.cells.reassociate;
  cb.l = a.cells.left_disc;
  cb.r = a.cells.right_disc;
  cb.l.resize(static_cast<std::size_t>(n), Cyclotomic(1));
  cb.r.resize(static_cast<std::size_t>(n), Cyclotomic(1));
  cb.mu = a.cells.crossing;
  if (!a.cells.untwist.empty()) cb.braiding = BraidingData{a.cells.untwist};
  if (!a.cells.dehn.empty()) cb.theta = a.cells.dehn;
  const json full = bundle_to_json(cb);

  json root;
  root["group"] = full.at("group");
  root["g_group"] = a.G ? io::group_to_json(*a.G) : json(nullptr);
  root["simples"] = full.at("simples");
  json gens = json::object();
  for (const auto& [g, t] : a.generators) {
    json vals = json::object();
    for (const auto& [in, out] : t.values) {
      json o = json::object();
      for (const auto& [tu, k] : out) o[tuple_key(tu, cat)] = k;
      vals[tuple_key(in, cat)] = std::move(o);
    }
    gens[surface_detail::gen_to_sexp(g, a.pi(), a.g_group())] = std::move(vals);
  }
  root["generators"] = std::move(gens);
  json cells = json::object();
  for (const char* k : cell_keys) cells[k] = full.at(k);
  root["cells"] = std::move(cells);
  return root;
}

inline std::string serialize_assignment(const SXAssignment& a) { return assignment_to_json(a).dump(2) + "\n"; }

inline SXAssignment parse_assignment(std::string_view text) {
  using namespace sx_io_detail;
  json root = io::parse_json(text);
  if (!root.is_object()) throw BundleError("assignment must be a JSON object");
  for (auto& [k, v] : root.items())
    if (k != "group" && k != "g_group" && k != "simples" && k != "generators" && k != "cells")
      throw BundleError("unknown section '" + k + "'");

  json shell = json::object();
  for (const char* k : {"group", "simples"})
    if (root.contains(k)) shell[k] = root.at(k);
  shell["fusion"] = json::object();
  shell["sigma"] = json::object();
  const json& cells = io::object_at(root, "cells");
  for (auto& [k, v] : cells.items()) {
    bool known = false;
    for (const char* c : cell_keys) known = known || k == c;
    if (!known) throw BundleError("cells: unknown section '" + k + "'");
    shell[k] = v;
  }
  // sigma comes from the crossing cylinders; the shell carries the identity.
  json idrow = json::object();
  if (root.contains("simples") && root.at("simples").is_array())
    for (const auto& e : root.at("simples"))
      if (e.is_object() && e.contains("name") && e.at("name").is_string()) idrow[e.at("name").get<std::string>()] = e.at("name");
  json elements = json::array({"e"});
  if (io::present(root, "group") && root.at("group").is_object() && root.at("group").contains("elements"))
    elements = root.at("group").at("elements");
  if (elements.is_array())
    for (const auto& g : elements)
      if (g.is_string()) shell["sigma"][g.get<std::string>()] = idrow;
  const StructureBundle cb = parse_bundle(shell.dump());

  SXAssignment a;
  a.bundle = slices_of(cb);
  if (io::present(root, "g_group")) a.G = io::group_from_json(root.at("g_group"), "g_group");
  a.cells.reassociate = cb.F;
  a.cells.left_disc = cb.l;
  a.cells.right_disc = cb.r;
  a.cells.crossing = cb.mu;
  if (cb.braiding) a.cells.untwist = cb.braiding->R;
  if (cb.theta) a.cells.dehn = *cb.theta;

  const io::KeyReader keys(a.bundle.cat, a.g_group());
  for (auto& [gk, vals] : io::object_at(root, "generators").items()) {
    const Generator g = parse_generator(gk, a.pi(), a.g_group());
    const std::string where = "generators[" + gk + "]";
    if (!vals.is_object()) throw BundleError(where + " must be an object");
    FunctorTable t{gen_inputs(g, a.pi()), gen_outputs(g, a.pi()), {}};
    for (auto& [ik, out] : vals.items()) {
      if (!out.is_object()) throw BundleError(where + "[" + ik + "] must be an object");
      TupleCounts m;
      for (auto& [ok, k] : out.items()) {
        if (!k.is_number_integer() || k.get<long long>() < 0)
          throw BundleError(where + "[" + ik + "]: multiplicities are non-negative integers");
        if (k.get<long long>() > 0) m[parse_tuple(ok, keys, where)] = k.get<long long>();
      }
      const SimpleTuple in = parse_tuple(ik, keys, where);
      if (in.size() != t.source.size()) throw BundleError(where + ": key '" + ik + "' has the wrong length");
      t.values[in] = std::move(m);
    }
    a.generators[g] = std::move(t);
  }
  return a;
}

inline json witness_to_json(const SelfDualWitness& w, const SXAssignment& a) {
  const auto& cat = a.bundle.cat;
  auto nm = [&](int x) { return cat.simple(x).name; };
  json root;
  json eps = json::object(), t = json::object();
  for (std::size_t x = 0; x < w.eps.size(); ++x) eps[nm(static_cast<int>(x))] = w.eps[x].to_string();
  for (std::size_t x = 0; x < w.t.size(); ++x) t[nm(static_cast<int>(x))] = w.t[x].to_string();
  json q = json::object(), u = json::object(), cw = json::object(), v = json::object();
  for (const auto& [k, s] : w.q) q[nm(k[0]) + "," + nm(k[1]) + ";" + nm(k[2])] = s.to_string();
  for (const auto& [k, s] : w.u) u[nm(k[0]) + "," + nm(k[1]) + ";" + nm(k[2])] = s.to_string();
  for (const auto& [k, s] : w.w) cw[a.pi().name(k.first) + ";" + nm(k.second)] = s.to_string();
  if (a.G)
    for (const auto& [k, s] : w.v) v[a.G->name(k.first) + ";" + nm(k.second)] = s.to_string();
  root["eps"] = eps;
  root["q"] = q;
  root["w"] = cw;
  root["v"] = v;
  root["t"] = t;
  root["u"] = u;
  return root;
}

inline SelfDualWitness parse_witness(std::string_view text, const SXAssignment& a) {
  using namespace io;
  json root = parse_json(text);
  if (!root.is_object()) throw BundleError("witness must be a JSON object");
  const auto& cat = a.bundle.cat;
  const KeyReader keys(cat, a.g_group());
  const int n = cat.size();
  SelfDualWitness w;
  auto per_simple = [&](const char* key, std::vector<Cyclotomic>& out) {
    out.assign(static_cast<std::size_t>(n), Cyclotomic(0));
    std::vector<bool> seen(static_cast<std::size_t>(n));
    for (auto& [k, v] : object_at(root, key).items()) {
      const int x = keys.simple(k, key);
      out[static_cast<std::size_t>(x)] = scalar_from_json(v, std::string(key) + "[" + k + "]");
      seen[static_cast<std::size_t>(x)] = true;
    }
    for (int x = 0; x < n; ++x)
      if (!seen[static_cast<std::size_t>(x)]) throw BundleError(std::string(key) + ": missing '" + cat.simple(x).name + "'");
  };
  per_simple("eps", w.eps);
  per_simple("t", w.t);
  auto triples = [&](const char* key, std::map<std::array<int, 3>, Cyclotomic>& out) {
    for (auto& [k, v] : object_at(root, key).items()) {
      auto [xy, c] = keys.halves(k, key);
      auto s = keys.simples(xy, 2, key);
      out[{s[0], s[1], keys.simple(c, key)}] = scalar_from_json(v, std::string(key) + "[" + k + "]");
    }
  };
  triples("q", w.q);
  triples("u", w.u);
  for (auto& [k, v] : object_at(root, "w").items()) {
    auto [g, x] = keys.halves(k, "w");
    w.w[{keys.pi(g, "w"), keys.simple(x, "w")}] = scalar_from_json(v, "w[" + k + "]");
  }
  if (present(root, "v"))
    for (auto& [k, v] : object_at(root, "v").items()) {
      auto [g, x] = keys.halves(k, "v");
      w.v[{keys.G(g, "v"), keys.simple(x, "v")}] = scalar_from_json(v, "v[" + k + "]");
    }
  return w;
}

}  // namespace tortile
