#pragma once

// Genus-zero cobordism words. Boundary circles carry loop classes in pi; a
// word is a stack of layers, each layer a left-to-right row of generators.
// Words are values: every operation returns a fresh, validated word.

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tortile/group.hpp"
#include "tortile/terms.hpp"

namespace tortile {

class SurfaceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Signature = std::vector<int>;

enum class GenKind { Cyl, CrossCyl, Pants, CoPants, Disc, CoDisc, Swap, Pair, CoPair, Pi2Cyl };

/// Labels: Cyl(a), CrossCyl(a, gamma = b), Pants(a, b), CoPants(a, b),
/// Swap(a, b), Pair(a), CoPair(a), Pi2Cyl(g = a, an element of G).
struct Generator {
  GenKind kind = GenKind::Cyl;
  int a = 0, b = 0;
  auto operator<=>(const Generator&) const = default;
};

namespace gen {
inline Generator cyl(int a) { return {GenKind::Cyl, a, 0}; }
inline Generator crosscyl(int a, int gamma) { return {GenKind::CrossCyl, a, gamma}; }
inline Generator pants(int a, int b) { return {GenKind::Pants, a, b}; }
inline Generator copants(int a, int b) { return {GenKind::CoPants, a, b}; }
inline Generator disc() { return {GenKind::Disc, 0, 0}; }
inline Generator codisc() { return {GenKind::CoDisc, 0, 0}; }
inline Generator swap(int a, int b) { return {GenKind::Swap, a, b}; }
inline Generator pair(int a) { return {GenKind::Pair, a, 0}; }
inline Generator copair(int a) { return {GenKind::CoPair, a, 0}; }
inline Generator pi2cyl(int g) { return {GenKind::Pi2Cyl, g, 0}; }
}  // namespace gen

inline Signature gen_inputs(const Generator& g, const GroupTable& pi) {
  const int e = pi.identity();
  switch (g.kind) {
    case GenKind::Cyl: return {g.a};
    case GenKind::CrossCyl: return {g.a};
    case GenKind::Pants: return {g.a, g.b};
    case GenKind::CoPants: return {pi.mul(g.a, g.b)};
    case GenKind::Disc: return {e};
    case GenKind::CoDisc: return {};
    case GenKind::Swap: return {g.a, g.b};
    case GenKind::Pair: return {g.a, pi.inv(g.a)};
    case GenKind::CoPair: return {};
    case GenKind::Pi2Cyl: return {e};
  }
  return {};
}

inline Signature gen_outputs(const Generator& g, const GroupTable& pi) {
  const int e = pi.identity();
  switch (g.kind) {
    case GenKind::Cyl: return {g.a};
    case GenKind::CrossCyl: return {pi.conj(g.b, g.a)};
    case GenKind::Pants: return {pi.mul(g.a, g.b)};
    case GenKind::CoPants: return {g.a, g.b};
    case GenKind::Disc: return {};
    case GenKind::CoDisc: return {e};
    case GenKind::Swap: return {g.b, g.a};
    case GenKind::Pair: return {};
    case GenKind::CoPair: return {g.a, pi.inv(g.a)};
    case GenKind::Pi2Cyl: return {e};
  }
  return {};
}

/// Mirror image in a horizontal plane: inputs and outputs exchange.
inline Generator reflect_generator(const Generator& g, const GroupTable& pi, const GroupTable* G = nullptr) {
  switch (g.kind) {
    case GenKind::Cyl: return g;
    case GenKind::CrossCyl: return gen::crosscyl(pi.conj(g.b, g.a), pi.inv(g.b));
    case GenKind::Pants: return gen::copants(g.a, g.b);
    case GenKind::CoPants: return gen::pants(g.a, g.b);
    case GenKind::Disc: return gen::codisc();
    case GenKind::CoDisc: return gen::disc();
    case GenKind::Swap: return gen::swap(g.b, g.a);
    case GenKind::Pair: return gen::copair(g.a);
    case GenKind::CoPair: return gen::pair(g.a);
    case GenKind::Pi2Cyl: return gen::pi2cyl(G ? G->inv(g.a) : g.a);
  }
  return g;
}

/// Half-turn: inputs and outputs exchange with labels inverted and reversed.
inline Generator rotate_generator(const Generator& g, const GroupTable& pi) {
  switch (g.kind) {
    case GenKind::Cyl: return gen::cyl(pi.inv(g.a));
    case GenKind::CrossCyl: return gen::crosscyl(pi.conj(g.b, pi.inv(g.a)), pi.inv(g.b));
    case GenKind::Pants: return gen::copants(pi.inv(g.b), pi.inv(g.a));
    case GenKind::CoPants: return gen::pants(pi.inv(g.b), pi.inv(g.a));
    case GenKind::Disc: return gen::codisc();
    case GenKind::CoDisc: return gen::disc();
    case GenKind::Swap: return gen::swap(pi.inv(g.a), pi.inv(g.b));
    case GenKind::Pair: return gen::copair(g.a);
    case GenKind::CoPair: return gen::pair(g.a);
    case GenKind::Pi2Cyl: return g;
  }
  return g;
}

/// s -> s^-1: labels inverted, order reversed.
inline Signature rotate_signature(const Signature& s, const GroupTable& pi) {
  Signature out;
  for (auto it = s.rbegin(); it != s.rend(); ++it) out.push_back(pi.inv(*it));
  return out;
}

using Layer = std::vector<Generator>;

struct CobordismWord {
  Signature source, target;
  std::vector<Layer> slices;
  friend bool operator==(const CobordismWord&, const CobordismWord&) = default;
};

inline std::string signature_to_string(const Signature& s, const GroupTable& pi) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + pi.name(s[i]);
  return out + ")";
}

inline Signature layer_inputs(const Layer& l, const GroupTable& pi) {
  Signature s;
  for (const auto& g : l) {
    auto in = gen_inputs(g, pi);
    s.insert(s.end(), in.begin(), in.end());
  }
  return s;
}

inline Signature layer_outputs(const Layer& l, const GroupTable& pi) {
  Signature s;
  for (const auto& g : l) {
    auto out = gen_outputs(g, pi);
    s.insert(s.end(), out.begin(), out.end());
  }
  return s;
}

namespace surface_detail {

inline std::string first_difference(const Signature& a, const Signature& b, const GroupTable& pi) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i])
      return "position " + std::to_string(i) + ": " + pi.name(a[i]) + " vs " + pi.name(b[i]);
  return "length " + std::to_string(a.size()) + " vs " + std::to_string(b.size());
}

}  // namespace surface_detail

inline void validate_word(const CobordismWord& w, const GroupTable& pi) {
  auto check_label = [&](int v) {
    if (v < 0 || v >= pi.order()) throw SurfaceError("label outside the grading group");
  };
  for (int v : w.source) check_label(v);
  Signature cur = w.source;
  for (std::size_t k = 0; k < w.slices.size(); ++k) {
    for (const auto& g : w.slices[k])
      if (g.kind != GenKind::Pi2Cyl && g.kind != GenKind::Disc && g.kind != GenKind::CoDisc) {
        check_label(g.a);
        if (g.kind == GenKind::CrossCyl || g.kind == GenKind::Pants || g.kind == GenKind::CoPants ||
            g.kind == GenKind::Swap)
          check_label(g.b);
      }
    const Signature in = layer_inputs(w.slices[k], pi);
    if (in != cur)
      throw SurfaceError("layer " + std::to_string(k) + " expects " + signature_to_string(in, pi) + " but receives " +
                         signature_to_string(cur, pi) + " (" + surface_detail::first_difference(in, cur, pi) + ")");
    cur = layer_outputs(w.slices[k], pi);
  }
  if (cur != w.target)
    throw SurfaceError("declared target " + signature_to_string(w.target, pi) + " differs from computed " +
                       signature_to_string(cur, pi));
}

inline CobordismWord identity_word(const Signature& s) { return {s, s, {}}; }

/// Word from layers; the source is read off the first layer.
inline CobordismWord make_word(std::vector<Layer> slices, const GroupTable& pi, std::optional<Signature> source = {}) {
  CobordismWord w;
  if (source)
    w.source = *source;
  else if (!slices.empty())
    w.source = layer_inputs(slices.front(), pi);
  w.target = w.source;
  if (!slices.empty()) w.target = layer_outputs(slices.back(), pi);
  w.slices = std::move(slices);
  validate_word(w, pi);
  return w;
}

inline CobordismWord generator_word(const Generator& g, const GroupTable& pi) { return make_word({{g}}, pi); }

inline Layer cylinders(const Signature& s) {
  Layer l;
  for (int a : s) l.push_back(gen::cyl(a));
  return l;
}

/// w1 followed by w2.
inline CobordismWord compose_words(const CobordismWord& w1, const CobordismWord& w2, const GroupTable& pi) {
  if (w1.target != w2.source)
    throw SurfaceError("cannot compose: target " + signature_to_string(w1.target, pi) + " vs source " +
                       signature_to_string(w2.source, pi) + " (" +
                       surface_detail::first_difference(w1.target, w2.source, pi) + ")");
  CobordismWord w{w1.source, w2.target, w1.slices};
  w.slices.insert(w.slices.end(), w2.slices.begin(), w2.slices.end());
  validate_word(w, pi);
  return w;
}

/// Disjoint union: w1 beside the identity on w2's source, then the identity
/// on w1's target beside w2. Strictly associative as words.
inline CobordismWord tensor_words(const CobordismWord& w1, const CobordismWord& w2, const GroupTable& pi) {
  CobordismWord w;
  w.source = w1.source;
  w.source.insert(w.source.end(), w2.source.begin(), w2.source.end());
  w.target = w1.target;
  w.target.insert(w.target.end(), w2.target.begin(), w2.target.end());
  for (const auto& l : w1.slices) {
    Layer x = l;
    auto pad = cylinders(w2.source);
    x.insert(x.end(), pad.begin(), pad.end());
    w.slices.push_back(std::move(x));
  }
  for (const auto& l : w2.slices) {
    Layer x = cylinders(w1.target);
    x.insert(x.end(), l.begin(), l.end());
    w.slices.push_back(std::move(x));
  }
  validate_word(w, pi);
  return w;
}

inline CobordismWord reflect_word(const CobordismWord& w, const GroupTable& pi, const GroupTable* G = nullptr) {
  CobordismWord out{w.target, w.source, {}};
  for (auto it = w.slices.rbegin(); it != w.slices.rend(); ++it) {
    Layer l;
    for (const auto& g : *it) l.push_back(reflect_generator(g, pi, G));
    out.slices.push_back(std::move(l));
  }
  validate_word(out, pi);
  return out;
}

inline CobordismWord rotate_word(const CobordismWord& w, const GroupTable& pi) {
  CobordismWord out{rotate_signature(w.target, pi), rotate_signature(w.source, pi), {}};
  for (auto it = w.slices.rbegin(); it != w.slices.rend(); ++it) {
    Layer l;
    for (auto g = it->rbegin(); g != it->rend(); ++g) l.push_back(rotate_generator(*g, pi));
    out.slices.push_back(std::move(l));
  }
  validate_word(out, pi);
  return out;
}

// ---------------------------------------------------------------------------
// Equality up to sliding generators past each other (interchange), dropping
// cylinders, and moving closed components freely. Each generator becomes an
// event at a wire offset; two adjacent events on disjoint wires commute, and
// the normal form moves the left one first. A cap meeting a cup in the same
// gap counts as left. Closed components are normalised on their own and kept
// as a sorted list.

struct WireEvent {
  int offset = 0;
  Generator g;
  auto operator<=>(const WireEvent&) const = default;
};

struct WordNormalForm {
  std::vector<WireEvent> open;
  std::vector<std::vector<WireEvent>> closed;
  friend bool operator==(const WordNormalForm&, const WordNormalForm&) = default;
};

namespace surface_detail {

inline void slide_left_first(std::vector<WireEvent>& ev, const GroupTable& pi) {
  auto arity = [&](const WireEvent& e) {
    return std::pair<int, int>(static_cast<int>(gen_inputs(e.g, pi).size()),
                               static_cast<int>(gen_outputs(e.g, pi).size()));
  };
  bool changed = true;
  for (std::size_t guard = 0; changed && guard < ev.size() * ev.size() + 1; ++guard) {
    changed = false;
    for (std::size_t i = 0; i + 1 < ev.size(); ++i) {
      const int k2 = arity(ev[i + 1]).first, m2 = arity(ev[i + 1]).second;
      const int o1 = ev[i].offset, o2 = ev[i + 1].offset;
      if (o2 + k2 <= o1) {
        const WireEvent first{o2, ev[i + 1].g}, second{o1 - k2 + m2, ev[i].g};
        ev[i] = first;
        ev[i + 1] = second;
        changed = true;
      }
    }
  }
}

}  // namespace surface_detail

inline WordNormalForm interchange_normal_form(const CobordismWord& w, const GroupTable& pi) {
  struct Ev {
    Generator g;
    std::vector<int> before;  // wire ids left of the event at its time
  };
  std::vector<Ev> evs;
  std::vector<int> owner;  // wire id -> producing event, -1 for source wires
  std::vector<int> parent;
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  auto unite = [&](int x, int y) { parent[static_cast<std::size_t>(find(x))] = find(y); };
  // Node 0 stands for the boundary; events are 1..n.
  parent.push_back(0);
  std::vector<int> wires;
  for (std::size_t i = 0; i < w.source.size(); ++i) {
    wires.push_back(static_cast<int>(owner.size()));
    owner.push_back(0);
  }
  for (const auto& layer : w.slices) {
    std::size_t pos = 0;
    for (const auto& g : layer) {
      const std::size_t k = gen_inputs(g, pi).size(), m = gen_outputs(g, pi).size();
      if (g.kind == GenKind::Cyl) {
        pos += 1;
        continue;
      }
      const int node = static_cast<int>(parent.size());
      parent.push_back(node);
      evs.push_back({g, std::vector<int>(wires.begin(), wires.begin() + static_cast<std::ptrdiff_t>(pos))});
      for (std::size_t j = 0; j < k; ++j) unite(node, owner[static_cast<std::size_t>(wires[pos + j])]);
      std::vector<int> fresh;
      for (std::size_t j = 0; j < m; ++j) {
        fresh.push_back(static_cast<int>(owner.size()));
        owner.push_back(node);
      }
      wires.erase(wires.begin() + static_cast<std::ptrdiff_t>(pos), wires.begin() + static_cast<std::ptrdiff_t>(pos + k));
      wires.insert(wires.begin() + static_cast<std::ptrdiff_t>(pos), fresh.begin(), fresh.end());
      pos += m;
    }
  }
  for (int id : wires) unite(owner[static_cast<std::size_t>(id)], 0);

  auto comp_of_wire = [&](int id) { return find(owner[static_cast<std::size_t>(id)]); };
  std::map<int, std::vector<WireEvent>> groups;
  for (std::size_t i = 0; i < evs.size(); ++i) {
    const int c = find(static_cast<int>(i) + 1);
    int offset = 0;
    for (int id : evs[i].before)
      if (comp_of_wire(id) == c) ++offset;
    groups[c].push_back({offset, evs[i].g});
  }
  WordNormalForm nf;
  const int boundary = find(0);
  for (auto& [c, list] : groups) {
    surface_detail::slide_left_first(list, pi);
    if (c == boundary)
      nf.open = std::move(list);
    else
      nf.closed.push_back(std::move(list));
  }
  std::sort(nf.closed.begin(), nf.closed.end());
  return nf;
}

inline bool equivalent_words(const CobordismWord& a, const CobordismWord& b, const GroupTable& pi) {
  return a.source == b.source && a.target == b.target && interchange_normal_form(a, pi) == interchange_normal_form(b, pi);
}

// ---------------------------------------------------------------------------
// Text form: (word (source a b) (layer (pants a b)) (layer (crosscyl ab g))).
// The source clause is needed only for words without layers.

namespace surface_detail {

inline std::string gen_to_sexp(const Generator& g, const GroupTable& pi, const GroupTable* G) {
  auto n = [&](int v) { return pi.name(v); };
  switch (g.kind) {
    case GenKind::Cyl: return "(cyl " + n(g.a) + ")";
    case GenKind::CrossCyl: return "(crosscyl " + n(g.a) + " " + n(g.b) + ")";
    case GenKind::Pants: return "(pants " + n(g.a) + " " + n(g.b) + ")";
    case GenKind::CoPants: return "(copants " + n(g.a) + " " + n(g.b) + ")";
    case GenKind::Disc: return "(disc)";
    case GenKind::CoDisc: return "(codisc)";
    case GenKind::Swap: return "(swap " + n(g.a) + " " + n(g.b) + ")";
    case GenKind::Pair: return "(pair " + n(g.a) + ")";
    case GenKind::CoPair: return "(copair " + n(g.a) + ")";
    case GenKind::Pi2Cyl: return "(pi2cyl " + (G ? G->name(g.a) : std::to_string(g.a)) + ")";
  }
  return "?";
}

}  // namespace surface_detail

inline std::string word_to_sexp(const CobordismWord& w, const GroupTable& pi, const GroupTable* G = nullptr) {
  std::string s = "(word";
  if (w.slices.empty()) {
    s += " (source";
    for (int v : w.source) s += " " + pi.name(v);
    s += ")";
  }
  for (const auto& l : w.slices) {
    s += " (layer";
    for (const auto& g : l) s += " " + surface_detail::gen_to_sexp(g, pi, G);
    s += ")";
  }
  return s + ")";
}

inline CobordismWord parse_word(std::string_view text, const GroupTable& pi, const GroupTable* G = nullptr) {
  using detail::Sexp;
  Sexp root;
  try {
    root = detail::read_all(text);
  } catch (const TermError& e) {
    throw SurfaceError(std::string("word syntax: ") + e.what());
  }
  auto fail = [&](const Sexp& n, const std::string& msg) {
    return SurfaceError("word syntax at offset " + std::to_string(n.pos) + ": " + msg);
  };
  auto head_of = [](const Sexp& n) -> std::string { return n.is_atom || !n.list[0].is_atom ? "" : n.list[0].atom; };
  if (head_of(root) != "word") throw fail(root, "expected (word ...)");
  auto label = [&](const Sexp& n) {
    if (!n.is_atom) throw fail(n, "expected a group element");
    const int v = pi.find(n.atom);
    if (v < 0) throw fail(n, "unknown group element '" + n.atom + "'");
    return v;
  };
  std::optional<Signature> source;
  std::vector<Layer> slices;
  for (std::size_t i = 1; i < root.list.size(); ++i) {
    const auto& item = root.list[i];
    const std::string head = head_of(item);
    if (head == "source") {
      Signature s;
      for (std::size_t k = 1; k < item.list.size(); ++k) s.push_back(label(item.list[k]));
      source = s;
      continue;
    }
    if (head != "layer") throw fail(item, "expected (layer ...) or (source ...)");
    Layer layer;
    for (std::size_t k = 1; k < item.list.size(); ++k) {
      const auto& g = item.list[k];
      const std::string name = head_of(g);
      if (name.empty()) throw fail(g, "expected a generator");
      const std::size_t argc = g.list.size() - 1;
      auto need = [&](std::size_t c) {
        if (argc != c) throw fail(g, name + " takes " + std::to_string(c) + " labels");
      };
      auto lab = [&](std::size_t j) { return label(g.list[j]); };
      if (name == "cyl") {
        need(1);
        layer.push_back(gen::cyl(lab(1)));
      } else if (name == "crosscyl") {
        need(2);
        layer.push_back(gen::crosscyl(lab(1), lab(2)));
      } else if (name == "pants") {
        need(2);
        layer.push_back(gen::pants(lab(1), lab(2)));
      } else if (name == "copants") {
        need(2);
        layer.push_back(gen::copants(lab(1), lab(2)));
      } else if (name == "disc") {
        need(0);
        layer.push_back(gen::disc());
      } else if (name == "codisc") {
        need(0);
        layer.push_back(gen::codisc());
      } else if (name == "swap") {
        need(2);
        layer.push_back(gen::swap(lab(1), lab(2)));
      } else if (name == "pair") {
        need(1);
        layer.push_back(gen::pair(lab(1)));
      } else if (name == "copair") {
        need(1);
        layer.push_back(gen::copair(lab(1)));
      } else if (name == "pi2cyl") {
        need(1);
        const auto& a = g.list[1];
        const int v = a.is_atom && G ? G->find(a.atom) : -1;
        if (v < 0) throw fail(a, "unknown element of G");
        layer.push_back(gen::pi2cyl(v));
      } else {
        throw fail(g, "unknown generator '" + name + "'");
      }
    }
    slices.push_back(std::move(layer));
  }
  if (slices.empty() && !source) throw fail(root, "a word without layers needs a (source ...) clause");
  return make_word(std::move(slices), pi, source);
}

// ---------------------------------------------------------------------------
// Curated relations between words, instantiated over all labels.

struct WordRelation {
  std::string id;      // family id, shared by all instances
  std::string labels;  // instance labels, for witnesses
  CobordismWord lhs, rhs;
};

struct RelationSet {
  std::vector<WordRelation> words;
};

inline RelationSet builtin_relations(const GroupTable& pi, const GroupTable* G = nullptr) {
  RelationSet rs;
  const int e = pi.identity();
  auto W = [&](std::vector<Layer> l) { return make_word(std::move(l), pi); };
  auto add = [&](const std::string& id, std::string labels, CobordismWord l, CobordismWord r) {
    if (l.source != r.source || l.target != r.target) throw SurfaceError("relation " + id + " has mismatched sides");
    rs.words.push_back({id, std::move(labels), std::move(l), std::move(r)});
  };
  auto nm = [&](int v) { return pi.name(v); };
  const int n = pi.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        add("rel.pants-assoc", nm(a) + "," + nm(b) + "," + nm(c),
            W({{gen::pants(a, b), gen::cyl(c)}, {gen::pants(pi.mul(a, b), c)}}),
            W({{gen::cyl(a), gen::pants(b, c)}, {gen::pants(a, pi.mul(b, c))}}));
  for (int a = 0; a < n; ++a) {
    add("rel.unit-left", nm(a), W({{gen::codisc(), gen::cyl(a)}, {gen::pants(e, a)}}),
        make_word({{gen::cyl(a)}}, pi));
    add("rel.unit-right", nm(a), W({{gen::cyl(a), gen::codisc()}, {gen::pants(a, e)}}),
        make_word({{gen::cyl(a)}}, pi));
    add("rel.crossing-unit", nm(a), W({{gen::crosscyl(a, e)}}), W({{gen::cyl(a)}}));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        add("rel.crossing-product", nm(a) + "," + nm(b) + ";" + nm(c),
            W({{gen::pants(a, b)}, {gen::crosscyl(pi.mul(a, b), c)}}),
            W({{gen::crosscyl(a, c), gen::crosscyl(b, c)}, {gen::pants(pi.conj(c, a), pi.conj(c, b))}}));
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      for (int d = 0; d < n; ++d)
        add("rel.crossing-hom", nm(a) + ";" + nm(c) + "," + nm(d),
            W({{gen::crosscyl(a, c)}, {gen::crosscyl(pi.conj(c, a), d)}}), W({{gen::crosscyl(a, pi.mul(d, c))}}));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      add("rel.untwist", nm(a) + "," + nm(b), W({{gen::pants(a, b)}}),
          W({{gen::swap(a, b)}, {gen::crosscyl(b, a), gen::cyl(a)}, {gen::pants(pi.conj(a, b), a)}}));
      add("rel.swap-involution", nm(a) + "," + nm(b), W({{gen::swap(a, b)}, {gen::swap(b, a)}}),
          W({{gen::cyl(a), gen::cyl(b)}}));
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int c = pi.inv(pi.mul(a, b));
      add("rel.frobenius", nm(a) + "," + nm(b) + "," + nm(c), W({{gen::cyl(a), gen::pants(b, c)}, {gen::pair(a)}}),
          W({{gen::pants(a, b), gen::cyl(c)}, {gen::pair(pi.mul(a, b))}}));
    }
  for (int a = 0; a < n; ++a) {
    const int ai = pi.inv(a);
    add("rel.snake-left", nm(a), W({{gen::copair(a), gen::cyl(a)}, {gen::cyl(a), gen::pair(ai)}}),
        W({{gen::cyl(a)}}));
    add("rel.snake-right", nm(a), W({{gen::cyl(a), gen::copair(ai)}, {gen::pair(a), gen::cyl(a)}}),
        W({{gen::cyl(a)}}));
  }
  add("rel.disc-sphere", "", W({{gen::codisc()}, {gen::disc()}}), identity_word({}));
  if (G) {
    for (int g = 0; g < G->order(); ++g) {
      const std::string gl = G->name(g);
      add("rel.pi2-product-left", gl, W({{gen::pi2cyl(g), gen::cyl(e)}, {gen::pants(e, e)}}),
          W({{gen::pants(e, e)}, {gen::pi2cyl(g)}}));
      add("rel.pi2-product-right", gl, W({{gen::cyl(e), gen::pi2cyl(g)}, {gen::pants(e, e)}}),
          W({{gen::pants(e, e)}, {gen::pi2cyl(g)}}));
      for (int h = 0; h < G->order(); ++h)
        add("rel.pi2-hom", gl + "," + G->name(h), W({{gen::pi2cyl(h)}, {gen::pi2cyl(g)}}),
            W({{gen::pi2cyl(G->mul(g, h))}}));
    }
  }
  return rs;
}

}  // namespace tortile
