#pragma once

// Random well-formed cobordism words for property tests.

#include <random>

#include "tortile/surface.hpp"

namespace tortile::testing {

class WordGen {
 public:
  WordGen(const GroupTable& pi, const GroupTable* G, unsigned seed) : pi_(pi), G_(G), rng_(seed) {}

  Signature signature(int max_len = 3) {
    Signature s;
    const int len = pick(0, max_len);
    for (int i = 0; i < len; ++i) s.push_back(pick(0, pi_.order() - 1));
    return s;
  }

  Layer layer(const Signature& in) {
    Layer l;
    std::size_t i = 0;
    while (i <= in.size()) {
      if (pick(0, 5) == 0) {
        l.push_back(pick(0, 1) ? gen::codisc() : gen::copair(pick(0, pi_.order() - 1)));
        continue;
      }
      if (i == in.size()) break;
      const int a = in[i];
      std::vector<Generator> opts = {gen::cyl(a), gen::crosscyl(a, pick(0, pi_.order() - 1)),
                                     gen::copants(pick_factor(a), 0)};
      opts.back().b = pi_.mul(pi_.inv(opts.back().a), a);
      if (a == pi_.identity()) {
        opts.push_back(gen::disc());
        if (G_) opts.push_back(gen::pi2cyl(pick(0, G_->order() - 1)));
      }
      if (i + 1 < in.size()) {
        opts.push_back(gen::pants(a, in[i + 1]));
        opts.push_back(gen::swap(a, in[i + 1]));
        if (in[i + 1] == pi_.inv(a)) opts.push_back(gen::pair(a));
      }
      const Generator g = opts[static_cast<std::size_t>(pick(0, static_cast<int>(opts.size()) - 1))];
      l.push_back(g);
      i += gen_inputs(g, pi_).size();
    }
    return l;
  }

  CobordismWord word(const Signature& source, int max_layers = 3) {
    std::vector<Layer> slices;
    Signature cur = source;
    const int n = pick(0, max_layers);
    for (int k = 0; k < n; ++k) {
      Layer l = layer(cur);
      cur = layer_outputs(l, pi_);
      if (cur.size() > 5) break;
      slices.push_back(std::move(l));
    }
    if (slices.empty()) return identity_word(source);
    return make_word(std::move(slices), pi_, source);
  }

  CobordismWord word() { return word(signature()); }

  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

 private:
  int pick_factor(int) { return pick(0, pi_.order() - 1); }

  const GroupTable& pi_;
  const GroupTable* G_;
  std::mt19937 rng_;
};

}  // namespace tortile::testing
