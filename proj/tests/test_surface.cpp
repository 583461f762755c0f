#include <catch_amalgamated.hpp>

#include "tortile/surface.hpp"
#include "word_gen.hpp"

using namespace tortile;
using tortile::testing::WordGen;

namespace {

const GroupTable& s3() {
  static const GroupTable g = GroupTable::symmetric3();
  return g;
}

}  // namespace

TEST_CASE("generator signatures") {
  const auto pi = GroupTable::cyclic(3);
  const auto w = generator_word(gen::crosscyl(1, 2), pi);
  CHECK(w.source == Signature{1});
  CHECK(w.target == Signature{1});
  const auto& g = s3();
  const auto p = generator_word(gen::pants(1, 2), g);
  CHECK(p.target == Signature{g.mul(1, 2)});
  const auto rp = reflect_word(p, g);
  CHECK(rp.source == Signature{g.mul(1, 2)});
  CHECK(rp.target == Signature{1, 2});
  CHECK(reflect_word(generator_word(gen::cyl(3), g), g) == generator_word(gen::cyl(3), g));
  const auto pair = generator_word(gen::pair(1), g);
  const auto rot = rotate_word(pair, g);
  CHECK(rot == generator_word(gen::copair(1), g));
  CHECK(rot.target == Signature{1, g.inv(1)});
}

TEST_CASE("composition and disjoint union") {
  const auto& g = s3();
  const auto c = generator_word(gen::cyl(2), g);
  CHECK(compose_words(c, c, g).source == Signature{2});
  const auto x = generator_word(gen::crosscyl(1, 3), g);
  const auto y = generator_word(gen::crosscyl(g.conj(3, 1), 4), g);
  CHECK(compose_words(x, y, g).target == Signature{g.conj(g.mul(4, 3), 1)});
  CHECK_NOTHROW(compose_words(generator_word(gen::pants(1, 2), g), generator_word(gen::crosscyl(g.mul(1, 2), 5), g), g));
  CHECK_THROWS_AS(compose_words(x, c, g), SurfaceError);
  try {
    compose_words(generator_word(gen::pants(1, 2), g), generator_word(gen::swap(1, 2), g), g);
  } catch (const SurfaceError& e) {
    CHECK(std::string(e.what()).find("position 0") != std::string::npos);
  }
  const auto d = generator_word(gen::disc(), g);
  const auto dd = tensor_words(d, d, g);
  CHECK(dd.source == Signature{0, 0});
  CHECK(dd.target.empty());
  CHECK(tensor_words(generator_word(gen::cyl(1), g), generator_word(gen::cyl(2), g), g).source == Signature{1, 2});
}

TEST_CASE("word text round trip") {
  const auto& g = s3();
  const GroupTable G = GroupTable::cyclic(2);
  WordGen gen(g, &G, 7);
  for (int i = 0; i < 200; ++i) {
    const auto w = gen.word();
    const auto text = word_to_sexp(w, g, &G);
    CHECK(parse_word(text, g, &G) == w);
  }
  CHECK_THROWS_AS(parse_word("(word (layer (pants x y)))", g), SurfaceError);
  CHECK_THROWS_AS(parse_word("(word)", g), SurfaceError);
}

TEST_CASE("relation sides have matching signatures") {
  const GroupTable G = GroupTable::cyclic(2);
  const auto rs = builtin_relations(s3(), &G);
  CHECK(rs.words.size() > 100);
  bool found = false;
  for (const auto& r : rs.words) {
    CHECK(r.lhs.source == r.rhs.source);
    CHECK(r.lhs.target == r.rhs.target);
    if (r.id == "rel.crossing-product") {
      const auto& g = s3();
      found = true;
      CHECK(r.lhs.source.size() == 2);
      const int a = r.lhs.source[0], b = r.lhs.source[1];
      CHECK(g.mul(a, b) == g.mul(a, b));
    }
    if (r.id == "rel.pi2-product-left") {
      CHECK(r.lhs.source == Signature{0, 0});
      CHECK(r.lhs.target == Signature{0});
    }
  }
  CHECK(found);
  const auto trivial = builtin_relations(GroupTable());
  for (const auto& r : trivial.words) CHECK(r.id.rfind("rel.pi2", 0) != 0);
}
