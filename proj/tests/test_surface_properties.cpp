#include <catch_amalgamated.hpp>

#include "tortile/surface.hpp"
#include "word_gen.hpp"

using namespace tortile;
using tortile::testing::WordGen;

// Random words over S3 labels with a Z/2 sphere group.
TEST_CASE("reflect and rotate on random words") {
  const GroupTable pi = GroupTable::symmetric3();
  const GroupTable G = GroupTable::cyclic(2);
  WordGen gen(pi, &G, 20261016);
  int checked = 0;
  for (int i = 0; i < 1200; ++i) {
    const auto w1 = gen.word();
    const auto w2 = gen.word(w1.target);
    const auto w3 = gen.word();
    const auto comp = compose_words(w1, w2, pi);
    const auto tens = tensor_words(w1, w3, pi);

    REQUIRE_NOTHROW(validate_word(comp, pi));
    REQUIRE_NOTHROW(validate_word(tens, pi));
    CHECK(comp.source == w1.source);
    CHECK(comp.target == w2.target);
    Signature s = w1.source;
    s.insert(s.end(), w3.source.begin(), w3.source.end());
    CHECK(tens.source == s);

    CHECK(reflect_word(comp, pi, &G) == compose_words(reflect_word(w2, pi, &G), reflect_word(w1, pi, &G), pi));
    CHECK(rotate_word(comp, pi) == compose_words(rotate_word(w2, pi), rotate_word(w1, pi), pi));
    CHECK(reflect_word(reflect_word(w1, pi, &G), pi, &G) == w1);
    CHECK(rotate_word(rotate_word(w1, pi), pi) == w1);
    CHECK(rotate_word(tens, pi) == tensor_words(rotate_word(w3, pi), rotate_word(w1, pi), pi));
    CHECK(equivalent_words(reflect_word(tens, pi, &G), tensor_words(reflect_word(w1, pi, &G), reflect_word(w3, pi, &G), pi), pi));
    CHECK(tensor_words(tensor_words(w1, w2, pi), w3, pi) == tensor_words(w1, tensor_words(w2, w3, pi), pi));
    ++checked;
  }
  CHECK(checked >= 1000);
}
