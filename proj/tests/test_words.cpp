#include <doctest.h>

#include "fricke/errors.hpp"
#include "fricke/rng.hpp"
#include "fricke/words.hpp"

using namespace fricke;

namespace {

Word w2(std::vector<GenSymbol> syms) { return Word(2, std::move(syms)); }

bool has_adjacent_inverse_pair(const Word& w) {
  const auto& s = w.symbols();
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (mutually_inverse(s[i], s[i + 1])) {
      return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("parse_word expands tokens and reduces") {
  CHECK(parse_word("XY^-1", 2) == w2({pos(Gen::X), neg(Gen::Y)}));
  CHECK(parse_word("X X^-1", 2).is_identity());
  CHECK(parse_word("X^2Y'X", 2) ==
        w2({pos(Gen::X), pos(Gen::X), neg(Gen::Y), pos(Gen::X)}));
  CHECK(parse_word("X^2Y'X", 2).length() == 4);
  CHECK(parse_word("", 2).is_identity());
  CHECK(parse_word("  \t ", 2).is_identity());
  CHECK(parse_word("1", 2).is_identity());
  CHECK(parse_word("xy'", 2) == w2({pos(Gen::X), neg(Gen::Y)}));
  CHECK(parse_word("Z", 3) == Word(3, {pos(Gen::Z)}));
}

TEST_CASE("parse_word error cases") {
  CHECK_THROWS_AS(parse_word("X^0", 2), ParseError);
  CHECK_THROWS_AS(parse_word("X^", 2), ParseError);
  CHECK_THROWS_AS(parse_word("A", 2), ParseError);
  CHECK_THROWS_AS(parse_word("Z", 2), RankError);
  CHECK_THROWS_AS(parse_word("X1", 2), ParseError);
  // reported position
  try {
    parse_word("XY?Z", 3);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position == 2);
  }
}

TEST_CASE("free_reduce examples") {
  CHECK(free_reduce(2, std::vector<GenSymbol>{pos(Gen::X), pos(Gen::Y),
                                              neg(Gen::Y), neg(Gen::X)})
            .is_identity());
  const std::vector<GenSymbol> already{pos(Gen::X), pos(Gen::Y), pos(Gen::Y)};
  CHECK(free_reduce(2, already).symbols() == already);
  CHECK(free_reduce(2, std::vector<GenSymbol>{neg(Gen::Y), pos(Gen::Y),
                                              pos(Gen::X)}) ==
        w2({pos(Gen::X)}));
}

TEST_CASE("cyclic_reduce examples") {
  {
    const auto [core, conj] = cyclic_reduce(parse_word("XYX^-1", 2));
    CHECK(core == w2({pos(Gen::Y)}));
    CHECK(conj == w2({pos(Gen::X)}));
  }
  {
    const auto [core, conj] = cyclic_reduce(parse_word("XY", 2));
    CHECK(core == parse_word("XY", 2));
    CHECK(conj.is_identity());
  }
  {
    // X^-1 Y X^-1 Y^-1 X strips twice: first X^-1...X, then Y...Y^-1,
    // leaving the single-symbol core X^-1 with conjugator X^-1 Y
    const Word w = w2({neg(Gen::X), pos(Gen::Y), neg(Gen::X), neg(Gen::Y),
                       pos(Gen::X)});
    const auto [core, conj] = cyclic_reduce(w);
    CHECK(core == w2({neg(Gen::X)}));
    CHECK(conj == w2({neg(Gen::X), pos(Gen::Y)}));
    CHECK(concat(conj, concat(core, invert(conj))) == w);
  }
}

TEST_CASE("invert, concat, length") {
  CHECK(invert(w2({pos(Gen::X), neg(Gen::Y)})) ==
        w2({pos(Gen::Y), neg(Gen::X)}));
  CHECK(concat(w2({pos(Gen::X), pos(Gen::Y)}), w2({neg(Gen::Y), pos(Gen::X)})) ==
        w2({pos(Gen::X), pos(Gen::X)}));
  CHECK(Word(2).length() == 0);
  CHECK_THROWS_AS(concat(Word(2), Word(3)), RankError);
}

TEST_CASE("canonical_trace_key merges rotations and inverses") {
  const Word xy = parse_word("XY", 2);
  const Word yx = parse_word("YX", 2);
  CHECK(canonical_trace_key(xy) == canonical_trace_key(yx));
  CHECK(canonical_trace_key(xy) == canonical_trace_key(invert(xy)));
  CHECK(canonical_trace_key(parse_word("XYX^-1", 2)) ==
        canonical_trace_key(parse_word("Y", 2)));
}

TEST_CASE("display form groups runs") {
  CHECK(to_string(w2({pos(Gen::X), pos(Gen::X), neg(Gen::Y)})) == "X^2Y^-1");
  CHECK(to_string(Word(2)) == "1");
  CHECK(to_string(w2({neg(Gen::X), neg(Gen::X), neg(Gen::X)})) == "X^-3");
  CHECK(to_string(parse_word("XYX^-1Y^-1", 2)) == "XYX^-1Y^-1");
}

TEST_CASE("randomized word properties") {
  Rng rng(20240817);
  for (int trial = 0; trial < 300; ++trial) {
    const Word w = random_word(rng, 2 + (trial % 2), 30);

    // reduced invariant and idempotence
    CHECK(!has_adjacent_inverse_pair(w));
    CHECK(free_reduce(w.rank(), w.symbols()) == w);

    // inverse law
    CHECK(concat(w, invert(w)).is_identity());

    // cyclic core is cyclically reduced and conjugation reassembles w
    const auto [core, conj] = cyclic_reduce(w);
    if (core.length() >= 1) {
      CHECK(!mutually_inverse(core.symbols().front(), core.symbols().back()));
    }
    CHECK(concat(conj, concat(core, invert(conj))) == w);

    // key invariance under rotation of the core and under inversion
    const Word key = canonical_trace_key(w);
    CHECK(canonical_trace_key(invert(w)) == key);
    if (core.length() > 0) {
      const Word rot =
          rotate_left(core, rng.below(core.length()));
      CHECK(canonical_trace_key(rot) == key);
    }

    // display round trip
    CHECK(parse_word(to_string(w), w.rank()) == w);
  }
}
