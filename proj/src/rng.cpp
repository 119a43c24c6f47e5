#include "fricke/rng.hpp"

namespace fricke {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Mat2 random_sl2(Rng& rng) {
  Complex a = rng.box();
  while (std::abs(a) < 1e-3) {
    a = rng.box();
  }
  const Complex b = rng.box();
  const Complex c = rng.box();
  const Complex d = (Complex{1.0, 0.0} + b * c) / a;
  return {a, b, c, d};
}

Word random_word(Rng& rng, int rank, std::size_t max_length) {
  const std::size_t len = rng.below(max_length + 1);
  std::vector<GenSymbol> symbols;
  symbols.reserve(len);
  const int alphabet = 2 * rank;
  for (std::size_t i = 0; i < len; ++i) {
    GenSymbol s{};
    do {
      const int idx = static_cast<int>(rng.below(alphabet));
      s = GenSymbol{static_cast<Gen>(idx / 2),
                    static_cast<std::int8_t>(idx % 2 == 0 ? 1 : -1)};
    } while (!symbols.empty() && mutually_inverse(symbols.back(), s));
    symbols.push_back(s);
  }
  return Word(rank, std::move(symbols));
}

}  // namespace fricke
