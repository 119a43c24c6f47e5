#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fricke {

/// Generators of the free group. Rank-2 words use X,Y; rank 3 adds Z.
enum class Gen : std::uint8_t { X = 0, Y = 1, Z = 2 };

char gen_letter(Gen g);

/// One symbol of a word: a generator or its inverse.
struct GenSymbol {
  Gen gen;
  std::int8_t sign;  // +1 or -1

  GenSymbol inverse() const { return {gen, static_cast<std::int8_t>(-sign)}; }

  /// Position in the fixed symbol order X < X^-1 < Y < Y^-1 < Z < Z^-1.
  int order_index() const {
    return 2 * static_cast<int>(gen) + (sign < 0 ? 1 : 0);
  }

  bool operator==(const GenSymbol&) const = default;
};

inline GenSymbol pos(Gen g) { return {g, +1}; }
inline GenSymbol neg(Gen g) { return {g, -1}; }

inline bool mutually_inverse(GenSymbol a, GenSymbol b) {
  return a.gen == b.gen && a.sign == -b.sign;
}

/// A reduced word in the free group of the given rank. Immutable value type:
/// construction performs free reduction, so no symbol ever follows its
/// inverse. The empty word is the identity.
class Word {
 public:
  explicit Word(int rank = 2);
  Word(int rank, std::vector<GenSymbol> symbols);

  int rank() const { return rank_; }
  std::size_t length() const { return symbols_.size(); }
  bool is_identity() const { return symbols_.empty(); }
  const std::vector<GenSymbol>& symbols() const { return symbols_; }

  bool operator==(const Word&) const = default;

 private:
  int rank_;
  std::vector<GenSymbol> symbols_;
};

/// Parses the word grammar: juxtaposed or whitespace-separated tokens, each a
/// generator letter (case-insensitive) optionally followed by ^<nonzero int>
/// or by ' (exponent -1). Empty input or "1" is the identity. Z needs rank 3.
Word parse_word(std::string_view text, int rank);

Word free_reduce(int rank, std::span<const GenSymbol> symbols);

struct CyclicReduction {
  Word core;        // cyclically reduced
  Word conjugator;  // w = conjugator * core * conjugator^-1
};

CyclicReduction cyclic_reduce(const Word& w);

Word invert(const Word& w);
Word concat(const Word& u, const Word& v);

/// Cyclic left rotation by k. The input must be cyclically reduced (rotations
/// of such words stay reduced).
Word rotate_left(const Word& w, std::size_t k);

/// Lexicographically least word, in the fixed symbol order, among all cyclic
/// rotations of cyclic_reduce(w).core and of its inverse. Conjugate words and
/// inverse words share one key; traces depend only on this class.
Word canonical_trace_key(const Word& w);

/// Display form with maximal run-length grouping: "X^2Y^-1". Identity is "1".
std::string to_string(const Word& w);

}  // namespace fricke
