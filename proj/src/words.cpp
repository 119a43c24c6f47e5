#include "fricke/words.hpp"

#include <algorithm>
#include <cctype>

#include "fricke/errors.hpp"

namespace fricke {

char gen_letter(Gen g) {
  switch (g) {
    case Gen::X:
      return 'X';
    case Gen::Y:
      return 'Y';
    case Gen::Z:
      return 'Z';
  }
  return '?';
}

namespace {

void check_rank(int rank) {
  if (rank != 2 && rank != 3) {
    throw RankError("rank must be 2 or 3, got " + std::to_string(rank));
  }
}

std::vector<GenSymbol> reduce_symbols(int rank,
                                      std::span<const GenSymbol> symbols) {
  std::vector<GenSymbol> out;
  out.reserve(symbols.size());
  for (const GenSymbol& s : symbols) {
    if (static_cast<int>(s.gen) >= rank) {
      throw RankError(std::string("generator ") + gen_letter(s.gen) +
                      " is not available at rank " + std::to_string(rank));
    }
    if (s.sign != 1 && s.sign != -1) {
      throw Error("symbol sign must be +1 or -1");
    }
    if (!out.empty() && mutually_inverse(out.back(), s)) {
      out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return out;
}

}  // namespace

Word::Word(int rank) : rank_(rank) { check_rank(rank); }

Word::Word(int rank, std::vector<GenSymbol> symbols) : rank_(rank) {
  check_rank(rank);
  symbols_ = reduce_symbols(rank, symbols);
}

Word free_reduce(int rank, std::span<const GenSymbol> symbols) {
  return Word(rank, std::vector<GenSymbol>(symbols.begin(), symbols.end()));
}

Word parse_word(std::string_view text, int rank) {
  check_rank(rank);
  std::vector<GenSymbol> symbols;
  std::size_t i = 0;
  const std::size_t n = text.size();
  bool saw_one = false;
  while (i < n) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (ch == '1') {
      // identity token; only meaningful alone but harmless anywhere
      saw_one = true;
      ++i;
      continue;
    }
    Gen g;
    switch (std::toupper(static_cast<unsigned char>(ch))) {
      case 'X':
        g = Gen::X;
        break;
      case 'Y':
        g = Gen::Y;
        break;
      case 'Z':
        g = Gen::Z;
        break;
      default:
        throw ParseError(std::string("unexpected character '") + ch + "'", i);
    }
    if (static_cast<int>(g) >= rank) {
      throw RankError(std::string("generator ") + gen_letter(g) +
                      " is illegal at rank " + std::to_string(rank) +
                      " (position " + std::to_string(i) + ")");
    }
    ++i;
    long long exponent = 1;
    if (i < n && text[i] == '\'') {
      exponent = -1;
      ++i;
    } else if (i < n && text[i] == '^') {
      ++i;
      std::size_t start = i;
      bool negative = false;
      if (i < n && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
      }
      std::size_t digits_at = i;
      long long mag = 0;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
        mag = mag * 10 + (text[i] - '0');
        if (mag > 1000000) {
          throw ParseError("exponent too large", start);
        }
        ++i;
      }
      if (i == digits_at) {
        throw ParseError("expected integer exponent after '^'", start);
      }
      if (mag == 0) {
        throw ParseError("zero exponent", start);
      }
      exponent = negative ? -mag : mag;
    }
    const GenSymbol s{g, static_cast<std::int8_t>(exponent < 0 ? -1 : 1)};
    for (long long k = 0; k < std::llabs(exponent); ++k) {
      symbols.push_back(s);
    }
  }
  if (saw_one && !symbols.empty()) {
    throw ParseError("'1' (identity) cannot be mixed with generators", 0);
  }
  return Word(rank, std::move(symbols));
}

CyclicReduction cyclic_reduce(const Word& w) {
  std::vector<GenSymbol> core = w.symbols();
  std::vector<GenSymbol> conj;
  while (core.size() >= 2 && mutually_inverse(core.front(), core.back())) {
    conj.push_back(core.front());
    core.erase(core.begin());
    core.pop_back();
  }
  return {Word(w.rank(), std::move(core)), Word(w.rank(), std::move(conj))};
}

Word invert(const Word& w) {
  std::vector<GenSymbol> out(w.symbols().rbegin(), w.symbols().rend());
  for (GenSymbol& s : out) {
    s = s.inverse();
  }
  return Word(w.rank(), std::move(out));
}

Word concat(const Word& u, const Word& v) {
  if (u.rank() != v.rank()) {
    throw RankError("cannot concatenate words of different ranks");
  }
  std::vector<GenSymbol> out = u.symbols();
  out.insert(out.end(), v.symbols().begin(), v.symbols().end());
  return Word(u.rank(), std::move(out));
}

Word rotate_left(const Word& w, std::size_t k) {
  if (w.length() == 0) {
    return w;
  }
  k %= w.length();
  std::vector<GenSymbol> out(w.symbols().begin() + k, w.symbols().end());
  out.insert(out.end(), w.symbols().begin(), w.symbols().begin() + k);
  return Word(w.rank(), std::move(out));
}

namespace {

bool symbol_seq_less(const std::vector<GenSymbol>& a,
                     const std::vector<GenSymbol>& b) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [](GenSymbol s, GenSymbol t) { return s.order_index() < t.order_index(); });
}

}  // namespace

Word canonical_trace_key(const Word& w) {
  Word core = cyclic_reduce(w).core;
  if (core.length() == 0) {
    return core;
  }
  Word best = core;
  for (const Word& base : {core, invert(core)}) {
    for (std::size_t k = 0; k < base.length(); ++k) {
      Word rot = rotate_left(base, k);
      if (symbol_seq_less(rot.symbols(), best.symbols())) {
        best = rot;
      }
    }
  }
  return best;
}

std::string to_string(const Word& w) {
  if (w.is_identity()) {
    return "1";
  }
  std::string out;
  const auto& syms = w.symbols();
  std::size_t i = 0;
  while (i < syms.size()) {
    std::size_t j = i;
    while (j < syms.size() && syms[j] == syms[i]) {
      ++j;
    }
    const long long run = static_cast<long long>(j - i) * syms[i].sign;
    out += gen_letter(syms[i].gen);
    if (run != 1) {
      out += '^';
      out += std::to_string(run);
    }
    i = j;
  }
  return out;
}

}  // namespace fricke
