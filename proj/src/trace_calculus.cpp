#include "fricke/trace_calculus.hpp"

#include <utility>

#include "fricke/errors.hpp"

namespace fricke {

namespace {

std::string word_key(const Word& w) {
  std::string k;
  k.reserve(w.length());
  for (const GenSymbol& s : w.symbols()) {
    k += static_cast<char>('a' + s.order_index());
  }
  return k;
}

std::string canonical_key_string(const Word& w) {
  return word_key(canonical_trace_key(w));
}

TracePoly var(Var v) { return TracePoly::variable(v); }

// Length <= 2 trace table, keyed canonically: every reduced rank-2 word of
// length 1 or 2 is a rotation/inverse of one of these six.
const std::unordered_map<std::string, TracePoly>& base_table() {
  static const std::unordered_map<std::string, TracePoly> table = [] {
    const Word wx(2, {pos(Gen::X)});
    const Word wy(2, {pos(Gen::Y)});
    const Word wxy(2, {pos(Gen::X), pos(Gen::Y)});
    const Word wxx(2, {pos(Gen::X), pos(Gen::X)});
    const Word wyy(2, {pos(Gen::Y), pos(Gen::Y)});
    const Word wxyi(2, {pos(Gen::X), neg(Gen::Y)});
    const TracePoly x = var(Var::x), y = var(Var::y), z = var(Var::z);
    std::unordered_map<std::string, TracePoly> t;
    t.emplace(canonical_key_string(wx), x);
    t.emplace(canonical_key_string(wy), y);
    t.emplace(canonical_key_string(wxy), z);
    t.emplace(canonical_key_string(wxx), x * x - TracePoly(2));
    t.emplace(canonical_key_string(wyy), y * y - TracePoly(2));
    t.emplace(canonical_key_string(wxyi), x * y - z);
    return t;
  }();
  return table;
}

}  // namespace

std::size_t TraceTable::size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return memo_.size();
}

std::optional<TracePoly> TraceTable::lookup(const std::string& key) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = memo_.find(key);
  if (it == memo_.end()) {
    return std::nullopt;
  }
  return it->second;
}

void TraceTable::store(const std::string& key, const TracePoly& value) {
  std::lock_guard<std::mutex> lock(mutex_);
  if (cap_ && memo_.size() >= *cap_) {
    return;
  }
  memo_.emplace(key, value);
}

TracePoly TraceTable::trace_poly(const Word& w) {
  if (w.rank() != 2) {
    throw RankError("trace_poly is defined for rank-2 words only");
  }
  return compute_word(w);
}

TracePoly TraceTable::compute_word(const Word& w) {
  return compute_core(cyclic_reduce(w).core);
}

TracePoly TraceTable::compute_core(const Word& core) {
  const std::size_t n = core.length();
  if (n == 0) {
    return TracePoly(2);
  }
  const std::string key = canonical_key_string(core);
  if (n <= 2) {
    return base_table().at(key);
  }
  if (auto hit = lookup(key)) {
    return *hit;
  }

  const auto& syms = core.symbols();
  TracePoly result;

  std::size_t first_inverse = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (syms[i].sign < 0) {
      first_inverse = i;
      break;
    }
  }

  if (first_inverse < n) {
    // rotate the first inverse symbol to the end: core ~ v * S^-1, then
    // t(v S^-1) = t(v) t(S) - t(v S)
    const Word rotated = rotate_left(core, first_inverse + 1);
    std::vector<GenSymbol> prefix(rotated.symbols().begin(),
                                  rotated.symbols().end() - 1);
    const Word v(2, std::move(prefix));
    const Word s(2, {rotated.symbols().back().inverse()});
    result = compute_word(v) * compute_word(s) - compute_word(concat(v, s));
  } else {
    // positive word of length >= 3: some generator repeats. Split at the
    // first two occurrences of the first repeating generator (X before Y):
    // core ~ u1 * u2 with both ending in that generator, then
    // t(u1 u2) = t(u1) t(u2) - t(u1 u2^-1), which cancels at the junction.
    std::size_t p = n, q = n;
    for (Gen g : {Gen::X, Gen::Y}) {
      std::size_t first = n, second = n;
      for (std::size_t i = 0; i < n; ++i) {
        if (syms[i].gen == g) {
          if (first == n) {
            first = i;
          } else {
            second = i;
            break;
          }
        }
      }
      if (second < n) {
        p = first;
        q = second;
        break;
      }
    }
    const Word rotated = rotate_left(core, p + 1);
    const auto& rsyms = rotated.symbols();
    const Word u1(2, std::vector<GenSymbol>(rsyms.begin(),
                                            rsyms.begin() + (q - p)));
    const Word u2(2, std::vector<GenSymbol>(rsyms.begin() + (q - p),
                                            rsyms.end()));
    result = compute_word(u1) * compute_word(u2) -
             compute_word(concat(u1, invert(u2)));
  }

  store(key, result);
  return result;
}

TracePoly trace_poly(const Word& w) {
  TraceTable table;
  return table.trace_poly(w);
}

TracePoly kappa_poly() {
  const TracePoly x = var(Var::x), y = var(Var::y), z = var(Var::z);
  return x * x + y * y + z * z - x * y * z - TracePoly(2);
}

TracePoly fricke_sum_rhs() {
  const TracePoly t1 = var(Var::t1), t2 = var(Var::t2), t3 = var(Var::t3);
  const TracePoly t12 = var(Var::t12), t23 = var(Var::t23),
                  t13 = var(Var::t13);
  return t12 * t3 + t23 * t1 + t13 * t2 - t1 * t2 * t3;
}

TracePoly fricke_product_rhs() {
  const TracePoly t1 = var(Var::t1), t2 = var(Var::t2), t3 = var(Var::t3);
  const TracePoly t12 = var(Var::t12), t23 = var(Var::t23),
                  t13 = var(Var::t13);
  return t1 * t1 + t2 * t2 + t3 * t3 + t12 * t12 + t23 * t23 + t13 * t13 -
         (t1 * t2 * t12 + t2 * t3 * t23 + t3 * t1 * t13) + t12 * t23 * t13 -
         TracePoly(4);
}

}  // namespace fricke
