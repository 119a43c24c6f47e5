#include "fricke/polynomial.hpp"

#include <cctype>
#include <utility>

#include "fricke/errors.hpp"

namespace fricke {

namespace {

constexpr std::string_view kVarNames[kVarCount] = {
    "x", "y", "z", "u", "t1", "t2", "t3", "t12", "t23", "t13", "t123", "t132"};

}  // namespace

std::string_view var_name(Var v) { return kVarNames[static_cast<int>(v)]; }

int Monomial::total_degree() const {
  int d = 0;
  for (auto e : exp) {
    d += e;
  }
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kVarCount; ++i) {
    unsigned s = static_cast<unsigned>(exp[i]) + o.exp[i];
    if (s > 0xffff) {
      throw Error("monomial exponent overflow");
    }
    r.exp[i] = static_cast<std::uint16_t>(s);
  }
  return r;
}

bool MonomialOrderDesc::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.total_degree();
  const int db = b.total_degree();
  if (da != db) {
    return da > db;
  }
  for (std::size_t i = 0; i < kVarCount; ++i) {
    if (a.exp[i] != b.exp[i]) {
      return a.exp[i] > b.exp[i];
    }
  }
  return false;
}

TracePoly::TracePoly(BigInt c) {
  if (c != 0) {
    terms_.emplace(Monomial{}, std::move(c));
  }
}

TracePoly TracePoly::variable(Var v, std::uint16_t power) {
  TracePoly p;
  if (power == 0) {
    return TracePoly(1);
  }
  Monomial m;
  m.exp[static_cast<int>(v)] = power;
  p.terms_.emplace(m, 1);
  return p;
}

int TracePoly::total_degree() const {
  // terms_ is degree-descending, so the first term carries the total degree
  return terms_.empty() ? 0 : terms_.begin()->first.total_degree();
}

std::vector<Var> TracePoly::variables() const {
  std::array<bool, kVarCount> seen{};
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (m.exp[i] > 0) {
        seen[i] = true;
      }
    }
  }
  std::vector<Var> out;
  for (std::size_t i = 0; i < kVarCount; ++i) {
    if (seen[i]) {
      out.push_back(static_cast<Var>(i));
    }
  }
  return out;
}

TracePoly TracePoly::operator-() const {
  TracePoly r = *this;
  for (auto& [m, c] : r.terms_) {
    c = -c;
  }
  return r;
}

TracePoly& TracePoly::operator+=(const TracePoly& o) {
  for (const auto& [m, c] : o.terms_) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) {
        terms_.erase(it);
      }
    }
  }
  return *this;
}

TracePoly& TracePoly::operator-=(const TracePoly& o) {
  for (const auto& [m, c] : o.terms_) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, -c);
    } else {
      it->second -= c;
      if (it->second == 0) {
        terms_.erase(it);
      }
    }
  }
  return *this;
}

TracePoly operator*(const TracePoly& a, const TracePoly& b) {
  TracePoly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      const Monomial m = ma * mb;
      auto it = r.terms_.find(m);
      if (it == r.terms_.end()) {
        r.terms_.emplace(m, ca * cb);
      } else {
        it->second += ca * cb;
        if (it->second == 0) {
          r.terms_.erase(it);
        }
      }
    }
  }
  return r;
}

TracePoly& TracePoly::operator*=(const TracePoly& o) {
  *this = *this * o;
  return *this;
}

TracePoly& TracePoly::operator*=(const BigInt& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) {
    c *= s;
  }
  return *this;
}

namespace {

Complex pow_complex(Complex base, unsigned e) {
  Complex r{1.0, 0.0};
  for (unsigned k = 0; k < e; ++k) {
    r *= base;
  }
  return r;
}

}  // namespace

Complex TracePoly::eval(const std::map<Var, Complex>& assignment) const {
  for (Var v : variables()) {
    if (!assignment.count(v)) {
      throw UnboundVariable("no value bound for variable " +
                            std::string(var_name(v)));
    }
  }
  Complex sum{0.0, 0.0};
  for (const auto& [m, c] : terms_) {
    Complex term{c.convert_to<double>(), 0.0};
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (m.exp[i] > 0) {
        term *= pow_complex(assignment.at(static_cast<Var>(i)), m.exp[i]);
      }
    }
    sum += term;
  }
  return sum;
}

std::string TracePoly::str() const {
  if (terms_.empty()) {
    return "0";
  }
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) {
        out += '-';
      }
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    std::string factors;
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (m.exp[i] == 0) {
        continue;
      }
      if (!factors.empty()) {
        factors += '*';
      }
      factors += kVarNames[i];
      if (m.exp[i] > 1) {
        factors += '^';
        factors += std::to_string(m.exp[i]);
      }
    }
    if (factors.empty()) {
      out += mag.str();
    } else if (mag == 1) {
      out += factors;
    } else {
      out += mag.str() + "*" + factors;
    }
  }
  return out;
}

namespace {

struct PolyParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }

  bool at_end() {
    skip_ws();
    return pos == text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  BigInt parse_integer() {
    skip_ws();
    const std::size_t start = pos;
    std::string digits;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      digits += text[pos++];
    }
    if (digits.empty()) {
      throw ParseError("expected integer", start);
    }
    return BigInt(digits);
  }

  // longest-match variable name at current position, or nullopt
  bool try_variable(Var& out) {
    skip_ws();
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < kVarCount; ++i) {
      const std::string_view name = kVarNames[i];
      if (text.substr(pos, name.size()) == name && name.size() > best_len) {
        best_len = name.size();
        out = static_cast<Var>(i);
      }
    }
    if (best_len == 0) {
      return false;
    }
    pos += best_len;
    return true;
  }

  std::uint16_t parse_power() {
    skip_ws();
    if (pos >= text.size() || text[pos] != '^') {
      return 1;
    }
    ++pos;
    skip_ws();
    if (pos < text.size() && text[pos] == '-') {
      throw ParseError("negative exponent not allowed in a polynomial", pos);
    }
    const std::size_t at = pos;
    BigInt e = parse_integer();
    if (e > 0xffff) {
      throw ParseError("exponent too large", at);
    }
    return e.convert_to<std::uint16_t>();
  }

  // factor := (integer | variable) ['^' integer]
  bool try_factor(TracePoly& out) {
    skip_ws();
    if (pos >= text.size()) {
      return false;
    }
    const char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigInt v = parse_integer();
      const std::uint16_t p = parse_power();
      BigInt powed = 1;
      for (std::uint16_t k = 0; k < p; ++k) {
        powed *= v;
      }
      out = TracePoly(powed);
      return true;
    }
    Var v;
    if (try_variable(v)) {
      out = TracePoly::variable(v, parse_power());
      return true;
    }
    return false;
  }

  // term := factor { ['*'] factor }
  TracePoly parse_term() {
    TracePoly acc;
    if (!try_factor(acc)) {
      throw ParseError("expected a coefficient or variable", pos);
    }
    for (;;) {
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        TracePoly f;
        if (!try_factor(f)) {
          throw ParseError("expected a factor after '*'", pos);
        }
        acc *= f;
        continue;
      }
      TracePoly f;
      const std::size_t save = pos;
      if (try_factor(f)) {
        acc *= f;
        continue;
      }
      pos = save;
      return acc;
    }
  }

  TracePoly parse_poly() {
    TracePoly acc;
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = text[pos] == '-';
      ++pos;
    }
    TracePoly t = parse_term();
    acc += negate ? -t : t;
    while (!at_end()) {
      const char op = peek();
      if (op != '+' && op != '-') {
        throw ParseError(std::string("unexpected character '") + op + "'",
                         pos);
      }
      ++pos;
      TracePoly next = parse_term();
      acc += op == '-' ? -next : next;
    }
    return acc;
  }
};

}  // namespace

TracePoly parse_poly(std::string_view text) {
  PolyParser p{text};
  p.skip_ws();
  if (p.pos == text.size()) {
    throw ParseError("empty polynomial", 0);
  }
  return p.parse_poly();
}

LaurentPoly LaurentPoly::term(int exponent, TracePoly coeff) {
  LaurentPoly f;
  if (!coeff.is_zero()) {
    f.coeffs_.emplace(exponent, std::move(coeff));
  }
  return f;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) {
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
      coeffs_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) {
        coeffs_.erase(it);
      }
    }
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.coeffs_) {
    for (const auto& [eb, cb] : b.coeffs_) {
      r += LaurentPoly::term(ea + eb, ca * cb);
    }
  }
  return r;
}

bool LaurentPoly::is_symmetric() const {
  for (const auto& [e, c] : coeffs_) {
    auto it = coeffs_.find(-e);
    if (it == coeffs_.end() || !(it->second == c)) {
      return false;
    }
  }
  return true;
}

Complex LaurentPoly::eval(Complex zeta,
                          const std::map<Var, Complex>& assignment) const {
  Complex sum{0.0, 0.0};
  for (const auto& [e, c] : coeffs_) {
    Complex zp{1.0, 0.0};
    const Complex base = e >= 0 ? zeta : Complex{1.0, 0.0} / zeta;
    for (int k = 0; k < (e >= 0 ? e : -e); ++k) {
      zp *= base;
    }
    sum += c.eval(assignment) * zp;
  }
  return sum;
}

TracePoly zeta_power_sum(int n) {
  if (n < 0) {
    throw Error("zeta_power_sum needs n >= 0");
  }
  TracePoly prev = TracePoly(2);  // p0
  if (n == 0) {
    return prev;
  }
  const TracePoly u = TracePoly::variable(Var::u);
  TracePoly cur = u;  // p1
  for (int k = 2; k <= n; ++k) {
    TracePoly next = u * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

TracePoly symmetrize_laurent(const LaurentPoly& f) {
  if (!f.is_symmetric()) {
    throw NotSymmetric(
        "Laurent polynomial is not invariant under zeta <-> 1/zeta");
  }
  TracePoly h;
  for (const auto& [e, c] : f.coeffs()) {
    if (e < 0) {
      continue;  // mirrored by the +e coefficient
    }
    if (e == 0) {
      h += c;
    } else {
      h += c * zeta_power_sum(e);
    }
  }
  return h;
}

}  // namespace fricke
