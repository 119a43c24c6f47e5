#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fricke {

using BigInt = boost::multiprecision::cpp_int;
using Complex = std::complex<double>;

/// The fixed variable universe, in canonical order. Rank-2 trace polynomials
/// live in x,y,z; rank-3 relation polynomials in t1..t132; u is the
/// symmetrization variable standing for zeta + 1/zeta.
enum class Var : std::uint8_t {
  x = 0,
  y,
  z,
  u,
  t1,
  t2,
  t3,
  t12,
  t23,
  t13,
  t123,
  t132,
};

inline constexpr std::size_t kVarCount = 12;

std::string_view var_name(Var v);

/// Exponent vector over the variable universe.
struct Monomial {
  std::array<std::uint16_t, kVarCount> exp{};

  int total_degree() const;
  bool is_constant() const { return total_degree() == 0; }
  Monomial operator*(const Monomial& o) const;
  bool operator==(const Monomial&) const = default;
};

/// Graded-lex, emitted biggest-first: higher total degree precedes, ties are
/// broken by the earlier variable carrying the larger exponent.
struct MonomialOrderDesc {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Exact multivariate polynomial with arbitrary-precision integer
/// coefficients. Canonical form: no zero coefficients, terms held in
/// graded-lex order. Equality is equality of term maps.
class TracePoly {
 public:
  using TermMap = std::map<Monomial, BigInt, MonomialOrderDesc>;

  TracePoly() = default;  // zero polynomial
  TracePoly(int c) : TracePoly(BigInt(c)) {}
  TracePoly(long long c) : TracePoly(BigInt(c)) {}
  explicit TracePoly(BigInt c);

  static TracePoly variable(Var v, std::uint16_t power = 1);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  /// Total degree; 0 for the zero polynomial.
  int total_degree() const;
  /// Variables appearing with a nonzero exponent, in canonical order.
  std::vector<Var> variables() const;

  TracePoly operator-() const;
  TracePoly& operator+=(const TracePoly& o);
  TracePoly& operator-=(const TracePoly& o);
  TracePoly& operator*=(const TracePoly& o);
  TracePoly& operator*=(const BigInt& s);

  friend TracePoly operator+(TracePoly a, const TracePoly& b) { return a += b; }
  friend TracePoly operator-(TracePoly a, const TracePoly& b) { return a -= b; }
  friend TracePoly operator*(const TracePoly& a, const TracePoly& b);
  friend TracePoly operator*(TracePoly a, const BigInt& s) { return a *= s; }
  friend TracePoly operator*(const BigInt& s, TracePoly a) { return a *= s; }

  bool operator==(const TracePoly&) const = default;

  /// Term-wise evaluation in the canonical term order, so results are
  /// bit-reproducible. The assignment must cover variables().
  Complex eval(const std::map<Var, Complex>& assignment) const;

  /// Canonical text form, e.g. "x^2*y - 2*z + 2". Zero is "0".
  std::string str() const;

 private:
  TermMap terms_;
};

/// Grammar: signed integer coefficients, '*' optional (juxtaposition binds),
/// '^' for nonnegative powers, variables named x y z u t1 t2 t3 t12 t23 t13
/// t123 t132 (longest match). Round-trips str().
TracePoly parse_poly(std::string_view text);

/// One-variable Laurent polynomial in a distinguished variable zeta, with
/// TracePoly coefficients. Canonical: no zero coefficients stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly term(int exponent, TracePoly coeff);

  const std::map<int, TracePoly>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  LaurentPoly& operator+=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    return a += b;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  bool operator==(const LaurentPoly&) const = default;

  /// Invariance under zeta <-> 1/zeta (exact coefficient comparison).
  bool is_symmetric() const;

  Complex eval(Complex zeta, const std::map<Var, Complex>& assignment) const;

 private:
  std::map<int, TracePoly> coeffs_;  // exponent of zeta -> coefficient
};

/// zeta^n + zeta^-n as a polynomial in u = zeta + 1/zeta, n >= 0:
/// p0 = 2, p1 = u, pn = u*p(n-1) - p(n-2).
TracePoly zeta_power_sum(int n);

/// Rewrites a symmetric Laurent polynomial F as h with F(zeta) = h(u) under
/// u = zeta + 1/zeta. Throws NotSymmetric when F is not sigma-invariant.
TracePoly symmetrize_laurent(const LaurentPoly& f);

}  // namespace fricke
