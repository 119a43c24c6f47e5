#pragma once

#include <complex>
#include <span>

#include "fricke/words.hpp"

namespace fricke {

using Complex = std::complex<double>;

inline constexpr double kDefaultDetTol = 1e-9;
inline constexpr double kDefaultOracleTol = 1e-8;
inline constexpr double kDefaultIrrTol = 1e-8;

/// 2x2 complex matrix, row-major [[a,b],[c,d]]. Plain value type; the
/// "SL2-certified" predicate is |det - 1| <= det_tol.
struct Mat2 {
  Complex a{}, b{}, c{}, d{};

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

  Complex trace() const { return a + d; }
  Complex det() const { return a * d - b * c; }

  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d,
            c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Mat2 operator+(const Mat2& o) const {
    return {a + o.a, b + o.b, c + o.c, d + o.d};
  }
  Mat2 operator-(const Mat2& o) const {
    return {a - o.a, b - o.b, c - o.c, d - o.d};
  }
  Mat2 operator-() const { return {-a, -b, -c, -d}; }
  friend Mat2 operator*(Complex s, const Mat2& m) {
    return {s * m.a, s * m.b, s * m.c, s * m.d};
  }

  /// Throws SingularMatrix when |det| <= 1e-300.
  Mat2 inverse() const;

  bool operator==(const Mat2&) const = default;
};

/// AB - BA.
Mat2 commutator_bracket(const Mat2& A, const Mat2& B);

/// Maximum entry modulus; the residual norm used throughout.
double max_abs(const Mat2& m);
inline double distance(const Mat2& m, const Mat2& n) { return max_abs(m - n); }

bool is_finite(const Mat2& m);
void require_finite(const Mat2& m, const char* what);

bool is_sl2(const Mat2& m, double det_tol = kDefaultDetTol);
void require_sl2(const Mat2& m, const char* what,
                 double det_tol = kDefaultDetTol);

struct RepPair {
  Mat2 xi, eta;
};
struct RepTriple {
  Mat2 a1, a2, a3;
};

/// Left-to-right product of the assigned generator matrices; inverse symbols
/// use matrix inverses. generators[i] realizes generator i.
Mat2 evaluate_word(const Word& w, std::span<const Mat2> generators);

struct CharTriple {
  Complex x, y, z;
};

/// (tr xi, tr eta, tr xi*eta).
CharTriple tau(const Mat2& xi, const Mat2& eta);

struct RankThreeChar {
  Complex t1, t2, t3, t12, t23, t13, t123, t132;
};

/// The eight trace coordinates of a triple: ti, tr(AiAj) for i<j, tr(A1A2A3)
/// and tr(A1A3A2).
RankThreeChar char8(const Mat2& A1, const Mat2& A2, const Mat2& A3);

/// [[t,-1],[1,0]]: trace t, determinant 1.
Mat2 companion(Complex t);

/// Returns h in SL2 with h g h^-1 = companion(tr g). Throws CentralElement
/// when g = ±identity (entrywise within 1e-9).
Mat2 conjugate_to_companion(const Mat2& g);

/// Coefficients of s -> det(W0 + s*K) = c0 + c1*s + c2*s^2.
struct DetPencil {
  Complex c0, c1, c2;
  Complex eval(Complex s) const { return c0 + s * (c1 + s * c2); }
};

DetPencil det_pencil(const Mat2& W0, const Mat2& K);

}  // namespace fricke
