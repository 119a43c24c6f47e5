#include "fricke/charvar3.hpp"

#include <array>
#include <cmath>
#include <utility>

#include "fricke/errors.hpp"
#include "fricke/trace_calculus.hpp"

namespace fricke {

namespace {

std::map<Var, Complex> six_assignment(const SixTuple& s) {
  return {{Var::t1, s.t1},   {Var::t2, s.t2},   {Var::t3, s.t3},
          {Var::t12, s.t12}, {Var::t23, s.t23}, {Var::t13, s.t13}};
}

}  // namespace

Complex fricke_sum_value(const SixTuple& s) {
  static const TracePoly P = fricke_sum_rhs();
  return P.eval(six_assignment(s));
}

Complex fricke_product_value(const SixTuple& s) {
  static const TracePoly Q = fricke_product_rhs();
  return Q.eval(six_assignment(s));
}

FrickeResiduals verify_fricke(const RankThreeChar& c) {
  const SixTuple s = six_of(c);
  return {c.t123 + c.t132 - fricke_sum_value(s),
          c.t123 * c.t132 - fricke_product_value(s)};
}

namespace {

// Roots of lambda^2 - p*lambda + q, larger-magnitude root first. The larger
// root uses the sign-matched discriminant; the other is q over it.
std::pair<Complex, Complex> monic_roots(Complex p, Complex q) {
  const Complex r = std::sqrt(p * p - 4.0 * q);
  const Complex plus = p + r;
  const Complex minus = p - r;
  const Complex big2 = std::abs(plus) >= std::abs(minus) ? plus : minus;
  if (std::abs(big2) == 0.0) {
    return {Complex{0.0, 0.0}, Complex{0.0, 0.0}};  // p = q = 0
  }
  const Complex big = big2 / 2.0;
  return {big, q / big};
}

}  // namespace

std::pair<Complex, Complex> t123_roots(const SixTuple& s) {
  auto [r1, r2] = monic_roots(fricke_sum_value(s), fricke_product_value(s));
  // descending by real part, then by imaginary part
  const bool keep = r1.real() > r2.real() ||
                    (r1.real() == r2.real() && r1.imag() >= r2.imag());
  return keep ? std::pair{r1, r2} : std::pair{r2, r1};
}

const char* lift_branch_name(LiftBranch b) {
  switch (b) {
    case LiftBranch::pencil:
      return "pencil";
    case LiftBranch::reducible_product:
      return "reducible-product";
    case LiftBranch::reducible_quotient:
      return "reducible-quotient";
  }
  return "?";
}

namespace {

// Particular solution of a 3x4 complex system by Gaussian elimination with
// partial pivoting; free variables are set to zero.
std::array<Complex, 4> particular_solution(
    std::array<std::array<Complex, 4>, 3> A, std::array<Complex, 3> b) {
  double scale = 1.0;
  for (const auto& row : A) {
    for (Complex v : row) {
      scale = std::max(scale, std::abs(v));
    }
  }
  const double tiny = 1e-13 * scale;

  int pivot_col[3] = {-1, -1, -1};
  int rank = 0;
  for (int col = 0; col < 4 && rank < 3; ++col) {
    int best = -1;
    double best_mag = tiny;
    for (int r = rank; r < 3; ++r) {
      const double mag = std::abs(A[r][col]);
      if (mag > best_mag) {
        best_mag = mag;
        best = r;
      }
    }
    if (best < 0) {
      continue;  // free column
    }
    std::swap(A[best], A[rank]);
    std::swap(b[best], b[rank]);
    for (int r = rank + 1; r < 3; ++r) {
      const Complex f = A[r][col] / A[rank][col];
      A[r][col] = 0.0;
      for (int c = col + 1; c < 4; ++c) {
        A[r][c] -= f * A[rank][c];
      }
      b[r] -= f * b[rank];
    }
    pivot_col[rank] = col;
    ++rank;
  }
  for (int r = rank; r < 3; ++r) {
    if (std::abs(b[r]) > 1e-9 * (1.0 + scale)) {
      throw Error("trace conditions are inconsistent");
    }
  }
  std::array<Complex, 4> x{};
  for (int r = rank - 1; r >= 0; --r) {
    const int col = pivot_col[r];
    Complex sum = b[r];
    for (int c = col + 1; c < 4; ++c) {
      sum -= A[r][c] * x[c];
    }
    x[col] = sum / A[r][col];
  }
  return x;
}

Complex half_trace_root(Complex t) {
  // principal-branch root of a + 1/a = t (never zero: the roots multiply to 1)
  return (t + std::sqrt(t * t - 4.0)) / 2.0;
}

void require_finite_tuple(const SixTuple& s) {
  for (Complex v : {s.t1, s.t2, s.t3, s.t12, s.t23, s.t13}) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw NonFiniteValue("lift_char3: coordinates must be finite");
    }
  }
}

}  // namespace

Lift3Result lift_char3(const SixTuple& s, double irr_tol) {
  require_finite_tuple(s);
  const Complex k12 = kappa_value(s.t1, s.t2, s.t12);

  if (std::abs(k12 - 2.0) > irr_tol) {
    const RepPair slice = lift_char({s.t1, s.t2, s.t12});
    const Mat2& A1 = slice.xi;
    const Mat2& A2 = slice.eta;

    // tr(W) = t3, tr(A2 W) = t23, tr(A1 W) = t13 in the entries of W;
    // tr(A*W) = A.a*w1 + A.c*w2 + A.b*w3 + A.d*w4
    const std::array<std::array<Complex, 4>, 3> rows = {{
        {Complex{1.0}, Complex{0.0}, Complex{0.0}, Complex{1.0}},
        {A2.a, A2.c, A2.b, A2.d},
        {A1.a, A1.c, A1.b, A1.d},
    }};
    const std::array<Complex, 3> rhs = {s.t3, s.t23, s.t13};
    const std::array<Complex, 4> w = particular_solution(rows, rhs);
    const Mat2 W0{w[0], w[1], w[2], w[3]};
    const Mat2 K = commutator_bracket(A1, A2);

    // det(W0 + sK) = 1; the leading coefficient det K = 2 - kappa != 0 here
    const DetPencil pen = det_pencil(W0, K);
    auto [r1, r2] = monic_roots(-pen.c1 / pen.c2, (pen.c0 - 1.0) / pen.c2);
    Complex root;
    if (std::abs(r1) < std::abs(r2)) {
      root = r1;
    } else if (std::abs(r2) < std::abs(r1)) {
      root = r2;
    } else if (r1.real() != r2.real()) {
      root = r1.real() > r2.real() ? r1 : r2;
    } else {
      root = r1.imag() >= r2.imag() ? r1 : r2;
    }
    const Mat2 A3 = W0 + root * K;
    return {{A1, A2, A3}, LiftBranch::pencil};
  }

  // kappa(t1,t2,t12) = 2: reducible slice. t12 agrees with one of the two
  // diagonal combinations of the eigenvalue roots; take the closer.
  const Complex a1 = half_trace_root(s.t1);
  const Complex a2 = half_trace_root(s.t2);
  const Complex v_product = a1 * a2 + 1.0 / (a1 * a2);
  const Complex v_quotient = a1 / a2 + a2 / a1;
  const Mat2 A3 = companion(s.t3);
  const Mat2 A2{a2, s.t23 - a2 * s.t3, 0.0, 1.0 / a2};
  if (std::abs(s.t12 - v_product) <= std::abs(s.t12 - v_quotient)) {
    const Mat2 A1{a1, s.t13 - a1 * s.t3, 0.0, 1.0 / a1};
    return {{A1, A2, A3}, LiftBranch::reducible_product};
  }
  const Mat2 A1{1.0 / a1, s.t13 - s.t3 / a1, 0.0, a1};
  return {{A1, A2, A3}, LiftBranch::reducible_quotient};
}

}  // namespace fricke
