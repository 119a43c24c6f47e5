#include "fricke/charvar.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "fricke/errors.hpp"

namespace fricke {

Complex kappa_value(Complex x, Complex y, Complex z) {
  return x * x + y * y + z * z - x * y * z - 2.0;
}

Complex kappa_value(const CharTriple& c) { return kappa_value(c.x, c.y, c.z); }

RepPair lift_char(const CharTriple& c) {
  const Complex root = std::sqrt(c.z * c.z - 4.0);
  Complex zeta = (c.z + root) / 2.0;
  if (std::abs(zeta) < 1.0) {
    zeta = (c.z - root) / 2.0;  // the reciprocal root; keeps 1/zeta bounded
  }
  const Mat2 xi = companion(c.x);
  const Mat2 eta{0.0, zeta, -1.0 / zeta, c.y};
  return {xi, eta};
}

bool is_irreducible_char(const CharTriple& c, double irr_tol) {
  return std::abs(kappa_value(c) - 2.0) > irr_tol;
}

bool is_irreducible(const RepPair& p, double irr_tol) {
  require_sl2(p.xi, "is_irreducible");
  require_sl2(p.eta, "is_irreducible");
  return is_irreducible_char(tau(p.xi, p.eta), irr_tol);
}

Mat2 inverting_element(const RepPair& p) {
  require_sl2(p.xi, "inverting_element");
  require_sl2(p.eta, "inverting_element");
  const Mat2 L = commutator_bracket(p.xi, p.eta);
  const Complex det_l = L.det();
  if (std::abs(det_l) <= 1e-12) {
    throw ReduciblePair("xi*eta - eta*xi is singular (kappa = 2)");
  }
  const Complex mu = std::sqrt(Complex{1.0, 0.0} / det_l);
  return mu * L;
}

namespace {

void fill_intertwiner_rows(Eigen::Matrix<Complex, 8, 4>& M, int row,
                           const Mat2& A, const Mat2& Ap) {
  const Complex zero{0.0, 0.0};
  // rows of g*A - A'*g = 0 in the unknowns (g1,g2,g3,g4), reading order
  M(row + 0, 0) = A.a - Ap.a;
  M(row + 0, 1) = A.c;
  M(row + 0, 2) = -Ap.b;
  M(row + 0, 3) = zero;
  M(row + 1, 0) = A.b;
  M(row + 1, 1) = A.d - Ap.a;
  M(row + 1, 2) = zero;
  M(row + 1, 3) = -Ap.b;
  M(row + 2, 0) = -Ap.c;
  M(row + 2, 1) = zero;
  M(row + 2, 2) = A.a - Ap.d;
  M(row + 2, 3) = A.c;
  M(row + 3, 0) = zero;
  M(row + 3, 1) = -Ap.c;
  M(row + 3, 2) = A.b;
  M(row + 3, 3) = A.d - Ap.d;
}

}  // namespace

Mat2 conjugator(const RepPair& p, const RepPair& q, double char_tol,
                double action_tol, double irr_tol) {
  require_sl2(p.xi, "conjugator");
  require_sl2(p.eta, "conjugator");
  require_sl2(q.xi, "conjugator");
  require_sl2(q.eta, "conjugator");

  const CharTriple tp = tau(p.xi, p.eta);
  const CharTriple tq = tau(q.xi, q.eta);
  if (!is_irreducible_char(tp, irr_tol)) {
    throw ReduciblePair("conjugator needs an irreducible pair (kappa != 2)");
  }
  const Complex dx = tp.x - tq.x, dy = tp.y - tq.y, dz = tp.z - tq.z;
  if (std::abs(dx) > char_tol * (1.0 + std::abs(tp.x)) ||
      std::abs(dy) > char_tol * (1.0 + std::abs(tp.y)) ||
      std::abs(dz) > char_tol * (1.0 + std::abs(tp.z))) {
    throw NotConjugate("trace triples differ");
  }

  Eigen::Matrix<Complex, 8, 4> M;
  fill_intertwiner_rows(M, 0, p.xi, q.xi);
  fill_intertwiner_rows(M, 4, p.eta, q.eta);
  Eigen::JacobiSVD<Eigen::Matrix<Complex, 8, 4>> svd(M, Eigen::ComputeFullV);
  const auto dir = svd.matrixV().col(3);
  Mat2 g{dir(0), dir(1), dir(2), dir(3)};

  const Complex det_g = g.det();
  if (std::abs(det_g) < 1e-12) {
    throw NotConjugate("intertwiner direction is singular");
  }
  g = std::sqrt(Complex{1.0, 0.0} / det_g) * g;

  const Mat2 gi = g.inverse();
  const double res_xi = distance(g * p.xi * gi, q.xi);
  const double res_eta = distance(g * p.eta * gi, q.eta);
  if (res_xi > action_tol * (1.0 + max_abs(q.xi)) ||
      res_eta > action_tol * (1.0 + max_abs(q.eta))) {
    throw NotConjugate("conjugation residual exceeds tolerance");
  }

  // fix the +/- ambiguity: first entry over 1e-10 in reading order gets a
  // nonnegative real part (tie: nonnegative imaginary part)
  for (Complex e : {g.a, g.b, g.c, g.d}) {
    if (std::abs(e) <= 1e-10) {
      continue;
    }
    if (e.real() < 0.0 || (e.real() == 0.0 && e.imag() < 0.0)) {
      g = -g;
    }
    break;
  }
  return g;
}

}  // namespace fricke
