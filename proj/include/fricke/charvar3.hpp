#pragma once

#include <utility>

#include "fricke/charvar.hpp"
#include "fricke/mat2.hpp"

namespace fricke {

/// The six independent trace coordinates of a rank-3 character.
struct SixTuple {
  Complex t1, t2, t3, t12, t23, t13;
};

inline SixTuple six_of(const RankThreeChar& c) {
  return {c.t1, c.t2, c.t3, c.t12, c.t23, c.t13};
}

struct FrickeResiduals {
  Complex sum;      // t123 + t132 - P(six)
  Complex product;  // t123 * t132 - Q(six)
};

/// Residuals of the two trace relations at an 8-tuple.
FrickeResiduals verify_fricke(const RankThreeChar& c);

/// Values P(s), Q(s) of the relation right-hand sides at a six-tuple.
Complex fricke_sum_value(const SixTuple& s);
Complex fricke_product_value(const SixTuple& s);

/// The two roots of lambda^2 - P(s)*lambda + Q(s) = 0, computed stably
/// (sign-matched discriminant for the larger root, Q/root for the other),
/// ordered by real part then imaginary part, descending. Each root installed
/// as t123 with t132 = P - root zeroes both relation residuals.
std::pair<Complex, Complex> t123_roots(const SixTuple& s);

enum class LiftBranch {
  pencil,              // kappa(t1,t2,t12) != 2: affine-line + det pencil
  reducible_product,   // kappa = 2, t12 = a1*a2 + 1/(a1*a2)
  reducible_quotient,  // kappa = 2, t12 = a1/a2 + a2/a1
};

const char* lift_branch_name(LiftBranch b);

struct Lift3Result {
  RepTriple triple;
  LiftBranch branch;
};

/// Total lift of a six-tuple to an explicit matrix triple whose first six
/// trace coordinates reproduce s.
///
/// Irreducible slice branch: A1, A2 from lift_char(t1,t2,t12); a particular
/// solution W0 of the three linear trace conditions tr W = t3,
/// tr(A2 W) = t23, tr(A1 W) = t13 by Gaussian elimination with partial
/// pivoting (a generic solve, valid at t12 = ±2 where the closed slice form
/// divides by zero); kernel direction K = [A1,A2]; then det(W0 + sK) = 1 via
/// the det pencil, whose leading coefficient det K = 2 - kappa is nonzero on
/// this branch. The smaller-magnitude root is chosen (tie: larger real part,
/// then larger imaginary part), and A3 = W0 + sK.
///
/// Reducible branch (|kappa - 2| <= irr_tol): a_i from a + 1/a = t_i
/// (principal roots); t12 matches one of the two diagonal products and the
/// closer one selects an explicit upper-triangular pair, ties going to the
/// product case; A3 = companion(t3).
Lift3Result lift_char3(const SixTuple& s, double irr_tol = kDefaultIrrTol);

}  // namespace fricke
