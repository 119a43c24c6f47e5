#pragma once

#include "fricke/mat2.hpp"

namespace fricke {

/// kappa(x,y,z) = x^2 + y^2 + z^2 - xyz - 2 at a character triple.
Complex kappa_value(const CharTriple& c);

Complex kappa_value(Complex x, Complex y, Complex z);

/// Explicit pair with tau(xi,eta) = (x,y,z):
///   xi  = [[x,-1],[1,0]],
///   eta = [[0,zeta],[-1/zeta,y]]  with zeta + 1/zeta = z.
/// zeta is the principal root (z + sqrt(z^2-4))/2, switched to the other
/// root when |zeta| < 1 so 1/zeta stays bounded. Works for every triple.
RepPair lift_char(const CharTriple& c);

/// A pair is irreducible iff kappa(tau) != 2; tested as |kappa - 2| > irr_tol.
bool is_irreducible(const RepPair& p, double irr_tol = kDefaultIrrTol);
bool is_irreducible_char(const CharTriple& c, double irr_tol = kDefaultIrrTol);

/// The trace-zero involution g = mu*(xi*eta - eta*xi) with mu^2 det = 1;
/// g xi g^-1 = xi^-1 and g eta g^-1 = eta^-1, g^2 = -identity.
/// Throws ReduciblePair when det(xi*eta - eta*xi) vanishes (kappa = 2).
Mat2 inverting_element(const RepPair& p);

/// Recovers g in SL2 with (g xi g^-1, g eta g^-1) = (xi', eta') from the
/// homogeneous system g*xi - xi'*g = 0, g*eta - eta'*g = 0 (eight equations,
/// four unknowns) by smallest-singular-direction extraction, rescaled to
/// det g = 1. Unique up to sign; normalized so the first entry over 1e-10 in
/// reading order has nonnegative real part (tie: nonnegative imaginary part).
/// Throws ReduciblePair when kappa(tau(p)) = 2, NotConjugate when the trace
/// triples differ or the action residual exceeds action_tol.
Mat2 conjugator(const RepPair& p, const RepPair& q,
                double char_tol = kDefaultOracleTol, double action_tol = 1e-7,
                double irr_tol = kDefaultIrrTol);

}  // namespace fricke
