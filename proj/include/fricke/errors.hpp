#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fricke {

/// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (words, polynomials, complex literals).
struct ParseError : Error {
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position(position) {}
  std::size_t position;
};

/// A word or operation used a generator outside the declared rank,
/// or mixed words of different ranks.
struct RankError : Error {
  using Error::Error;
};

struct SingularMatrix : Error {
  using Error::Error;
};

/// g = ±identity: no companion conjugate exists.
struct CentralElement : Error {
  using Error::Error;
};

/// Input matrix failed the |det - 1| certification.
struct NotSL2 : Error {
  using Error::Error;
};

/// NaN or infinity reached an API boundary.
struct NonFiniteValue : Error {
  using Error::Error;
};

/// The pair has kappa = 2; the requested operation needs irreducibility.
struct ReduciblePair : Error {
  using Error::Error;
};

/// The two pairs do not lie in one conjugation orbit.
struct NotConjugate : Error {
  using Error::Error;
};

/// Laurent polynomial is not invariant under zeta <-> 1/zeta.
struct NotSymmetric : Error {
  using Error::Error;
};

/// poly_eval assignment misses a variable of the polynomial.
struct UnboundVariable : Error {
  using Error::Error;
};

}  // namespace fricke
