#pragma once

#include <stdexcept>
#include <string>

namespace chebdisk {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Grid parameters violate a size or parity rule.
struct InvalidGrid : Error {
  using Error::Error;
};

/// Requested derivative order is out of range for the operator family.
struct InvalidOrder : Error {
  using Error::Error;
};

/// Evaluation point lies outside the grid's domain.
struct OutOfDomain : Error {
  using Error::Error;
};

/// Robin coefficients do not satisfy the sign hypothesis a*b > 0.
struct InvalidRobin : Error {
  using Error::Error;
};

/// A boundary-elimination system was numerically singular.  The closed-form
/// determinants guarantee nonsingularity under the documented preconditions,
/// so this indicates an internal inconsistency, not bad user input.
struct SingularElimination : Error {
  using Error::Error;
};

/// Vector or matrix sizes do not match the operator.
struct DimensionMismatch : Error {
  using Error::Error;
};

/// The assembled linear system could not be solved reliably.
struct SingularSystem : Error {
  using Error::Error;
};

/// A Newton Jacobian was numerically singular.
struct SingularJacobian : Error {
  using Error::Error;
};

/// Problem id not present in the registry.
struct UnknownProblem : Error {
  using Error::Error;
};

/// Error reporting was requested for a problem without an exact solution.
struct NoExactSolution : Error {
  using Error::Error;
};

}  // namespace chebdisk
