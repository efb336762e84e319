#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace enspec {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;

/// Tolerances and resource guards shared by every module. All numeric
/// contracts in the library key off this one record; tests may tighten
/// or relax it through the mutable singleton below.
struct NumericPolicy {
  double hermiticity_tol = 1e-12;
  double normalization_tol = 1e-12;
  double unitarity_tol = 1e-12;
  double reconstruction_tol = 1e-10;
  double degeneracy_tol = 1e-9;
  // Operators switch to coordinate-list storage at this dimension.
  long long dense_dim_limit = 1LL << 10;
  // Full eigendecomposition refuses dimensions above this.
  long long eig_dim_guard = 1LL << 14;
};

inline NumericPolicy& numeric_policy() {
  static NumericPolicy policy;
  return policy;
}

/// Bad arguments, malformed files, broken invariants on inputs.
class validation_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Request exceeds a desk-scale resource guard (e.g. dimension).
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numeric certification (ground space, contract check) did not hold.
class certification_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace enspec
