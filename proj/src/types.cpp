#include "csemit/types.hpp"

#include <limits>
#include <sstream>

namespace csemit {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::asymmetric_domain: return "asymmetric-domain";
    case ErrorCode::too_few_points: return "too-few-points";
    case ErrorCode::potential_not_evaluable: return "potential-not-evaluable";
    case ErrorCode::eigensolver_failure: return "eigensolver-failure";
    case ErrorCode::degenerate_normalization: return "degenerate-normalization";
    case ErrorCode::grid_mismatch: return "grid-mismatch";
    case ErrorCode::theta_too_small: return "theta-too-small";
    case ErrorCode::state_not_discrete: return "state-not-discrete";
    case ErrorCode::state_not_bound: return "state-not-bound";
    case ErrorCode::trajectory_ambiguity: return "trajectory-ambiguity";
    case ErrorCode::pole_count_mismatch: return "pole-count-mismatch";
    case ErrorCode::config_invalid: return "config-invalid";
    case ErrorCode::zero_argument: return "zero-argument";
    case ErrorCode::invalid_argument: return "invalid-argument";
  }
  return "unknown";
}

PotentialSpec PotentialSpec::gaussian_well(double a, double b, double w) {
  if (!(w > 0.0)) {
    throw Error(ErrorCode::invalid_argument,
                "gaussian-well width parameter w must be positive");
  }
  return PotentialSpec(Kind::gaussian_well, a, b, w);
}

PotentialSpec PotentialSpec::harmonic(double omega0) {
  if (!(omega0 > 0.0)) {
    throw Error(ErrorCode::invalid_argument,
                "harmonic frequency omega0 must be positive");
  }
  return PotentialSpec(Kind::harmonic, omega0, 0.0, 0.0);
}

Complex PotentialSpec::operator()(Complex z) const {
  const Complex z2 = z * z;
  switch (kind_) {
    case Kind::gaussian_well:
      return (a_ * z2 + b_) * std::exp(-w_ * z2);
    case Kind::harmonic:
      return 0.5 * a_ * a_ * z2;
  }
  return {};
}

double PotentialSpec::continuum_threshold() const {
  switch (kind_) {
    case Kind::gaussian_well:
      return 0.0;
    case Kind::harmonic:
      return std::numeric_limits<double>::infinity();
  }
  return 0.0;
}

std::string PotentialSpec::describe() const {
  std::ostringstream out;
  switch (kind_) {
    case Kind::gaussian_well:
      out << "gaussian-well(a=" << a_ << ", b=" << b_ << ", w=" << w_ << ")";
      break;
    case Kind::harmonic:
      out << "harmonic(omega0=" << a_ << ")";
      break;
  }
  return out.str();
}

}  // namespace csemit
