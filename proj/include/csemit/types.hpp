#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace csemit {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Machine-readable failure cause carried by every csemit::Error.
enum class ErrorCode {
  asymmetric_domain,
  too_few_points,
  potential_not_evaluable,
  eigensolver_failure,
  degenerate_normalization,
  grid_mismatch,
  theta_too_small,
  state_not_discrete,
  state_not_bound,
  trajectory_ambiguity,
  pole_count_mismatch,
  config_invalid,
  zero_argument,
  invalid_argument,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

const char* error_code_name(ErrorCode code) noexcept;

/// Hartree atomic units. hbar, mass and charge are fixed at 1; the speed of
/// light defaults to the inverse fine-structure constant and may be
/// overridden (values <= 1 are unphysical but allowed so that the override
/// can be exercised; cmd-validate flags them).
struct UnitSystem {
  double hbar = 1.0;
  double mass = 1.0;
  double charge = 1.0;
  double c_light = 137.035999;

  /// Compton frequency cutoff m c^2 / hbar, the default Bethe cutoff.
  double compton_cutoff() const { return mass * c_light * c_light / hbar; }
};

/// Complex level energy E = hbar*omega - i*Gamma/2 (Hartree).
struct ComplexEnergy {
  double re = 0.0;
  double im = 0.0;

  ComplexEnergy() = default;
  ComplexEnergy(double real, double imag) : re(real), im(imag) {}
  explicit ComplexEnergy(Complex value) : re(value.real()), im(value.imag()) {}

  Complex value() const { return {re, im}; }
  double omega(const UnitSystem& u = {}) const { return re / u.hbar; }
  double gamma() const { return -2.0 * im; }

  static ComplexEnergy from_omega_gamma(double omega, double gamma,
                                        const UnitSystem& u = {}) {
    return {omega * u.hbar, -0.5 * gamma};
  }

  friend bool operator==(const ComplexEnergy& a, const ComplexEnergy& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// f_nm = (E_n - E_m)/hbar, the (complex) transition angular frequency.
inline Complex complex_frequency(const ComplexEnergy& e_n,
                                 const ComplexEnergy& e_m,
                                 const UnitSystem& u = {}) {
  return Complex{e_n.re - e_m.re, e_n.im - e_m.im} / u.hbar;
}

/// Clockwise complex-scaling rotation angle, restricted to [0, pi/4) so the
/// rotated kinetic term stays well-posed and the 2*theta continuum ray stays
/// in the lower half plane.
class ScalingAngle {
 public:
  ScalingAngle() : theta_(0.0) {}
  explicit ScalingAngle(double theta) : theta_(theta) {
    if (!(theta >= 0.0) || theta >= 0.25 * kPi) {
      throw Error(ErrorCode::invalid_argument,
                  "scaling angle must satisfy 0 <= theta < pi/4, got " +
                      std::to_string(theta));
    }
  }

  double value() const { return theta_; }
  Complex phase() const { return std::polar(1.0, theta_); }

 private:
  double theta_;
};

/// Analytic 1D potential evaluable at complex argument x*exp(i*theta).
class PotentialSpec {
 public:
  enum class Kind { gaussian_well, harmonic };

  /// V(x) = (a x^2 + b) exp(-w x^2); vanishes at infinity for w > 0.
  static PotentialSpec gaussian_well(double a, double b, double w);
  /// V(x) = 0.5 omega0^2 x^2 (unit mass).
  static PotentialSpec harmonic(double omega0);

  Kind kind() const { return kind_; }
  double param_a() const { return a_; }
  double param_b() const { return b_; }
  double param_w() const { return w_; }
  double omega0() const { return a_; }

  Complex operator()(Complex z) const;

  /// Energy above which the infinite-domain spectrum is continuous
  /// (+infinity when the potential confines everywhere).
  double continuum_threshold() const;

  /// True when V(-x) = V(x), which makes parity a good label.
  bool even_symmetric() const { return true; }

  std::string describe() const;

 private:
  PotentialSpec(Kind kind, double a, double b, double w)
      : kind_(kind), a_(a), b_(b), w_(w) {}

  Kind kind_;
  double a_, b_, w_;
};

}  // namespace csemit
