#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace wsf {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// A nondecreasing function t -> kappa(t) >= 0.
class Profile {
 public:
  enum class Kind { power, table, custom };

  /// kappa(t) = c t^gamma.
  static Profile power(double c, double gamma);
  /// kappa(t) = c.
  static Profile constant(double c) { return power(c, 0.0); }
  /// kappa(t) = values[i] for the least i with t <= thresholds[i], and +inf
  /// beyond the last threshold. Thresholds increase strictly, values are
  /// nondecreasing.
  static Profile table(std::vector<double> thresholds, std::vector<double> values);
  /// Z^d shape c t^{(d-1)/d}.
  static Profile lattice(int dimension, double c = 1.0);
  /// Cubic volume growth shape c t^{2/3}.
  static Profile cubic_growth(double c = 1.0) { return power(c, 2.0 / 3.0); }
  static Profile custom(std::function<double(double)> f, std::string name);

  /// "zd:D[:C]", "t23[:C]", "power:C:GAMMA", "const:C".
  static Profile preset(const std::string& spec);

  double operator()(double t) const;

  Kind kind() const { return kind_; }
  double coefficient() const { return c_; }
  double exponent() const { return gamma_; }
  const std::vector<double>& thresholds() const { return thresholds_; }
  const std::vector<double>& values() const { return values_; }
  const std::string& name() const { return name_; }

 private:
  Kind kind_ = Kind::power;
  double c_ = 1.0;
  double gamma_ = 1.0;
  std::vector<double> thresholds_;
  std::vector<double> values_;
  std::function<double(double)> f_;
  std::string name_;
};

/// s_0, ..., s_steps with s_{k+1} = s_k + kappa(s_k)/2.
std::vector<double> sk_sequence(const Profile& p, double s0, int steps);

struct HsBound {
  enum class Status { converged, tail_bounded, divergent, lower_estimate };
  double value = 0.0;          // sum of 2/kappa(s_k) (+ tail bound when converged)
  double partial_sum = 0.0;
  double tail_bound = 0.0;     // rigorous bound on the omitted terms
  int terms = 0;
  Status status = Status::converged;
};

std::string to_string(HsBound::Status status);

/// sum_k 2 / kappa(s_k). Power profiles with 2 gamma > 1 stop once a
/// rigorous tail bound falls below `tol`, or after `max_terms` with the
/// partial sum plus the (larger) tail bound, an upper bound; tables ending at +inf sum exactly;
/// bounded growth returns +inf. Other profiles iterate up to `max_terms` and
/// declare divergence when s_k fails to grow by a factor 1 + 1e-6 over
/// 10^4 steps; otherwise the partial sum is a lower estimate only.
HsBound hs_resistance_bound(const Profile& p, double s0, double tol = 1e-12, int max_terms = 1'000'000);

/// Closed form of the integral of 4 alpha^2 / f(t)^2 over [piA, inf) for
/// f(t) = c t^gamma; +inf when 2 gamma <= 1. alpha defaults to 2^gamma.
/// Throws std::invalid_argument when f(t) > t somewhere on [piA, inf) or
/// alpha < 2^gamma.
double integral_bound(double c, double gamma, double pi_a, double alpha = 0.0);

}  // namespace wsf
