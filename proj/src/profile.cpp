#include "wsf/profile.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace wsf {

Profile Profile::power(double c, double gamma) {
  if (!(c > 0.0)) throw std::invalid_argument("profile coefficient must be positive");
  if (!(gamma >= 0.0)) throw std::invalid_argument("profile exponent must be nonnegative");
  Profile p;
  p.kind_ = Kind::power;
  p.c_ = c;
  p.gamma_ = gamma;
  std::ostringstream os;
  os << c << "*t^" << gamma;
  p.name_ = os.str();
  return p;
}

Profile Profile::table(std::vector<double> thresholds, std::vector<double> values) {
  if (thresholds.size() != values.size()) throw std::invalid_argument("profile table size mismatch");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0.0) throw std::invalid_argument("profile values must be nonnegative");
    if (i > 0 && !(thresholds[i] > thresholds[i - 1]))
      throw std::invalid_argument("profile thresholds must increase strictly");
    if (i > 0 && values[i] < values[i - 1]) throw std::invalid_argument("profile values must be nondecreasing");
  }
  Profile p;
  p.kind_ = Kind::table;
  p.thresholds_ = std::move(thresholds);
  p.values_ = std::move(values);
  p.name_ = "table";
  return p;
}

Profile Profile::lattice(int dimension, double c) {
  if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
  Profile p = power(c, static_cast<double>(dimension - 1) / dimension);
  p.name_ = "zd:" + std::to_string(dimension);
  return p;
}

Profile Profile::custom(std::function<double(double)> f, std::string name) {
  Profile p;
  p.kind_ = Kind::custom;
  p.f_ = std::move(f);
  p.name_ = std::move(name);
  return p;
}

Profile Profile::preset(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  auto num = [&](std::size_t i, double fallback) {
    if (i >= parts.size()) return fallback;
    std::size_t used = 0;
    const double v = std::stod(parts[i], &used);
    if (used != parts[i].size()) throw std::invalid_argument("bad number in profile preset '" + spec + "'");
    return v;
  };
  if (parts.empty()) throw std::invalid_argument("empty profile preset");
  try {
    if (parts[0] == "zd" && parts.size() >= 2) return lattice(static_cast<int>(num(1, 3)), num(2, 1.0));
    if (parts[0] == "t23") return cubic_growth(num(1, 1.0));
    if (parts[0] == "power" && parts.size() == 3) return power(num(1, 1.0), num(2, 1.0));
    if (parts[0] == "const" && parts.size() == 2) return constant(num(1, 1.0));
  } catch (const std::out_of_range&) {
  }
  throw std::invalid_argument("unknown profile preset '" + spec +
                              "' (expected zd:D[:C], t23[:C], power:C:GAMMA or const:C)");
}

double Profile::operator()(double t) const {
  switch (kind_) {
    case Kind::power:
      return gamma_ == 0.0 ? c_ : c_ * std::pow(t, gamma_);
    case Kind::table: {
      const auto it = std::lower_bound(thresholds_.begin(), thresholds_.end(), t);
      return it == thresholds_.end() ? kInfinity : values_[it - thresholds_.begin()];
    }
    case Kind::custom:
      return f_(t);
  }
  return kInfinity;
}

std::vector<double> sk_sequence(const Profile& p, double s0, int steps) {
  if (steps < 1) throw std::invalid_argument("step count must be >= 1");
  std::vector<double> s{s0};
  for (int k = 0; k < steps; ++k) s.push_back(s.back() + p(s.back()) / 2.0);
  return s;
}

std::string to_string(HsBound::Status status) {
  switch (status) {
    case HsBound::Status::converged:
      return "converged";
    case HsBound::Status::tail_bounded:
      return "tail-bounded";
    case HsBound::Status::divergent:
      return "divergent";
    case HsBound::Status::lower_estimate:
      return "lower-estimate";
  }
  return "unknown";
}

namespace {

HsBound divergent(double partial, int terms) {
  HsBound b;
  b.status = HsBound::Status::divergent;
  b.value = kInfinity;
  b.partial_sum = partial;
  b.tail_bound = kInfinity;
  b.terms = terms;
  return b;
}

}  // namespace

HsBound hs_resistance_bound(const Profile& p, double s0, double tol, int max_terms) {
  if (!(s0 > 0.0)) throw std::invalid_argument("s0 must be positive");
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  HsBound b;
  double s = s0;
  double sum = 0.0;

  if (p.kind() == Profile::Kind::power) {
    const double c = p.coefficient(), g = p.exponent();
    if (2.0 * g <= 1.0) return divergent(2.0 / p(s0), 1);
    if (g <= 1.0) {
      // For t in [s_k, s_{k+1}], kappa(t) <= rho kappa(s_k) with
      // rho = (1 + c s_K^{g-1}/2)^g for k >= K, so the tail is at most
      // 4 rho^2 / c^2 * s_K^{1-2g} / (2g - 1).
      for (int k = 0;; ++k) {
        const double rho = std::pow(1.0 + c * std::pow(s, g - 1.0) / 2.0, g);
        const double tail = 4.0 * rho * rho / (c * c) * std::pow(s, 1.0 - 2.0 * g) / (2.0 * g - 1.0);
        if (tail < tol || k == max_terms) {
          if (tail >= tol) b.status = HsBound::Status::tail_bounded;
          b.partial_sum = sum;
          b.tail_bound = tail;
          b.value = sum + tail;
          b.terms = k;
          return b;
        }
        const double kappa = p(s);
        sum += 2.0 / kappa;
        s += kappa / 2.0;
      }
    }
  }

  if (p.kind() == Profile::Kind::table && !p.values().empty() && p.values().front() <= 0.0 &&
      s0 <= p.thresholds().front())
    return divergent(kInfinity, 1);

  double anchor = s;
  int since_anchor = 0;
  for (int k = 0; k < max_terms; ++k) {
    const double kappa = p(s);
    if (kappa == kInfinity) {
      b.partial_sum = b.value = sum;
      b.terms = k;
      return b;
    }
    if (!(kappa > 0.0)) return divergent(kInfinity, k + 1);
    sum += 2.0 / kappa;
    s += kappa / 2.0;
    if (++since_anchor == 10'000) {
      if (s < anchor * (1.0 + 1e-6)) return divergent(sum, k + 1);
      anchor = s;
      since_anchor = 0;
    }
  }
  b.status = HsBound::Status::lower_estimate;
  b.partial_sum = b.value = sum;
  b.terms = max_terms;
  return b;
}

double integral_bound(double c, double gamma, double pi_a, double alpha) {
  if (!(c > 0.0) || !(pi_a > 0.0)) throw std::invalid_argument("c and piA must be positive");
  if (!(gamma > 0.0) || gamma > 1.0) throw std::invalid_argument("gamma must lie in (0, 1]");
  const double doubling = std::pow(2.0, gamma);
  if (alpha == 0.0) alpha = doubling;
  if (alpha < doubling * (1.0 - 1e-15)) throw std::invalid_argument("alpha must be at least 2^gamma");
  // f(t) <= t on [piA, inf): c <= t^{1-gamma} for all t >= piA.
  const bool ok = gamma == 1.0 ? c <= 1.0 : pi_a >= std::pow(c, 1.0 / (1.0 - gamma)) * (1.0 - 1e-12);
  if (!ok) throw std::invalid_argument("integral bound needs f(t) <= t on [piA, inf)");
  if (2.0 * gamma <= 1.0) return kInfinity;
  return 4.0 * alpha * alpha / (c * c) * std::pow(pi_a, 1.0 - 2.0 * gamma) / (2.0 * gamma - 1.0);
}

}  // namespace wsf
