#include "pdcouple/physics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pdcouple/errors.hpp"

namespace pdcouple {

double kappa(double modulus, double delta) {
  if (!(delta > 0.0)) throw ConfigurationError("horizon must be positive");
  return 2.0 * modulus / (delta * delta);
}

Polynomial::Polynomial(std::vector<double> coefficients) : c_(std::move(coefficients)) {
  while (c_.size() > 1 && c_.back() == 0.0) c_.pop_back();
}

double Polynomial::operator()(double x) const {
  double v = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
  return v;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial({0.0});
  std::vector<double> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = static_cast<double>(i) * c_[i];
  return Polynomial(std::move(d));
}

ClampedCubicSpline::ClampedCubicSpline(std::vector<double> knots, std::vector<double> values,
                                       double slope_begin, double slope_end)
    : x_(std::move(knots)), y_(std::move(values)) {
  const std::size_t n = x_.size();
  if (n < 2 || y_.size() != n) throw ConfigurationError("spline needs matching knots and values");
  for (std::size_t i = 1; i < n; ++i)
    if (!(x_[i] > x_[i - 1])) throw ConfigurationError("spline knots must increase");

  // Tridiagonal system for the knot second derivatives, Thomas algorithm.
  std::vector<double> sub(n, 0.0), diag(n, 0.0), sup(n, 0.0), rhs(n, 0.0);
  const double h0 = x_[1] - x_[0];
  diag[0] = h0 / 3.0;
  sup[0] = h0 / 6.0;
  rhs[0] = (y_[1] - y_[0]) / h0 - slope_begin;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double hl = x_[i] - x_[i - 1];
    const double hr = x_[i + 1] - x_[i];
    sub[i] = hl / 6.0;
    diag[i] = (hl + hr) / 3.0;
    sup[i] = hr / 6.0;
    rhs[i] = (y_[i + 1] - y_[i]) / hr - (y_[i] - y_[i - 1]) / hl;
  }
  const double hn = x_[n - 1] - x_[n - 2];
  sub[n - 1] = hn / 6.0;
  diag[n - 1] = hn / 3.0;
  rhs[n - 1] = slope_end - (y_[n - 1] - y_[n - 2]) / hn;

  for (std::size_t i = 1; i < n; ++i) {
    const double w = sub[i] / diag[i - 1];
    diag[i] -= w * sup[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  m_.assign(n, 0.0);
  m_[n - 1] = rhs[n - 1] / diag[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) m_[i] = (rhs[i] - sup[i] * m_[i + 1]) / diag[i];
}

int ClampedCubicSpline::interval(double x) const {
  const auto it = std::upper_bound(x_.begin(), x_.end(), x);
  const int i = static_cast<int>(it - x_.begin()) - 1;
  return std::clamp(i, 0, static_cast<int>(x_.size()) - 2);
}

double ClampedCubicSpline::operator()(double x) const {
  if (x <= x_.front()) return y_.front();
  if (x >= x_.back()) return y_.back();
  const int i = interval(x);
  const double h = x_[i + 1] - x_[i];
  const double A = (x_[i + 1] - x) / h;
  const double B = (x - x_[i]) / h;
  return A * y_[i] + B * y_[i + 1] + ((A * A * A - A) * m_[i] + (B * B * B - B) * m_[i + 1]) * h * h / 6.0;
}

double ClampedCubicSpline::derivative(double x) const {
  if (x <= x_.front() || x >= x_.back()) return 0.0;
  const int i = interval(x);
  const double h = x_[i + 1] - x_[i];
  const double A = (x_[i + 1] - x) / h;
  const double B = (x - x_[i]) / h;
  return (y_[i + 1] - y_[i]) / h + ((1.0 - 3.0 * A * A) * m_[i] + (3.0 * B * B - 1.0) * m_[i + 1]) * h / 6.0;
}

ElasticModulusProfile ElasticModulusProfile::constant(double modulus) {
  if (!(modulus > 0.0)) throw ConfigurationError("elastic modulus must be positive");
  ElasticModulusProfile p;
  p.base_ = modulus;
  p.c_ = modulus;
  return p;
}

ElasticModulusProfile ElasticModulusProfile::spline(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw ConfigurationError("profile parameter c must be positive");
  ElasticModulusProfile p;
  p.c_ = c;
  const double mid = 0.5 * (1.0 + c);
  ClampedCubicSpline s({1.25, 1.375, 1.5, 1.625, 1.75}, {1.0, mid, c, mid, 1.0});
  p.fn_ = [s = std::move(s)](double x) { return x <= 1.25 || x >= 1.75 ? 1.0 : s(x); };
  return p;
}

ElasticModulusProfile ElasticModulusProfile::from_function(std::function<double(double)> modulus) {
  if (!modulus) throw ConfigurationError("empty modulus function");
  ElasticModulusProfile p;
  p.fn_ = std::move(modulus);
  return p;
}

double ElasticModulusProfile::operator()(double x) const { return fn_ ? fn_(x) : base_; }

HorizonField::HorizonField(double delta, double a, double b) : delta_(delta), a_(a), b_(b) {
  if (!(delta > 0.0) || !(a < b)) throw ConfigurationError("invalid horizon field");
}

double HorizonField::operator()(double x) const {
  return std::clamp(std::min(x - a_, b_ - x), 0.0, delta_);
}

double HorizonField::kappa_at(double modulus, double x) const { return kappa(modulus, (*this)(x)); }

double ManufacturedCase::du(double x) const { return solution.derivative()(x); }

double ManufacturedCase::forcing(double x) const { return -solution.derivative().derivative()(x); }

ManufacturedCase manufactured_case(std::string_view name, double length) {
  ManufacturedCase c;
  c.name = std::string(name);
  c.length = length;
  if (name == "linear") {
    c.solution = Polynomial({0.0, 1.0 / 3.0});
  } else if (name == "quadratic") {
    c.solution = Polynomial({0.0, 0.0, 1.0 / 9.0});
  } else if (name == "cubic") {
    c.solution = Polynomial({0.0, 0.0, 0.0, 1.0 / 27.0});
  } else if (name == "quartic") {
    c.solution = Polynomial({0.0, 0.0, 0.0, 0.0, 1.0 / 81.0});
  } else if (name == "dirichlet_quartic") {
    // (16/81) x^2 (L - x)^2, peak value 1 at the midpoint when L = 3.
    const double s = 16.0 / 81.0;
    c.solution = Polynomial({0.0, 0.0, s * length * length, -2.0 * s * length, s});
    c.default_bc = BoundaryCondition::kDirichletBoth;
  } else {
    throw ConfigurationError("unknown case '" + std::string(name) + "'");
  }
  return c;
}

std::vector<std::string> manufactured_case_names() {
  return {"linear", "quadratic", "cubic", "quartic", "dirichlet_quartic"};
}

}  // namespace pdcouple
