#pragma once

#include <functional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pdcouple/assembly.hpp"

namespace pdcouple {

struct CaseConfig;

/// Exact fraction, always reduced with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// Exact Lagrange basis values over rational nodes.
std::vector<Rational> rational_lagrange(std::span<const Rational> nodes, const Rational& target);

/// Exact derivatives of the Lagrange basis over rational nodes.
std::vector<Rational> rational_lagrange_derivative(std::span<const Rational> nodes, const Rational& target);

/// Bond stiffness between two points.
using BondStiffness = std::function<double(double x, double y)>;

/// Peridynamic row at node k built directly from the trapezoid rule applied
/// to the integral of stiffness * (u(y) - u(x)) / |y - x| over the horizon.
/// Returns the coefficients of u_{k-r} .. u_{k+r} of -L u.
std::vector<double> pd_row_by_quadrature(std::span<const double> nodes, int k, int radius,
                                         const BondStiffness& stiffness);

/// Highest degree q in 1..4 whose monomial case is reproduced to 1e-9
/// max abs nodal error; 0 if none. Only method, grid and degree fields of
/// the config are used.
int degree_of_precision(const CaseConfig& config);

}  // namespace pdcouple
