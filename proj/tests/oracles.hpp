#pragma once

#include <functional>
#include <vector>

// Reference implementations the tests trust instead of the library: a
// different quadrature scheme and a direct ascent over the allocation
// simplex. Anything checked against these is verified through two unrelated
// computational routes.
namespace oracle {

// Adaptive Simpson on [a, b] to roughly the given absolute tolerance.
double integrate(const std::function<double(double)>& f, double a, double b, double tol);

// Euclidean projection onto { f : f >= 0, sum f = 1 }.
std::vector<double> project_simplex(const std::vector<double>& v);

double allocation_objective(const std::vector<double>& fractions,
                            const std::vector<double>& gains, double total_power);

// Projected gradient ascent with backtracking line search from the uniform
// point; the objective is concave, so this converges to the global optimum.
double best_objective_by_ascent(const std::vector<double>& gains, double total_power);

}  // namespace oracle
