// time_grid.hpp — sampling grids plus the finite-difference and quadrature
// rules shared by every time-series computation.

#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace rudiv {

// Strictly increasing time points starting at 0; spacing may be non-uniform.
struct TimeGrid {
    std::vector<double> points;

    TimeGrid() = default;
    explicit TimeGrid(std::vector<double> pts);

    static TimeGrid uniform(double t_max, int n_points);
    // First point 0, remaining points log-spaced over `decades` below t_max.
    static TimeGrid log_spaced(double t_max, int n_points, double decades = 3.0);

    std::size_t size() const { return points.size(); }
    double operator[](std::size_t i) const { return points[i]; }
    double front() const { return points.front(); }
    double back() const { return points.back(); }
};

bool operator==(const TimeGrid& a, const TimeGrid& b);

// Second-order finite-difference derivative of a sampled series: central
// three-point stencil in the interior, one-sided three-point at the ends.
// Handles non-uniform spacing. Falls back to the two-point slope when the
// grid has only two points.
Eigen::VectorXd grid_derivative(const TimeGrid& grid, const Eigen::VectorXd& f);
Eigen::VectorXcd grid_derivative(const TimeGrid& grid, const Eigen::VectorXcd& f);

// Running composite-trapezoid integral; result[0] = 0.
Eigen::VectorXd trapezoid_cumulative(const TimeGrid& grid, const Eigen::VectorXd& f);

// Trapezoid integral of f over [points[s], points[t]].
double trapezoid_between(const TimeGrid& grid, const Eigen::VectorXd& f,
                         std::size_t s, std::size_t t);

} // namespace rudiv
