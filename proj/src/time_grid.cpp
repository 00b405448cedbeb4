// time_grid.cpp

#include "rudiv/time_grid.hpp"

#include <cmath>
#include <stdexcept>

namespace rudiv {

namespace {

void validate(const std::vector<double>& pts)
{
    if (pts.size() < 2) {
        throw std::invalid_argument("TimeGrid: need at least 2 points");
    }
    if (pts.front() != 0.0) {
        throw std::invalid_argument("TimeGrid: first point must be 0");
    }
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (!(pts[i] > pts[i - 1])) {
            throw std::invalid_argument("TimeGrid: points must be strictly increasing");
        }
    }
}

template <typename Vec>
Vec derivative_impl(const TimeGrid& grid, const Vec& f)
{
    const auto n = static_cast<Eigen::Index>(grid.size());
    if (f.size() != n) {
        throw std::invalid_argument("grid_derivative: series length does not match grid");
    }
    Vec out(n);
    const auto& t = grid.points;
    if (n == 2) {
        const auto slope = (f[1] - f[0]) / (t[1] - t[0]);
        out[0] = slope;
        out[1] = slope;
        return out;
    }
    for (Eigen::Index i = 1; i + 1 < n; ++i) {
        const double h1 = t[static_cast<std::size_t>(i)] - t[static_cast<std::size_t>(i - 1)];
        const double h2 = t[static_cast<std::size_t>(i + 1)] - t[static_cast<std::size_t>(i)];
        out[i] = (-h2 / (h1 * (h1 + h2))) * f[i - 1]
               + ((h2 - h1) / (h1 * h2)) * f[i]
               + (h1 / (h2 * (h1 + h2))) * f[i + 1];
    }
    {
        const double h1 = t[1] - t[0];
        const double h2 = t[2] - t[1];
        out[0] = (-(2.0 * h1 + h2) / (h1 * (h1 + h2))) * f[0]
               + ((h1 + h2) / (h1 * h2)) * f[1]
               - (h1 / (h2 * (h1 + h2))) * f[2];
    }
    {
        const std::size_t m = grid.size() - 1;
        const double h1 = t[m] - t[m - 1];
        const double h2 = t[m - 1] - t[m - 2];
        out[n - 1] = ((2.0 * h1 + h2) / (h1 * (h1 + h2))) * f[n - 1]
                   - ((h1 + h2) / (h1 * h2)) * f[n - 2]
                   + (h1 / (h2 * (h1 + h2))) * f[n - 3];
    }
    return out;
}

} // namespace

TimeGrid::TimeGrid(std::vector<double> pts) : points(std::move(pts))
{
    validate(points);
}

TimeGrid TimeGrid::uniform(double t_max, int n_points)
{
    if (t_max <= 0.0) {
        throw std::invalid_argument("TimeGrid::uniform: t_max must be positive");
    }
    if (n_points < 2) {
        throw std::invalid_argument("TimeGrid::uniform: need at least 2 points");
    }
    std::vector<double> pts(static_cast<std::size_t>(n_points));
    for (int i = 0; i < n_points; ++i) {
        pts[static_cast<std::size_t>(i)] = t_max * i / (n_points - 1);
    }
    pts.front() = 0.0;
    pts.back() = t_max;
    return TimeGrid(std::move(pts));
}

TimeGrid TimeGrid::log_spaced(double t_max, int n_points, double decades)
{
    if (t_max <= 0.0) {
        throw std::invalid_argument("TimeGrid::log_spaced: t_max must be positive");
    }
    if (n_points < 2) {
        throw std::invalid_argument("TimeGrid::log_spaced: need at least 2 points");
    }
    if (decades <= 0.0) {
        throw std::invalid_argument("TimeGrid::log_spaced: decades must be positive");
    }
    std::vector<double> pts;
    pts.reserve(static_cast<std::size_t>(n_points));
    pts.push_back(0.0);
    if (n_points == 2) {
        pts.push_back(t_max);
        return TimeGrid(std::move(pts));
    }
    for (int i = 1; i < n_points; ++i) {
        const double frac = static_cast<double>(i - 1) / (n_points - 2);
        pts.push_back(t_max * std::pow(10.0, decades * (frac - 1.0)));
    }
    pts.back() = t_max;
    return TimeGrid(std::move(pts));
}

bool operator==(const TimeGrid& a, const TimeGrid& b)
{
    return a.points == b.points;
}

Eigen::VectorXd grid_derivative(const TimeGrid& grid, const Eigen::VectorXd& f)
{
    return derivative_impl(grid, f);
}

Eigen::VectorXcd grid_derivative(const TimeGrid& grid, const Eigen::VectorXcd& f)
{
    return derivative_impl(grid, f);
}

Eigen::VectorXd trapezoid_cumulative(const TimeGrid& grid, const Eigen::VectorXd& f)
{
    const auto n = static_cast<Eigen::Index>(grid.size());
    if (f.size() != n) {
        throw std::invalid_argument("trapezoid_cumulative: series length does not match grid");
    }
    Eigen::VectorXd out(n);
    out[0] = 0.0;
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
        const double dt = grid.points[static_cast<std::size_t>(i + 1)]
                        - grid.points[static_cast<std::size_t>(i)];
        out[i + 1] = out[i] + 0.5 * (f[i] + f[i + 1]) * dt;
    }
    return out;
}

double trapezoid_between(const TimeGrid& grid, const Eigen::VectorXd& f,
                         std::size_t s, std::size_t t)
{
    if (t >= grid.size() || s > t) {
        throw std::invalid_argument("trapezoid_between: invalid index range");
    }
    double acc = 0.0;
    for (std::size_t i = s; i < t; ++i) {
        acc += 0.5 * (f[static_cast<Eigen::Index>(i)] + f[static_cast<Eigen::Index>(i + 1)])
             * (grid.points[i + 1] - grid.points[i]);
    }
    return acc;
}

} // namespace rudiv
