#include "aniso/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace aniso {

namespace {

// Index of the interval [grid[k], grid[k+1]) containing s; the last
// interval is closed on the right.
std::size_t interval_index(const std::vector<double>& grid, double s) {
    auto it = std::upper_bound(grid.begin(), grid.end(), s);
    if (it == grid.begin()) return 0;
    std::size_t k = static_cast<std::size_t>(it - grid.begin()) - 1;
    if (k + 1 >= grid.size()) k = grid.size() - 2;
    return k;
}

void check_grid(const std::vector<double>& grid, const char* what) {
    if (grid.size() < 2)
        throw std::invalid_argument(std::string(what) + ": needs at least two breakpoints");
    if (grid.front() != 0.0)
        throw std::invalid_argument(std::string(what) + ": grid must start at 0");
    for (std::size_t k = 0; k + 1 < grid.size(); ++k)
        if (!(grid[k] < grid[k + 1]))
            throw std::invalid_argument(std::string(what) + ": grid must be strictly increasing");
    if (!std::isfinite(grid.back()))
        throw std::invalid_argument(std::string(what) + ": grid must be finite");
}

void check_measures_match(double sa, double sb, const char* what) {
    if (std::abs(sa - sb) > 1e-9 * std::max({1.0, sa, sb}))
        throw std::invalid_argument(std::string(what) + ": domain measures differ");
}

// Enforces a nonincreasing nonnegative sequence, tolerating (and clamping)
// violations at rounding scale only.
void enforce_monotone(std::vector<double>& v, const char* what) {
    const double scale = std::abs(v.front()) + 1.0;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (!std::isfinite(v[k]))
            throw std::invalid_argument(std::string(what) + ": values must be finite");
        if (v[k] < -1e-12 * scale)
            throw std::invalid_argument(std::string(what) + ": values must be nonnegative");
        v[k] = std::max(v[k], 0.0);
        if (k > 0) {
            if (v[k] > v[k - 1] + 1e-12 * scale)
                throw std::invalid_argument(std::string(what) + ": values must be nonincreasing");
            v[k] = std::min(v[k], v[k - 1]);
        }
    }
}

} // namespace

DecreasingProfile::DecreasingProfile(std::vector<double> breakpoints,
                                     std::vector<double> levels)
    : breakpoints_(std::move(breakpoints)), levels_(std::move(levels)) {
    check_grid(breakpoints_, "profile");
    if (levels_.size() + 1 != breakpoints_.size())
        throw std::invalid_argument("profile: levels count must be breakpoints count - 1");
    enforce_monotone(levels_, "profile");
    cum_.resize(breakpoints_.size());
    cum_[0] = 0.0;
    for (std::size_t k = 0; k < levels_.size(); ++k)
        cum_[k + 1] = cum_[k] + levels_[k] * (breakpoints_[k + 1] - breakpoints_[k]);
}

double DecreasingProfile::value_at(double s) const {
    if (s < 0.0 || s > domain_measure() * (1.0 + 1e-12))
        throw std::invalid_argument("profile: point outside [0, |Omega|]");
    return levels_[interval_index(breakpoints_, s)];
}

double DecreasingProfile::concentration(double s) const {
    if (s < 0.0 || s > domain_measure() * (1.0 + 1e-12))
        throw std::invalid_argument("concentration: s outside [0, |Omega|]");
    s = std::min(s, domain_measure());
    const std::size_t k = interval_index(breakpoints_, s);
    return cum_[k] + levels_[k] * (s - breakpoints_[k]);
}

double DecreasingProfile::maximal_mean(double s) const {
    if (!(s > 0.0))
        throw std::invalid_argument("maximal_mean: s must be positive");
    return concentration(s) / s;
}

RadialProfile::RadialProfile(std::vector<double> s_grid, std::vector<double> values)
    : s_grid_(std::move(s_grid)), values_(std::move(values)) {
    check_grid(s_grid_, "radial profile");
    if (values_.size() != s_grid_.size())
        throw std::invalid_argument("radial profile: one value per node required");
    enforce_monotone(values_, "radial profile");
    cum_.resize(s_grid_.size());
    cum_[0] = 0.0;
    for (std::size_t k = 0; k + 1 < s_grid_.size(); ++k)
        cum_[k + 1] = cum_[k] + 0.5 * (values_[k] + values_[k + 1]) *
                                    (s_grid_[k + 1] - s_grid_[k]);
}

double RadialProfile::value_at(double s) const {
    if (s < 0.0 || s > domain_measure() * (1.0 + 1e-12))
        throw std::invalid_argument("radial profile: point outside [0, |Omega|]");
    s = std::min(s, domain_measure());
    const std::size_t k = interval_index(s_grid_, s);
    const double t = (s - s_grid_[k]) / (s_grid_[k + 1] - s_grid_[k]);
    return values_[k] + t * (values_[k + 1] - values_[k]);
}

double RadialProfile::concentration(double s) const {
    if (s < 0.0 || s > domain_measure() * (1.0 + 1e-12))
        throw std::invalid_argument("concentration: s outside [0, |Omega|]");
    s = std::min(s, domain_measure());
    const std::size_t k = interval_index(s_grid_, s);
    const double ds = s - s_grid_[k];
    return cum_[k] + 0.5 * (values_[k] + value_at(s)) * ds;
}

DecreasingProfile add_profiles(const DecreasingProfile& a, const DecreasingProfile& b,
                               double w1, double w2) {
    if (w1 < 0.0 || w2 < 0.0)
        throw std::invalid_argument("add_profiles: weights must be nonnegative");
    check_measures_match(a.domain_measure(), b.domain_measure(), "add_profiles");
    const double S = a.domain_measure();
    const double snap = 1e-15 * std::max(1.0, S);

    std::vector<double> grid;
    grid.reserve(a.breakpoints().size() + b.breakpoints().size());
    std::merge(a.breakpoints().begin(), a.breakpoints().end(),
               b.breakpoints().begin(), b.breakpoints().end(),
               std::back_inserter(grid));
    grid.erase(std::unique(grid.begin(), grid.end(),
                           [snap](double x, double y) { return std::abs(x - y) <= snap; }),
               grid.end());
    grid.back() = S;

    std::vector<double> levels(grid.size() - 1);
    for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
        const double mid = 0.5 * (grid[k] + grid[k + 1]);
        levels[k] = w1 * a.value_at(std::min(mid, a.domain_measure())) +
                    w2 * b.value_at(std::min(mid, b.domain_measure()));
    }
    return DecreasingProfile(std::move(grid), std::move(levels));
}

DecreasingProfile to_step_profile(const RadialProfile& p) {
    const auto& s = p.s_grid();
    const auto& w = p.values();
    std::vector<double> levels(s.size() - 1);
    for (std::size_t k = 0; k + 1 < s.size(); ++k)
        levels[k] = 0.5 * (w[k] + w[k + 1]);
    return DecreasingProfile(s, std::move(levels));
}

RadialProfile sample_profile(const DecreasingProfile& p, const std::vector<double>& nodes) {
    check_grid(nodes, "sample_profile");
    check_measures_match(nodes.back(), p.domain_measure(), "sample_profile");
    std::vector<double> vals(nodes.size());
    for (std::size_t k = 0; k < nodes.size(); ++k)
        vals[k] = p.value_at(std::min(nodes[k], p.domain_measure()));
    std::vector<double> grid = nodes;
    grid.back() = p.domain_measure();
    return RadialProfile(std::move(grid), std::move(vals));
}

namespace {

// Signed max of the concentration difference. s = 0 is excluded (both
// integrals vanish there identically) so the sign reports the interior
// ordering: negative means b strictly dominates a.
template <typename ProfileB>
double gap_over_union(const DecreasingProfile& a, const ProfileB& b,
                      const std::vector<double>& b_grid) {
    check_measures_match(a.domain_measure(), b.domain_measure(), "concentration_gap");
    double gap = -std::numeric_limits<double>::infinity();
    auto visit = [&](double s) {
        if (s <= 0.0) return;
        const double sa = std::min(s, a.domain_measure());
        const double sb = std::min(s, b.domain_measure());
        gap = std::max(gap, a.concentration(sa) - b.concentration(sb));
    };
    for (double s : a.breakpoints()) visit(s);
    for (double s : b_grid) visit(s);
    return gap;
}

} // namespace

double concentration_gap(const DecreasingProfile& a, const RadialProfile& b) {
    return gap_over_union(a, b, b.s_grid());
}

double concentration_gap(const DecreasingProfile& a, const DecreasingProfile& b) {
    return gap_over_union(a, b, b.breakpoints());
}

} // namespace aniso
