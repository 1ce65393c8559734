#pragma once

#include <vector>

namespace aniso {

/// Nonincreasing step function on [0, |Omega|]: level_k on
/// [breakpoints[k], breakpoints[k+1]). The canonical decreasing
/// rearrangement representation. Immutable after construction;
/// the running integral is precomputed.
class DecreasingProfile {
public:
    /// breakpoints: strictly increasing, breakpoints.front() == 0,
    /// size K+1; levels: size K, nonnegative, nonincreasing.
    DecreasingProfile(std::vector<double> breakpoints, std::vector<double> levels);

    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<double>& levels() const { return levels_; }
    std::size_t step_count() const { return levels_.size(); }
    double domain_measure() const { return breakpoints_.back(); }

    /// Step value; right-continuous on [0, |Omega|), last level at |Omega|.
    double value_at(double s) const;

    /// Exact integral of the step function over [0, s]. Requires
    /// 0 <= s <= |Omega|.
    double concentration(double s) const;

    /// concentration(s) / s. Requires 0 < s <= |Omega|.
    double maximal_mean(double s) const;

    /// Integral over the whole domain.
    double total_mass() const { return cum_.back(); }

private:
    std::vector<double> breakpoints_;
    std::vector<double> levels_;
    std::vector<double> cum_; // cum_[k] = integral over [0, breakpoints_[k]]
};

/// Profile in the mass coordinate s = omega_N |x|^N, sampled at nodes:
/// values[k] at s_grid[k], interpreted piecewise linearly. Used for the
/// candidate z*(s) of the symmetrized problem; solver outputs additionally
/// satisfy values.back() == 0 (Dirichlet).
class RadialProfile {
public:
    RadialProfile(std::vector<double> s_grid, std::vector<double> values);

    const std::vector<double>& s_grid() const { return s_grid_; }
    const std::vector<double>& values() const { return values_; }
    double domain_measure() const { return s_grid_.back(); }

    /// Piecewise-linear interpolant value.
    double value_at(double s) const;

    /// Exact integral of the piecewise-linear interpolant over [0, s].
    double concentration(double s) const;

    double total_mass() const { return cum_.back(); }

private:
    std::vector<double> s_grid_;
    std::vector<double> values_;
    std::vector<double> cum_; // trapezoid running integral at nodes
};

/// w1*a + w2*b as a step profile on the union of the two breakpoint grids.
/// Requires equal domain measures and nonnegative weights; the result is
/// nonincreasing because both inputs are.
DecreasingProfile add_profiles(const DecreasingProfile& a, const DecreasingProfile& b,
                               double w1 = 1.0, double w2 = 1.0);

/// Step representation of a node profile with the same concentration at
/// every node: level on [s_k, s_{k+1}) is the interval mean of the
/// piecewise-linear interpolant.
DecreasingProfile to_step_profile(const RadialProfile& p);

/// Node samples of a step profile on the given grid (right-continuous;
/// the closing node takes the last level). nodes must start at 0 and end
/// at the profile's domain measure.
RadialProfile sample_profile(const DecreasingProfile& p, const std::vector<double>& nodes);

/// max over [0, |Omega|] of [ int_0^s a* - int_0^s b* ]. Both concentrations
/// are concave and piecewise polynomial; the difference is convex between
/// consecutive breakpoints/nodes, so the exact maximum is attained on the
/// union of breakpoints, where both integrals are evaluated exactly.
double concentration_gap(const DecreasingProfile& a, const RadialProfile& b);
double concentration_gap(const DecreasingProfile& a, const DecreasingProfile& b);

} // namespace aniso
