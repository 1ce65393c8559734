#pragma once

#include <cstddef>
#include <vector>

namespace aniso {

/// Cell-centered scalar field on a uniform rectangular grid over
/// Omega = (0, nx*hx) x (0, ny*hy). values are row-major: v[j*nx + i]
/// holds the sample at the center of cell (i, j).
struct GridFunction {
    int nx = 0;
    int ny = 0;
    double hx = 0.0;
    double hy = 0.0;
    std::vector<double> values;

    GridFunction() = default;
    GridFunction(int nx_, int ny_, double hx_, double hy_, double fill = 0.0);

    double& at(int i, int j) { return values[static_cast<std::size_t>(j) * nx + i]; }
    double at(int i, int j) const { return values[static_cast<std::size_t>(j) * nx + i]; }

    std::size_t size() const { return values.size(); }
    double cell_measure() const { return hx * hy; }
    double domain_measure() const {
        // matches the last rearrangement breakpoint bit-exactly: K * cellm
        return static_cast<double>(static_cast<long long>(nx) * ny) * cell_measure();
    }
    double cell_center_x(int i) const { return (i + 0.5) * hx; }
    double cell_center_y(int j) const { return (j + 0.5) * hy; }

    bool same_grid(const GridFunction& other) const {
        return nx == other.nx && ny == other.ny && hx == other.hx && hy == other.hy;
    }

    /// Validates counts, spacings and finiteness; throws std::invalid_argument.
    void validate() const;
};

/// a + c*b on a common grid.
GridFunction axpy(const GridFunction& a, double c, const GridFunction& b);

/// L2(Omega) norm, sqrt(sum v^2 * cell measure), fixed summation order.
double l2_norm(const GridFunction& f);

/// sum f*g * cell measure.
double inner_product(const GridFunction& f, const GridFunction& g);

/// sum_faces |D_axis f|^p * cell measure, forward differences along the axis
/// with zero extension outside Omega (axis 0 = x, axis 1 = y). This is the
/// discrete form of int |d f / d x_axis|^p dx for f extended by zero.
double gradient_power_sum(const GridFunction& f, int axis, double p);

} // namespace aniso
