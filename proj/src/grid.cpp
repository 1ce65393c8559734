#include "aniso/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace aniso {

GridFunction::GridFunction(int nx_, int ny_, double hx_, double hy_, double fill)
    : nx(nx_), ny(ny_), hx(hx_), hy(hy_),
      values(static_cast<std::size_t>(nx_) * ny_, fill) {
    validate();
}

void GridFunction::validate() const {
    if (nx < 1 || ny < 1)
        throw std::invalid_argument("grid: nx, ny must be >= 1");
    if (!(hx > 0.0) || !(hy > 0.0))
        throw std::invalid_argument("grid: hx, hy must be positive");
    if (values.size() != static_cast<std::size_t>(nx) * ny)
        throw std::invalid_argument("grid: value count does not match nx*ny");
    for (double v : values)
        if (!std::isfinite(v))
            throw std::invalid_argument("grid: values must be finite");
}

GridFunction axpy(const GridFunction& a, double c, const GridFunction& b) {
    if (!a.same_grid(b))
        throw std::invalid_argument("axpy: grid mismatch");
    GridFunction out = a;
    for (std::size_t k = 0; k < out.values.size(); ++k)
        out.values[k] += c * b.values[k];
    return out;
}

double l2_norm(const GridFunction& f) {
    double sum = 0.0;
    for (double v : f.values) sum += v * v;
    return std::sqrt(sum * f.cell_measure());
}

double inner_product(const GridFunction& f, const GridFunction& g) {
    if (!f.same_grid(g))
        throw std::invalid_argument("inner_product: grid mismatch");
    double sum = 0.0;
    for (std::size_t k = 0; k < f.values.size(); ++k)
        sum += f.values[k] * g.values[k];
    return sum * f.cell_measure();
}

double gradient_power_sum(const GridFunction& f, int axis, double p) {
    if (axis != 0 && axis != 1)
        throw std::invalid_argument("gradient_power_sum: axis must be 0 or 1");
    const double cellm = f.cell_measure();
    double sum = 0.0;
    if (axis == 0) {
        for (int j = 0; j < f.ny; ++j) {
            // faces i-1/2 for i = 0..nx, ghost cells are zero
            for (int i = 0; i <= f.nx; ++i) {
                const double left = (i > 0) ? f.at(i - 1, j) : 0.0;
                const double right = (i < f.nx) ? f.at(i, j) : 0.0;
                sum += std::pow(std::abs((right - left) / f.hx), p);
            }
        }
    } else {
        for (int j = 0; j <= f.ny; ++j) {
            for (int i = 0; i < f.nx; ++i) {
                const double lo = (j > 0) ? f.at(i, j - 1) : 0.0;
                const double hi = (j < f.ny) ? f.at(i, j) : 0.0;
                sum += std::pow(std::abs((hi - lo) / f.hy), p);
            }
        }
    }
    return sum * cellm;
}

} // namespace aniso
