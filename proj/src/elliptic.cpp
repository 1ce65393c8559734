#include "aniso/elliptic.hpp"

#include <cmath>
#include <stdexcept>

namespace aniso {

namespace {

// Face energy density phi(D) with (1/p) folded in, its derivative (the
// flux) and second derivative. p < 2 uses the epsilon-regularized form with
// the constant shifted off so phi(0) = 0.
struct FaceLaw {
    double p;
    double eps;

    double phi(double d) const {
        if (p == 2.0) return 0.5 * d * d;
        if (p > 2.0) return std::pow(std::abs(d), p) / p;
        return (std::pow(d * d + eps * eps, 0.5 * p) - std::pow(eps, p)) / p;
    }
    double dphi(double d) const {
        if (p == 2.0) return d;
        if (p > 2.0) return std::pow(std::abs(d), p - 2.0) * d;
        return std::pow(d * d + eps * eps, 0.5 * (p - 2.0)) * d;
    }
    double d2phi(double d) const {
        if (p == 2.0) return 1.0;
        if (p > 2.0) return (p - 1.0) * std::pow(std::abs(d), p - 2.0);
        return std::pow(d * d + eps * eps, 0.5 * (p - 4.0)) *
               ((p - 1.0) * d * d + eps * eps);
    }
};

struct Workspace {
    const EllipticProblem& prob;
    const GridFunction& geom;
    FaceLaw law_x, law_y;
    double ax, ay; // alpha per axis

    explicit Workspace(const EllipticProblem& p)
        : prob(p), geom(p.rhs),
          law_x{p.coeffs.exponent(0), p.epsilon},
          law_y{p.coeffs.exponent(1), p.epsilon},
          ax(p.coeffs.alpha(0)), ay(p.coeffs.alpha(1)) {}

    double dx(const GridFunction& U, int i, int j) const { // face i-1/2
        const double l = (i > 0) ? U.at(i - 1, j) : 0.0;
        const double r = (i < U.nx) ? U.at(i, j) : 0.0;
        return (r - l) / U.hx;
    }
    double dy(const GridFunction& U, int i, int j) const { // face j-1/2
        const double l = (j > 0) ? U.at(i, j - 1) : 0.0;
        const double r = (j < U.ny) ? U.at(i, j) : 0.0;
        return (r - l) / U.hy;
    }
};

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

// Hessian-vector product with per-face coefficients frozen at the current
// iterate: (Hv)_c = cellm [ lambda v_c
//   + a_x (cxx_left (v_c - v_l) - cxx_right (v_r - v_c)) / hx^2 + ... ].
struct HessianOperator {
    const GridFunction& geom;
    double lambda;
    double ax, ay;
    std::vector<double> cx; // (nx+1) * ny face coefficients, axis x
    std::vector<double> cy; // nx * (ny+1), axis y

    void apply(const std::vector<double>& v, std::vector<double>& out) const {
        const int nx = geom.nx, ny = geom.ny;
        const double cellm = geom.cell_measure();
        const double ihx2 = 1.0 / (geom.hx * geom.hx);
        const double ihy2 = 1.0 / (geom.hy * geom.hy);
        for (int j = 0; j < ny; ++j) {
            for (int i = 0; i < nx; ++i) {
                const std::size_t c = static_cast<std::size_t>(j) * nx + i;
                const double vl = (i > 0) ? v[c - 1] : 0.0;
                const double vr = (i + 1 < nx) ? v[c + 1] : 0.0;
                const double vb = (j > 0) ? v[c - nx] : 0.0;
                const double vt = (j + 1 < ny) ? v[c + nx] : 0.0;
                const double fxl = cx[static_cast<std::size_t>(j) * (nx + 1) + i];
                const double fxr = cx[static_cast<std::size_t>(j) * (nx + 1) + i + 1];
                const double fyb = cy[static_cast<std::size_t>(j) * nx + i];
                const double fyt = cy[static_cast<std::size_t>(j + 1) * nx + i];
                double acc = lambda * v[c];
                acc += ax * ihx2 * (fxl * (v[c] - vl) - fxr * (vr - v[c]));
                acc += ay * ihy2 * (fyb * (v[c] - vb) - fyt * (vt - v[c]));
                out[c] = cellm * acc;
            }
        }
    }

    double diagonal(std::size_t c) const {
        const int nx = geom.nx;
        const int i = static_cast<int>(c) % nx;
        const int j = static_cast<int>(c) / nx;
        const double cellm = geom.cell_measure();
        const double ihx2 = 1.0 / (geom.hx * geom.hx);
        const double ihy2 = 1.0 / (geom.hy * geom.hy);
        const double fxl = cx[static_cast<std::size_t>(j) * (nx + 1) + i];
        const double fxr = cx[static_cast<std::size_t>(j) * (nx + 1) + i + 1];
        const double fyb = cy[static_cast<std::size_t>(j) * nx + i];
        const double fyt = cy[static_cast<std::size_t>(j + 1) * nx + i];
        return cellm * (lambda + ax * ihx2 * (fxl + fxr) + ay * ihy2 * (fyb + fyt));
    }
};

// Preconditioned CG for H d = -g. Returns false on breakdown or if no
// meaningful reduction was achieved.
bool solve_newton_system(const HessianOperator& H, const std::vector<double>& g,
                         std::vector<double>& d, double rel_tol, int max_iter) {
    const std::size_t n = g.size();
    d.assign(n, 0.0);
    std::vector<double> r(n), z(n), p(n), hp(n);
    for (std::size_t k = 0; k < n; ++k) r[k] = -g[k];
    const double rhs_norm = std::sqrt(dot(r, r));
    if (rhs_norm == 0.0) return false;

    std::vector<double> inv_diag(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double dk = H.diagonal(k);
        if (!(dk > 0.0)) return false;
        inv_diag[k] = 1.0 / dk;
    }
    for (std::size_t k = 0; k < n; ++k) z[k] = inv_diag[k] * r[k];
    p = z;
    double rz = dot(r, z);

    for (int it = 0; it < max_iter; ++it) {
        H.apply(p, hp);
        const double php = dot(p, hp);
        if (!(php > 0.0)) return it > 0; // lost positivity: keep partial step
        const double alpha = rz / php;
        for (std::size_t k = 0; k < n; ++k) {
            d[k] += alpha * p[k];
            r[k] -= alpha * hp[k];
        }
        if (std::sqrt(dot(r, r)) <= rel_tol * rhs_norm) return true;
        for (std::size_t k = 0; k < n; ++k) z[k] = inv_diag[k] * r[k];
        const double rz_new = dot(r, z);
        const double beta = rz_new / rz;
        rz = rz_new;
        for (std::size_t k = 0; k < n; ++k) p[k] = z[k] + beta * p[k];
    }
    return true; // partial solve is still a descent direction (H SPD)
}

} // namespace

EllipticProblem::EllipticProblem(AnisotropicCoefficients c, double lambda,
                                 GridFunction g, double eps, bool allow_zero)
    : coeffs(std::move(c)), lambda0(lambda), rhs(std::move(g)), epsilon(eps),
      allow_zero_lambda(allow_zero) {
    rhs.validate();
    if (coeffs.dim() != 2)
        throw std::invalid_argument("elliptic: grid problems are 2-dimensional");
    if (!(epsilon > 0.0))
        throw std::invalid_argument("elliptic: epsilon must be positive");
    if (allow_zero_lambda ? lambda0 < 0.0 : !(lambda0 > 0.0))
        throw std::invalid_argument("elliptic: lambda0 must be positive");
}

double discrete_energy(const GridFunction& U, const EllipticProblem& prob) {
    if (!U.same_grid(prob.rhs))
        throw std::invalid_argument("discrete_energy: grid mismatch");
    const Workspace w(prob);
    const double cellm = U.cell_measure();
    double diff = 0.0; // phi() already carries the 1/p_i factor
    for (int j = 0; j < U.ny; ++j)
        for (int i = 0; i <= U.nx; ++i)
            diff += w.ax * w.law_x.phi(w.dx(U, i, j));
    for (int j = 0; j <= U.ny; ++j)
        for (int i = 0; i < U.nx; ++i)
            diff += w.ay * w.law_y.phi(w.dy(U, i, j));
    double zero_order = 0.0, source = 0.0;
    for (std::size_t k = 0; k < U.values.size(); ++k) {
        zero_order += U.values[k] * U.values[k];
        source += prob.rhs.values[k] * U.values[k];
    }
    return diff * cellm + 0.5 * prob.lambda0 * zero_order * cellm - source * cellm;
}

GridFunction energy_gradient(const GridFunction& U, const EllipticProblem& prob) {
    if (!U.same_grid(prob.rhs))
        throw std::invalid_argument("energy_gradient: grid mismatch");
    const Workspace w(prob);
    const double cellm = U.cell_measure();
    GridFunction g(U.nx, U.ny, U.hx, U.hy);
    for (int j = 0; j < U.ny; ++j) {
        for (int i = 0; i < U.nx; ++i) {
            double acc = prob.lambda0 * U.at(i, j) - prob.rhs.at(i, j);
            acc += w.ax * (w.law_x.dphi(w.dx(U, i, j)) - w.law_x.dphi(w.dx(U, i + 1, j))) / U.hx;
            acc += w.ay * (w.law_y.dphi(w.dy(U, i, j)) - w.law_y.dphi(w.dy(U, i, j + 1))) / U.hy;
            g.at(i, j) = cellm * acc;
        }
    }
    return g;
}

double residual_dual_norm(const GridFunction& grad) {
    double s = 0.0;
    for (double v : grad.values) s += v * v;
    return std::sqrt(s / grad.cell_measure());
}

std::pair<GridFunction, SolveReport>
solve_elliptic(const EllipticProblem& prob, double tol, int max_iter,
               const GridFunction* initial_guess) {
    if (!(tol > 0.0))
        throw std::invalid_argument("solve_elliptic: tol must be positive");
    if (max_iter < 1)
        throw std::invalid_argument("solve_elliptic: max_iter must be >= 1");

    const Workspace w(prob);
    GridFunction U = initial_guess ? *initial_guess
                                   : GridFunction(prob.rhs.nx, prob.rhs.ny,
                                                  prob.rhs.hx, prob.rhs.hy);
    if (!U.same_grid(prob.rhs))
        throw std::invalid_argument("solve_elliptic: initial guess grid mismatch");

    SolveReport rep;
    double energy = discrete_energy(U, prob);
    rep.energy_trace.push_back(energy);

    const int nx = U.nx, ny = U.ny;
    HessianOperator H{prob.rhs, prob.lambda0, w.ax, w.ay,
                      std::vector<double>(static_cast<std::size_t>(nx + 1) * ny),
                      std::vector<double>(static_cast<std::size_t>(nx) * (ny + 1))};
    std::vector<double> direction;

    for (int iter = 0; iter < max_iter; ++iter) {
        const GridFunction grad = energy_gradient(U, prob);
        rep.residual_norm = residual_dual_norm(grad);
        if (rep.residual_norm <= tol) {
            rep.converged = true;
            break;
        }
        rep.iterations = iter + 1;

        for (int j = 0; j < ny; ++j)
            for (int i = 0; i <= nx; ++i)
                H.cx[static_cast<std::size_t>(j) * (nx + 1) + i] =
                    w.law_x.d2phi(w.dx(U, i, j));
        for (int j = 0; j <= ny; ++j)
            for (int i = 0; i < nx; ++i)
                H.cy[static_cast<std::size_t>(j) * nx + i] =
                    w.law_y.d2phi(w.dy(U, i, j));

        bool have_newton = solve_newton_system(
            H, grad.values, direction, 1e-6,
            static_cast<int>(20 * std::sqrt(double(nx) * ny)) + 500);

        double gd = have_newton ? dot(grad.values, direction) : 0.0;
        if (!have_newton || !(gd < 0.0)) {
            // ill-conditioned Newton system: steepest descent
            direction.resize(grad.values.size());
            for (std::size_t k = 0; k < direction.size(); ++k)
                direction[k] = -grad.values[k];
            gd = dot(grad.values, direction);
            if (!(gd < 0.0)) break; // gradient numerically zero
        }

        // Armijo backtracking
        double step = 1.0;
        bool accepted = false;
        while (step > 1e-16) {
            GridFunction trial = U;
            for (std::size_t k = 0; k < trial.values.size(); ++k)
                trial.values[k] += step * direction[k];
            const double trial_energy = discrete_energy(trial, prob);
            if (trial_energy <= energy + 1e-4 * step * gd) {
                U = std::move(trial);
                energy = trial_energy;
                rep.energy_trace.push_back(energy);
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) break; // no decrease possible at rounding scale
    }

    rep.final_energy = energy;
    if (!rep.converged) {
        const GridFunction grad = energy_gradient(U, prob);
        rep.residual_norm = residual_dual_norm(grad);
        rep.converged = rep.residual_norm <= tol;
    }
    return {std::move(U), std::move(rep)};
}

} // namespace aniso
