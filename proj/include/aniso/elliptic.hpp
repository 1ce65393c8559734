#pragma once

#include "aniso/coefficients.hpp"
#include "aniso/grid.hpp"

#include <utility>
#include <vector>

namespace aniso {

/// Discretized anisotropic elliptic problem with zero-order term,
///   -sum_i ( alpha_i |d_i w|^{p_i - 2} d_i w )_{x_i} + lambda0 w = rhs
/// on the rectangle carried by rhs, homogeneous Dirichlet data imposed by a
/// zero ghost layer. For p_i < 2 the face flux is regularized as
/// (|D|^2 + eps^2)^{(p_i-2)/2} D, with the matching energy integrand
/// (so descent is exact).
struct EllipticProblem {
    AnisotropicCoefficients coeffs;
    double lambda0;
    GridFunction rhs;
    double epsilon = 1e-8;
    bool allow_zero_lambda = false; // oracle-test mode; lambda0 > 0 otherwise

    EllipticProblem(AnisotropicCoefficients c, double lambda, GridFunction g,
                    double eps = 1e-8, bool allow_zero = false);
};

struct SolveReport {
    int iterations = 0;
    double final_energy = 0.0;
    double residual_norm = 0.0;
    bool converged = false;
    std::vector<double> energy_trace; // energy after each accepted step
};

/// J(U) = sum_i (alpha_i / p_i) sum_faces phi_i(D_i U) cellm
///        + (lambda0/2) sum U^2 cellm - sum rhs U cellm,
/// forward differences with zero exterior extension (nx+1 resp. ny+1 faces
/// per row/column). Strictly convex for lambda0 > 0.
double discrete_energy(const GridFunction& U, const EllipticProblem& prob);

/// Gradient of the discrete energy (one entry per cell, includes the cell
/// measure factor).
GridFunction energy_gradient(const GridFunction& U, const EllipticProblem& prob);

/// Residual in the discrete dual norm: sqrt( sum g^2 / cellm ) for
/// g = energy gradient.
double residual_dual_norm(const GridFunction& grad);

/// Minimizes the discrete energy by damped Newton with backtracking line
/// search (Armijo), inner CG solves with Jacobi preconditioning, and a
/// gradient-descent fallback when the Newton system is ill-conditioned.
/// Returns the minimizer and a report; non-convergence is reported via
/// report.converged, never silently.
std::pair<GridFunction, SolveReport>
solve_elliptic(const EllipticProblem& prob, double tol = 1e-10, int max_iter = 200,
               const GridFunction* initial_guess = nullptr);

} // namespace aniso
