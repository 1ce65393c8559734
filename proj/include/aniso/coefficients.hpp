#pragma once

#include <cstddef>
#include <vector>

namespace aniso {

/// Volume of the N-dimensional unit ball, pi^{N/2} / Gamma(1 + N/2).
double unit_ball_volume(int dim);

/// Harmonic mean pbar of a family of exponents: 1/pbar = (1/N) sum 1/p_i.
/// Requires a nonempty list with every entry >= 1.
double harmonic_mean(const std::vector<double>& exponents);

/// Symmetrization constant of the power-sum Young function
/// sum_i alpha_i |xi_i|^{p_i}: the coefficient Lambda such that the
/// symmetrized function is Lambda |xi|^{pbar}.
///
/// Closed form:
///   Lambda = 2^pbar (pbar-1)^{pbar-1} / pbar^pbar
///            * [ prod_i p_i^{1/p_i} (p_i')^{1/p_i'} Gamma(1+1/p_i')
///                / (omega_N Gamma(1+N/pbar')) ]^{pbar/N}
///            * ( prod_i alpha_i^{1/p_i} )^{pbar/N}
/// with p' = p/(p-1). For p_i = 1 the conventions (p_i')^{1/p_i'} = 1 and
/// Gamma(1+1/p_i') = 1 apply (p_i' = infinity); whether the closed form is
/// meant to cover that case is not stated by its source, we take the limit.
/// Requires pbar > 1.
double lambda_constant(const std::vector<double>& alphas,
                       const std::vector<double>& exponents, int dim);

/// Anisotropic structural data: weights alpha_i > 0, exponents p_i >= 1,
/// and the derived quantities (harmonic mean, its conjugate, Lambda).
/// Immutable after construction; derived values are computed once.
class AnisotropicCoefficients {
public:
    AnisotropicCoefficients(std::vector<double> alphas,
                            std::vector<double> exponents);

    int dim() const { return static_cast<int>(exponents_.size()); }
    const std::vector<double>& alphas() const { return alphas_; }
    const std::vector<double>& exponents() const { return exponents_; }
    double alpha(std::size_t i) const { return alphas_[i]; }
    double exponent(std::size_t i) const { return exponents_[i]; }
    double pbar() const { return pbar_; }
    double pbar_conjugate() const { return pbar_conj_; }
    double lambda() const { return lambda_; }

private:
    std::vector<double> alphas_;
    std::vector<double> exponents_;
    double pbar_;
    double pbar_conj_;
    double lambda_;
};

/// The N-dimensional Young function Phi(xi) = sum_i alpha_i |xi_i|^{p_i}.
struct YoungFunctionPhi {
    AnisotropicCoefficients coeffs;

    explicit YoungFunctionPhi(AnisotropicCoefficients c) : coeffs(std::move(c)) {}
};

/// Evaluates Phi at xi. xi.size() must equal the dimension.
double phi_eval(const std::vector<double>& xi, const YoungFunctionPhi& phi);

} // namespace aniso
