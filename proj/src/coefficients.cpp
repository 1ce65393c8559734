#include "aniso/coefficients.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace aniso {

namespace {

void check_family(const std::vector<double>& alphas,
                  const std::vector<double>& exponents) {
    if (exponents.empty())
        throw std::invalid_argument("coefficients: empty exponent list");
    if (alphas.size() != exponents.size())
        throw std::invalid_argument("coefficients: alphas/exponents size mismatch");
    for (double a : alphas)
        if (!(a > 0.0) || !std::isfinite(a))
            throw std::invalid_argument("coefficients: weights must be positive");
    for (double p : exponents)
        if (!(p >= 1.0) || !std::isfinite(p))
            throw std::invalid_argument("coefficients: exponents must be >= 1");
}

} // namespace

double unit_ball_volume(int dim) {
    if (dim < 1) throw std::invalid_argument("unit_ball_volume: dim must be >= 1");
    const double n = static_cast<double>(dim);
    return std::pow(M_PI, n / 2.0) / std::tgamma(1.0 + n / 2.0);
}

double harmonic_mean(const std::vector<double>& exponents) {
    if (exponents.empty())
        throw std::invalid_argument("harmonic_mean: empty exponent list");
    double inv_sum = 0.0;
    for (double p : exponents) {
        if (!(p >= 1.0) || !std::isfinite(p))
            throw std::invalid_argument("harmonic_mean: exponents must be >= 1");
        inv_sum += 1.0 / p;
    }
    return static_cast<double>(exponents.size()) / inv_sum;
}

double lambda_constant(const std::vector<double>& alphas,
                       const std::vector<double>& exponents, int dim) {
    check_family(alphas, exponents);
    if (dim != static_cast<int>(exponents.size()))
        throw std::invalid_argument("lambda_constant: dim mismatch");
    if (dim < 2)
        throw std::invalid_argument("lambda_constant: dim must be >= 2");

    const double pbar = harmonic_mean(exponents);
    if (!(pbar > 1.0))
        throw std::invalid_argument("lambda_constant: harmonic mean must exceed 1");
    const double pbar_conj = pbar / (pbar - 1.0);
    const double n = static_cast<double>(dim);

    const double front = std::pow(2.0, pbar) *
                         std::pow(pbar - 1.0, pbar - 1.0) /
                         std::pow(pbar, pbar);

    double prod = 1.0;       // prod_i p^{1/p} (p')^{1/p'} Gamma(1+1/p')
    double alpha_prod = 1.0; // prod_i alpha^{1/p}
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        const double p = exponents[i];
        alpha_prod *= std::pow(alphas[i], 1.0 / p);
        if (p == 1.0) {
            // p' = infinity: (p')^{1/p'} -> 1, Gamma(1+1/p') = Gamma(1) = 1,
            // and p^{1/p} = 1.
            continue;
        }
        const double pc = p / (p - 1.0);
        prod *= std::pow(p, 1.0 / p) * std::pow(pc, 1.0 / pc) *
                std::tgamma(1.0 + 1.0 / pc);
    }

    const double bracket = prod / (unit_ball_volume(dim) *
                                   std::tgamma(1.0 + n / pbar_conj));
    return front * std::pow(bracket, pbar / n) * std::pow(alpha_prod, pbar / n);
}

AnisotropicCoefficients::AnisotropicCoefficients(std::vector<double> alphas,
                                                 std::vector<double> exponents)
    : alphas_(std::move(alphas)), exponents_(std::move(exponents)) {
    check_family(alphas_, exponents_);
    if (exponents_.size() < 2)
        throw std::invalid_argument("coefficients: dimension must be >= 2");
    pbar_ = harmonic_mean(exponents_);
    if (!(pbar_ > 1.0))
        throw std::invalid_argument(
            "coefficients: harmonic mean pbar = " + std::to_string(pbar_) +
            " must exceed 1");
    pbar_conj_ = pbar_ / (pbar_ - 1.0);
    lambda_ = lambda_constant(alphas_, exponents_, dim());
}

double phi_eval(const std::vector<double>& xi, const YoungFunctionPhi& phi) {
    const auto& c = phi.coeffs;
    if (static_cast<int>(xi.size()) != c.dim())
        throw std::invalid_argument("phi_eval: dimension mismatch");
    double sum = 0.0;
    for (std::size_t i = 0; i < xi.size(); ++i)
        sum += c.alpha(i) * std::pow(std::abs(xi[i]), c.exponent(i));
    return sum;
}

} // namespace aniso
