#include "aniso/rearrange.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace aniso {

namespace {

std::vector<double> sorted_abs_desc(const GridFunction& f) {
    std::vector<double> v(f.values.size());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = std::abs(f.values[k]);
    std::sort(v.begin(), v.end(), std::greater<double>());
    return v;
}

DecreasingProfile profile_from_sorted(std::vector<double> levels, double cellm) {
    const std::size_t K = levels.size();
    std::vector<double> breakpoints(K + 1);
    for (std::size_t k = 0; k <= K; ++k)
        breakpoints[k] = static_cast<double>(k) * cellm;
    return DecreasingProfile(std::move(breakpoints), std::move(levels));
}

double pow_or_one(double x, double e) {
    if (e == 0.0) return 1.0;
    return std::pow(x, e);
}

// int_lo^hi s^e ds for 0 < lo < hi.
double power_integral(double lo, double hi, double e) {
    if (std::abs(e + 1.0) < 1e-13)
        return std::log(hi / lo);
    return (std::pow(hi, e + 1.0) - std::pow(lo, e + 1.0)) / (e + 1.0);
}

double simpson(const std::function<double(double)>& fn, double a, double b,
               double fa, double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = fn(lm), frm = fn(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return simpson(fn, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson(fn, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate_adaptive(const std::function<double(double)>& fn, double a, double b,
                          double tol) {
    const double m = 0.5 * (a + b);
    const double fa = fn(a), fm = fn(m), fb = fn(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson(fn, a, b, fa, fm, fb, whole, tol, 48);
}

} // namespace

double distribution_function(const GridFunction& f, double t) {
    if (t < 0.0)
        throw std::invalid_argument("distribution_function: t must be >= 0");
    std::size_t count = 0;
    for (double v : f.values)
        if (std::abs(v) > t) ++count;
    return static_cast<double>(count) * f.cell_measure();
}

DecreasingProfile decreasing_rearrangement(const GridFunction& f) {
    return profile_from_sorted(sorted_abs_desc(f), f.cell_measure());
}

RadialProfile radial_rearrangement(const GridFunction& f) {
    const DecreasingProfile p = decreasing_rearrangement(f);
    return sample_profile(p, p.breakpoints());
}

SumRearrangementReport sum_rearrangement_check(const GridFunction& f,
                                               const GridFunction& g) {
    if (!f.same_grid(g))
        throw std::invalid_argument("sum_rearrangement_check: grid mismatch");
    const GridFunction sum = axpy(f, 1.0, g);
    const std::vector<double> sf = sorted_abs_desc(f);
    const std::vector<double> sg = sorted_abs_desc(g);
    const std::vector<double> ss = sorted_abs_desc(sum);
    const double cellm = f.cell_measure();

    SumRearrangementReport rep{-std::numeric_limits<double>::infinity(), 0.0};
    double lhs = 0.0, rhs = 0.0;
    for (std::size_t k = 0; k < ss.size(); ++k) {
        lhs += ss[k] * cellm;
        rhs += (sf[k] + sg[k]) * cellm;
        const double viol = lhs - rhs;
        if (viol > rep.max_violation) {
            rep.max_violation = viol;
            rep.at_r = static_cast<double>(k + 1) * cellm;
        }
    }
    return rep;
}

double hardy_littlewood_gap(const GridFunction& f, const GridFunction& g) {
    if (!f.same_grid(g))
        throw std::invalid_argument("hardy_littlewood_gap: grid mismatch");
    const std::vector<double> sf = sorted_abs_desc(f);
    const std::vector<double> sg = sorted_abs_desc(g);
    double plain = 0.0, sorted = 0.0;
    for (std::size_t k = 0; k < sf.size(); ++k) {
        plain += f.values[k] * g.values[k];
        sorted += sf[k] * sg[k];
    }
    return (plain - sorted) * f.cell_measure();
}

double lorentz_norm(const DecreasingProfile& h, double p_exp, double q_exp) {
    if (!(p_exp >= 1.0) || !std::isfinite(p_exp))
        throw std::invalid_argument("lorentz_norm: p must be in [1, inf)");
    if (!(q_exp >= 1.0))
        throw std::invalid_argument("lorentz_norm: q must be in [1, inf]");

    const auto& bp = h.breakpoints();
    const auto& lv = h.levels();

    if (std::isinf(q_exp)) {
        double best = 0.0;
        for (std::size_t k = 1; k < bp.size(); ++k)
            best = std::max(best, std::pow(bp[k], 1.0 / p_exp) * h.maximal_mean(bp[k]));
        return best;
    }

    const double q = q_exp, p = p_exp;
    const bool integer_q = (q == std::floor(q)) && q <= 60.0;
    double integral = 0.0;

    // first interval: h** = l_0 exactly (a = 0), pure power
    integral += pow_or_one(lv[0], q) * (p / q) * std::pow(bp[1], q / p);

    for (std::size_t k = 1; k < lv.size(); ++k) {
        const double lo = bp[k], hi = bp[k + 1];
        const double l = lv[k];
        const double a = h.concentration(lo) - l * lo; // >= 0 by concavity
        if (l == 0.0 && a == 0.0) continue;
        if (integer_q) {
            const int qi = static_cast<int>(q);
            double binom = 1.0;
            for (int j = 0; j <= qi; ++j) {
                if (j > 0) binom *= static_cast<double>(qi - j + 1) / j;
                const double coeff = binom * pow_or_one(l, q - j) * pow_or_one(a, j);
                if (coeff != 0.0)
                    integral += coeff * power_integral(lo, hi, q / p - 1.0 - j);
            }
        } else {
            integral += integrate_adaptive(
                [&](double s) {
                    return std::pow(s, q / p - 1.0) * std::pow(l + a / s, q);
                },
                lo, hi, 1e-13 * std::max(1.0, integral));
        }
    }
    return std::pow(integral, 1.0 / q);
}

PolyaSzegoReport polya_szego_check(const GridFunction& f,
                                   const AnisotropicCoefficients& coeffs) {
    if (coeffs.dim() != 2)
        throw std::invalid_argument("polya_szego_check: grid fields are 2-dimensional");

    PolyaSzegoReport rep{0.0, 0.0, 0.0};
    for (int axis = 0; axis < 2; ++axis)
        rep.rhs += coeffs.alpha(axis) *
                   gradient_power_sum(f, axis, coeffs.exponent(axis));

    // lhs: piecewise-linear u* through the step midpoints; chain rule gives
    // |grad u_star|^pbar dx = (N om_N^{1/N})^pbar s^{pbar/N'} |u*'(s)|^pbar ds.
    const DecreasingProfile prof = decreasing_rearrangement(f);
    const auto& lv = prof.levels();
    const double cellm = f.cell_measure();
    const double pbar = coeffs.pbar();
    const int N = 2;
    const double beta = pbar * (N - 1) / static_cast<double>(N); // pbar / N'
    const double geom = std::pow(
        N * std::pow(unit_ball_volume(N), 1.0 / N), pbar);

    double sum = 0.0;
    for (std::size_t k = 0; k + 1 < lv.size(); ++k) {
        const double slope = (lv[k + 1] - lv[k]) / cellm;
        if (slope == 0.0) continue;
        const double lo = (static_cast<double>(k) + 0.5) * cellm;
        const double hi = (static_cast<double>(k) + 1.5) * cellm;
        sum += std::pow(std::abs(slope), pbar) *
               (std::pow(hi, beta + 1.0) - std::pow(lo, beta + 1.0)) / (beta + 1.0);
    }
    rep.lhs = coeffs.lambda() * geom * sum;
    rep.relative_violation =
        rep.rhs > 0.0 ? std::max(0.0, rep.lhs - rep.rhs) / rep.rhs : 0.0;
    return rep;
}

} // namespace aniso
