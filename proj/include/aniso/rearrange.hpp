#pragma once

#include "aniso/coefficients.hpp"
#include "aniso/grid.hpp"
#include "aniso/profiles.hpp"

namespace aniso {

/// Distribution function mu(t) = |{ |f| > t }| (cell-counting measure).
/// Right-continuous and nonincreasing in t; t must be >= 0.
double distribution_function(const GridFunction& f, double t);

/// Decreasing rearrangement of |f|: the sorted cell values as a step
/// profile with one step of width hx*hy per cell. Ties are broken by cell
/// index (levels are equal, so the profile is unaffected; determinism only).
DecreasingProfile decreasing_rearrangement(const GridFunction& f);

/// f* reinterpreted on the mass coordinate of the ball with |ball| = |Omega|:
/// node samples of the step profile at its own breakpoints (the closing node
/// carries the last level, so a constant field stays constant).
RadialProfile radial_rearrangement(const GridFunction& f);

/// Verifies int_0^r (f+g)* <= int_0^r f* + g* at every breakpoint of the
/// common step grid.
struct SumRearrangementReport {
    double max_violation; // max over r of lhs - rhs; <= 0 up to rounding
    double at_r;          // where the max is attained
};
SumRearrangementReport sum_rearrangement_check(const GridFunction& f,
                                               const GridFunction& g);

/// sum f*g*cellm - int f* g* ds; the Hardy-Littlewood inequality makes this
/// <= 0 up to rounding.
double hardy_littlewood_gap(const GridFunction& f, const GridFunction& g);

/// Lorentz norm ||h||_{p,q} of a step profile h = p*:
///   q < inf : [ int_0^{|Omega|} (s^{1/p} h**(s))^q ds/s ]^{1/q}
///   q = inf : sup_s s^{1/p} h**(s)
/// with h**(s) = (1/s) int_0^s h*. On each step interval h**(s) = l + a/s
/// with a >= 0, so s^{1/p} h** has no interior maximum and the q = inf sup
/// is attained at a breakpoint. For integer q the integral is evaluated in
/// closed form (binomial expansion; the first interval is a pure power);
/// otherwise by fixed-order Gauss-Legendre on each (regular) interval.
/// Requires p in [1, inf), q in [1, inf]; pass q = infinity for the sup form.
double lorentz_norm(const DecreasingProfile& h, double p_exp, double q_exp);

/// Discrete Polya-Szego data: anisotropic gradient energy of f versus the
/// symmetrized gradient energy of its radial rearrangement,
///   rhs = sum_i alpha_i int |d_i f|^{p_i} dx      (forward differences,
///         zero extension outside Omega)
///   lhs = Lambda int |grad f_star|^{pbar} dx      (chain rule through the
///         mass coordinate on the piecewise-linear rearrangement)
/// The principle states lhs <= rhs; discretely this holds up to a
/// consistency error for smooth fields.
struct PolyaSzegoReport {
    double lhs;
    double rhs;
    double relative_violation; // max(0, lhs - rhs) / rhs (0 if rhs == 0)
};
PolyaSzegoReport polya_szego_check(const GridFunction& f,
                                   const AnisotropicCoefficients& coeffs);

} // namespace aniso
