#pragma once

#include <cmath>
#include <concepts>

#include "taskalloc/error.hpp"

namespace taskalloc::numerics {

/// Shape parameters (p, q) of a Beta distribution on [0,1].
struct BetaShape {
    double p = 2.0;
    double q = 5.0;

    /// Throws DomainError unless p > 0 and q > 0 (both finite).
    void validate() const;

    bool operator==(const BetaShape&) const = default;
};

/// Natural log of Gamma(x) for x > 0 (Lanczos, g = 7).
double log_gamma(double x);

/// ln B(p, q).
double log_beta(double p, double q);

/// Regularized incomplete beta I_x(p, q), i.e. the Beta(p, q) CDF at x.
///
/// Continued fraction evaluated with the modified Lentz method; for
/// x > (p+1)/(p+q+2) the symmetry I_x(p,q) = 1 - I_{1-x}(q,p) is used so
/// that the fraction always converges quickly.
double reg_inc_beta(double x, const BetaShape& shape);

/// Inverse of reg_inc_beta in x, found by bisection on [0,1] to 1e-12.
double inv_reg_inc_beta(double target, const BetaShape& shape);

/// Beta CDF by composite Simpson quadrature of the density.
///
/// Reference implementation for tests. The integral is split at 1/2 and
/// each half is integrated in the variable u = sqrt(t) (resp. sqrt(1-t)),
/// which removes the endpoint singularities of half-integer shapes.
/// `steps` is the number of Simpson panels per half and must be >= 1000.
double oracle_beta_cdf(double x, const BetaShape& shape, int steps);

/// Bisection root finder.
///
/// Requires f(lo) and f(hi) to have opposite signs unless one of them is
/// exactly zero. Stops when the bracket is no wider than tol (or cannot
/// be split further in double precision) and returns its midpoint.
template <std::invocable<double> F>
double bisect_root(F&& f, double lo, double hi, double tol)
{
    if (!(tol > 0.0)) {
        throw DomainError("bisect_root: tol must be positive");
    }
    if (!(lo <= hi)) {
        throw DomainError("bisect_root: lo must not exceed hi");
    }
    double flo = f(lo);
    const double fhi = f(hi);
    if (flo == 0.0) {
        return lo;
    }
    if (fhi == 0.0) {
        return hi;
    }
    if (std::signbit(flo) == std::signbit(fhi)) {
        throw BracketError("bisect_root: f(lo) and f(hi) have the same sign");
    }
    while (hi - lo > tol) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) {
            break;
        }
        const double fmid = f(mid);
        if (fmid == 0.0) {
            return mid;
        }
        if (std::signbit(fmid) == std::signbit(flo)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return lo + 0.5 * (hi - lo);
}

}  // namespace taskalloc::numerics
