#include "taskalloc/numerics.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace taskalloc::numerics {

namespace {

constexpr double kCfEpsilon = 1e-16;
constexpr double kCfTiny = 1e-300;
constexpr int kCfMaxIterations = 10000;
constexpr double kInverseTolerance = 1e-12;

void check_unit_interval(double x, const char* what)
{
    if (!(x >= 0.0 && x <= 1.0)) {
        throw DomainError(std::string(what) + ": argument " + std::to_string(x) + " outside [0,1]");
    }
}

// Continued fraction for I_x(a,b), evaluated by modified Lentz. Converges
// rapidly for x < (a+1)/(a+b+2).
double beta_continued_fraction(double x, double a, double b)
{
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kCfTiny) {
        d = kCfTiny;
    }
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kCfMaxIterations; ++m) {
        const double m2 = 2.0 * m;
        // even step
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kCfTiny) {
            d = kCfTiny;
        }
        c = 1.0 + aa / c;
        if (std::fabs(c) < kCfTiny) {
            c = kCfTiny;
        }
        d = 1.0 / d;
        h *= d * c;
        // odd step
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kCfTiny) {
            d = kCfTiny;
        }
        c = 1.0 + aa / c;
        if (std::fabs(c) < kCfTiny) {
            c = kCfTiny;
        }
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < kCfEpsilon) {
            return h;
        }
    }
    // Not reached for shapes in the supported range; the last convergent
    // is still the best available estimate.
    return h;
}

// Composite Simpson rule on [0, upper] with an even number of panels.
template <typename G>
double simpson(G&& g, double upper, int panels)
{
    if (panels % 2 != 0) {
        ++panels;
    }
    const double h = upper / panels;
    double sum = g(0.0) + g(upper);
    for (int i = 1; i < panels; ++i) {
        sum += (i % 2 == 1 ? 4.0 : 2.0) * g(i * h);
    }
    return sum * h / 3.0;
}

}  // namespace

void BetaShape::validate() const
{
    if (!(p > 0.0) || !(q > 0.0) || !std::isfinite(p) || !std::isfinite(q)) {
        throw DomainError("Beta shape requires p > 0 and q > 0, got p=" + std::to_string(p) +
                          " q=" + std::to_string(q));
    }
}

double log_gamma(double x)
{
    static constexpr std::array<double, 9> coeff = {
        0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
        771.32342877765313,   -176.61502916214059,   12.507343278686905,
        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
    };
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError("log_gamma: argument must be positive and finite");
    }
    if (x < 0.5) {
        // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
        return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) - log_gamma(1.0 - x);
    }
    const double z = x - 1.0;
    double a = coeff[0];
    const double t = z + 7.5;
    for (std::size_t i = 1; i < coeff.size(); ++i) {
        a += coeff[i] / (z + static_cast<double>(i));
    }
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(a);
}

double log_beta(double p, double q)
{
    return log_gamma(p) + log_gamma(q) - log_gamma(p + q);
}

double reg_inc_beta(double x, const BetaShape& shape)
{
    shape.validate();
    check_unit_interval(x, "reg_inc_beta");
    if (x == 0.0) {
        return 0.0;
    }
    if (x == 1.0) {
        return 1.0;
    }
    const double p = shape.p;
    const double q = shape.q;
    const double log_front = p * std::log(x) + q * std::log1p(-x) - log_beta(p, q);
    const double front = std::exp(log_front);
    double value;
    if (x < (p + 1.0) / (p + q + 2.0)) {
        value = front * beta_continued_fraction(x, p, q) / p;
    } else {
        value = 1.0 - front * beta_continued_fraction(1.0 - x, q, p) / q;
    }
    if (value < 0.0) {
        return 0.0;
    }
    if (value > 1.0) {
        return 1.0;
    }
    return value;
}

double inv_reg_inc_beta(double target, const BetaShape& shape)
{
    shape.validate();
    check_unit_interval(target, "inv_reg_inc_beta");
    if (target == 0.0) {
        return 0.0;
    }
    if (target == 1.0) {
        return 1.0;
    }
    return bisect_root([&](double x) { return reg_inc_beta(x, shape) - target; }, 0.0, 1.0,
                       kInverseTolerance);
}

double oracle_beta_cdf(double x, const BetaShape& shape, int steps)
{
    shape.validate();
    check_unit_interval(x, "oracle_beta_cdf");
    if (steps < 1000) {
        throw DomainError("oracle_beta_cdf: steps must be >= 1000");
    }
    const double p = shape.p;
    const double q = shape.q;
    const double log_norm = std::lgamma(p) + std::lgamma(q) - std::lgamma(p + q);

    // d/du of t = u^2 gives 2u dt; the density t^(p-1) (1-t)^(q-1) becomes
    // 2 u^(2p-1) (1-u^2)^(q-1), smooth at u = 0 for half-integer p.
    auto transformed = [log_norm](double a, double b) {
        return [=](double u) {
            if (u <= 0.0) {
                return 2.0 * a - 1.0 == 0.0 ? 2.0 * std::exp(-log_norm) : 0.0;
            }
            const double rest = 1.0 - u * u;
            if (rest <= 0.0) {
                return b == 1.0 ? 2.0 * u * std::exp(-log_norm) : 0.0;
            }
            return 2.0 * std::exp((2.0 * a - 1.0) * std::log(u) + (b - 1.0) * std::log(rest) - log_norm);
        };
    };
    auto lower = transformed(p, q);  // mass of [0, y]
    auto upper = transformed(q, p);  // mass of [1 - y, 1]

    if (x <= 0.5) {
        return simpson(lower, std::sqrt(x), steps);
    }
    const double half = std::sqrt(0.5);
    return simpson(lower, half, steps) + simpson(upper, half, steps) -
           simpson(upper, std::sqrt(1.0 - x), steps);
}

}  // namespace taskalloc::numerics
