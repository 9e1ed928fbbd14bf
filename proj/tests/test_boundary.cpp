#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"

#include "taskalloc/boundary.hpp"
#include "taskalloc/error.hpp"

using namespace taskalloc;
using namespace taskalloc::boundary;

namespace {

// Beta(2,5) CDF, expanded by hand.
double beta25_cdf(double x)
{
    return 1.0 - std::pow(1.0 - x, 5) * (1.0 + 5.0 * x);
}

// Beta(3,5) CDF as a binomial tail: P(Bin(7, x) >= 3).
double beta35_cdf(double x)
{
    const double y = 1.0 - x;
    return 1.0 - (std::pow(y, 7) + 7.0 * x * std::pow(y, 6) + 21.0 * x * x * std::pow(y, 5));
}

}  // namespace

TEST_CASE("payoffs and advantage")
{
    const auto params = paper_defaults();
    CHECK(payoff_human(0.0, params) == 1.0);
    CHECK(payoff_human(1.0, params) == 2.5);
    CHECK(std::fabs(payoff_machine(0.0, 0, params) - 1.3704) < 1e-12);
    auto adv = [&](double theta, int t) { return payoff_machine(theta, t, params) - payoff_human(theta, params); };
    CHECK(std::fabs(adv(0.0, 0) - 0.3704) < 1e-4);
    CHECK(std::fabs(adv(0.1, 0) + 0.0296) < 1e-4);
    CHECK(std::fabs(adv(1.0, 0) + 3.6296) < 1e-4);
    CHECK(std::fabs(adv(0.3, 20) - 0.0376) < 1e-4);
    CHECK_THROWS_AS(payoff_human(1.1, params), DomainError);
    CHECK_THROWS_AS(payoff_machine(-0.1, 0, params), DomainError);
    CHECK_THROWS_AS(payoff_machine(0.5, -1, params), DomainError);
}

TEST_CASE("boundary and share")
{
    const auto params = paper_defaults();
    const double thetas[] = {0.0926, 0.1468, 0.2010, 0.2552, 0.3094};
    for (int k = 0; k < 5; ++k) {
        CHECK(std::fabs(automation_boundary(5 * k, params) - thetas[k]) < 5e-4);
    }
    CHECK(std::fabs(automated_share(0, params) - 0.100009) < 1e-5);
    CHECK(std::fabs(automated_share(20, params) - 0.599906) < 1e-5);
    // the boundary passes 1 after (4 - 0.3704) / 0.04336 = 83.7 years
    CHECK(automated_share(84, params) == 1.0);
    CHECK(automated_share(500, params) == 1.0);

    auto receding = params;
    receding.alpha_M = 0.5;
    CHECK(automation_boundary(0, receding) < 0.0);
    CHECK(automated_share(0, receding) == 0.0);
}

TEST_CASE("simulate_boundary")
{
    const auto traj = simulate_boundary(paper_defaults(), 20);
    REQUIRE(traj.size() == 21);
    CHECK(traj.front().year == 2025);
    CHECK(traj.back().year == 2045);
    CHECK(std::fabs(traj[5].share - 0.216) < 5e-4);
    CHECK(std::fabs(traj[15].share - 0.478) < 5e-4);
    CHECK(std::fabs(traj[15].share - 0.478360) < 1e-5);
    CHECK(std::fabs(traj[16].share - 0.503688) < 1e-5);

    const auto single = simulate_boundary(paper_defaults(), 0);
    REQUIRE(single.size() == 1);
    CHECK(single[0].year == 2025);
    CHECK_THROWS_AS(simulate_boundary(paper_defaults(), -1), DomainError);
}

TEST_CASE("advantage_grid")
{
    const auto params = paper_defaults();
    const auto grid = advantage_grid(params, {2025, 2035, 2045}, {0.0, 0.1, 0.3, 1.0});
    REQUIRE(grid.values.size() == 12);
    CHECK(std::fabs(grid.at(0, 0) - 0.3704) < 1e-12);
    CHECK(std::fabs(grid.at(0, 1) + 0.0296) < 1e-12);
    CHECK(std::fabs(grid.at(0, 3) + 3.6296) < 1e-12);
    CHECK(std::fabs(grid.at(2, 2) - 0.0376) < 1e-12);

    // the zero crossing of each row is the boundary
    const auto dense = advantage_grid(params, {2035}, {0.0, automation_boundary(10, params), 1.0});
    CHECK(std::fabs(dense.at(0, 1)) < 1e-12);
    CHECK(std::fabs(automation_boundary(10, params) - 0.2010) < 5e-4);

    CHECK_THROWS_AS(advantage_grid(params, {}, {0.5}), DomainError);
    CHECK_THROWS_AS(advantage_grid(params, {2025}, {0.5, 0.1}), DomainError);
}

TEST_CASE("calibrate")
{
    const auto fitted = calibrate(0.10, 0.599906, 20, 1.0, 1.5, 2.5, {2.0, 5.0});
    CHECK(std::fabs(fitted.alpha_M - 1.3704) < 5e-4);
    CHECK(std::fabs(fitted.gamma - 0.04336) < 5e-5);
    CHECK(std::fabs(automated_share(0, fitted) - 0.10) < 1e-9);
    CHECK(std::fabs(automated_share(20, fitted) - 0.599906) < 1e-9);

    SUBCASE("Beta(3,5) against an independent root")
    {
        double lo = 0.0, hi = 1.0;
        for (int i = 0; i < 200; ++i) {
            const double mid = 0.5 * (lo + hi);
            (beta35_cdf(mid) < 0.10 ? lo : hi) = mid;
        }
        const double expected = 1.0 + 4.0 * 0.5 * (lo + hi);
        const auto beta35 = calibrate(0.10, 0.60, 20, 1.0, 1.5, 2.5, {3.0, 5.0});
        CHECK(std::fabs(beta35.alpha_M - expected) < 1e-10);
        CHECK(std::fabs(beta35.alpha_M - 1.678553669589) < 1e-10);
    }

    SUBCASE("round trip")
    {
        std::mt19937_64 rng(5);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (int trial = 0; trial < 200; ++trial) {
            const numerics::BetaShape shape{0.5 + 5.0 * unit(rng), 0.5 + 5.0 * unit(rng)};
            const double s0 = 0.02 + 0.4 * unit(rng);
            const double s1 = s0 + (0.97 - s0) * (0.05 + 0.9 * unit(rng));
            const int horizon = 1 + static_cast<int>(40 * unit(rng));
            const auto p = calibrate(s0, s1, horizon, 1.0, 1.5, 2.5, shape);
            CHECK(std::fabs(automated_share(0, p) - s0) < 1e-9);
            CHECK(std::fabs(automated_share(horizon, p) - s1) < 1e-9);
        }
    }

    CHECK_THROWS_AS(calibrate(0.0, 0.5, 20, 1.0, 1.5, 2.5, {2.0, 5.0}), DomainError);
    CHECK_THROWS_AS(calibrate(0.1, 1.0, 20, 1.0, 1.5, 2.5, {2.0, 5.0}), DomainError);
    CHECK_THROWS_AS(calibrate(0.6, 0.1, 20, 1.0, 1.5, 2.5, {2.0, 5.0}), DomainError);
    CHECK_THROWS_AS(calibrate(0.1, 0.5, 0, 1.0, 1.5, 2.5, {2.0, 5.0}), DomainError);
}

TEST_CASE("boundary is linear in t and shares are monotone")
{
    const auto params = paper_defaults();
    for (int t = 0; t < 100; ++t) {
        const double step = automation_boundary(t + 1, params) - automation_boundary(t, params);
        CHECK(std::fabs(step - params.gamma / (params.beta_M + params.beta_H)) < 1e-12);
        CHECK(automated_share(t + 1, params) >= automated_share(t, params));
    }
}

TEST_CASE("the boundary is where the payoffs tie")
{
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int checked = 0;
    while (checked < 500) {
        ContinuousParams p = paper_defaults();
        p.alpha_H = 2.0 * unit(rng);
        p.beta_H = 0.1 + 3.0 * unit(rng);
        p.alpha_M = 2.0 * unit(rng);
        p.beta_M = 0.1 + 3.0 * unit(rng);
        p.gamma = 0.001 + 0.1 * unit(rng);
        const int t = static_cast<int>(30 * unit(rng));
        const double theta = automation_boundary(t, p);
        if (theta < 0.0 || theta > 1.0) {
            continue;
        }
        CHECK(std::fabs(payoff_machine(theta, t, p) - payoff_human(theta, p)) < 1e-12);
        if (theta > 1e-3) {
            CHECK(payoff_machine(theta - 1e-3, t, p) > payoff_human(theta - 1e-3, p));
        }
        if (theta < 1.0 - 1e-3) {
            CHECK(payoff_machine(theta + 1e-3, t, p) < payoff_human(theta + 1e-3, p));
        }
        ++checked;
    }
}

TEST_CASE("share equals the Beta(2,5) CDF at the boundary")
{
    const auto params = paper_defaults();
    for (int t = 0; t <= 40; ++t) {
        const double theta = std::clamp(automation_boundary(t, params), 0.0, 1.0);
        CHECK(std::fabs(automated_share(t, params) - beta25_cdf(theta)) < 1e-12);
    }
}

TEST_CASE("continuous parameter validation")
{
    auto p = paper_defaults();
    CHECK_NOTHROW(p.validate());
    p.beta_M = 0.0;
    CHECK_THROWS_AS(p.validate(), ValidationError);
    p = paper_defaults();
    p.gamma = -0.01;
    CHECK_THROWS_AS(p.validate(), ValidationError);
    p = paper_defaults();
    p.shape.q = 0.0;
    CHECK_THROWS_AS(p.validate(), ValidationError);
}
