#include "taskalloc/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <string>
#include <thread>

#include "taskalloc/error.hpp"

namespace taskalloc::sweep {

namespace {

void check_axis(const std::vector<double>& axis, const char* name)
{
    if (axis.empty()) {
        throw ValidationError(std::string(name) + " must not be empty");
    }
    for (std::size_t i = 0; i < axis.size(); ++i) {
        if (!(axis[i] > 0.0) || !std::isfinite(axis[i])) {
            throw ValidationError(std::string(name) + " entries must be positive");
        }
        if (i > 0 && !(axis[i] > axis[i - 1])) {
            throw ValidationError(std::string(name) + " must be strictly ascending");
        }
    }
}

}  // namespace

void GridSpec::validate() const
{
    check_axis(p_values, "p_values");
    check_axis(q_values, "q_values");
    check_axis(gamma_values, "gamma_values");
    if (horizon_years < 1) {
        throw ValidationError("horizon_years must be >= 1");
    }
    if (!(initial_share_target > 0.0 && initial_share_target < 1.0)) {
        throw ValidationError("initial_share_target must lie in (0,1)");
    }
    if (!(beta_H > 0.0) || !(beta_M > 0.0) || !std::isfinite(alpha_H)) {
        throw ValidationError("beta_H and beta_M must be positive, alpha_H finite");
    }
}

GridSpec paper_grid()
{
    GridSpec spec;
    spec.p_values = {1.5, 2.0, 2.5, 3.0, 3.5};
    spec.q_values = {5.0};
    spec.gamma_values = {0.03, 0.04, 0.05, 0.06, 0.07};
    return spec;
}

boundary::ContinuousParams cell_params(const GridSpec& spec, double p, double q, double gamma)
{
    boundary::ContinuousParams params;
    params.alpha_H = spec.alpha_H;
    params.beta_H = spec.beta_H;
    params.beta_M = spec.beta_M;
    params.gamma = gamma;
    params.shape = {p, q};
    params.start_year = spec.start_year;
    const double theta0 = numerics::inv_reg_inc_beta(spec.initial_share_target, params.shape);
    params.alpha_M = spec.alpha_H + (spec.beta_M + spec.beta_H) * theta0;
    params.validate();
    return params;
}

std::optional<int> cross50(const boundary::ContinuousParams& params, int horizon_years)
{
    params.validate();
    for (int t = 0; t <= horizon_years; ++t) {
        if (boundary::automated_share(t, params) >= 0.5) {
            return params.start_year + t;
        }
    }
    return std::nullopt;
}

std::vector<GridCell> run_grid(const GridSpec& spec)
{
    spec.validate();
    struct Axes {
        double p, q, gamma;
    };
    std::vector<Axes> order;
    for (const double p : spec.p_values) {
        for (const double q : spec.q_values) {
            for (const double gamma : spec.gamma_values) {
                order.push_back({p, q, gamma});
            }
        }
    }

    // Workers claim cells by index and write into the preassigned slot, so
    // the output order never depends on completion order.
    std::vector<GridCell> cells(order.size());
    std::vector<std::exception_ptr> failures(order.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < order.size(); i = next++) {
            try {
                const auto& [p, q, gamma] = order[i];
                const auto params = cell_params(spec, p, q, gamma);
                cells[i] = GridCell{p,
                                    q,
                                    gamma,
                                    params.alpha_M,
                                    boundary::automated_share(spec.horizon_years, params),
                                    cross50(params, spec.horizon_years)};
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };
    const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t count = std::min(hw, order.size());
    std::vector<std::thread> pool;
    for (std::size_t k = 1; k < count; ++k) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto& thread : pool) {
        thread.join();
    }
    for (const auto& failure : failures) {
        if (failure) {
            std::rethrow_exception(failure);
        }
    }
    return cells;
}

}  // namespace taskalloc::sweep
