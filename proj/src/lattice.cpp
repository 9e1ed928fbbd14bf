#include "taskalloc/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "taskalloc/error.hpp"

namespace taskalloc::lattice {

Allocation::Allocation(std::vector<int> ids) : ids_(std::move(ids))
{
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool Allocation::contains(int id) const
{
    return std::binary_search(ids_.begin(), ids_.end(), id);
}

bool Allocation::includes(const Allocation& other) const
{
    return std::includes(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end());
}

double Allocation::fraction(std::size_t universe_size) const
{
    if (universe_size == 0) {
        return 0.0;
    }
    return static_cast<double>(ids_.size()) / static_cast<double>(universe_size);
}

MachineSchedule::MachineSchedule(LinearGrowth schedule) : schedule_(schedule) {}

MachineSchedule::MachineSchedule(Saturating schedule) : schedule_(std::move(schedule))
{
    if (!std::get<Saturating>(schedule_).limit) {
        throw ValidationError("saturating schedule needs a limit function");
    }
}

MachineSchedule::MachineSchedule(StepTable schedule) : schedule_(std::move(schedule))
{
    const auto& rows = std::get<StepTable>(schedule_).rows;
    if (rows.empty()) {
        throw ValidationError("step schedule needs at least one row");
    }
    for (const auto& row : rows) {
        if (row.size() != rows.front().size()) {
            throw ValidationError("step schedule rows must have equal length");
        }
    }
}

double MachineSchedule::at(int t, const Task& task) const
{
    if (t < 0) {
        throw DomainError("machine utility: t must be non-negative");
    }
    struct Visitor {
        int t;
        const Task& task;
        double operator()(const LinearGrowth& s) const
        {
            return s.alpha_M - s.beta_M * task.theta + s.gamma * t;
        }
        double operator()(const Saturating& s) const
        {
            return s.limit(task) * (1.0 - std::ldexp(1.0, -t));
        }
        double operator()(const StepTable& s) const
        {
            const auto row = std::min<std::size_t>(static_cast<std::size_t>(t), s.rows.size() - 1);
            return s.rows[row][static_cast<std::size_t>(task.id)];
        }
    };
    return std::visit(Visitor{t, task}, schedule_);
}

double MachineSchedule::limit(const Task& task) const
{
    struct Visitor {
        const Task& task;
        double operator()(const LinearGrowth& s) const
        {
            if (s.gamma > 0.0) {
                return std::numeric_limits<double>::infinity();
            }
            if (s.gamma < 0.0) {
                return -std::numeric_limits<double>::infinity();
            }
            return s.alpha_M - s.beta_M * task.theta;
        }
        double operator()(const Saturating& s) const { return s.limit(task); }
        double operator()(const StepTable& s) const
        {
            return s.rows.back()[static_cast<std::size_t>(task.id)];
        }
    };
    return std::visit(Visitor{task}, schedule_);
}

std::size_t MachineSchedule::table_width() const
{
    if (const auto* table = std::get_if<StepTable>(&schedule_)) {
        return table->rows.front().size();
    }
    return 0;
}

TaskUniverse::TaskUniverse(std::vector<Task> tasks, HumanUtility human, MachineSchedule machine)
    : tasks_(std::move(tasks)), human_(std::move(human)), machine_(std::move(machine))
{
    if (!human_) {
        throw ValidationError("task universe needs a human utility");
    }
    for (std::size_t i = 0; i < tasks_.size(); ++i) {
        if (tasks_[i].id != static_cast<int>(i)) {
            throw ValidationError("task ids must be contiguous from 0; position " +
                                  std::to_string(i) + " holds id " + std::to_string(tasks_[i].id));
        }
        const double theta = tasks_[i].theta;
        if (!(theta >= 0.0 && theta <= 1.0)) {
            throw ValidationError("task " + std::to_string(i) + " has theta outside [0,1]");
        }
    }
    const std::size_t width = machine_.table_width();
    if (width != 0 && width != tasks_.size()) {
        throw ValidationError("step schedule width " + std::to_string(width) +
                              " does not match universe size " + std::to_string(tasks_.size()));
    }
}

bool TaskUniverse::capability_non_decreasing(int years) const
{
    for (const Task& task : tasks_) {
        for (int t = 0; t < years; ++t) {
            if (machine_.at(t + 1, task) < machine_.at(t, task) - 1e-12) {
                return false;
            }
        }
    }
    return true;
}

std::vector<Task> quantile_tasks(int n, const numerics::BetaShape& shape)
{
    if (n < 0) {
        throw DomainError("quantile_tasks: n must be non-negative");
    }
    std::vector<Task> tasks;
    tasks.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double level = (i + 0.5) / n;
        tasks.push_back({i, numerics::inv_reg_inc_beta(level, shape)});
    }
    return tasks;
}

HumanUtility linear_human(double alpha_H, double beta_H)
{
    return [=](const Task& task) { return alpha_H + beta_H * task.theta; };
}

Allocation apply_F(const TaskUniverse& universe, int t)
{
    std::vector<int> ids;
    for (const Task& task : universe.tasks()) {
        // machine on ties
        if (universe.machine_utility(t, task) >= universe.human_utility(task)) {
            ids.push_back(task.id);
        }
    }
    return Allocation(std::move(ids));
}

Allocation fixed_point_oracle(const TaskUniverse& universe)
{
    std::vector<int> ids;
    for (const Task& task : universe.tasks()) {
        if (universe.machine_utility_limit(task) >= universe.human_utility(task)) {
            ids.push_back(task.id);
        }
    }
    return Allocation(std::move(ids));
}

DelegationTrace run_delegation(const TaskUniverse& universe, int max_years, int stability_window)
{
    if (max_years < 1) {
        throw DomainError("run_delegation: max_years must be >= 1");
    }
    if (stability_window < 1) {
        throw DomainError("run_delegation: stability_window must be >= 1");
    }
    const Allocation limit = fixed_point_oracle(universe);

    DelegationTrace trace;
    trace.iterations.emplace_back();
    int run_start = 0;  // first index of the current run of equal allocations
    for (int t = 0; t < max_years; ++t) {
        Allocation next = apply_F(universe, t);
        const Allocation& current = trace.iterations.back();
        if (!next.includes(current)) {
            throw MonotonicityViolation("allocation at t=" + std::to_string(t + 1) +
                                        " drops tasks automated at t=" + std::to_string(t) +
                                        "; machine utility is not non-decreasing in t");
        }
        const int index = t + 1;
        if (next != current) {
            run_start = index;
        }
        trace.iterations.push_back(std::move(next));
        if (trace.iterations.back() == limit) {
            trace.converged_at = std::max(run_start, 1);
            trace.status = TraceStatus::ReachedLimit;
            return trace;
        }
        if (index - run_start >= stability_window) {
            trace.converged_at = std::max(run_start, 1);
            trace.status = TraceStatus::Stable;
            return trace;
        }
    }
    trace.converged_at = max_years;
    trace.status = TraceStatus::Truncated;
    return trace;
}

bool check_isotone(const TaskUniverse& universe, int t, int samples)
{
    if (samples < 1) {
        throw DomainError("check_isotone: samples must be >= 1");
    }
    // F ignores its set argument, so F(A) and F(B) are evaluated at the
    // same t for every sampled pair; the pairs themselves only exercise
    // the inclusion bookkeeping.
    std::mt19937_64 rng(0x5eed1a77ULL);
    std::bernoulli_distribution coin(0.5);
    for (int s = 0; s < samples; ++s) {
        std::vector<int> larger;
        std::vector<int> smaller;
        for (const Task& task : universe.tasks()) {
            if (coin(rng)) {
                larger.push_back(task.id);
                if (coin(rng)) {
                    smaller.push_back(task.id);
                }
            }
        }
        const Allocation a(std::move(smaller));
        const Allocation b(std::move(larger));
        if (!b.includes(a)) {
            return false;
        }
        const Allocation fa = apply_F(universe, t);
        const Allocation fb = apply_F(universe, t);
        if (!fb.includes(fa)) {
            return false;
        }
    }
    return true;
}

}  // namespace taskalloc::lattice
