#pragma once

#include <cstddef>
#include <functional>
#include <variant>
#include <vector>

#include "taskalloc/numerics.hpp"

namespace taskalloc::lattice {

struct Task {
    int id = 0;
    double theta = 0.0;  ///< intricacy in [0,1]
};

/// Set of task ids delegated to the machine, kept sorted and unique.
class Allocation {
public:
    Allocation() = default;
    explicit Allocation(std::vector<int> ids);

    const std::vector<int>& ids() const { return ids_; }
    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }
    bool contains(int id) const;
    /// True when `other` is a subset of this allocation.
    bool includes(const Allocation& other) const;
    /// |A| / universe_size; 0 for an empty universe.
    double fraction(std::size_t universe_size) const;

    bool operator==(const Allocation&) const = default;

private:
    std::vector<int> ids_;
};

using HumanUtility = std::function<double(const Task&)>;
using TaskValue = std::function<double(const Task&)>;

/// alpha_M - beta_M theta + gamma t.
struct LinearGrowth {
    double alpha_M = 0.0;
    double beta_M = 0.0;
    double gamma = 0.0;
};

/// limit(task) * (1 - 2^-t). Non-decreasing in t iff limit >= 0.
struct Saturating {
    TaskValue limit;
};

/// rows[t][id]; years past the last row repeat it, which is also the limit.
struct StepTable {
    std::vector<std::vector<double>> rows;
};

/// Machine utility over time for every task.
class MachineSchedule {
public:
    explicit MachineSchedule(LinearGrowth schedule);
    explicit MachineSchedule(Saturating schedule);
    explicit MachineSchedule(StepTable schedule);

    double at(int t, const Task& task) const;
    /// Value as t -> infinity (+inf for a linear schedule with gamma > 0).
    double limit(const Task& task) const;

    /// Number of per-task entries each table row must hold, 0 if not a table.
    std::size_t table_width() const;

private:
    std::variant<LinearGrowth, Saturating, StepTable> schedule_;
};

/// Finite universe of tasks with a human utility and a machine schedule.
class TaskUniverse {
public:
    /// Throws ValidationError unless ids are 0..N-1 in order and every
    /// theta lies in [0,1].
    TaskUniverse(std::vector<Task> tasks, HumanUtility human, MachineSchedule machine);

    const std::vector<Task>& tasks() const { return tasks_; }
    std::size_t size() const { return tasks_.size(); }

    double human_utility(const Task& task) const { return human_(task); }
    double machine_utility(int t, const Task& task) const { return machine_.at(t, task); }
    double machine_utility_limit(const Task& task) const { return machine_.limit(task); }

    /// Samples u_M(t+1) >= u_M(t) - 1e-12 for every task and t < years.
    bool capability_non_decreasing(int years) const;

private:
    std::vector<Task> tasks_;
    HumanUtility human_;
    MachineSchedule machine_;
};

/// Task intricacies placed at the Beta quantiles (i + 0.5) / n.
std::vector<Task> quantile_tasks(int n, const numerics::BetaShape& shape);

HumanUtility linear_human(double alpha_H, double beta_H);

enum class TraceStatus {
    Stable,        ///< unchanged for stability_window consecutive years
    ReachedLimit,  ///< equal to the fixed point of the limiting utilities
    Truncated,     ///< max_years exhausted first
};

struct DelegationTrace {
    /// iterations[0] is the empty starting allocation, iterations[t+1] = F at t.
    std::vector<Allocation> iterations;
    int converged_at = 0;
    TraceStatus status = TraceStatus::Truncated;

    const Allocation& final_allocation() const { return iterations.back(); }
};

/// Tasks whose machine utility at t is at least the human utility.
Allocation apply_F(const TaskUniverse& universe, int t);

/// Iterates A_{t+1} = F(t) from the empty allocation. Throws
/// MonotonicityViolation as soon as an allocation loses a task.
DelegationTrace run_delegation(const TaskUniverse& universe, int max_years,
                               int stability_window = 3);

/// Tasks with machine_utility_limit >= human_utility.
Allocation fixed_point_oracle(const TaskUniverse& universe);

/// Checks F(A) subset of F(B) over `samples` deterministic pairs A subset of B.
bool check_isotone(const TaskUniverse& universe, int t, int samples);

}  // namespace taskalloc::lattice
