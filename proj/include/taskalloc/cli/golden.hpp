#pragma once

#include <string>
#include <vector>

namespace taskalloc::cli {

/// One published value reproduced by the library.
struct GoldenCheck {
    std::string name;
    double expected = 0.0;
    double actual = 0.0;
    double tolerance = 0.0;

    bool passed() const;
};

/// Every embedded reference value, in a fixed order.
std::vector<GoldenCheck> run_golden_checks();

/// Aligned pass/fail table with a summary line.
std::string format_golden_table(const std::vector<GoldenCheck>& checks);

}  // namespace taskalloc::cli
