#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hidtreat {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IdentificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BandwidthError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct QuantileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SolveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Accumulates non-fatal events (clamps, trims, fallbacks, restarts) so they
/// surface in reports instead of disappearing.
struct Diagnostics {
    long clamp_count = 0;       // probability updates pushed back into (0,1)
    long trim_count = 0;        // floored denominators / separations
    long nn_fallback_count = 0; // kernel rows with vanishing total weight
    long dropped_units = 0;     // units excluded (moment-plugin only)
    long em_restarts = 0;
    std::vector<int> em_iterations; // per fold
    std::vector<std::string> warnings;

    void warn(std::string msg) { warnings.push_back(std::move(msg)); }
    void merge(const Diagnostics& other) {
        clamp_count += other.clamp_count;
        trim_count += other.trim_count;
        nn_fallback_count += other.nn_fallback_count;
        dropped_units += other.dropped_units;
        em_restarts += other.em_restarts;
        em_iterations.insert(em_iterations.end(), other.em_iterations.begin(),
                             other.em_iterations.end());
        warnings.insert(warnings.end(), other.warnings.begin(), other.warnings.end());
    }
};

} // namespace hidtreat
