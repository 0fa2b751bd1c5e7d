#pragma once

#include <cstdint>

namespace hidtreat {

/// Counter-based generator (splitmix64).  Each (seed, stream) pair yields an
/// independent reproducible sequence; Monte Carlo replicate r uses stream r.
/// Output is identical across platforms -- no std::*_distribution involved.
class Rng {
  public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t next_u64();

    /// Uniform on [0,1) with 53-bit resolution.
    double uniform();
    /// Uniform on [lo, hi).
    double uniform(double lo, double hi);
    /// Standard normal (Box-Muller; caches the spare deviate).
    double normal();
    bool bernoulli(double p);
    /// Integer in [0, n).
    std::uint64_t below(std::uint64_t n);

    /// Derived independent generator for a labeled sub-task.
    Rng fork(std::uint64_t tag) const;

  private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace hidtreat
