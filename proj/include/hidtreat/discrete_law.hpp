#pragma once

#include <Eigen/Dense>
#include <array>
#include <string>
#include <vector>

#include "hidtreat/dataset.hpp"
#include "hidtreat/rng.hpp"

namespace hidtreat {

/// One covariate cell of a fully discrete latent law.  Columns of pY are
/// indexed by a* in {0,1}; rows by outcome level (values in `levels`).
struct LawStratum {
    double weight = 1.0;
    double pi = 0.5;               // pr(A*=1)
    Eigen::MatrixXd pY;            // k x 2, pY(l, a*) = pr(Y = levels[l] | A*=a*)
    std::array<double, 2> pA{};    // pr(A=1 | A*=a*)
    std::array<double, 2> pZ{};    // pr(Z=1 | A*=a*)
    std::vector<double> levels;    // outcome values; {0,1} for binary

    int k() const { return static_cast<int>(pY.rows()); }
    /// E(Y | A*=astar) under the stratum law.
    double outcome_mean(int astar) const;
};

struct DiscreteLaw {
    std::vector<LawStratum> strata;

    int k() const { return strata.empty() ? 0 : strata.front().k(); }
    /// Enforces the type invariants: probabilities in [0,1], pY columns sum
    /// to 1, weights sum to 1, and relevance (all three component pairs
    /// separated) in every stratum.  Throws ValidationError.
    void validate(bool require_relevance = true) const;

    std::string to_json() const;
    static DiscreteLaw from_json(const std::string& text);
};

/// Convenience single-stratum binary-outcome law.
/// pY1/pA1/pZ1 are (value given A*=1, value given A*=0) pairs, matching the
/// order used in the simulation fixtures.
DiscreteLaw binary_law(double pi, std::array<double, 2> pY1, std::array<double, 2> pA1,
                       std::array<double, 2> pZ1);

/// Per-stratum cell probabilities p[l](y_level, a, z) flattened as a k x 4
/// matrix with column index 2*a + z.  Cells of each stratum sum to 1.
std::vector<Eigen::MatrixXd> exact_joint(const DiscreteLaw& law);

struct SampledLaw {
    ObservedDataset data;
    std::vector<int> astar;          // latent treatment per unit
    std::vector<int> stratum;        // stratum index per unit
};

/// I.i.d. draws honoring pr(A*) pr(Y|A*) pr(A|A*) pr(Z|A*) per stratum.  With
/// several strata the stratum index is exposed as the single covariate x1.
SampledLaw forward_sample(const DiscreteLaw& law, Eigen::Index n, Rng& rng);

/// JSON (de)serialization of EstimatorConfig, field names as in the docs.
std::string config_to_json(const EstimatorConfig& cfg);
EstimatorConfig config_from_json(const std::string& text);

} // namespace hidtreat
