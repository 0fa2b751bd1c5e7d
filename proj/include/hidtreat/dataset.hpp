#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

namespace hidtreat {

enum class OutcomeKind { Binary, Categorical, Continuous };

std::string to_string(OutcomeKind k);
OutcomeKind outcome_kind_from_string(const std::string& s);

/// Observed units (Y, A, Z, X).  A and Z are binary; Y is binary, a level in
/// 1..k, or real depending on `outcome`.  Immutable by convention after
/// validate().
struct ObservedDataset {
    Eigen::VectorXd y;
    Eigen::VectorXd a;
    Eigen::VectorXd z;
    Eigen::MatrixXd x; // n x d (d may be 0)
    OutcomeKind outcome = OutcomeKind::Binary;
    int k = 2; // outcome levels when categorical

    Eigen::Index n() const { return y.size(); }
    Eigen::Index dim() const { return x.cols(); }

    /// Throws ValidationError on any domain violation.
    void validate() const;
};

enum class SurrogateCondition { C1, C2, C3, C4 };

std::string to_string(SurrogateCondition c);
SurrogateCondition condition_from_string(const std::string& s);

struct EstimatorConfig {
    int folds = 5;
    double em_threshold = 0.001;
    int em_max_iters = 200;
    double bandwidth_scale = 1.0;
    double trim_epsilon = 0.01;
    std::uint64_t seed = 1;
    SurrogateCondition label_condition = SurrogateCondition::C1;
    int em_restart_attempts = 4; // fresh-init retries when a fold collapses
    int repeats = 1;             // cross-fitting repetitions (median-aggregated)

    void validate() const;
};

} // namespace hidtreat
