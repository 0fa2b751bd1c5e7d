#include "hidtreat/dataset.hpp"

#include <cmath>

#include "hidtreat/errors.hpp"

namespace hidtreat {

std::string to_string(OutcomeKind k) {
    switch (k) {
    case OutcomeKind::Binary: return "binary";
    case OutcomeKind::Categorical: return "categorical";
    case OutcomeKind::Continuous: return "continuous";
    }
    return "?";
}

OutcomeKind outcome_kind_from_string(const std::string& s) {
    if (s == "binary") return OutcomeKind::Binary;
    if (s == "categorical") return OutcomeKind::Categorical;
    if (s == "continuous") return OutcomeKind::Continuous;
    throw ValidationError("unknown outcome kind: " + s);
}

std::string to_string(SurrogateCondition c) {
    switch (c) {
    case SurrogateCondition::C1: return "C1";
    case SurrogateCondition::C2: return "C2";
    case SurrogateCondition::C3: return "C3";
    case SurrogateCondition::C4: return "C4";
    }
    return "?";
}

SurrogateCondition condition_from_string(const std::string& s) {
    if (s == "C1") return SurrogateCondition::C1;
    if (s == "C2") return SurrogateCondition::C2;
    if (s == "C3") return SurrogateCondition::C3;
    if (s == "C4") return SurrogateCondition::C4;
    throw ValidationError("unknown surrogate condition: " + s);
}

namespace {
bool is_bit(double v) { return v == 0.0 || v == 1.0; }
} // namespace

void ObservedDataset::validate() const {
    const Eigen::Index m = n();
    if (m < 1) throw ValidationError("dataset must contain at least one unit");
    if (a.size() != m || z.size() != m || x.rows() != m)
        throw ValidationError("y/a/z/x sizes disagree");
    for (Eigen::Index i = 0; i < m; ++i) {
        if (!is_bit(a[i])) throw ValidationError("a must be 0 or 1 (row " + std::to_string(i) + ")");
        if (!is_bit(z[i])) throw ValidationError("z must be 0 or 1 (row " + std::to_string(i) + ")");
        if (!std::isfinite(y[i])) throw ValidationError("y must be finite (row " + std::to_string(i) + ")");
        if (outcome == OutcomeKind::Binary && !is_bit(y[i]))
            throw ValidationError("binary y must be 0 or 1 (row " + std::to_string(i) + ")");
        if (outcome == OutcomeKind::Categorical) {
            if (y[i] != std::floor(y[i]) || y[i] < 1 || y[i] > k)
                throw ValidationError("categorical y must lie in 1..k (row " + std::to_string(i) + ")");
        }
    }
    for (Eigen::Index i = 0; i < x.size(); ++i)
        if (!std::isfinite(x.data()[i])) throw ValidationError("x must be finite");
    if (outcome == OutcomeKind::Categorical && k < 2)
        throw ValidationError("categorical outcome needs k >= 2");
}

void EstimatorConfig::validate() const {
    if (folds < 1) throw ValidationError("folds must be >= 1");
    if (!(em_threshold > 0)) throw ValidationError("em_threshold must be > 0");
    if (em_max_iters < 1) throw ValidationError("em_max_iters must be >= 1");
    if (!(trim_epsilon > 0 && trim_epsilon < 0.5))
        throw ValidationError("trim_epsilon must lie in (0, 0.5)");
    if (!(bandwidth_scale > 0)) throw ValidationError("bandwidth_scale must be > 0");
    if (em_restart_attempts < 1) throw ValidationError("em_restart_attempts must be >= 1");
    if (repeats < 1) throw ValidationError("repeats must be >= 1");
}

} // namespace hidtreat
