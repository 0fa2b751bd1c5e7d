#pragma once

#include <Eigen/Dense>
#include <array>

#include "hidtreat/dataset.hpp"
#include "hidtreat/discrete_law.hpp"
#include "hidtreat/errors.hpp"

namespace hidtreat {

/// Unlabeled output of the eigendecomposition step: two candidate values of
/// pr(A=1|A*=j) with their outcome columns and mixing weights.
struct EigenCandidate {
    std::array<double, 2> e{};      // candidate pr(A=1 | A*=j)
    Eigen::MatrixXd columns;        // k x 2 candidate pr(Y | A*=j), columns sum to 1
    std::array<double, 2> l{};      // candidate pr(A*=j), l[0]+l[1] = 1
    bool degenerate = false;        // |e1-e2| below separation threshold
};

/// One identified stratum (same layout as LawStratum minus weight/levels).
struct IdentifiedStratum {
    double pi = 0;                  // pr(A*=1)
    Eigen::MatrixXd pY;             // k x 2, columns a*=0,1
    std::array<double, 2> pA{};     // pr(A=1|a*)
    std::array<double, 2> pZ{};
};

/// Picks which eigen-slot is the A*=1 state under the configured surrogate
/// condition.  Returns the slot index (0 or 1).
int resolve_label(const EigenCandidate& cand, double pr_a1, SurrogateCondition condition);

/// Point identification of one stratum from its k x 4 cell table (column
/// index 2*a+z), for binary or categorical Y.
IdentifiedStratum identify_binary(const Eigen::MatrixXd& joint, SurrogateCondition condition,
                                  Diagnostics* diag = nullptr);

/// Continuous-outcome variant: recovers (pi, E(Y|A*=j), pA, pZ) from
/// P(A,Z | x) and E(Y | A,Z, x), both indexed [a][z].
struct IdentifiedContinuous {
    double pi = 0;
    std::array<double, 2> ey{};     // E(Y | A*=a*)
    std::array<double, 2> pA{};
    std::array<double, 2> pZ{};
};
IdentifiedContinuous identify_continuous(const Eigen::Matrix2d& pAZ,
                                         const Eigen::Matrix2d& condYbar,
                                         SurrogateCondition condition,
                                         Diagnostics* diag = nullptr);

/// Bias of the surrogate-based g-formula for E(Y^{a*}): the average over X of
/// {E(Y|A*=1-a*,X) - E(Y|A*=a*,X)} pr(A*=1-a* | A=a*, X).
double naive_bias(const DiscreteLaw& law, int astar);

} // namespace hidtreat
