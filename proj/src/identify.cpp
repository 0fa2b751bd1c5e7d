#include "hidtreat/identify.hpp"

#include <cmath>
#include <string>

namespace hidtreat {

namespace {

constexpr double kSeparationTol = 1e-9;

struct Eigen2x2 {
    std::array<double, 2> values{};
    Eigen::Matrix2d vectors; // columns
};

/// Closed-form eigendecomposition of a real 2x2 matrix via the quadratic
/// characteristic polynomial.  Small complex parts from sampling noise are
/// folded to zero per the stated tolerance; larger ones are an error.
Eigen2x2 eigen_2x2(const Eigen::Matrix2d& g, Diagnostics* diag) {
    const double tr = g(0, 0) + g(1, 1);
    const double det = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
    double disc = tr * tr - 4 * det;
    if (disc < 0) {
        const double imag = std::sqrt(-disc) / 2;
        if (imag < 1e-6 * std::abs(tr / 2)) {
            if (diag) diag->warn("eigenvalues: dropped imaginary part " + std::to_string(imag));
            disc = 0;
        } else {
            throw IdentificationError("complex eigenvalues, |Im| = " + std::to_string(imag) +
                                      "; joint distribution incompatible with the model");
        }
    }
    const double root = std::sqrt(disc);
    Eigen2x2 out;
    out.values = {(tr + root) / 2, (tr - root) / 2};
    for (int j = 0; j < 2; ++j) {
        const double e = out.values[j];
        // (g - e I) v = 0; pick the better-conditioned row
        Eigen::Vector2d v1(g(0, 1), e - g(0, 0));
        Eigen::Vector2d v2(e - g(1, 1), g(1, 0));
        Eigen::Vector2d v = v1.norm() >= v2.norm() ? v1 : v2;
        if (v.norm() == 0) v = Eigen::Vector2d(1, 0); // g diagonal with equal entries
        out.vectors.col(j) = v;
    }
    return out;
}

/// Reduced 2x2 similarity G solving  P(Y,Z) G = P(Y,Z,A=1)  in least squares;
/// its eigenvalues are pr(A=1|A*=j) and S v_j recovers the outcome columns.
EigenCandidate eigen_candidate(const Eigen::MatrixXd& S, const Eigen::MatrixXd& S1,
                               double pr_a1, Diagnostics* diag) {
    const double total = S.sum();
    if (!(total > 0)) throw IdentificationError("joint cells must have positive total mass");
    const Eigen::MatrixXd Sn = S / total;
    if (S.rows() == 2) {
        const double det = Sn(0, 0) * Sn(1, 1) - Sn(0, 1) * Sn(1, 0);
        if (std::abs(det) <= 1e-10)
            throw IdentificationError(
                "determinant ~0; surrogate may equal A* or relevance fails");
    } else {
        const Eigen::Matrix2d gram = Sn.transpose() * Sn;
        const double det = gram(0, 0) * gram(1, 1) - gram(0, 1) * gram(1, 0);
        if (std::abs(det) <= 1e-20)
            throw IdentificationError(
                "determinant ~0; surrogate may equal A* or relevance fails");
    }

    const Eigen::Matrix2d gram = S.transpose() * S;
    const Eigen::Matrix2d G = gram.ldlt().solve(S.transpose() * S1);
    const Eigen2x2 eg = eigen_2x2(G, diag);

    EigenCandidate cand;
    cand.e = eg.values;
    cand.columns.resize(S.rows(), 2);
    for (int j = 0; j < 2; ++j) {
        Eigen::VectorXd u = S * eg.vectors.col(j);
        const double s = u.sum();
        if (std::abs(s) < 1e-300)
            throw IdentificationError("eigencolumn has zero total mass");
        cand.columns.col(j) = u / s;
    }
    const double sep = cand.e[0] - cand.e[1];
    cand.degenerate = std::abs(sep) <= kSeparationTol;
    if (!cand.degenerate) {
        cand.l[0] = (pr_a1 - cand.e[1]) / sep;
        cand.l[1] = 1 - cand.l[0];
    } else {
        cand.l = {0.5, 0.5};
    }
    return cand;
}

} // namespace

int resolve_label(const EigenCandidate& cand, double pr_a1, SurrogateCondition condition) {
    if (cand.degenerate)
        throw IdentificationError("eigenvalue separation below threshold; labels undefined");
    switch (condition) {
    case SurrogateCondition::C1:
    case SurrogateCondition::C2:
        // the larger eigenvalue is pr(A=1|A*=1)
        return cand.e[0] >= cand.e[1] ? 0 : 1;
    case SurrogateCondition::C3:
    case SurrogateCondition::C4: {
        const std::array<double, 2> l = {(pr_a1 - cand.e[1]) / (cand.e[0] - cand.e[1]),
                                         1 - (pr_a1 - cand.e[1]) / (cand.e[0] - cand.e[1])};
        constexpr double tol = 1e-6;
        for (double lj : l)
            if (lj < -tol || lj > 1 + tol)
                throw IdentificationError("mixing weight outside [0,1]: inconsistent candidate");
        if (condition == SurrogateCondition::C3)
            return cand.e[0] * l[0] >= cand.e[1] * l[1] ? 0 : 1;
        return (1 - cand.e[0]) * l[0] <= (1 - cand.e[1]) * l[1] ? 0 : 1;
    }
    }
    throw IdentificationError("unreachable");
}

IdentifiedStratum identify_binary(const Eigen::MatrixXd& joint, SurrogateCondition condition,
                                  Diagnostics* diag) {
    if (joint.cols() != 4 || joint.rows() < 2)
        throw ValidationError("joint must be k x 4 with k >= 2");
    const Eigen::Index k = joint.rows();
    Eigen::MatrixXd S(k, 2), S1(k, 2);
    for (Eigen::Index l = 0; l < k; ++l)
        for (int z = 0; z < 2; ++z) {
            S(l, z) = joint(l, z) + joint(l, 2 + z); // marginalize A
            S1(l, z) = joint(l, 2 + z);              // A = 1 slice
        }
    const double pr_a1 = S1.sum() / joint.sum();

    EigenCandidate cand = eigen_candidate(S, S1, pr_a1, diag);
    if (cand.degenerate)
        throw IdentificationError("eigenvalue separation below threshold; relevance violated");
    const int j1 = resolve_label(cand, pr_a1, condition);
    const int j0 = 1 - j1;

    IdentifiedStratum out;
    out.pi = cand.l[j1];
    out.pA = {cand.e[j0], cand.e[j1]};
    out.pY.resize(k, 2);
    out.pY.col(0) = cand.columns.col(j0);
    out.pY.col(1) = cand.columns.col(j1);

    // pZ from P(Y,Z) = U diag(l) W^T  =>  W^T = diag(l)^-1 (U^T U)^-1 U^T P(Y,Z)
    Eigen::MatrixXd U(k, 2);
    U.col(0) = out.pY.col(0);
    U.col(1) = out.pY.col(1);
    const Eigen::Matrix2d gu = U.transpose() * U;
    const Eigen::MatrixXd SnYZ = S / joint.sum();
    Eigen::Matrix2d WT = gu.ldlt().solve(U.transpose() * SnYZ);
    const std::array<double, 2> lw = {1 - out.pi, out.pi};
    for (int r = 0; r < 2; ++r) {
        if (std::abs(lw[r]) < 1e-12)
            throw IdentificationError("mixing weight ~0; proxy law not recoverable");
        WT.row(r) /= lw[r];
    }
    out.pZ = {WT(0, 1), WT(1, 1)};
    return out;
}

IdentifiedContinuous identify_continuous(const Eigen::Matrix2d& pAZ,
                                         const Eigen::Matrix2d& condYbar,
                                         SurrogateCondition condition, Diagnostics* diag) {
    const Eigen::Matrix2d M1 = condYbar.cwiseProduct(pAZ);
    // rows indexed by a; reuse the reduced similarity with S = P(A,Z)
    const double pr_a1 = pAZ(1, 0) + pAZ(1, 1);
    Eigen::MatrixXd S(2, 2), Sm(2, 2);
    S << pAZ(0, 0), pAZ(0, 1), pAZ(1, 0), pAZ(1, 1);
    Sm << M1(0, 0), M1(0, 1), M1(1, 0), M1(1, 1);

    const double total = S.sum();
    if (!(total > 0)) throw IdentificationError("P(A,Z) must have positive mass");
    {
        const Eigen::Matrix2d Sn = S / total;
        const double det = Sn(0, 0) * Sn(1, 1) - Sn(0, 1) * Sn(1, 0);
        if (std::abs(det) <= 1e-10)
            throw IdentificationError(
                "determinant ~0; surrogate may equal A* or relevance fails");
    }
    const Eigen::Matrix2d gram = S.transpose() * S;
    const Eigen::Matrix2d G = gram.ldlt().solve(S.transpose() * Sm);
    // eigenvalues of G are E(Y|A*=j); eigencolumns S v_j are pr(A|A*=j)
    Eigen::Matrix2d g2 = G;
    const double tr = g2(0, 0) + g2(1, 1);
    const double det = g2(0, 0) * g2(1, 1) - g2(0, 1) * g2(1, 0);
    double disc = tr * tr - 4 * det;
    if (disc < 0) {
        const double imag = std::sqrt(-disc) / 2;
        if (imag < 1e-6 * std::abs(tr / 2)) {
            if (diag) diag->warn("eigenvalues: dropped imaginary part " + std::to_string(imag));
            disc = 0;
        } else {
            throw IdentificationError("complex eigenvalues, |Im| = " + std::to_string(imag));
        }
    }
    const double root = std::sqrt(disc);
    std::array<double, 2> ey = {(tr + root) / 2, (tr - root) / 2};
    const double scale = std::max(1.0, std::abs(ey[0]) + std::abs(ey[1]));
    if (std::abs(ey[0] - ey[1]) <= kSeparationTol * scale)
        throw IdentificationError("degenerate outcome means E(Y|A*=1)=E(Y|A*=0)");

    EigenCandidate cand;
    cand.columns.resize(2, 2);
    for (int j = 0; j < 2; ++j) {
        const double e = ey[j];
        Eigen::Vector2d v1(g2(0, 1), e - g2(0, 0));
        Eigen::Vector2d v2(e - g2(1, 1), g2(1, 0));
        Eigen::Vector2d v = v1.norm() >= v2.norm() ? v1 : v2;
        Eigen::Vector2d u = S * v;
        const double s = u.sum();
        if (std::abs(s) < 1e-300) throw IdentificationError("eigencolumn has zero total mass");
        cand.columns.col(j) = u / s;
    }
    // the pr(A=1|A*=j) entries act as the eigenvalues for label resolution
    cand.e = {cand.columns(1, 0), cand.columns(1, 1)};
    const double sep = cand.e[0] - cand.e[1];
    cand.degenerate = std::abs(sep) <= kSeparationTol;
    if (!cand.degenerate) {
        cand.l[0] = (pr_a1 - cand.e[1]) / sep;
        cand.l[1] = 1 - cand.l[0];
    }
    const int j1 = resolve_label(cand, pr_a1, condition);
    const int j0 = 1 - j1;

    IdentifiedContinuous out;
    out.pi = cand.l[j1];
    out.ey = {ey[j0], ey[j1]};
    out.pA = {cand.e[j0], cand.e[j1]};

    Eigen::Matrix2d U;
    U.col(0) = cand.columns.col(j0);
    U.col(1) = cand.columns.col(j1);
    Eigen::Matrix2d WT = U.partialPivLu().solve(S / total);
    const std::array<double, 2> lw = {1 - out.pi, out.pi};
    for (int r = 0; r < 2; ++r) {
        if (std::abs(lw[r]) < 1e-12)
            throw IdentificationError("mixing weight ~0; proxy law not recoverable");
        WT.row(r) /= lw[r];
    }
    out.pZ = {WT(0, 1), WT(1, 1)};
    return out;
}

double naive_bias(const DiscreteLaw& law, int astar) {
    law.validate(false);
    double total = 0;
    for (const auto& s : law.strata) {
        const double ey_t = s.outcome_mean(astar);
        const double ey_o = s.outcome_mean(1 - astar);
        // pr(A = astar | A* = 1-astar) and marginal pr(A = astar)
        const double pa_given_other =
            astar == 1 ? s.pA[1 - astar] : 1 - s.pA[1 - astar];
        const double pr_other = (1 - astar) == 1 ? s.pi : 1 - s.pi;
        const double pr_a = astar == 1 ? s.pi * s.pA[1] + (1 - s.pi) * s.pA[0]
                                       : s.pi * (1 - s.pA[1]) + (1 - s.pi) * (1 - s.pA[0]);
        if (pr_a <= 0) continue; // conditioning event has no mass
        const double delta = (ey_o - ey_t) * pa_given_other * pr_other / pr_a;
        total += s.weight * delta;
    }
    return total;
}

} // namespace hidtreat
