#include "hidtreat/discrete_law.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "hidtreat/errors.hpp"

namespace hidtreat {

using nlohmann::json;

double LawStratum::outcome_mean(int astar) const {
    double s = 0;
    for (int l = 0; l < k(); ++l) s += levels[l] * pY(l, astar);
    return s;
}

namespace {
void check_prob(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0)) throw ValidationError(std::string(what) + " outside [0,1]");
}
} // namespace

void DiscreteLaw::validate(bool require_relevance) const {
    if (strata.empty()) throw ValidationError("law has no strata");
    const int kk = k();
    double wsum = 0;
    for (const auto& s : strata) {
        if (s.k() != kk) throw ValidationError("strata disagree on outcome levels");
        if (static_cast<int>(s.levels.size()) != kk)
            throw ValidationError("levels size must match pY rows");
        check_prob(s.pi, "pi");
        check_prob(s.pA[0], "pA");
        check_prob(s.pA[1], "pA");
        check_prob(s.pZ[0], "pZ");
        check_prob(s.pZ[1], "pZ");
        if (s.weight < 0) throw ValidationError("stratum weight negative");
        wsum += s.weight;
        for (int a = 0; a < 2; ++a) {
            double c = 0;
            for (int l = 0; l < kk; ++l) {
                check_prob(s.pY(l, a), "pY");
                c += s.pY(l, a);
            }
            if (std::abs(c - 1.0) > 1e-12)
                throw ValidationError("pY column does not sum to 1");
        }
        if (require_relevance) {
            const double sepY = (s.pY.col(1) - s.pY.col(0)).cwiseAbs().maxCoeff();
            if (sepY <= 1e-9) throw ValidationError("relevance fails: pY columns equal");
            if (std::abs(s.pA[1] - s.pA[0]) <= 1e-9)
                throw ValidationError("relevance fails: pA entries equal");
            if (std::abs(s.pZ[1] - s.pZ[0]) <= 1e-9)
                throw ValidationError("relevance fails: pZ entries equal");
        }
    }
    if (std::abs(wsum - 1.0) > 1e-12) throw ValidationError("stratum weights must sum to 1");
}

DiscreteLaw binary_law(double pi, std::array<double, 2> pY1, std::array<double, 2> pA1,
                       std::array<double, 2> pZ1) {
    LawStratum s;
    s.weight = 1.0;
    s.pi = pi;
    s.levels = {0.0, 1.0};
    s.pY.resize(2, 2);
    // argument order is (given A*=1, given A*=0); columns are a* = 0, 1
    s.pY(1, 1) = pY1[0];
    s.pY(1, 0) = pY1[1];
    s.pY(0, 1) = 1 - pY1[0];
    s.pY(0, 0) = 1 - pY1[1];
    s.pA = {pA1[1], pA1[0]};
    s.pZ = {pZ1[1], pZ1[0]};
    DiscreteLaw law;
    law.strata.push_back(std::move(s));
    return law;
}

std::vector<Eigen::MatrixXd> exact_joint(const DiscreteLaw& law) {
    law.validate();
    std::vector<Eigen::MatrixXd> out;
    out.reserve(law.strata.size());
    for (const auto& s : law.strata) {
        Eigen::MatrixXd cells = Eigen::MatrixXd::Zero(s.k(), 4);
        for (int astar = 0; astar < 2; ++astar) {
            const double w = astar == 1 ? s.pi : 1 - s.pi;
            for (int l = 0; l < s.k(); ++l)
                for (int a = 0; a < 2; ++a)
                    for (int z = 0; z < 2; ++z) {
                        const double pa = a == 1 ? s.pA[astar] : 1 - s.pA[astar];
                        const double pz = z == 1 ? s.pZ[astar] : 1 - s.pZ[astar];
                        cells(l, 2 * a + z) += w * s.pY(l, astar) * pa * pz;
                    }
        }
        out.push_back(std::move(cells));
    }
    return out;
}

SampledLaw forward_sample(const DiscreteLaw& law, Eigen::Index n, Rng& rng) {
    law.validate();
    if (n < 1) throw ValidationError("n must be >= 1");
    const auto ns = law.strata.size();
    std::vector<double> cum(ns);
    double acc = 0;
    for (size_t j = 0; j < ns; ++j) {
        acc += law.strata[j].weight;
        cum[j] = acc;
    }

    SampledLaw out;
    out.data.y.resize(n);
    out.data.a.resize(n);
    out.data.z.resize(n);
    out.data.x.resize(n, ns > 1 ? 1 : 0);
    out.astar.resize(n);
    out.stratum.resize(n);

    const bool binary01 = law.k() == 2 && law.strata.front().levels[0] == 0.0 &&
                          law.strata.front().levels[1] == 1.0;
    out.data.outcome = binary01 ? OutcomeKind::Binary : OutcomeKind::Categorical;
    out.data.k = law.k();

    for (Eigen::Index i = 0; i < n; ++i) {
        size_t j = 0;
        if (ns > 1) {
            const double u = rng.uniform();
            while (j + 1 < ns && u > cum[j]) ++j;
            out.data.x(i, 0) = static_cast<double>(j);
        }
        const auto& s = law.strata[j];
        const int astar = rng.bernoulli(s.pi) ? 1 : 0;
        const double uy = rng.uniform();
        int l = 0;
        double c = s.pY(0, astar);
        while (l + 1 < s.k() && uy > c) c += s.pY(++l, astar);
        out.data.y[i] = s.levels[l];
        out.data.a[i] = rng.bernoulli(s.pA[astar]) ? 1.0 : 0.0;
        out.data.z[i] = rng.bernoulli(s.pZ[astar]) ? 1.0 : 0.0;
        out.astar[i] = astar;
        out.stratum[i] = static_cast<int>(j);
    }
    // categorical levels must be 1..k for ObservedDataset::validate
    if (out.data.outcome == OutcomeKind::Categorical) {
        for (Eigen::Index i = 0; i < n; ++i)
            if (out.data.y[i] < 1 || out.data.y[i] > law.k())
                out.data.outcome = OutcomeKind::Continuous; // arbitrary real levels
    }
    out.data.validate();
    return out;
}

std::string DiscreteLaw::to_json() const {
    json j;
    j["strata"] = json::array();
    for (const auto& s : strata) {
        json js;
        js["weight"] = s.weight;
        js["pi"] = s.pi;
        js["levels"] = s.levels;
        js["pA"] = {s.pA[0], s.pA[1]};
        js["pZ"] = {s.pZ[0], s.pZ[1]};
        json rows = json::array();
        for (int l = 0; l < s.k(); ++l) rows.push_back({s.pY(l, 0), s.pY(l, 1)});
        js["pY"] = rows;
        j["strata"].push_back(js);
    }
    return j.dump(2);
}

DiscreteLaw DiscreteLaw::from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad law JSON: ") + e.what());
    }
    DiscreteLaw law;
    if (!j.contains("strata") || !j["strata"].is_array())
        throw ParseError("law JSON needs a 'strata' array");
    for (const auto& js : j["strata"]) {
        LawStratum s;
        s.weight = js.value("weight", 1.0);
        s.pi = js.at("pi").get<double>();
        s.levels = js.at("levels").get<std::vector<double>>();
        auto pa = js.at("pA").get<std::vector<double>>();
        auto pz = js.at("pZ").get<std::vector<double>>();
        if (pa.size() != 2 || pz.size() != 2) throw ParseError("pA/pZ must have 2 entries");
        s.pA = {pa[0], pa[1]};
        s.pZ = {pz[0], pz[1]};
        const auto& rows = js.at("pY");
        s.pY.resize(static_cast<Eigen::Index>(rows.size()), 2);
        for (size_t l = 0; l < rows.size(); ++l) {
            s.pY(static_cast<Eigen::Index>(l), 0) = rows[l].at(0).get<double>();
            s.pY(static_cast<Eigen::Index>(l), 1) = rows[l].at(1).get<double>();
        }
        law.strata.push_back(std::move(s));
    }
    law.validate();
    return law;
}

std::string config_to_json(const EstimatorConfig& cfg) {
    json j;
    j["folds"] = cfg.folds;
    j["em_threshold"] = cfg.em_threshold;
    j["em_max_iters"] = cfg.em_max_iters;
    j["bandwidth_scale"] = cfg.bandwidth_scale;
    j["trim_epsilon"] = cfg.trim_epsilon;
    j["seed"] = cfg.seed;
    j["label_condition"] = to_string(cfg.label_condition);
    j["em_restart_attempts"] = cfg.em_restart_attempts;
    j["repeats"] = cfg.repeats;
    return j.dump(2);
}

EstimatorConfig config_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad config JSON: ") + e.what());
    }
    EstimatorConfig cfg;
    cfg.folds = j.value("folds", cfg.folds);
    cfg.em_threshold = j.value("em_threshold", cfg.em_threshold);
    cfg.em_max_iters = j.value("em_max_iters", cfg.em_max_iters);
    cfg.bandwidth_scale = j.value("bandwidth_scale", cfg.bandwidth_scale);
    cfg.trim_epsilon = j.value("trim_epsilon", cfg.trim_epsilon);
    cfg.seed = j.value("seed", cfg.seed);
    if (j.contains("label_condition"))
        cfg.label_condition = condition_from_string(j["label_condition"].get<std::string>());
    cfg.em_restart_attempts = j.value("em_restart_attempts", cfg.em_restart_attempts);
    cfg.repeats = j.value("repeats", cfg.repeats);
    cfg.validate();
    return cfg;
}

} // namespace hidtreat
