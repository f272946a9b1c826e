#pragma once
// Level-set classifiers h^alpha and the exact breakpoint decomposition of the
// adversarial risk of a randomized classifier: on a finite domain the map
// alpha -> R_eps(h^alpha) is a step function whose breakpoints are the
// attained values of h, so the integral over [0,1] is an exact rational sum.
// Also the Monte-Carlo classifier transform h_{k,t} and its level-set
// correspondence through the binomial CDF.

#include "advrisk/classifiers.hpp"
#include "advrisk/distribution.hpp"
#include "advrisk/rational.hpp"
#include "advrisk/space.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

namespace advrisk {

enum class Comparator { Strict, Weak };  // 1{h(x) > a} vs 1{h(x) >= a}

struct LevelSetSpec {
    Rational alpha;
    Comparator cmp = Comparator::Strict;

    LevelSetSpec(Rational a, Comparator c = Comparator::Strict) : alpha(std::move(a)), cmp(c) {
        if (alpha < Rational(0) || alpha > Rational(1))
            throw std::invalid_argument("LevelSetSpec: alpha outside [0,1]");
    }
};

inline DeterministicClassifier level_set(const RandomizedClassifier& h, const LevelSetSpec& spec) {
    std::vector<int> labels;
    labels.reserve(h.size());
    for (PointIndex i = 0; i < h.size(); ++i) {
        const bool fires = spec.cmp == Comparator::Strict ? h(i) > spec.alpha : h(i) >= spec.alpha;
        labels.push_back(fires ? 1 : 0);
    }
    return DeterministicClassifier(std::move(labels));
}

inline DeterministicClassifier level_set(const RandomizedClassifier& h, const Rational& alpha,
                                         Comparator cmp = Comparator::Strict) {
    return level_set(h, LevelSetSpec(alpha, cmp));
}

// The step function alpha -> R_eps(h^alpha). interval_risks[i] is the risk
// everywhere strictly inside (breakpoints[i], breakpoints[i+1]); differences
// at the breakpoints themselves live on a measure-zero set and are exposed
// separately through point_risks_weak.
struct RiskProfile {
    std::vector<Rational> breakpoints;        // 0 = v_0 < v_1 < ... < v_m = 1
    std::vector<Rational> interval_risks;     // size m
    std::vector<Rational> point_risks_weak;   // risk of the weak level set at each v_i

    Rational integral() const {
        Rational acc(0);
        for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
            acc += (breakpoints[i + 1] - breakpoints[i]) * interval_risks[i];
        return acc;
    }

    std::size_t min_interval() const {
        std::size_t best = 0;
        for (std::size_t i = 1; i < interval_risks.size(); ++i)
            if (interval_risks[i] < interval_risks[best]) best = i;
        return best;
    }
};

inline RiskProfile risk_profile(const FiniteMetricSpace& space, const RandomizedClassifier& h,
                                const LabeledDistribution& dist, double eps) {
    std::set<Rational> values{Rational(0), Rational(1)};
    for (const Rational& p : h.probs()) values.insert(p);

    RiskProfile profile;
    profile.breakpoints.assign(values.begin(), values.end());
    for (std::size_t i = 0; i + 1 < profile.breakpoints.size(); ++i) {
        const Rational mid = (profile.breakpoints[i] + profile.breakpoints[i + 1]) / Rational(2);
        profile.interval_risks.push_back(adv_risk(space, level_set(h, mid), dist, eps));
    }
    for (const Rational& v : profile.breakpoints)
        profile.point_risks_weak.push_back(
            adv_risk(space, level_set(h, v, Comparator::Weak), dist, eps));
    return profile;
}

struct IntegralIdentity {
    Rational lhs;   // R_eps(h)
    Rational rhs;   // breakpoint sum of the level-set risks
    bool equal = false;
};

inline IntegralIdentity integral_identity(const FiniteMetricSpace& space,
                                          const RandomizedClassifier& h,
                                          const LabeledDistribution& dist, double eps) {
    IntegralIdentity out;
    out.lhs = adv_risk(space, h, dist, eps);
    out.rhs = risk_profile(space, h, dist, eps).integral();
    out.equal = out.lhs == out.rhs;
    return out;
}

struct BestLevelSet {
    Rational alpha_star;   // midpoint of the leftmost minimizing interval
    Rational risk;
};

inline BestLevelSet best_level_set(const FiniteMetricSpace& space, const RandomizedClassifier& h,
                                   const LabeledDistribution& dist, double eps) {
    const RiskProfile profile = risk_profile(space, h, dist, eps);
    const std::size_t i = profile.min_interval();
    return {(profile.breakpoints[i] + profile.breakpoints[i + 1]) / Rational(2),
            profile.interval_risks[i]};
}

// Whoever attacks h optimally also attacks every level set optimally: the
// argmax set of the h-loss over the ball is contained in the argmax set of
// the level-set loss, at every breakpoint and every interval midpoint.
inline bool attack_argmax_inclusion_check(const FiniteMetricSpace& space,
                                          const RandomizedClassifier& h,
                                          PointIndex x, int y, double eps) {
    const PointSet b = ball(space, x, eps);

    auto argmax_set = [&](auto&& loss) {
        Rational best = loss(b[0]);
        for (PointIndex xp : b) best = std::max(best, loss(xp));
        PointSet arg;
        for (PointIndex xp : b)
            if (loss(xp) == best) arg.push_back(xp);
        return arg;
    };

    const PointSet argmax_h = argmax_set([&](PointIndex xp) { return zero_one_loss(h, xp, y); });

    std::set<Rational> alphas{Rational(0), Rational(1)};
    for (const Rational& p : h.probs()) alphas.insert(p);
    std::vector<Rational> levels(alphas.begin(), alphas.end());
    for (std::size_t i = 0; i + 1 < levels.size(); ++i)
        levels.push_back((levels[i] + levels[i + 1]) / Rational(2));

    for (const Rational& alpha : levels) {
        const DeterministicClassifier det = level_set(h, alpha);
        const PointSet argmax_det =
            argmax_set([&](PointIndex xp) { return zero_one_loss(det, xp, y); });
        for (PointIndex xp : argmax_h)
            if (std::find(argmax_det.begin(), argmax_det.end(), xp) == argmax_det.end())
                return false;
    }
    return true;
}

// Monte-Carlo classifiers: draw k predictions from h(x), output 1 when more
// than t are 1. t = k is rejected: 1 - F_{k,k} is identically zero and the
// level-set correspondence breaks down.
struct BinomialParams {
    unsigned k;
    unsigned t;

    BinomialParams(unsigned trials, unsigned threshold) : k(trials), t(threshold) {
        if (k == 0) throw std::invalid_argument("BinomialParams: k must be positive");
        if (t >= k) throw std::invalid_argument("BinomialParams: need 0 <= t < k");
    }
};

// F_{k,t}(p) = sum_{i<=t} C(k,i) p^i (1-p)^(k-i)
inline Rational binomial_cdf(const BinomialParams& params, const Rational& p) {
    if (p < Rational(0) || p > Rational(1))
        throw std::invalid_argument("binomial_cdf: p outside [0,1]");
    Rational acc(0);
    for (unsigned i = 0; i <= params.t; ++i)
        acc += Rational(binomial_coefficient(params.k, i)) * pow(p, i) *
               pow(Rational(1) - p, params.k - i);
    return acc;
}

// h_{k,t}(x) = 1 - F_{k,t}(h(x))
inline RandomizedClassifier monte_carlo_classifier(const RandomizedClassifier& h,
                                                   const BinomialParams& params) {
    std::vector<Rational> probs;
    probs.reserve(h.size());
    for (PointIndex i = 0; i < h.size(); ++i)
        probs.push_back(Rational(1) - binomial_cdf(params, h(i)));
    return RandomizedClassifier(std::move(probs));
}

// h^alpha == (h_{k,t})^{alpha'} with alpha' = 1 - F_{k,t}(alpha), pointwise.
inline bool mc_levelset_identity(const RandomizedClassifier& h, const BinomialParams& params,
                                 const Rational& alpha) {
    const Rational alpha_prime = Rational(1) - binomial_cdf(params, alpha);
    return level_set(h, alpha) == level_set(monte_carlo_classifier(h, params), alpha_prime);
}

}  // namespace advrisk
