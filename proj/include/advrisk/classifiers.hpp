#pragma once
// Deterministic and randomized binary classifiers, exact 0-1 loss,
// adversarial loss (max over a closed eps-ball) and adversarial risk.

#include "advrisk/distribution.hpp"
#include "advrisk/rational.hpp"
#include "advrisk/space.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace advrisk {

class DeterministicClassifier {
public:
    explicit DeterministicClassifier(std::vector<int> labels) : labels_(std::move(labels)) {
        for (int v : labels_)
            if (v != 0 && v != 1)
                throw std::invalid_argument("DeterministicClassifier: labels must be 0/1");
    }

    std::size_t size() const { return labels_.size(); }
    int operator()(PointIndex i) const { return labels_[i]; }
    const std::vector<int>& labels() const { return labels_; }

    // predict-1 set f^{-1}(1)
    PointSet predict_one_set() const {
        PointSet s;
        for (PointIndex i = 0; i < labels_.size(); ++i)
            if (labels_[i] == 1) s.push_back(i);
        return s;
    }

    friend bool operator==(const DeterministicClassifier& a,
                           const DeterministicClassifier& b) = default;

private:
    std::vector<int> labels_;
};

// h(x) = probability of predicting class 1 at x.
class RandomizedClassifier {
public:
    explicit RandomizedClassifier(std::vector<Rational> probs) : probs_(std::move(probs)) {
        for (const Rational& p : probs_)
            if (p < Rational(0) || p > Rational(1))
                throw std::invalid_argument("RandomizedClassifier: probability outside [0,1]");
    }

    std::size_t size() const { return probs_.size(); }
    const Rational& operator()(PointIndex i) const { return probs_[i]; }
    const std::vector<Rational>& probs() const { return probs_; }

private:
    std::vector<Rational> probs_;
};

inline RandomizedClassifier embed(const DeterministicClassifier& f) {
    std::vector<Rational> probs;
    probs.reserve(f.size());
    for (int v : f.labels()) probs.emplace_back(v);
    return RandomizedClassifier(std::move(probs));
}

inline DeterministicClassifier complement(const DeterministicClassifier& f) {
    std::vector<int> flipped;
    flipped.reserve(f.size());
    for (int v : f.labels()) flipped.push_back(1 - v);
    return DeterministicClassifier(std::move(flipped));
}

inline void check_label(int y) {
    if (y != 0 && y != 1) throw std::invalid_argument("label must be 0 or 1");
}

inline Rational zero_one_loss(const DeterministicClassifier& f, PointIndex x, int y) {
    check_label(y);
    return Rational(f(x) != y ? 1 : 0);
}

// E_{yhat ~ h(x)} 1{yhat != y}: h(x) when y = 0, 1 - h(x) when y = 1.
inline Rational zero_one_loss(const RandomizedClassifier& h, PointIndex x, int y) {
    check_label(y);
    return y == 0 ? h(x) : Rational(1) - h(x);
}

// max over x' in ball(x, eps) of the 0-1 loss; the sup is an exact max.
template <typename Classifier>
Rational adv_loss(const FiniteMetricSpace& space, const Classifier& c,
                  PointIndex x, int y, double eps) {
    if (c.size() != space.size())
        throw std::invalid_argument("adv_loss: classifier/space size mismatch");
    Rational worst(0);
    bool first = true;
    for (PointIndex xp : ball(space, x, eps)) {
        Rational loss = zero_one_loss(c, xp, y);
        if (first || loss > worst) { worst = std::move(loss); first = false; }
    }
    return worst;
}

// Sum over atoms of mass * adversarial loss (exact).
template <typename Classifier>
Rational adv_risk(const FiniteMetricSpace& space, const Classifier& c,
                  const LabeledDistribution& dist, double eps) {
    if (dist.domain_size() != space.size())
        throw std::invalid_argument("adv_risk: distribution/space size mismatch");
    Rational total(0);
    for (const Atom& a : dist.atoms())
        total += a.mass * adv_loss(space, c, a.point, a.label, eps);
    return total;
}

// Expectation of the adversarial loss under p_y alone. Errors on empty class.
template <typename Classifier>
Rational class_conditional_adv_risk(const FiniteMetricSpace& space, const Classifier& c,
                                    const LabeledDistribution& dist, double eps, int y) {
    check_label(y);
    if (dist.marginal(y).is_zero())
        throw std::invalid_argument("class_conditional_adv_risk: empty class " + std::to_string(y));
    Rational total(0);
    for (const Atom& a : dist.atoms())
        if (a.label == y)
            total += (a.mass / dist.marginal(y)) * adv_loss(space, c, a.point, a.label, eps);
    return total;
}

}  // namespace advrisk
