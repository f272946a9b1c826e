#pragma once
// Seeded random instances for property checks. Spaces use integer grid
// coordinates, so attained distances are separated by far more than 1e-9 and
// the eps values picked here (attained distances or midpoints between
// consecutive distinct distances) never sit near a ball boundary.

#include "advrisk/classifiers.hpp"
#include "advrisk/distribution.hpp"
#include "advrisk/rational.hpp"
#include "advrisk/space.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace advrisk {

class InstanceRng {
public:
    explicit InstanceRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // uniform in [0, n)
    std::size_t uniform(std::size_t n) { return static_cast<std::size_t>(eng_() % n); }

    // uniform in [lo, hi] inclusive
    long long uniform_int(long long lo, long long hi) {
        return lo + static_cast<long long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool coin() { return (eng_() & 1u) != 0; }

    // a/b with 1 <= b <= max_den, 0 <= a <= b
    Rational probability(long long max_den) {
        const long long b = uniform_int(1, max_den);
        const long long a = uniform_int(0, b);
        return Rational(a, b);
    }

private:
    std::mt19937_64 eng_;
};

// n distinct integer-grid points in [0, grid)^dim under the Euclidean metric.
inline FiniteMetricSpace random_space(InstanceRng& rng, std::size_t n,
                                      std::size_t dim = 2, long long grid = 21) {
    std::set<std::vector<double>> seen;
    std::vector<std::vector<double>> coords;
    while (coords.size() < n) {
        std::vector<double> p(dim);
        for (auto& c : p) c = static_cast<double>(rng.uniform_int(0, grid - 1));
        if (seen.insert(p).second) coords.push_back(p);
    }
    return FiniteMetricSpace::euclidean(std::move(coords));
}

// eps that keeps a wide margin to every attained distance: either an attained
// distance itself (closed-ball boundary, compared bit-exactly) or a midpoint
// between consecutive distinct distances.
inline double pick_eps(InstanceRng& rng, const FiniteMetricSpace& space) {
    std::set<double> values;
    for (std::size_t i = 0; i < space.size(); ++i)
        for (std::size_t j = 0; j < space.size(); ++j) values.insert(space.distance(i, j));
    std::vector<double> sorted(values.begin(), values.end());
    const std::size_t pick = rng.uniform(2 * sorted.size() - 1);
    if (pick % 2 == 0) return sorted[pick / 2];
    return 0.5 * (sorted[pick / 2] + sorted[pick / 2 + 1]);
}

inline LabeledDistribution random_distribution(InstanceRng& rng, std::size_t domain_size,
                                               std::size_t max_atoms = 4,
                                               long long max_numerator = 12) {
    const std::size_t k = 1 + rng.uniform(std::min(max_atoms, 2 * domain_size));
    std::set<std::pair<PointIndex, int>> sites;
    while (sites.size() < k) {
        sites.insert({rng.uniform(domain_size), static_cast<int>(rng.uniform(2))});
    }
    std::vector<long long> numerators;
    long long total = 0;
    for (std::size_t i = 0; i < sites.size(); ++i) {
        numerators.push_back(rng.uniform_int(1, max_numerator));
        total += numerators.back();
    }
    std::vector<Atom> atoms;
    std::size_t idx = 0;
    for (const auto& [point, label] : sites)
        atoms.push_back({point, label, Rational(numerators[idx++], total)});
    return LabeledDistribution(domain_size, std::move(atoms));
}

inline DeterministicClassifier random_labeling(InstanceRng& rng, std::size_t n) {
    std::vector<int> labels(n);
    for (auto& v : labels) v = static_cast<int>(rng.uniform(2));
    return DeterministicClassifier(std::move(labels));
}

inline RandomizedClassifier random_randomized(InstanceRng& rng, std::size_t n,
                                              long long max_den = 20) {
    std::vector<Rational> probs(n, Rational(0));
    for (auto& p : probs) p = rng.probability(max_den);
    return RandomizedClassifier(std::move(probs));
}

// strictly positive rational weights summing to 1, numerators in [1, max_numerator]
inline std::vector<Rational> random_weights(InstanceRng& rng, std::size_t m,
                                            long long max_numerator = 12) {
    std::vector<long long> numerators(m);
    long long total = 0;
    for (auto& v : numerators) { v = rng.uniform_int(1, max_numerator); total += v; }
    std::vector<Rational> weights;
    weights.reserve(m);
    for (long long v : numerators) weights.emplace_back(v, total);
    return weights;
}

}  // namespace advrisk
