#pragma once
// Finite metric spaces. Distances are binary64; every supremum over a ball
// becomes a max over an explicitly enumerated point set.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace advrisk {

using PointIndex = std::size_t;
using PointSet = std::vector<PointIndex>;  // ascending order

class FiniteMetricSpace {
public:
    // Abstract space from a full distance matrix.
    explicit FiniteMetricSpace(std::vector<std::vector<double>> dist)
        : dist_(std::move(dist)) {
        validate();
    }

    FiniteMetricSpace(std::vector<std::vector<double>> coords,
                      std::vector<std::vector<double>> dist)
        : coords_(std::move(coords)), dist_(std::move(dist)) {
        if (coords_.size() != dist_.size())
            throw std::invalid_argument("FiniteMetricSpace: coords/dist size mismatch");
        validate();
    }

    static FiniteMetricSpace euclidean(std::vector<std::vector<double>> coords) {
        return FiniteMetricSpace(coords, pairwise(coords, /*chebyshev=*/false));
    }

    static FiniteMetricSpace chebyshev(std::vector<std::vector<double>> coords) {
        return FiniteMetricSpace(coords, pairwise(coords, /*chebyshev=*/true));
    }

    std::size_t size() const { return dist_.size(); }
    double distance(PointIndex i, PointIndex j) const { return dist_[i][j]; }
    const std::vector<std::vector<double>>& distance_matrix() const { return dist_; }

    bool has_coords() const { return !coords_.empty(); }
    const std::vector<std::vector<double>>& coords() const { return coords_; }

    // Triangle-inequality violations are tolerated (the ball structure is all
    // the theory needs); the flag lets callers warn.
    bool triangle_inequality_holds() const { return triangle_ok_; }

private:
    static std::vector<std::vector<double>> pairwise(
        const std::vector<std::vector<double>>& coords, bool chebyshev) {
        const std::size_t n = coords.size();
        std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
        for (std::size_t i = 0; i < n; ++i) {
            if (coords[i].size() != coords[0].size())
                throw std::invalid_argument("FiniteMetricSpace: ragged coordinates");
            for (std::size_t j = i + 1; j < n; ++j) {
                double acc = 0.0;
                for (std::size_t k = 0; k < coords[i].size(); ++k) {
                    const double diff = coords[i][k] - coords[j][k];
                    acc = chebyshev ? std::max(acc, std::abs(diff)) : acc + diff * diff;
                }
                d[i][j] = d[j][i] = chebyshev ? acc : std::sqrt(acc);
            }
        }
        return d;
    }

    void validate() {
        const std::size_t n = dist_.size();
        if (n == 0) throw std::invalid_argument("FiniteMetricSpace: empty");
        for (std::size_t i = 0; i < n; ++i) {
            if (dist_[i].size() != n)
                throw std::invalid_argument("FiniteMetricSpace: non-square distance matrix");
            if (dist_[i][i] != 0.0)
                throw std::invalid_argument("FiniteMetricSpace: nonzero diagonal");
            for (std::size_t j = 0; j < n; ++j) {
                if (!(dist_[i][j] >= 0.0))
                    throw std::invalid_argument("FiniteMetricSpace: negative or NaN distance");
                if (dist_[i][j] != dist_[j][i])
                    throw std::invalid_argument("FiniteMetricSpace: asymmetric distance");
            }
        }
        for (std::size_t i = 0; i < n && triangle_ok_; ++i)
            for (std::size_t j = 0; j < n && triangle_ok_; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (dist_[i][j] > dist_[i][k] + dist_[k][j]) { triangle_ok_ = false; break; }
    }

    std::vector<std::vector<double>> coords_;
    std::vector<std::vector<double>> dist_;
    bool triangle_ok_ = true;
};

// Closed ball {j : d(x, j) <= eps}. Always contains x.
inline PointSet ball(const FiniteMetricSpace& space, PointIndex x, double eps) {
    if (x >= space.size()) throw std::out_of_range("ball: point index out of range");
    if (eps < 0.0) throw std::invalid_argument("ball: negative radius");
    PointSet out;
    for (PointIndex j = 0; j < space.size(); ++j)
        if (space.distance(x, j) <= eps) out.push_back(j);
    return out;
}

// eps-expansion F^eps = {x : d(x, F) <= eps}; empty F expands to empty.
inline PointSet eps_expansion(const FiniteMetricSpace& space, const PointSet& f, double eps) {
    if (eps < 0.0) throw std::invalid_argument("eps_expansion: negative radius");
    for (PointIndex p : f)
        if (p >= space.size()) throw std::out_of_range("eps_expansion: point index out of range");
    PointSet out;
    for (PointIndex x = 0; x < space.size(); ++x) {
        for (PointIndex p : f) {
            if (space.distance(x, p) <= eps) {
                out.push_back(x);
                break;
            }
        }
    }
    return out;
}

}  // namespace advrisk
