#pragma once
// Point-mass data distributions over a finite domain: the joint over X x Y,
// its label marginal nu and the class conditionals p_y.

#include "advrisk/rational.hpp"
#include "advrisk/space.hpp"

#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace advrisk {

struct Atom {
    PointIndex point = 0;
    int label = 0;          // 0 or 1
    Rational mass;          // strictly positive
};

class LabeledDistribution {
public:
    LabeledDistribution(std::size_t domain_size, std::vector<Atom> atoms)
        : domain_size_(domain_size), atoms_(std::move(atoms)) {
        Rational total(0);
        std::set<std::pair<PointIndex, int>> seen;
        for (const Atom& a : atoms_) {
            if (a.point >= domain_size_)
                throw std::invalid_argument("LabeledDistribution: atom point out of range");
            if (a.label != 0 && a.label != 1)
                throw std::invalid_argument("LabeledDistribution: label must be 0 or 1");
            if (!(a.mass > Rational(0)))
                throw std::invalid_argument("LabeledDistribution: mass must be positive");
            if (!seen.insert({a.point, a.label}).second)
                throw std::invalid_argument("LabeledDistribution: duplicate (point, label) atom");
            total += a.mass;
            marginal_[a.label] += a.mass;
        }
        if (total != Rational(1))
            throw std::invalid_argument("LabeledDistribution: masses must sum to 1, got " + total.str());
    }

    std::size_t domain_size() const { return domain_size_; }
    const std::vector<Atom>& atoms() const { return atoms_; }

    // nu(y)
    Rational marginal(int y) const {
        check_label(y);
        return marginal_[y];
    }

    // p_y({point}) = mass(point, y) / nu(y)
    Rational conditional_mass(PointIndex point, int y) const {
        check_label(y);
        if (marginal_[y].is_zero())
            throw std::invalid_argument("LabeledDistribution: empty class " + std::to_string(y));
        for (const Atom& a : atoms_)
            if (a.point == point && a.label == y) return a.mass / marginal_[y];
        return Rational(0);
    }

private:
    static void check_label(int y) {
        if (y != 0 && y != 1) throw std::invalid_argument("label must be 0 or 1");
    }

    std::size_t domain_size_;
    std::vector<Atom> atoms_;
    Rational marginal_[2];
};

}  // namespace advrisk
