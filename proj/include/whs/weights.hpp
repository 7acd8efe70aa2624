#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "whs/rational.hpp"

namespace whs {

struct InvalidWeights : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidTriple : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Weights v1 >= v2 >= ... >= vr (r >= 2) of the homogeneous generators
/// of a graded ring, stored in descending order.
class WeightVector {
public:
    static WeightVector from_list(std::vector<Int> values) {
        if (values.size() < 2)
            throw InvalidWeights("weight vector needs at least two entries");
        for (const Int& v : values)
            if (v <= 0)
                throw InvalidWeights("weights must be positive");
        std::sort(values.begin(), values.end(), std::greater<Int>());
        return WeightVector(std::move(values));
    }

    const std::vector<Int>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    /// Divides out the overall gcd; (4,4,2) becomes (2,2,1).
    WeightVector normalize() const {
        Int g = 0;
        for (const Int& v : entries_) g = gcd(g, v);
        std::vector<Int> out;
        out.reserve(entries_.size());
        for (const Int& v : entries_) out.push_back(v / g);
        return WeightVector(std::move(out));
    }

    bool is_homogeneous() const {
        return std::all_of(entries_.begin(), entries_.end(),
                           [&](const Int& v) { return v == entries_.front(); });
    }

    /// (v_{r-1}, v_r), the two lowest weights.
    std::pair<Int, Int> two_lowest() const {
        std::size_t r = entries_.size();
        return {entries_[r - 2], entries_[r - 1]};
    }

    /// (v1/vr, v_{r-1}/vr) as exact ratios.
    std::pair<Ratio, Ratio> extreme_ratios() const {
        std::size_t r = entries_.size();
        return {Ratio(entries_[0], entries_[r - 1]),
                Ratio(entries_[r - 2], entries_[r - 1])};
    }

    friend bool operator==(const WeightVector& a, const WeightVector& b) {
        return a.entries_ == b.entries_;
    }

private:
    explicit WeightVector(std::vector<Int> sorted) : entries_(std::move(sorted)) {}

    std::vector<Int> entries_;
};

/// Exponents of a Brieskorn hypersurface z1^a1 + z2^a2 + z3^a3 = 0.
/// Exponent 1 would make the germ smooth, so each must be >= 2.
struct BrieskornTriple {
    Int a1, a2, a3;

    static BrieskornTriple make(Int a1, Int a2, Int a3) {
        if (a1 < 2 || a2 < 2 || a3 < 2)
            throw InvalidTriple("Brieskorn exponents must be >= 2");
        return BrieskornTriple{std::move(a1), std::move(a2), std::move(a3)};
    }
};

/// Weights (l/a1, l/a2, l/a3) with l = lcm(a1,a2,a3), sorted and normalized.
inline WeightVector brieskorn_weights(const BrieskornTriple& t) {
    Int l = lcm(lcm(t.a1, t.a2), t.a3);
    return WeightVector::from_list({l / t.a1, l / t.a2, l / t.a3}).normalize();
}

}  // namespace whs
