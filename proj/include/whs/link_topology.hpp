#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "whs/rational.hpp"
#include "whs/weights.hpp"

namespace whs {

/// Seifert invariants of the Brieskorn link of z1^a1 + z2^a2 + z3^a3 = 0:
/// base genus, Euler number -a1a2a3/l^2, and the multiset of exceptional
/// fiber multiplicities (regular fibers, multiplicity 1, are dropped).
struct SeifertData {
    Int genus;
    Ratio euler;  // < 0
    std::map<Int, Int> fibers;  // multiplicity (>= 2) -> count

    friend bool operator==(const SeifertData& x, const SeifertData& y) {
        return x.genus == y.genus && x.euler == y.euler && x.fibers == y.fibers;
    }
};

inline SeifertData seifert_data(const BrieskornTriple& t) {
    const Int l = lcm(lcm(t.a1, t.a2), t.a3);
    const Int prod = t.a1 * t.a2 * t.a3;

    Ratio euler(-prod, l * l);

    // Axis i contributes gcd(a_j, a_k) fibers of multiplicity l / lcm(a_j, a_k).
    std::map<Int, Int> fibers;
    const Int a[3] = {t.a1, t.a2, t.a3};
    for (int i = 0; i < 3; ++i) {
        const Int& aj = a[(i + 1) % 3];
        const Int& ak = a[(i + 2) % 3];
        Int mult = l / lcm(aj, ak);
        if (mult >= 2) fibers[mult] += gcd(aj, ak);
    }

    Int gsum = gcd(t.a1, t.a2) + gcd(t.a1, t.a3) + gcd(t.a2, t.a3);
    Int numer = prod / l - gsum;
    if (numer % 2 != 0)
        throw std::logic_error("seifert_data: non-integral genus");
    Int genus = 1 + numer / 2;
    if (genus < 0)
        throw std::logic_error("seifert_data: negative genus");

    return {std::move(genus), std::move(euler), std::move(fibers)};
}

/// Outcome of comparing two Seifert data sets. EquivalentBundle is only
/// claimed in the fiber-free case, where (genus, euler) classifies the
/// oriented circle bundle; otherwise agreement of invariants is reported
/// without asserting a homeomorphism.
enum class LinkComparison { EquivalentBundle, InvariantsAgree, Distinguished };

inline LinkComparison same_link(const SeifertData& x, const SeifertData& y) {
    if (x.genus != y.genus || x.euler != y.euler || x.fibers != y.fibers)
        return LinkComparison::Distinguished;
    if (x.fibers.empty() && y.fibers.empty())
        return LinkComparison::EquivalentBundle;
    return LinkComparison::InvariantsAgree;
}

}  // namespace whs
