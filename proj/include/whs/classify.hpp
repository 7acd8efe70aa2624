#pragma once

#include <optional>
#include <string>

#include "whs/cyclic_quotient.hpp"
#include "whs/link_topology.hpp"
#include "whs/rational.hpp"
#include "whs/weights.hpp"

namespace whs {

enum class Conical { MetricallyConical, NotConical, Unknown };
enum class Mechanism { Theorem1, Theorem1_5 };

/// Verdict on metric conicalness. A NotConical verdict names the
/// obstruction mechanism; the Theorem1_5 mechanism additionally carries
/// the separating action and the generator it isolates, so the verdict
/// re-verifies independently of the engine.
struct ConicalVerdict {
    Conical kind;
    std::optional<Mechanism> mechanism;
    std::optional<WeightVector> weights;
    std::optional<SeparatingAction> action;
    std::optional<InvariantMonomial> generator;
};

/// One-directional obstruction from the weights alone: unequal lowest
/// weights rule out conicalness; equal weights across the board give the
/// conical homogeneous case; a tie among unequal weights is undecided.
inline ConicalVerdict conical_from_weights(const WeightVector& w) {
    if (w.is_homogeneous())
        return {Conical::MetricallyConical, std::nullopt, w, std::nullopt, std::nullopt};
    auto [second, lowest] = w.two_lowest();
    if (second != lowest)
        return {Conical::NotConical, Mechanism::Theorem1, w, std::nullopt, std::nullopt};
    return {Conical::Unknown, std::nullopt, w, std::nullopt, std::nullopt};
}

/// Total dichotomy for cyclic quotients: conical iff q = 1. When the
/// diagonal weights tie at the bottom, the separating action supplies
/// the witness instead.
inline ConicalVerdict conical_cyclic(const CyclicQuotient& cq) {
    WeightVector w = diagonal_weights(cq);
    if (cq.q == 1)
        return {Conical::MetricallyConical, std::nullopt, w, std::nullopt, std::nullopt};
    auto [second, lowest] = w.two_lowest();
    if (second != lowest)
        return {Conical::NotConical, Mechanism::Theorem1, w, std::nullopt, std::nullopt};
    return {Conical::NotConical, Mechanism::Theorem1_5, w,
            separating_action(cq), lowest_generator(cq)};
}

enum class Compare { NotBiLipschitz, Inconclusive };
enum class FiredSide { Left, Right };

/// Pairwise distinguishability certificate: which inequality fired and
/// the two exact ratios compared.
struct CompareCertificate {
    FiredSide side;
    Ratio lhs, rhs;  // lhs > rhs
};

struct CompareVerdict {
    Compare kind;
    std::optional<CompareCertificate> certificate;
};

/// Tests the two ratio inequalities: left fires when
/// v_{r-1}/v_r > w_1/w_s, right when w_{s-1}/w_s > v_1/v_r.
inline CompareVerdict compare_weights(const WeightVector& v, const WeightVector& w) {
    auto [vTop, vSecond] = v.extreme_ratios();
    auto [wTop, wSecond] = w.extreme_ratios();
    if (vSecond > wTop)
        return {Compare::NotBiLipschitz, CompareCertificate{FiredSide::Left, vSecond, wTop}};
    if (wSecond > vTop)
        return {Compare::NotBiLipschitz, CompareCertificate{FiredSide::Right, wSecond, vTop}};
    return {Compare::Inconclusive, std::nullopt};
}

/// End-to-end record for the pair z1^2+z2^51+z3^102 and z1^12+z2^15+z3^20:
/// same link, distinguished weights. The source's stated genus for the
/// common link is carried alongside the computed value; the two are
/// reported separately, never reconciled.
struct CorollaryReport {
    BrieskornTriple left, right;
    WeightVector leftWeights, rightWeights;
    SeifertData leftLink, rightLink;
    LinkComparison linkComparison;
    CompareVerdict comparison;
    Int computedGenus;
    Int paperStatedGenus;
};

inline CorollaryReport corollary_report() {
    BrieskornTriple left = BrieskornTriple::make(2, 51, 102);
    BrieskornTriple right = BrieskornTriple::make(12, 15, 20);
    SeifertData leftLink = seifert_data(left);
    SeifertData rightLink = seifert_data(right);
    WeightVector lw = brieskorn_weights(left);
    WeightVector rw = brieskorn_weights(right);
    return {left, right, lw, rw, leftLink, rightLink,
            same_link(leftLink, rightLink), compare_weights(lw, rw),
            leftLink.genus, Int(26)};
}

}  // namespace whs
