#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>
#include <vector>

#include "whs/classify.hpp"

using namespace whs;

static WeightVector wv(std::vector<Int> v) { return WeightVector::from_list(std::move(v)); }

TEST_CASE("conical verdict from weights") {
    CHECK(conical_from_weights(wv({1, 1, 1})).kind == Conical::MetricallyConical);

    auto e8 = conical_from_weights(wv({15, 10, 6}));
    CHECK(e8.kind == Conical::NotConical);
    CHECK(*e8.mechanism == Mechanism::Theorem1);

    auto d4 = conical_from_weights(wv({3, 2, 2}));
    CHECK(d4.kind == Conical::Unknown);
    CHECK(!d4.mechanism.has_value());
}

TEST_CASE("Kleinian sweep") {
    // A_1 after normalization
    CHECK(conical_from_weights(wv({2, 2, 2}).normalize()).kind == Conical::MetricallyConical);
    // A_k, k >= 2
    for (Int k = 2; k <= 30; ++k)
        CHECK(conical_from_weights(wv({k + 1, k + 1, 2}).normalize()).kind ==
              Conical::NotConical);
    // D_k, k >= 5
    for (Int k = 5; k <= 30; ++k)
        CHECK(conical_from_weights(wv({k - 1, k - 2, 2})).kind == Conical::NotConical);
    // E_6, E_7, E_8
    CHECK(conical_from_weights(wv({6, 4, 3})).kind == Conical::NotConical);
    CHECK(conical_from_weights(wv({9, 6, 4})).kind == Conical::NotConical);
    CHECK(conical_from_weights(wv({15, 10, 6})).kind == Conical::NotConical);
    // D_4
    CHECK(conical_from_weights(wv({3, 2, 2})).kind == Conical::Unknown);
}

TEST_CASE("unknown exactly for non-homogeneous with tied lowest weights") {
    for (Int a = 1; a <= 9; ++a)
        for (Int b = 1; b <= 9; ++b)
            for (Int c = 1; c <= 9; ++c) {
                auto w = wv({a, b, c});
                auto v = conical_from_weights(w);
                auto [second, lowest] = w.two_lowest();
                if (w.is_homogeneous())
                    CHECK(v.kind == Conical::MetricallyConical);
                else if (second != lowest)
                    CHECK(v.kind == Conical::NotConical);
                else
                    CHECK(v.kind == Conical::Unknown);
            }
}

TEST_CASE("cyclic dichotomy") {
    CHECK(conical_cyclic(CyclicQuotient::make(8, 1)).kind == Conical::MetricallyConical);

    auto v32 = conical_cyclic(CyclicQuotient::make(3, 2));
    CHECK(v32.kind == Conical::NotConical);
    CHECK(*v32.mechanism == Mechanism::Theorem1);

    auto v85 = conical_cyclic(CyclicQuotient::make(8, 5));
    CHECK(v85.kind == Conical::NotConical);
    CHECK(*v85.mechanism == Mechanism::Theorem1_5);
    CHECK(v85.action->alpha == 2);
    CHECK(v85.action->beta == 1);
    CHECK(*v85.generator == InvariantMonomial{1, 3});
}

TEST_CASE("cyclic verdicts are total and certified") {
    for (std::int64_t n = 2; n <= 80; ++n)
        for (std::int64_t q = 1; q < n; ++q) {
            if (std::gcd(n, q) != 1) continue;
            auto cq = CyclicQuotient::make(n, q);
            auto v = conical_cyclic(cq);
            CHECK(v.kind != Conical::Unknown);
            CHECK((v.kind == Conical::MetricallyConical) == (q == 1));
            if (v.kind != Conical::NotConical) continue;
            if (*v.mechanism == Mechanism::Theorem1) {
                auto verdict = conical_from_weights(diagonal_weights(cq));
                CHECK(verdict.kind == Conical::NotConical);
            } else {
                // re-verify the separating certificate from scratch
                auto target = *v.generator;
                Int best = v.action->alpha * target.a + v.action->beta * target.b;
                for (const auto& g : minimal_generators(cq)) {
                    if (g == target) continue;
                    CHECK(v.action->alpha * g.a + v.action->beta * g.b > best);
                }
            }
        }
}

TEST_CASE("compare weights") {
    auto v = compare_weights(wv({51, 2, 1}), wv({5, 4, 3}));
    CHECK(v.kind == Compare::NotBiLipschitz);
    CHECK(v.certificate->side == FiredSide::Left);
    CHECK(v.certificate->lhs == Ratio(2, 1));
    CHECK(v.certificate->rhs == Ratio(5, 3));
    CHECK(v.certificate->lhs > v.certificate->rhs);

    auto v2 = compare_weights(wv({2, 2, 1}), wv({1, 1, 1}));
    CHECK(v2.kind == Compare::NotBiLipschitz);
    CHECK(v2.certificate->side == FiredSide::Left);
    CHECK(v2.certificate->lhs == Ratio(2, 1));
    CHECK(v2.certificate->rhs == Ratio(1, 1));

    CHECK(compare_weights(wv({5, 4, 3}), wv({5, 4, 3})).kind == Compare::Inconclusive);
}

TEST_CASE("compare properties over random pairs") {
    std::mt19937 rng(20260823);
    std::uniform_int_distribution<int> entry(1, 100), len(2, 5), scale(1, 6);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<Int> a, b;
        for (int i = len(rng); i > 0; --i) a.push_back(entry(rng));
        for (int i = len(rng); i > 0; --i) b.push_back(entry(rng));
        auto v = wv(a), w = wv(b);

        auto vw = compare_weights(v, w);
        auto wvx = compare_weights(w, v);
        CHECK(vw.kind == wvx.kind);

        // the two inequalities can never both fire
        auto [vTop, vSecond] = v.extreme_ratios();
        auto [wTop, wSecond] = w.extreme_ratios();
        CHECK(!(vSecond > wTop && wSecond > vTop));

        // scaling invariance
        Int cv = scale(rng), cw = scale(rng);
        std::vector<Int> as, bs;
        for (const Int& x : a) as.push_back(cv * x);
        for (const Int& x : b) bs.push_back(cw * x);
        auto scaled = compare_weights(wv(as), wv(bs));
        CHECK(scaled.kind == vw.kind);

        // self-comparison is always inconclusive
        CHECK(compare_weights(v, v).kind == Compare::Inconclusive);

        // scaling invariance of the conical verdict
        CHECK(conical_from_weights(wv(as)).kind == conical_from_weights(v).kind);
    }
}

TEST_CASE("corollary report") {
    CorollaryReport r = corollary_report();
    CHECK(r.leftWeights == wv({51, 2, 1}));
    CHECK(r.rightWeights == wv({5, 4, 3}));
    CHECK(r.linkComparison == LinkComparison::EquivalentBundle);
    CHECK(r.leftLink.euler == Ratio(-1, 1));
    CHECK(r.rightLink.euler == Ratio(-1, 1));
    CHECK(r.leftLink.genus == r.rightLink.genus);
    CHECK(r.comparison.kind == Compare::NotBiLipschitz);
    CHECK(r.comparison.certificate->lhs == Ratio(2, 1));
    CHECK(r.comparison.certificate->rhs == Ratio(5, 3));
    CHECK(r.computedGenus == 25);
    CHECK(r.paperStatedGenus == 26);
}
