#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "whs/rational.hpp"
#include "whs/weights.hpp"

namespace whs {

struct InvalidCyclic : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct HomogeneousInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// C^2 / mu_n with the action xi(u1,u2) = (xi^q u1, xi u2), q prime to n.
/// The link is the lens space L(n,q).
struct CyclicQuotient {
    Int n, q;

    static CyclicQuotient make(Int n, Int q) {
        if (n < 2)
            throw InvalidCyclic("n must be >= 2");
        if (q <= 0 || q >= n)
            throw InvalidCyclic("q must satisfy 0 < q < n");
        if (gcd(q, n) != 1)
            throw InvalidCyclic("q must be prime to n");
        return CyclicQuotient{std::move(n), std::move(q)};
    }
};

/// Exponent pair of an invariant monomial u1^a u2^b, q*a + b = 0 mod n.
/// Its weight under the diagonal C*-action is a + b.
struct InvariantMonomial {
    Int a, b;

    Int weight() const { return a + b; }

    friend bool operator==(const InvariantMonomial& x, const InvariantMonomial& y) {
        return x.a == y.a && x.b == y.b;
    }
};

/// All invariant exponent pairs (a,b) != (0,0) in the box 0 <= a,b <= n,
/// sorted by (a, b). For each a there are at most two admissible b.
inline std::vector<InvariantMonomial> invariant_monomials(const CyclicQuotient& cq) {
    std::vector<InvariantMonomial> out;
    for (Int a = 0; a <= cq.n; ++a) {
        Int r = (cq.n - (cq.q * a) % cq.n) % cq.n;  // least b with qa+b = 0 mod n
        if (r == 0) {
            if (a != 0) out.push_back({a, 0});
            out.push_back({a, cq.n});
        } else {
            out.push_back({a, r});
        }
    }
    return out;
}

/// Hilbert basis of the invariant-exponent monoid over the [0,n]^2 box:
/// the elements that do not split as a sum of two nonzero invariant
/// monomials. Writing r(a) for the least b with qa+b = 0 mod n, the
/// basis is (0,n) together with every (a, r(a)) whose r(a) is strictly
/// below all earlier values (splitting off any boxed invariant (a',b')
/// with a' <= a and b' <= b leaves an invariant remainder, so an element
/// is indecomposable exactly when no earlier column reaches that low).
/// Sorted by (weight ascending, a ascending).
inline std::vector<InvariantMonomial> minimal_generators(const CyclicQuotient& cq) {
    std::vector<InvariantMonomial> gens;
    gens.push_back({0, cq.n});
    Int best = cq.n;
    for (Int a = 1; a <= cq.n; ++a) {
        Int r = (cq.n - (cq.q * a) % cq.n) % cq.n;
        if (r < best) {
            gens.push_back({a, r});
            best = r;
        }
    }
    std::sort(gens.begin(), gens.end(),
              [](const InvariantMonomial& x, const InvariantMonomial& y) {
                  Int wx = x.weight(), wy = y.weight();
                  if (wx != wy) return wx < wy;
                  return x.a < y.a;
              });
    return gens;
}

/// Diagonal weights a+b over the generator set, as a descending WeightVector.
inline WeightVector diagonal_weights(const CyclicQuotient& cq) {
    std::vector<Int> w;
    for (const InvariantMonomial& g : minimal_generators(cq))
        w.push_back(g.weight());
    return WeightVector::from_list(std::move(w));
}

/// The generator of lowest weight with smallest u1-exponent. For q = 1
/// every generator has weight n and the choice is meaningless.
inline InvariantMonomial lowest_generator(const CyclicQuotient& cq) {
    if (cq.q == 1)
        throw HomogeneousInput("q = 1: all generators have equal weight");
    return minimal_generators(cq).front();
}

/// Perturbed action t(u1,u2) = (t^alpha u1, t^beta u2) with coprime
/// alpha > beta that makes the lowest generator the strict unique
/// minimizer of alpha*a + beta*b over the generator set.
struct SeparatingAction {
    Int alpha, beta;
};

/// First pair (s+1, s), s = 1, 2, ..., whose perturbed weight has a
/// strict unique minimum at lowest_generator(cq).
inline SeparatingAction separating_action(const CyclicQuotient& cq) {
    if (cq.q == 1)
        throw HomogeneousInput("q = 1: no separating action");
    std::vector<InvariantMonomial> gens = minimal_generators(cq);
    const InvariantMonomial target = gens.front();
    for (Int s = 1;; ++s) {
        Int alpha = s + 1, beta = s;
        Int best = alpha * target.a + beta * target.b;
        bool strict = true;
        for (const InvariantMonomial& g : gens) {
            if (g == target) continue;
            if (alpha * g.a + beta * g.b <= best) {
                strict = false;
                break;
            }
        }
        if (strict) return {alpha, beta};
    }
}

/// Covering degree data: d = gcd(q-1, n), n' = n/d, and for q != 1 the
/// bound (a+b)/d < n' for the chosen lowest generator.
struct CoveringData {
    Int d;
    Int nPrime;
    std::optional<InvariantMonomial> chosenGenerator;
    std::optional<Int> degreeBound;
};

inline CoveringData covering_data(const CyclicQuotient& cq) {
    Int d = gcd(cq.q - 1, cq.n);
    Int nPrime = cq.n / d;
    if (cq.q == 1)
        return {std::move(d), std::move(nPrime), std::nullopt, std::nullopt};
    InvariantMonomial g = lowest_generator(cq);
    Int w = g.weight();
    if (w % d != 0)
        throw std::logic_error("covering_data: d does not divide a+b");
    Int bound = w / d;
    if (bound >= nPrime)
        throw std::logic_error("covering_data: degree bound not below n'");
    return {std::move(d), std::move(nPrime), g, std::move(bound)};
}

}  // namespace whs
