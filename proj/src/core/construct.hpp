#pragma once

#include <array>
#include <optional>
#include <vector>

#include "action.hpp"

namespace esch {

// Solution of the two Bezout equations attached to (wp, sigma):
//   x*(p1-q_s(2)) - y*(p2-q_s(3)) = eps1
//   w*(p1-q_s(3)) - z*(p2-q_s(1)) = eps2
// The full solution family is (x,y) + k1*(p2-q_s(3), p1-q_s(2)) and
// (w,z) + k2*(p2-q_s(1), p1-q_s(3)).
struct BezoutSolution {
    Perm3 sigma;
    int eps1 = 1, eps2 = 1;
    i64 x = 0, y = 0, z = 0, w = 0;
    std::array<i64, 2> shift1{};  // applied to (x,y)
    std::array<i64, 2> shift2{};  // applied to (w,z)
};

BezoutSolution solve_cofactors(const WeightPair& wp, const Perm3& sigma, int eps1, int eps2);

// Twist pair with k1 = s, k2 = 0:
//   a = (-z, -x - s*(p2-q_s(3)), y + w + s*(p1-q_s(2)))
//   b_sigma = (w - x - s*(p2-q_s(3)), y - z + s*(p1-q_s(2)), 0)
ActionSpec build_action(const WeightPair& wp, const Perm3& sigma, int eps1, int eps2, i64 s);
ActionSpec build_action(const WeightPair& wp, const BezoutSolution& sol, i64 s);

// Closed-form vertex orders of build_action's output, one per permutation.
// The two even companions sigma*(123), sigma*(132) are always 1; the other
// four come from the order formulas with signed h = e2(q) - e2(p).
std::array<i64, 6> predicted_orders(const WeightPair& wp, const Perm3& sigma, int eps1,
                                    int eps2, i64 s);

// The obstruction value ((x+y-z)(p1-q_s(1)) - (w+z-x)(p2-q_s(2)) + 1) mod h,
// independent of the Bezout solution choice.
struct AlphaTable {
    i64 h = 1;
    // [sigma index][eps index], eps order: (+,+), (+,-), (-,+), (-,-).
    std::array<std::array<i64, 4>, 6> alpha{};
    bool predicate = false;  // some entry is 0
};

AlphaTable alpha_table(const WeightPair& wp);
i64 alpha_value(const WeightPair& wp, const Perm3& sigma, int eps1, int eps2);
bool theorem_b_predicate(const WeightPair& wp);

// Canonical representative of (a,b) modulo the lattice spanned by (p,q) and
// (Id,Id); two twist pairs in one class induce the same circle action.
ActionSpec reduce_action(const WeightPair& wp, const ActionSpec& act);

struct ConstructedAction {
    ActionSpec action;
    BezoutSolution sol;
    i64 s = 0;
    SingularLocus locus;
};

// An action whose exceptional set consists of at most three lens spaces
// meeting along one exceptional circle C_sigma, with that circle's order in
// (0, h] and != 4. Requires a manifold.
ConstructedAction minimal_3lens_action(const WeightPair& wp);

// Decision procedure for a quotient with exactly one singular point: walks
// the candidate actions with three regular same-parity vertices and returns
// the first verified witness, or nothing.
std::optional<ConstructedAction> one_point_decision(const WeightPair& wp);

// Exhaustive (a,b) window search for a one-point action, as corroborating
// evidence for the decision procedure. Window bounds |a_i|, |b_i| <= w.
std::optional<ActionSpec> one_point_brute_window(const WeightPair& wp, i64 window);

struct RankedAction {
    ActionSpec action;
    SingularLocus locus;
    std::string provenance;  // "family sigma=.. eps=.. s=.." or "window"
};

// Enumerates the construction family (manifolds only) over s in
// [s_min,s_max] and all (sigma,eps), plus raw trace-balanced twist pairs in
// the window, reduced and deduplicated; ranked by the locus summary tuple.
std::vector<RankedAction> search_minimal(const WeightPair& wp, i64 s_min, i64 s_max,
                                         i64 window, std::size_t max_results = 20);

}  // namespace esch
