#include "construct.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>

namespace esch {

namespace {

struct EqCoeffs {
    // x*alpha - y*beta = eps1, shifts (x,y) += k*(beta, alpha)
    // w*gamma - z*delta = eps2, shifts (w,z) += k*(delta, gamma)
    i64 alpha, beta, gamma, delta;
};

EqCoeffs coeffs(const WeightPair& wp, const Perm3& s) {
    return {wp.p[0] - wp.q[s(2) - 1], wp.p[1] - wp.q[s(3) - 1],
            wp.p[0] - wp.q[s(3) - 1], wp.p[1] - wp.q[s(1) - 1]};
}

// Representative of x0 modulo m (m != 0) with minimal absolute value,
// ties broken towards the smaller companion |y| via the callback.
template <typename YOf>
i64 min_abs_rep(i64 x0, i64 m, YOf y_of) {
    m = std::abs(m);
    i64 r = ((x0 % m) + m) % m;
    i64 lo = r - m;  // negative candidate
    if (std::abs(r) < std::abs(lo)) return r;
    if (std::abs(lo) < std::abs(r)) return lo;
    return iabs(y_of(r)) <= iabs(y_of(lo)) ? r : lo;
}

}  // namespace

BezoutSolution solve_cofactors(const WeightPair& wp, const Perm3& sigma, int eps1, int eps2) {
    if (std::abs(eps1) != 1 || std::abs(eps2) != 1)
        throw std::invalid_argument("solve_cofactors: eps must be +1 or -1");
    EqCoeffs c = coeffs(wp, sigma);

    BezoutSolution sol;
    sol.sigma = sigma;
    sol.eps1 = eps1;
    sol.eps2 = eps2;
    sol.shift1 = {c.beta, c.alpha};
    sol.shift2 = {c.delta, c.gamma};

    // x*alpha - y*beta = eps1.
    {
        auto [g, u, v] = xgcd(c.alpha, c.beta);
        if (g != 1)
            throw std::domain_error("solve_cofactors: gcd(" + std::to_string(c.alpha) + "," +
                                    std::to_string(c.beta) + ") != 1 (not a manifold)");
        i64 x0 = u * eps1, y0 = -v * eps1;
        if (c.beta == 0) {
            sol.x = x0;
            sol.y = 0;  // y is free along the shift; pick 0
        } else {
            auto y_of = [&](i64 x) { return (i128(x) * c.alpha - eps1) / c.beta; };
            sol.x = min_abs_rep(x0, c.beta, y_of);
            sol.y = checked_i64(y_of(sol.x), "solve_cofactors y");
        }
    }
    // w*gamma - z*delta = eps2.
    {
        auto [g, u, v] = xgcd(c.gamma, c.delta);
        if (g != 1)
            throw std::domain_error("solve_cofactors: gcd(" + std::to_string(c.gamma) + "," +
                                    std::to_string(c.delta) + ") != 1 (not a manifold)");
        i64 w0 = u * eps2, z0 = -v * eps2;
        if (c.gamma == 0) {
            sol.z = z0;
            sol.w = 0;
        } else {
            auto w_of = [&](i64 z) { return (i128(z) * c.delta + eps2) / c.gamma; };
            sol.z = min_abs_rep(z0, c.gamma, w_of);
            sol.w = checked_i64(w_of(sol.z), "solve_cofactors w");
        }
    }

    // Exactness check.
    if (i128(sol.x) * c.alpha - i128(sol.y) * c.beta != eps1 ||
        i128(sol.w) * c.gamma - i128(sol.z) * c.delta != eps2)
        throw std::logic_error("solve_cofactors: solution check failed");
    return sol;
}

ActionSpec build_action(const WeightPair& wp, const BezoutSolution& sol, i64 s) {
    EqCoeffs c = coeffs(wp, sol.sigma);
    i64 a1 = -sol.z;
    i64 a2 = checked_i64(i128(-sol.x) - i128(s) * c.beta, "build_action");
    i64 a3 = checked_i64(i128(sol.y) + sol.w + i128(s) * c.alpha, "build_action");
    i64 bs1 = checked_i64(i128(sol.w) - sol.x - i128(s) * c.beta, "build_action");
    i64 bs2 = checked_i64(i128(sol.y) - sol.z + i128(s) * c.alpha, "build_action");
    Vec3 b{};
    b[sol.sigma(1) - 1] = bs1;
    b[sol.sigma(2) - 1] = bs2;
    b[sol.sigma(3) - 1] = 0;
    return ActionSpec::raw({a1, a2, a3}, b);
}

ActionSpec build_action(const WeightPair& wp, const Perm3& sigma, int eps1, int eps2, i64 s) {
    return build_action(wp, solve_cofactors(wp, sigma, eps1, eps2), s);
}

namespace {

i128 order_constant(const WeightPair& wp, const BezoutSolution& sol) {
    const Perm3& s = sol.sigma;
    i64 d11 = wp.p[0] - wp.q[s(1) - 1];
    i64 d22 = wp.p[1] - wp.q[s(2) - 1];
    return (i128(sol.x) + sol.y - sol.z) * d11 - (i128(sol.w) + sol.z - sol.x) * d22;
}

}  // namespace

std::array<i64, 6> predicted_orders(const WeightPair& wp, const Perm3& sigma, int eps1,
                                    int eps2, i64 s) {
    BezoutSolution sol = solve_cofactors(wp, sigma, eps1, eps2);
    auto d = [&](int i, int jj) { return i128(wp.p[i - 1] - wp.q[sigma(jj) - 1]); };
    i128 hs = i128(signed_h(wp));
    i128 C = order_constant(wp, sol);

    std::array<i64, 6> out{};
    auto put = [&](const Perm3& target, i128 val) {
        out[target.index()] = checked_i64(iabs(val), "predicted_orders");
    };
    put(sigma, i128(s) * hs + C);
    put(sigma * Perm3::from_cycles("(12)"),
        i128(s) * d(1, 2) * d(2, 1) - sol.w * d(1, 2) + sol.y * d(2, 1));
    put(sigma * Perm3::from_cycles("(23)"),
        i128(s) * d(2, 3) * d(3, 2) + (i128(sol.z) + sol.w) * d(2, 3) + sol.x * d(3, 2));
    put(sigma * Perm3::from_cycles("(13)"),
        i128(s) * d(1, 3) * d(3, 1) - (i128(sol.x) + sol.y) * d(1, 3) - sol.z * d(3, 1));
    put(sigma * Perm3::from_cycles("(123)"), 1);
    put(sigma * Perm3::from_cycles("(132)"), 1);
    return out;
}

i64 alpha_value(const WeightPair& wp, const Perm3& sigma, int eps1, int eps2) {
    i64 h = invariant_h(wp);
    if (h < 1) throw std::domain_error("alpha_value: h must be >= 1");
    i128 C = order_constant(wp, solve_cofactors(wp, sigma, eps1, eps2));
    i128 a = (C + 1) % h;
    if (a < 0) a += h;
    return static_cast<i64>(a);
}

AlphaTable alpha_table(const WeightPair& wp) {
    if (!is_manifold(wp)) throw std::domain_error("alpha_table: not a manifold");
    AlphaTable t;
    t.h = invariant_h(wp);
    static const int eps[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    const auto& perms = Perm3::all();
    for (int k = 0; k < 6; ++k)
        for (int e = 0; e < 4; ++e) {
            t.alpha[k][e] = alpha_value(wp, perms[k], eps[e][0], eps[e][1]);
            if (t.alpha[k][e] == 0) t.predicate = true;
        }
    return t;
}

bool theorem_b_predicate(const WeightPair& wp) { return alpha_table(wp).predicate; }

ActionSpec reduce_action(const WeightPair& wp, const ActionSpec& act) {
    std::array<i64, 6> v{act.a[0], act.a[1], act.a[2], act.b[0], act.b[1], act.b[2]};
    const std::array<i64, 6> u1{1, 1, 1, 1, 1, 1};
    std::array<i64, 6> u2{wp.p[0], wp.p[1], wp.p[2], wp.q[0], wp.q[1], wp.q[2]};
    // Clear u2's first coordinate against u1. Reduce v at coordinate 0 with
    // u1 first, then at u2's pivot; u2 has a zero first coordinate, so the
    // second step preserves v[0] = 0.
    for (int k = 0; k < 6; ++k) u2[k] -= wp.p[0];
    i64 k0 = v[0];
    for (int t = 0; t < 6; ++t) v[t] -= k0;
    int pivot = -1;
    for (int k = 1; k < 6; ++k)
        if (u2[k] != 0) { pivot = k; break; }
    if (pivot >= 0) {
        if (u2[pivot] < 0)
            for (auto& x : u2) x = -x;
        i64 m = u2[pivot];
        i64 k = v[pivot] >= 0 ? v[pivot] / m : -((-v[pivot] + m - 1) / m);
        for (int t = 0; t < 6; ++t) v[t] = checked_i64(i128(v[t]) - i128(k) * u2[t], "reduce_action");
    }
    return ActionSpec::raw({v[0], v[1], v[2]}, {v[3], v[4], v[5]});
}

ConstructedAction minimal_3lens_action(const WeightPair& wp) {
    if (!is_manifold(wp)) throw std::domain_error("minimal_3lens_action: not a manifold");
    i64 hs = signed_h(wp);
    i64 h = std::abs(hs);

    std::optional<ConstructedAction> best;
    static const int eps[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    for (const Perm3& sigma : Perm3::all())
        for (auto& e : eps) {
            BezoutSolution sol = solve_cofactors(wp, sigma, e[0], e[1]);
            i128 C = order_constant(wp, sol);
            i128 c0 = ((C % h) + h) % h;
            // Candidate circle orders |s*hs + C| reachable with integral s.
            std::array<i128, 4> targets{c0, h - c0, c0 + h, 2 * h - c0};
            for (i128 tv : targets) {
                if (tv == 0 || tv == 4 || tv > h) continue;
                for (int sgn = -1; sgn <= 1; sgn += 2) {
                    i128 num = i128(sgn) * tv - C;
                    if (num % hs != 0) continue;
                    i64 s = checked_i64(num / hs, "minimal_3lens s");
                    ActionSpec act = build_action(wp, sol, s);
                    if (!is_almost_free(wp, act)) continue;
                    SingularLocus loc = singular_locus(wp, act);
                    // Exceptional faces must all meet at C_sigma.
                    bool ok = loc.summary.singular_faces <= 3;
                    for (const auto& f : loc.faces)
                        if (f.singular && f.vertex_even != sigma.index() &&
                            f.vertex_odd != sigma.index())
                            ok = false;
                    for (const auto& f : loc.faces)
                        if (f.singular && f.order_raw > h) ok = false;
                    if (!ok) continue;
                    ConstructedAction cand{act, sol, s, loc};
                    if (!best || cand.locus.summary.tuple() < best->locus.summary.tuple())
                        best = std::move(cand);
                }
            }
        }
    if (!best) throw std::logic_error("minimal_3lens_action: no candidate verified");
    return *best;
}

std::optional<ConstructedAction> one_point_decision(const WeightPair& wp) {
    if (!is_manifold(wp)) throw std::domain_error("one_point_decision: not a manifold");
    i64 hs = signed_h(wp);
    static const int eps[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    for (const Perm3& sigma : Perm3::all())
        for (auto& e : eps) {
            BezoutSolution sol = solve_cofactors(wp, sigma, e[0], e[1]);
            i128 C = order_constant(wp, sol);
            for (int target = -1; target <= 1; target += 2) {
                i128 num = i128(target) - C;
                if (num % hs != 0) continue;
                i64 s = checked_i64(num / hs, "one_point s");
                ActionSpec act = build_action(wp, sol, s);
                if (!is_almost_free(wp, act)) continue;
                SingularLocus loc = singular_locus(wp, act);
                if (loc.summary.singular_faces == 0 && loc.summary.singular_vertices == 1)
                    return ConstructedAction{act, sol, s, loc};
            }
        }
    return std::nullopt;
}

std::optional<ActionSpec> one_point_brute_window(const WeightPair& wp, i64 window) {
    for (i64 a1 = -window; a1 <= window; ++a1)
        for (i64 a2 = -window; a2 <= window; ++a2)
            for (i64 a3 = -window; a3 <= window; ++a3)
                for (i64 b1 = -window; b1 <= window; ++b1)
                    for (i64 b2 = -window; b2 <= window; ++b2) {
                        i64 b3 = a1 + a2 + a3 - b1 - b2;
                        if (b3 < -window || b3 > window) continue;
                        ActionSpec act({a1, a2, a3}, {b1, b2, b3});
                        if (!is_almost_free(wp, act)) continue;
                        SingularLocus loc = singular_locus(wp, act);
                        if (loc.summary.singular_faces == 0 &&
                            loc.summary.singular_vertices == 1)
                            return act;
                    }
    return std::nullopt;
}

std::vector<RankedAction> search_minimal(const WeightPair& wp, i64 s_min, i64 s_max,
                                         i64 window, std::size_t max_results) {
    if (!is_orbifold(wp)) throw std::domain_error("search_minimal: not an orbifold");
    if (s_max < s_min && window <= 0)
        throw std::invalid_argument("search_minimal: empty search space");

    const bool manifold = is_manifold(wp);
    std::set<ActionSpec> seen;
    std::vector<RankedAction> out;

    auto consider = [&](const ActionSpec& act, std::string provenance) {
        if (!is_almost_free(wp, act)) return;
        ActionSpec red = reduce_action(wp, act);
        if (!seen.insert(red).second) return;
        SingularLocus loc = manifold ? singular_locus(wp, red) : torus_quotient_locus(wp, red);
        out.push_back({red, std::move(loc), std::move(provenance)});
    };

    if (manifold) {
        static const int eps[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
        for (const Perm3& sigma : Perm3::all())
            for (auto& e : eps) {
                BezoutSolution sol = solve_cofactors(wp, sigma, e[0], e[1]);
                for (i64 s = s_min; s <= s_max; ++s)
                    consider(build_action(wp, sol, s),
                             "family sigma=" + sigma.cycles() + " eps=(" +
                                 std::to_string(e[0]) + "," + std::to_string(e[1]) +
                                 ") s=" + std::to_string(s));
            }
    }
    for (i64 a1 = -window; a1 <= window; ++a1)
        for (i64 a2 = -window; a2 <= window; ++a2)
            for (i64 a3 = -window; a3 <= window; ++a3)
                for (i64 b1 = -window; b1 <= window; ++b1)
                    for (i64 b2 = -window; b2 <= window; ++b2) {
                        i64 b3 = a1 + a2 + a3 - b1 - b2;
                        if (b3 < -window || b3 > window) continue;
                        consider(ActionSpec({a1, a2, a3}, {b1, b2, b3}), "window");
                    }

    std::stable_sort(out.begin(), out.end(), [](const RankedAction& x, const RankedAction& y) {
        auto tx = x.locus.summary.tuple(), ty = y.locus.summary.tuple();
        if (tx != ty) return tx < ty;
        return x.action < y.action;
    });
    if (out.size() > max_results) out.resize(max_results);
    return out;
}

}  // namespace esch
