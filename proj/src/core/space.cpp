#include "space.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace esch {

WeightPair::WeightPair(const Vec3& p_, const Vec3& q_) : p(p_), q(q_) {
    for (i64 x : p)
        if (x >= kEntryBound || x <= -kEntryBound)
            throw std::invalid_argument("WeightPair: entry magnitude must be < 2^31");
    for (i64 x : q)
        if (x >= kEntryBound || x <= -kEntryBound)
            throw std::invalid_argument("WeightPair: entry magnitude must be < 2^31");
    if (p[0] + p[1] + p[2] != q[0] + q[1] + q[2])
        throw std::invalid_argument("WeightPair: trace imbalance (sum p != sum q)");
}

WeightPair WeightPair::raw(const Vec3& p_, const Vec3& q_) {
    if (p_[0] + p_[1] + p_[2] != q_[0] + q_[1] + q_[2])
        throw std::invalid_argument("WeightPair: trace imbalance (sum p != sum q)");
    WeightPair wp;
    wp.p = p_;
    wp.q = q_;
    return wp;
}

DiffMatrix diff_matrix(const WeightPair& wp) {
    DiffMatrix a{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a[i][j] = wp.p[i] - wp.q[j];
    return a;
}

bool is_orbifold(const WeightPair& wp) {
    for (const Perm3& s : Perm3::all()) {
        Vec3 d = wp.diff_sigma(s);
        if (d[0] == 0 && d[1] == 0 && d[2] == 0) return false;
    }
    return true;
}

bool is_manifold(const WeightPair& wp) {
    // Third coordinate is minus the sum of the first two, so two suffice.
    for (const Perm3& s : Perm3::all()) {
        Vec3 d = wp.diff_sigma(s);
        if (gcd_i64(d[0], d[1]) != 1) return false;
    }
    return true;
}

i64 defining_kernel_order(const WeightPair& wp) {
    i64 g = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            g = gcd_i64(g, wp.p[i] - wp.q[j]);
            if (g == 1) return 1;
        }
    return g;
}

bool is_effective_defining_action(const WeightPair& wp) {
    return defining_kernel_order(wp) == 1;
}

bool is_positively_curved(const WeightPair& wp) {
    i64 pmin = std::min({wp.p[0], wp.p[1], wp.p[2]});
    i64 pmax = std::max({wp.p[0], wp.p[1], wp.p[2]});
    i64 qmin = std::min({wp.q[0], wp.q[1], wp.q[2]});
    i64 qmax = std::max({wp.q[0], wp.q[1], wp.q[2]});
    for (int i = 0; i < 3; ++i) {
        bool p_out = wp.p[i] < qmin || wp.p[i] > qmax;
        bool q_out = wp.q[i] < pmin || wp.q[i] > pmax;
        if (!p_out && !q_out) return false;
    }
    return true;
}

bool is_positively_curved_alt(const WeightPair& wp) {
    DiffMatrix a = diff_matrix(wp);
    auto row_sign = [&](int i) -> int {
        if (a[i][0] > 0 && a[i][1] > 0 && a[i][2] > 0) return 1;
        if (a[i][0] < 0 && a[i][1] < 0 && a[i][2] < 0) return -1;
        return 0;
    };
    auto col_sign = [&](int j) -> int {
        if (a[0][j] > 0 && a[1][j] > 0 && a[2][j] > 0) return 1;
        if (a[0][j] < 0 && a[1][j] < 0 && a[2][j] < 0) return -1;
        return 0;
    };
    for (int i = 0; i < 3; ++i)
        for (int k = i + 1; k < 3; ++k) {
            int si = row_sign(i), sk = row_sign(k);
            if (si != 0 && si == sk) return true;
            si = col_sign(i); sk = col_sign(k);
            if (si != 0 && si == sk) return true;
        }
    return false;
}

namespace {

i128 e2(const Vec3& x) {
    return i128(x[0]) * x[1] + i128(x[0]) * x[2] + i128(x[1]) * x[2];
}

}  // namespace

i64 invariant_h(const WeightPair& wp) {
    return checked_i64(iabs(e2(wp.p) - e2(wp.q)), "invariant_h");
}

i64 signed_h(const WeightPair& wp, const Perm3& tau, const Perm3& sigma) {
    const Vec3& p = wp.p;
    const Vec3& q = wp.q;
    i128 v = i128(p[tau(1) - 1] - q[sigma(2) - 1]) * (p[tau(1) - 1] - q[sigma(3) - 1]) -
             i128(p[tau(2) - 1] - q[sigma(1) - 1]) * (p[tau(3) - 1] - q[sigma(1) - 1]);
    return checked_i64(v, "signed_h");
}

i64 signed_h(const WeightPair& wp) {
    return checked_i64(e2(wp.q) - e2(wp.p), "signed_h");
}

SelfSingularData self_singular_locus(const WeightPair& wp) {
    if (!is_orbifold(wp))
        throw std::domain_error("self_singular_locus: (p,q) does not define an orbifold");
    SelfSingularData out{};
    const auto& perms = Perm3::all();
    for (int k = 0; k < 6; ++k) {
        Vec3 d = wp.diff_sigma(perms[k]);
        out.circle_order[k] = gcd_i64(gcd_i64(d[0], d[1]), d[2]);
        if (out.circle_order[k] > 1) {
            out.singular_circles.push_back(perms[k].cycles());
            ++out.singular_circle_count;
        }
    }
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            auto [se, so] = face_vertices(i, j);
            Vec3 d1 = wp.diff_sigma(se);
            Vec3 d2 = wp.diff_sigma(so);
            i64 g = 0;
            for (i64 x : d1) g = gcd_i64(g, x);
            for (i64 x : d2) g = gcd_i64(g, x);
            out.face_order[i - 1][j - 1] = g;
            if (g > 1) ++out.singular_face_count;
        }
    return out;
}

namespace {

using Flat9 = std::array<i64, 9>;

Flat9 flatten(const DiffMatrix& a) {
    return {a[0][0], a[0][1], a[0][2], a[1][0], a[1][1], a[1][2], a[2][0], a[2][1], a[2][2]};
}

// Minimum over row/col permutations of +/-A (and optionally +/-A^T).
void min_over_perms(const DiffMatrix& a, Flat9& best, bool& have) {
    for (const Perm3& r : Perm3::all())
        for (const Perm3& c : Perm3::all()) {
            Flat9 cand;
            int k = 0;
            for (int i = 1; i <= 3; ++i)
                for (int j = 1; j <= 3; ++j) cand[k++] = a[r(i) - 1][c(j) - 1];
            if (!have || cand < best) { best = cand; have = true; }
        }
}

DiffMatrix negate(const DiffMatrix& a) {
    DiffMatrix b;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) b[i][j] = -a[i][j];
    return b;
}

DiffMatrix transpose_pair(const DiffMatrix& a) {
    // Difference matrix of (q,p) is -A^T.
    DiffMatrix b;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) b[i][j] = -a[j][i];
    return b;
}

}  // namespace

CanonicalKey normalize(const WeightPair& wp, bool transpose_convention) {
    DiffMatrix a = diff_matrix(wp);
    Flat9 best{};
    bool have = false;
    min_over_perms(a, best, have);
    min_over_perms(negate(a), best, have);
    if (transpose_convention) {
        DiffMatrix t = transpose_pair(a);
        min_over_perms(t, best, have);
        min_over_perms(negate(t), best, have);
    }
    return {best, transpose_convention};
}

bool equivalent(const WeightPair& a, const WeightPair& b, bool transpose_convention) {
    return normalize(a, transpose_convention) == normalize(b, transpose_convention);
}

WeightPair reconstruct_from_key(const CanonicalKey& key) {
    const auto& f = key.flat;
    Vec3 p{f[0], f[3], f[6]};
    Vec3 q{0, f[0] - f[1], f[0] - f[2]};
    WeightPair wp = WeightPair::raw(p, q);
    if (flatten(diff_matrix(wp)) != f)
        throw std::invalid_argument("reconstruct_from_key: inconsistent key");
    return wp;
}

std::vector<WeightPair> orbit_representatives(const WeightPair& wp, bool transpose_convention) {
    std::vector<WeightPair> out;
    out.reserve(transpose_convention ? 144 : 72);
    DiffMatrix bases[2] = {diff_matrix(wp), transpose_pair(diff_matrix(wp))};
    int nbases = transpose_convention ? 2 : 1;
    for (int b = 0; b < nbases; ++b)
        for (int sgn = 0; sgn < 2; ++sgn) {
            DiffMatrix m = sgn ? negate(bases[b]) : bases[b];
            for (const Perm3& r : Perm3::all())
                for (const Perm3& c : Perm3::all()) {
                    Vec3 p{m[r(1) - 1][c(1) - 1], m[r(2) - 1][c(1) - 1], m[r(3) - 1][c(1) - 1]};
                    Vec3 q{0, m[r(1) - 1][c(1) - 1] - m[r(1) - 1][c(2) - 1],
                           m[r(1) - 1][c(1) - 1] - m[r(1) - 1][c(3) - 1]};
                    out.push_back(WeightPair::raw(p, q));
                }
        }
    return out;
}

std::vector<FamilyTag> detect_family(const WeightPair& wp, bool transpose_convention) {
    std::vector<FamilyTag> tags;
    auto add_once = [&](FamilyTag t) {
        for (const auto& u : tags)
            if (u.name == t.name) return;
        tags.push_back(std::move(t));
    };

    for (const WeightPair& r : orbit_representatives(wp, transpose_convention)) {
        const Vec3& p = r.p;
        const Vec3& q = r.q;
        // q1 == 0 for every representative.
        if (p[0] == p[1] && p[1] == p[2])
            add_once({"aloff-wallach", {-p[0], q[1] - p[0]}});
        if (p[0] == 1 && p[1] == 1 && q[1] == 0 && q[2] == p[2] + 2)
            add_once({"coho-one", {p[2]}});
        if (q[1] == 0 && q[2] == p[0] + p[1] + p[2])
            add_once({"coho-two", {p[0], p[1], p[2]}});
        if (q[1] == 0 && p[2] == p[0] + p[1] && q[2] == 2 * p[2])
            add_once({"eschenburg-free-T2", {p[0], p[1]}});
    }
    if (tags.empty()) tags.push_back({"generic", {}});
    return tags;
}

}  // namespace esch
