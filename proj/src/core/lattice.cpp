#include "lattice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace esch {

Rational::Rational(i64 n, i64 d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    i64 g = gcd_i64(n, d);
    if (g > 1) { n /= g; d /= g; }
    num = n;
    den = d;
}

bool Rational::operator<(const Rational& o) const {
    return i128(num) * o.den < i128(o.num) * den;
}

void validate_vec(const IntVec& v, std::size_t min_len, std::size_t max_len) {
    if (v.size() < min_len || v.size() > max_len)
        throw std::invalid_argument("IntVec: length must be in [" +
                                    std::to_string(min_len) + "," +
                                    std::to_string(max_len) + "]");
    for (i64 x : v)
        if (x >= kEntryBound || x <= -kEntryBound)
            throw std::invalid_argument("IntVec: entry magnitude must be < 2^31");
}

i64 gcd_vec(const IntVec& v) {
    validate_vec(v, 1);
    i64 g = 0;
    for (i64 x : v) {
        g = gcd_i64(g, x);
        if (g == 1) break;
    }
    return g;
}

i64 minor_gcd(const IntVec& v, const IntVec& w) {
    validate_vec(v);
    validate_vec(w);
    if (v.size() != w.size())
        throw std::invalid_argument("minor_gcd: length mismatch");
    i128 g = 0;
    const std::size_t n = v.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            i128 m = i128(v[i]) * w[j] - i128(v[j]) * w[i];
            g = gcd_i128(g, m);
            if (g == 1) return 1;
        }
    return checked_i64(g, "minor_gcd");
}

i64 kappa(const IntVec& v, const IntVec& w) {
    i64 gv = gcd_vec(v);
    if (gv == 0) throw std::domain_error("kappa: v must be nonzero");
    i64 mg = minor_gcd(v, w);
    if (mg % gv != 0) throw std::logic_error("kappa: gcd(v) does not divide the minor gcd");
    return mg / gv;
}

namespace {

bool dependent(const IntVec& v, const IntVec& w) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (i128(v[i]) * w[j] - i128(v[j]) * w[i] != 0) return false;
    return true;
}

}  // namespace

std::vector<RationalPair> lattice_points_oracle(const IntVec& v, const IntVec& w,
                                                i64 max_box_points) {
    validate_vec(v);
    validate_vec(w);
    if (v.size() != w.size())
        throw std::invalid_argument("lattice_points_oracle: length mismatch");
    if (dependent(v, w))
        throw std::domain_error("lattice_points_oracle: vectors must be independent");

    const std::size_t n = v.size();

    // Coordinate ranges of {t*v + s*w : 0 <= t,s < 1}.
    std::vector<i64> lo(n), hi(n);
    i128 box = 1;
    for (std::size_t i = 0; i < n; ++i) {
        lo[i] = std::min<i64>(0, v[i]) + std::min<i64>(0, w[i]);
        hi[i] = std::max<i64>(0, v[i]) + std::max<i64>(0, w[i]);
        box *= i128(hi[i] - lo[i] + 1);
        if (box > max_box_points)
            throw std::domain_error("lattice_points_oracle: bounding box too large");
    }

    // Invertible coordinate pair used to solve t*v + s*w = u.
    std::size_t pi = 0, pj = 1;
    i128 det = 0;
    for (std::size_t i = 0; i + 1 < n && det == 0; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            det = i128(v[i]) * w[j] - i128(v[j]) * w[i];
            if (det != 0) { pi = i; pj = j; break; }
        }
    const i64 d = checked_i64(det, "oracle determinant");

    std::vector<RationalPair> out;
    std::vector<i64> u(lo);
    for (;;) {
        // t = (u_i w_j - u_j w_i)/d, s = (v_i u_j - v_j u_i)/d.
        i64 tn = checked_i64(i128(u[pi]) * w[pj] - i128(u[pj]) * w[pi], "oracle t");
        i64 sn = checked_i64(i128(v[pi]) * u[pj] - i128(v[pj]) * u[pi], "oracle s");
        Rational t(tn, d), s(sn, d);
        bool in_range = t.num >= 0 && t.num < t.den && s.num >= 0 && s.num < s.den;
        if (in_range) {
            bool ok = true;
            for (std::size_t k = 0; k < n && ok; ++k) {
                // t*v_k + s*w_k must equal the integer u_k exactly.
                i128 lhs = i128(t.num) * s.den * v[k] + i128(s.num) * t.den * w[k];
                ok = lhs == i128(u[k]) * t.den * s.den;
            }
            if (ok) out.push_back({t, s});
        }
        std::size_t k = 0;
        while (k < n && u[k] == hi[k]) { u[k] = lo[k]; ++k; }
        if (k == n) break;
        ++u[k];
    }
    std::sort(out.begin(), out.end());
    return out;
}

i64 oracle_distinct_s(const std::vector<RationalPair>& pts) {
    std::set<Rational> ss;
    for (const auto& p : pts) ss.insert(p.s);
    return static_cast<i64>(ss.size());
}

}  // namespace esch
