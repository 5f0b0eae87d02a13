#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ints.hpp"

namespace esch {

// Dense integer vector of length 2..6, entries |x| < 2^31.
using IntVec = std::vector<i64>;

// Exact reduced rational with positive denominator.
struct Rational {
    i64 num = 0;
    i64 den = 1;

    Rational() = default;
    Rational(i64 n, i64 d);

    friend bool operator==(const Rational&, const Rational&) = default;
    bool operator<(const Rational& o) const;
};

struct RationalPair {
    Rational t;
    Rational s;

    friend bool operator==(const RationalPair&, const RationalPair&) = default;
    bool operator<(const RationalPair& o) const {
        return t < o.t || (t == o.t && s < o.s);
    }
};

void validate_vec(const IntVec& v, std::size_t min_len = 2, std::size_t max_len = 6);

// gcd of absolute values; 0 for the all-zero vector.
i64 gcd_vec(const IntVec& v);

// gcd over i<j of |v_i w_j - v_j w_i|; 0 iff v and w are linearly dependent.
// Equals the number of lattice points of Z^n in the half-open parallelogram
// spanned by v and w (the product of the two invariant factors of the
// matrix [v w]).
i64 minor_gcd(const IntVec& v, const IntVec& w);

// minor_gcd(v,w) / gcd_vec(v). Counts the distinct s-coordinates of lattice
// points t*v + s*w in Z^n with 0 <= t,s < 1. Requires v != 0.
i64 kappa(const IntVec& v, const IntVec& w);

// Brute-force enumeration of all (t,s) in [0,1)^2 with t*v + s*w integral.
// Requires v,w linearly independent and a bounding box of at most
// `max_box_points` integer points. Returned pairs are sorted.
std::vector<RationalPair> lattice_points_oracle(const IntVec& v, const IntVec& w,
                                                i64 max_box_points = 1000000);

// Number of distinct s-values among the oracle's points.
i64 oracle_distinct_s(const std::vector<RationalPair>& pts);

}  // namespace esch
