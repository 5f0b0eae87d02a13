#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "perm.hpp"

namespace esch {

// Defining pair (p,q) of a biquotient circle action z.g = z^p g conj(z)^q on
// SU(3). Trace-balanced by construction.
struct WeightPair {
    Vec3 p{};
    Vec3 q{};

    WeightPair() = default;
    WeightPair(const Vec3& p_, const Vec3& q_);

    // Trace-balance checked, magnitude unchecked. Used for internally built
    // representatives whose entries are differences of valid entries.
    static WeightPair raw(const Vec3& p_, const Vec3& q_);

    Vec3 q_sigma(const Perm3& s) const { return permute(q, s); }
    Vec3 diff_sigma(const Perm3& s) const { return sub(p, q_sigma(s)); }

    friend bool operator==(const WeightPair&, const WeightPair&) = default;
    bool operator<(const WeightPair& o) const {
        return p < o.p || (p == o.p && q < o.q);
    }
};

// A_{ij} = p_i - q_j, row-major.
using DiffMatrix = std::array<std::array<i64, 3>, 3>;

DiffMatrix diff_matrix(const WeightPair& wp);

// Lexicographic minimum of the flattened difference matrix over row
// permutations, column permutations, global negation, and (optionally)
// transposition. Translation invariance is automatic since only differences
// enter.
struct CanonicalKey {
    std::array<i64, 9> flat{};
    bool transpose_convention = true;

    friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
    bool operator<(const CanonicalKey& o) const { return flat < o.flat; }
};

bool is_orbifold(const WeightPair& wp);
bool is_manifold(const WeightPair& wp);

// Order of the kernel of the defining action: gcd of all differences p_i-q_j.
// The action is effective iff this is 1.
i64 defining_kernel_order(const WeightPair& wp);
bool is_effective_defining_action(const WeightPair& wp);

bool is_positively_curved(const WeightPair& wp);

// Sign criterion used only as a cross-check: some two rows (or two columns)
// of the difference matrix consist of six integers of one common sign.
bool is_positively_curved_alt(const WeightPair& wp);

// |H^4| = |e2(p) - e2(q)| where e2 is the second elementary symmetric poly.
i64 invariant_h(const WeightPair& wp);

// (p_t1 - q_s2)(p_t1 - q_s3) - (p_t2 - q_s1)(p_t3 - q_s1). Evaluates to
// e2(q) - e2(p) for every (tau,sigma); kept parameterized for auditability.
i64 signed_h(const WeightPair& wp, const Perm3& tau, const Perm3& sigma);
i64 signed_h(const WeightPair& wp);

// Singular structure of E_{p,q} itself: cyclic group orders along the six
// exceptional circles and nine lens spaces of the defining action.
struct SelfSingularData {
    std::array<i64, 6> circle_order{};              // indexed by Perm3::all()
    std::array<std::array<i64, 3>, 3> face_order{}; // [i-1][j-1]
    std::vector<std::string> singular_circles;      // cycle notation, order > 1
    int singular_circle_count = 0;
    int singular_face_count = 0;
};

SelfSingularData self_singular_locus(const WeightPair& wp);

struct FamilyTag {
    std::string name;            // coho-one | coho-two | aloff-wallach | eschenburg-free-T2 | generic
    std::vector<i64> params;
};

// All recognized family memberships, tested over the full normalization
// orbit so permuted/translated/negated presentations are recognized.
std::vector<FamilyTag> detect_family(const WeightPair& wp, bool transpose_convention = true);

CanonicalKey normalize(const WeightPair& wp, bool transpose_convention = true);
bool equivalent(const WeightPair& a, const WeightPair& b, bool transpose_convention = true);

// Representative with q1 = 0 recovered from a canonical key.
WeightPair reconstruct_from_key(const CanonicalKey& key);

// All 72 (or 144 with transposition) images of wp under the normalization
// group, each translated so that q1 = 0.
std::vector<WeightPair> orbit_representatives(const WeightPair& wp, bool transpose_convention);

}  // namespace esch
