#pragma once

#include <array>
#include <string>
#include <vector>

#include "space.hpp"

namespace esch {

// Twist pair (a,b) of the commuting circle w.[g] = [w^a g conj(w)^b] acting
// on E_{p,q}. Trace-balanced.
struct ActionSpec {
    Vec3 a{};
    Vec3 b{};

    ActionSpec() = default;
    ActionSpec(const Vec3& a_, const Vec3& b_);
    static ActionSpec raw(const Vec3& a_, const Vec3& b_);

    Vec3 b_sigma(const Perm3& s) const { return permute(b, s); }
    Vec3 diff_sigma(const Perm3& s) const { return sub(a, b_sigma(s)); }

    friend bool operator==(const ActionSpec&, const ActionSpec&) = default;
    bool operator<(const ActionSpec& o) const {
        return a < o.a || (a == o.a && b < o.b);
    }
};

// Raw isotropy orders of the circle action together with the full lattice
// counts of the ambient two-torus action ("torus view"). kappa values are
// per unit gcd of the base vector; m values are the full parallelogram
// counts, m_X = kappa_X * gcd of the base vector.
struct IsotropyProfile {
    i64 kappa0 = 1;                                  // circle ineffective kernel
    std::array<i64, 6> vertex{};                     // indexed by Perm3::all()
    std::array<std::array<i64, 3>, 3> face{};        // [i-1][j-1]
    i64 m0 = 1;                                      // torus kernel count
    std::array<i64, 6> torus_vertex{};
    std::array<std::array<i64, 3>, 3> torus_face{};
    bool almost_free = false;
};

// Lens space L(l1,l2,d) sitting over face (i,j): weights l1 = p_{i1}-q_{j1},
// l2 = p_{i1}-q_{j2}, order d = p_i-q_j, with i1<i2 and j1<j2.
struct LensParams {
    i64 l1 = 0, l2 = 0, d = 0;
    bool smooth = false;        // gcd(l1,d) == gcd(l2,d) == 1
    std::string special;        // "S3" (|d|==1) | "S2xS1" (L(1,1,0)) | "S1xCP1" (d==0) | ""
};

struct LocusVertex {
    Perm3 sigma;
    bool even = false;
    i64 order_raw = 0;
    i64 order = 0;          // effective: raw / kernel
    bool singular = false;
    bool isolated = false;  // singular and on no singular face
};

struct LocusFace {
    int i = 0, j = 0;           // 1-based
    i64 order_raw = 0;
    i64 order = 0;
    bool singular = false;
    LensParams lens;
    int vertex_even = -1;       // indices into SingularLocus::vertices
    int vertex_odd = -1;
    // Cone angles 2*pi*order/vertex_order at the two incident vertices,
    // stored as reduced fractions of a full turn.
    Rational angle_even{1, 1};
    Rational angle_odd{1, 1};
    bool smooth_sphere = false; // face and both vertex orders coincide
};

struct LocusSummary {
    int singular_faces = 0;
    int singular_vertices = 0;
    i64 max_order = 1;
    i64 order_sum = 0;          // over singular elements
    int isolated_vertices = 0;

    auto tuple() const {
        return std::array<i64, 4>{singular_faces, singular_vertices, max_order, order_sum};
    }
    friend bool operator==(const LocusSummary&, const LocusSummary&) = default;
};

struct SingularLocus {
    i64 kernel = 1;             // kappa0 (circle view) or m0 (torus view)
    bool torus_view = false;
    std::array<LocusVertex, 6> vertices{};
    std::array<LocusFace, 9> faces{};   // row-major over (i,j)
    LocusSummary summary;
};

// Linear independence of p - q_sigma and a - b_sigma for all sigma.
bool is_almost_free(const WeightPair& wp, const ActionSpec& act);

// Kernel orders: kappa0 = kappa(P,A), m0 = minor_gcd(P,A) with P,A the six
// off-diagonal difference vectors in matched index order.
std::pair<i64, i64> kernel_orders(const WeightPair& wp, const ActionSpec& act);
i64 kappa0(const WeightPair& wp, const ActionSpec& act);

// Order along the exceptional circle C_sigma; 0 when the two difference
// vectors are dependent (the action is then not almost free).
i64 kappa_sigma(const WeightPair& wp, const ActionSpec& act, const Perm3& sigma);

// Order along the lens space L_{ij}, via the four differences indexed by
// i' != i, j' != j in matched order.
i64 kappa_face(const WeightPair& wp, const ActionSpec& act, int i, int j);

IsotropyProfile isotropy_profile(const WeightPair& wp, const ActionSpec& act);

// Brute-force recomputation of any single order through the lattice-point
// enumeration; shares no code with the gcd/minor formulas.
i64 isotropy_oracle_vertex(const WeightPair& wp, const ActionSpec& act, const Perm3& sigma);
i64 isotropy_oracle_face(const WeightPair& wp, const ActionSpec& act, int i, int j);
i64 isotropy_oracle_kernel(const WeightPair& wp, const ActionSpec& act);

LensParams lens_params(const WeightPair& wp, int i, int j);

// Full singular locus of the quotient orbifold. Requires almost free.
SingularLocus singular_locus(const WeightPair& wp, const ActionSpec& act);

// Orbifold structure of SU(3)//T^2, valid even when E_{p,q} is only an
// orbifold; symmetric in (wp <-> act).
SingularLocus torus_quotient_locus(const WeightPair& wp, const ActionSpec& act);

bool is_free_action(const WeightPair& wp, const ActionSpec& act);

// Graphviz export arranged as the standard hexagonal schematic.
std::string locus_to_dot(const SingularLocus& locus);

}  // namespace esch
