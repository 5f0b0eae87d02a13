#include "action.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "lattice.hpp"

namespace esch {

ActionSpec::ActionSpec(const Vec3& a_, const Vec3& b_) : a(a_), b(b_) {
    for (i64 x : a)
        if (x >= kEntryBound || x <= -kEntryBound)
            throw std::invalid_argument("ActionSpec: entry magnitude must be < 2^31");
    for (i64 x : b)
        if (x >= kEntryBound || x <= -kEntryBound)
            throw std::invalid_argument("ActionSpec: entry magnitude must be < 2^31");
    if (a[0] + a[1] + a[2] != b[0] + b[1] + b[2])
        throw std::invalid_argument("ActionSpec: trace imbalance (sum a != sum b)");
}

ActionSpec ActionSpec::raw(const Vec3& a_, const Vec3& b_) {
    if (a_[0] + a_[1] + a_[2] != b_[0] + b_[1] + b_[2])
        throw std::invalid_argument("ActionSpec: trace imbalance (sum a != sum b)");
    ActionSpec act;
    act.a = a_;
    act.b = b_;
    return act;
}

namespace {

// Off-diagonal index order (1,2),(1,3),(2,1),(2,3),(3,1),(3,2), shared by
// both vectors.
void off_diagonal(const Vec3& x, const Vec3& y, IntVec& out) {
    out = {x[0] - y[1], x[0] - y[2], x[1] - y[0], x[1] - y[2], x[2] - y[0], x[2] - y[1]};
}

void face_components(const Vec3& x, const Vec3& y, int i, int j, IntVec& out) {
    int i1 = (i == 1) ? 2 : 1, i2 = (i == 3) ? 2 : 3;
    int j1 = (j == 1) ? 2 : 1, j2 = (j == 3) ? 2 : 3;
    out = {x[i1 - 1] - y[j1 - 1], x[i1 - 1] - y[j2 - 1],
           x[i2 - 1] - y[j1 - 1], x[i2 - 1] - y[j2 - 1]};
}

}  // namespace

bool is_almost_free(const WeightPair& wp, const ActionSpec& act) {
    for (const Perm3& s : Perm3::all()) {
        Vec3 v = wp.diff_sigma(s);
        Vec3 w = act.diff_sigma(s);
        if (i128(v[0]) * w[1] - i128(v[1]) * w[0] == 0 &&
            i128(v[0]) * w[2] - i128(v[2]) * w[0] == 0 &&
            i128(v[1]) * w[2] - i128(v[2]) * w[1] == 0)
            return false;
    }
    return true;
}

std::pair<i64, i64> kernel_orders(const WeightPair& wp, const ActionSpec& act) {
    IntVec P, A;
    off_diagonal(wp.p, wp.q, P);
    off_diagonal(act.a, act.b, A);
    i64 m0 = minor_gcd(P, A);
    i64 g = gcd_vec(P);
    if (g == 0)
        throw std::domain_error("kernel_orders: all p_i - q_j vanish");
    if (m0 % g != 0) throw std::logic_error("kernel_orders: non-exact division");
    return {m0 / g, m0};
}

i64 kappa0(const WeightPair& wp, const ActionSpec& act) {
    if (!is_almost_free(wp, act))
        throw std::domain_error("kappa0: action is not almost free");
    return kernel_orders(wp, act).first;
}

i64 kappa_sigma(const WeightPair& wp, const ActionSpec& act, const Perm3& sigma) {
    Vec3 v = wp.diff_sigma(sigma);
    Vec3 w = act.diff_sigma(sigma);
    i64 den = gcd_i64(v[0], v[1]);
    // Trace balance: the first two coordinates vanish only when the whole
    // difference vector does, in which case the pair is dependent.
    if (den == 0) return 0;
    i128 det = i128(v[0]) * w[1] - i128(v[1]) * w[0];
    i64 num = checked_i64(iabs(det), "kappa_sigma");
    return num / den;
}

i64 kappa_face(const WeightPair& wp, const ActionSpec& act, int i, int j) {
    IntVec V, W;
    face_components(wp.p, wp.q, i, j, V);
    face_components(act.a, act.b, i, j, W);
    i64 g = gcd_vec(V);
    if (g == 0) return 0;
    i64 mg = minor_gcd(V, W);
    if (mg % g != 0) throw std::logic_error("kappa_face: non-exact division");
    return mg / g;
}

IsotropyProfile isotropy_profile(const WeightPair& wp, const ActionSpec& act) {
    IsotropyProfile pr;
    auto [k0, m0] = kernel_orders(wp, act);
    pr.kappa0 = k0;
    pr.m0 = m0;
    pr.almost_free = true;
    const auto& perms = Perm3::all();
    for (int k = 0; k < 6; ++k) {
        pr.vertex[k] = kappa_sigma(wp, act, perms[k]);
        if (pr.vertex[k] == 0) pr.almost_free = false;
        Vec3 v = wp.diff_sigma(perms[k]);
        pr.torus_vertex[k] = pr.vertex[k] * gcd_i64(v[0], v[1]);
    }
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            i64 kf = kappa_face(wp, act, i, j);
            pr.face[i - 1][j - 1] = kf;
            IntVec V;
            face_components(wp.p, wp.q, i, j, V);
            pr.torus_face[i - 1][j - 1] = kf * gcd_vec(V);
        }
    return pr;
}

i64 isotropy_oracle_vertex(const WeightPair& wp, const ActionSpec& act, const Perm3& sigma) {
    Vec3 v3 = wp.diff_sigma(sigma);
    Vec3 w3 = act.diff_sigma(sigma);
    IntVec v(v3.begin(), v3.end()), w(w3.begin(), w3.end());
    return oracle_distinct_s(lattice_points_oracle(v, w));
}

i64 isotropy_oracle_face(const WeightPair& wp, const ActionSpec& act, int i, int j) {
    IntVec V, W;
    face_components(wp.p, wp.q, i, j, V);
    face_components(act.a, act.b, i, j, W);
    return oracle_distinct_s(lattice_points_oracle(V, W));
}

i64 isotropy_oracle_kernel(const WeightPair& wp, const ActionSpec& act) {
    // The six off-diagonal conditions are implied by the four with index
    // pairs (1,2),(1,3),(2,1),(3,1): the remaining two are integer
    // combinations by trace balance. Keeps the search box tractable.
    auto reduced = [](const Vec3& x, const Vec3& y) {
        return IntVec{x[0] - y[1], x[0] - y[2], x[1] - y[0], x[2] - y[0]};
    };
    IntVec P = reduced(wp.p, wp.q), A = reduced(act.a, act.b);
    return oracle_distinct_s(lattice_points_oracle(P, A));
}

LensParams lens_params(const WeightPair& wp, int i, int j) {
    int i1 = (i == 1) ? 2 : 1;
    int j1 = (j == 1) ? 2 : 1;
    int j2 = (j == 3) ? 2 : 3;
    LensParams lp;
    lp.l1 = wp.p[i1 - 1] - wp.q[j1 - 1];
    lp.l2 = wp.p[i1 - 1] - wp.q[j2 - 1];
    lp.d = wp.p[i - 1] - wp.q[j - 1];
    lp.smooth = gcd_i64(lp.l1, lp.d) == 1 && gcd_i64(lp.l2, lp.d) == 1;
    if (lp.d == 0)
        lp.special = (std::abs(lp.l1) == 1 && std::abs(lp.l2) == 1) ? "S2xS1" : "S1xCP1";
    else if (lp.d == 1 || lp.d == -1)
        lp.special = "S3";
    return lp;
}

namespace {

SingularLocus assemble_locus(const WeightPair& wp, const ActionSpec& act, bool torus_view) {
    if (!is_almost_free(wp, act))
        throw std::domain_error("singular_locus: action is not almost free");
    IsotropyProfile pr = isotropy_profile(wp, act);

    SingularLocus loc;
    loc.torus_view = torus_view;
    loc.kernel = torus_view ? pr.m0 : pr.kappa0;
    const auto& raw_vertex = torus_view ? pr.torus_vertex : pr.vertex;
    const auto& raw_face = torus_view ? pr.torus_face : pr.face;

    const auto& perms = Perm3::all();
    for (int k = 0; k < 6; ++k) {
        LocusVertex& v = loc.vertices[k];
        v.sigma = perms[k];
        v.even = perms[k].even();
        v.order_raw = raw_vertex[k];
        if (v.order_raw % loc.kernel != 0)
            throw std::logic_error("singular_locus: kernel does not divide a vertex order");
        v.order = v.order_raw / loc.kernel;
        v.singular = v.order > 1;
        v.isolated = v.singular;
    }

    int fi = 0;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j, ++fi) {
            LocusFace& f = loc.faces[fi];
            f.i = i;
            f.j = j;
            f.order_raw = raw_face[i - 1][j - 1];
            if (f.order_raw % loc.kernel != 0)
                throw std::logic_error("singular_locus: kernel does not divide a face order");
            f.order = f.order_raw / loc.kernel;
            f.singular = f.order > 1;
            f.lens = lens_params(wp, i, j);
            auto [se, so] = face_vertices(i, j);
            f.vertex_even = se.index();
            f.vertex_odd = so.index();
            const LocusVertex& ve = loc.vertices[f.vertex_even];
            const LocusVertex& vo = loc.vertices[f.vertex_odd];
            if (f.order_raw != 0) {
                if (ve.order_raw % f.order_raw != 0 || vo.order_raw % f.order_raw != 0)
                    throw std::logic_error("singular_locus: face order does not divide a vertex order");
                f.angle_even = Rational(f.order_raw, ve.order_raw);
                f.angle_odd = Rational(f.order_raw, vo.order_raw);
            }
            f.smooth_sphere =
                f.order_raw == ve.order_raw && f.order_raw == vo.order_raw;
            if (f.singular) {
                loc.vertices[f.vertex_even].isolated = false;
                loc.vertices[f.vertex_odd].isolated = false;
            }
        }

    LocusSummary& s = loc.summary;
    for (const auto& v : loc.vertices)
        if (v.singular) {
            ++s.singular_vertices;
            s.order_sum += v.order;
            s.max_order = std::max(s.max_order, v.order);
            if (v.isolated) ++s.isolated_vertices;
        }
    for (const auto& f : loc.faces)
        if (f.singular) {
            ++s.singular_faces;
            s.order_sum += f.order;
            s.max_order = std::max(s.max_order, f.order);
        }
    return loc;
}

}  // namespace

SingularLocus singular_locus(const WeightPair& wp, const ActionSpec& act) {
    return assemble_locus(wp, act, false);
}

SingularLocus torus_quotient_locus(const WeightPair& wp, const ActionSpec& act) {
    return assemble_locus(wp, act, true);
}

bool is_free_action(const WeightPair& wp, const ActionSpec& act) {
    if (!is_almost_free(wp, act)) return false;
    SingularLocus loc = singular_locus(wp, act);
    return loc.summary.singular_faces == 0 && loc.summary.singular_vertices == 0;
}

std::string locus_to_dot(const SingularLocus& locus) {
    // Hexagon layout: id on top, (13) at the bottom, odd vertices on the
    // right going down, even on the left.
    static const char* kPos[6] = {"0,2!",      // id
                                  "1.73,1!",   // (12)
                                  "0,-2!",     // (13)
                                  "-1.73,1!",  // (23)
                                  "-1.73,-1!", // (123)
                                  "1.73,-1!"}; // (132)
    std::ostringstream os;
    os << "graph singular_locus {\n";
    os << "  layout=neato;\n  node [shape=circle fontsize=11];\n";
    for (int k = 0; k < 6; ++k) {
        const LocusVertex& v = locus.vertices[k];
        os << "  v" << k << " [label=\"C" << v.sigma.cycles() << "\\n" << v.order
           << "\" pos=\"" << kPos[k] << "\"";
        if (v.singular) os << " style=filled fillcolor=salmon penwidth=2";
        os << "];\n";
    }
    for (const LocusFace& f : locus.faces) {
        os << "  v" << f.vertex_even << " -- v" << f.vertex_odd << " [label=\"L" << f.i
           << f.j << ":" << f.order << " L(" << f.lens.l1 << "," << f.lens.l2 << ","
           << f.lens.d << ")\"";
        if (f.singular) os << " color=red penwidth=2";
        else os << " color=gray";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace esch
