#include "jsonio.hpp"

namespace esch {

namespace {

ordered_json vec3_json(const Vec3& v) { return ordered_json::array({v[0], v[1], v[2]}); }

ordered_json rational_json(const Rational& r) {
    return ordered_json::array({r.num, r.den});
}

}  // namespace

ordered_json to_json(const WeightPair& wp) {
    return {{"p", vec3_json(wp.p)}, {"q", vec3_json(wp.q)}};
}

ordered_json to_json(const ActionSpec& act) {
    return {{"a", vec3_json(act.a)}, {"b", vec3_json(act.b)}};
}

ordered_json to_json(const CanonicalKey& key) {
    ordered_json j;
    j["key"] = key.flat;
    j["transpose_convention"] = key.transpose_convention;
    return j;
}

ordered_json to_json(const SelfSingularData& d) {
    ordered_json circles = ordered_json::object();
    const auto& perms = Perm3::all();
    for (int k = 0; k < 6; ++k) circles[perms[k].cycles()] = d.circle_order[k];
    ordered_json faces = ordered_json::object();
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            faces[std::to_string(i) + std::to_string(j)] = d.face_order[i - 1][j - 1];
    return {{"circle_orders", circles},
            {"face_orders", faces},
            {"singular_circles", d.singular_circles},
            {"singular_circle_count", d.singular_circle_count},
            {"singular_face_count", d.singular_face_count}};
}

ordered_json to_json(const IsotropyProfile& pr) {
    ordered_json vertices = ordered_json::object();
    ordered_json tvertices = ordered_json::object();
    const auto& perms = Perm3::all();
    for (int k = 0; k < 6; ++k) {
        vertices[perms[k].cycles()] = pr.vertex[k];
        tvertices[perms[k].cycles()] = pr.torus_vertex[k];
    }
    ordered_json faces = ordered_json::object();
    ordered_json tfaces = ordered_json::object();
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            faces[std::to_string(i) + std::to_string(j)] = pr.face[i - 1][j - 1];
            tfaces[std::to_string(i) + std::to_string(j)] = pr.torus_face[i - 1][j - 1];
        }
    return {{"kappa0", pr.kappa0},       {"vertex", vertices}, {"face", faces},
            {"m0", pr.m0},               {"torus_vertex", tvertices},
            {"torus_face", tfaces},      {"almost_free", pr.almost_free}};
}

ordered_json to_json(const LensParams& lp) {
    ordered_json j;
    j["lens"] = ordered_json::array({lp.l1, lp.l2, lp.d});
    j["smooth"] = lp.smooth;
    if (!lp.special.empty()) j["special"] = lp.special;
    return j;
}

ordered_json to_json(const SingularLocus& loc) {
    ordered_json vertices = ordered_json::array();
    for (const auto& v : loc.vertices) {
        ordered_json jv;
        jv["sigma"] = v.sigma.cycles();
        jv["parity"] = v.even ? "even" : "odd";
        jv["order_raw"] = v.order_raw;
        jv["order"] = v.order;
        jv["singular"] = v.singular;
        jv["isolated"] = v.isolated;
        vertices.push_back(jv);
    }
    ordered_json faces = ordered_json::array();
    for (const auto& f : loc.faces) {
        ordered_json jf;
        jf["face"] = ordered_json::array({f.i, f.j});
        jf["order_raw"] = f.order_raw;
        jf["order"] = f.order;
        jf["singular"] = f.singular;
        jf["lens"] = to_json(f.lens);
        jf["vertices"] = ordered_json::array({loc.vertices[f.vertex_even].sigma.cycles(),
                                              loc.vertices[f.vertex_odd].sigma.cycles()});
        jf["angle_turns"] = ordered_json::array(
            {rational_json(f.angle_even), rational_json(f.angle_odd)});
        jf["smooth_sphere"] = f.smooth_sphere;
        faces.push_back(jf);
    }
    return {{"view", loc.torus_view ? "torus" : "circle"},
            {"kernel", loc.kernel},
            {"vertices", vertices},
            {"faces", faces},
            {"summary",
             {{"singular_faces", loc.summary.singular_faces},
              {"singular_vertices", loc.summary.singular_vertices},
              {"isolated_vertices", loc.summary.isolated_vertices},
              {"max_order", loc.summary.max_order},
              {"order_sum", loc.summary.order_sum}}}};
}

ordered_json to_json(const AlphaTable& t) {
    ordered_json vals = ordered_json::object();
    static const char* eps_names[4] = {"+1,+1", "+1,-1", "-1,+1", "-1,-1"};
    const auto& perms = Perm3::all();
    for (int k = 0; k < 6; ++k) {
        ordered_json row = ordered_json::object();
        for (int e = 0; e < 4; ++e) row[eps_names[e]] = t.alpha[k][e];
        vals[perms[k].cycles()] = row;
    }
    return {{"h", t.h}, {"alpha", vals}, {"predicate", t.predicate}};
}

ordered_json to_json(const BezoutSolution& sol) {
    return {{"sigma", sol.sigma.cycles()},
            {"eps", ordered_json::array({sol.eps1, sol.eps2})},
            {"x", sol.x},
            {"y", sol.y},
            {"z", sol.z},
            {"w", sol.w},
            {"shift1", sol.shift1},
            {"shift2", sol.shift2}};
}

namespace {

ordered_json totals_json(const ConventionTotals& t, bool include_histogram) {
    ordered_json j;
    j["spaces"] = t.spaces;
    j["theorem_b_positive"] = t.theorem_b_positive;
    j["free_family"] = t.free_family;
    j["one_point_admitting"] = t.one_point_admitting;
    if (include_histogram) {
        ordered_json hist = ordered_json::array();
        for (std::size_t h = 0; h < t.per_h.size(); ++h)
            if (t.per_h[h]) hist.push_back(ordered_json::array({h, t.per_h[h]}));
        j["per_h"] = hist;
    }
    return j;
}

}  // namespace

ordered_json to_json(const ScanSummary& s) {
    ordered_json j;
    j["h_max"] = s.h_max;
    j["convention"] = s.convention == Convention::kTranspose ? "transpose" : "no-transpose";
    j["both_conventions"] = s.both_conventions;
    j["one_point_mode"] = static_cast<int>(s.one_point_mode);
    j["totals"] = totals_json(s.totals, true);
    if (s.totals_other) j["totals_other"] = totals_json(*s.totals_other, true);
    j["shards"] = s.shards;
    j["complete"] = s.complete;
    if (!s.complete) j["next_h"] = s.next_h;
    j["resumed"] = s.resumed;
    j["wall_seconds"] = s.wall_seconds;
    return j;
}

ordered_json analyze_space_json(const WeightPair& wp) {
    ordered_json j = to_json(wp);
    j["trace"] = wp.p[0] + wp.p[1] + wp.p[2];
    j["orbifold"] = is_orbifold(wp);
    j["manifold"] = is_manifold(wp);
    i64 kern = defining_kernel_order(wp);
    j["defining_kernel"] = kern;
    j["effective"] = kern == 1;
    j["positively_curved"] = is_positively_curved(wp);
    j["positively_curved_alt"] = is_positively_curved_alt(wp);
    j["h"] = invariant_h(wp);
    j["signed_h"] = signed_h(wp);
    ordered_json fams = ordered_json::array();
    for (const FamilyTag& t : detect_family(wp)) {
        ordered_json f;
        f["family"] = t.name;
        f["params"] = t.params;
        fams.push_back(f);
    }
    j["families"] = fams;
    j["canonical"] = to_json(normalize(wp, true));
    j["canonical_no_transpose"] = to_json(normalize(wp, false));
    if (is_orbifold(wp)) j["self_singular"] = to_json(self_singular_locus(wp));
    return j;
}

ordered_json oracle_json(const IntVec& v, const IntVec& w) {
    ordered_json j;
    j["v"] = v;
    j["w"] = w;
    j["gcd_v"] = gcd_vec(v);
    j["minor_gcd"] = minor_gcd(v, w);
    bool indep = minor_gcd(v, w) != 0;
    if (gcd_vec(v) != 0) j["kappa"] = kappa(v, w);
    if (indep) {
        auto pts = lattice_points_oracle(v, w);
        ordered_json arr = ordered_json::array();
        for (const auto& pt : pts)
            arr.push_back(ordered_json::array(
                {rational_json(pt.t), rational_json(pt.s)}));
        j["lattice_points"] = arr;
        j["count"] = pts.size();
        j["distinct_s"] = oracle_distinct_s(pts);
    }
    return j;
}

WeightPair weight_pair_from_json(const ordered_json& j) {
    Vec3 p{}, q{};
    for (int i = 0; i < 3; ++i) {
        p[i] = j.at("p").at(i).get<i64>();
        q[i] = j.at("q").at(i).get<i64>();
    }
    return WeightPair(p, q);
}

}  // namespace esch
