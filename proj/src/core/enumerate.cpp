#include "enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <condition_variable>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <thread>
#include <unordered_set>

#include <json.hpp>

namespace esch {

using nlohmann::json;
using nlohmann::ordered_json;

WeightPair reconstruct(const QuadrupleKey& k) {
    Vec3 p{k.k1 + k.k2 + k.k3 + k.k4, k.k3, k.k4};
    Vec3 q{0, k.k2 + k.k3 + k.k4, k.k1 + k.k3 + k.k4};
    return WeightPair(p, q);
}

QuadrupleKey extract_key(const WeightPair& wp) {
    return {wp.p[0] - wp.q[1], wp.p[0] - wp.q[2], wp.p[1] - wp.q[0], wp.p[2] - wp.q[0]};
}

namespace {

// divisors[m] for all m <= n, ascending.
std::vector<std::vector<i64>> divisor_table(i64 n) {
    std::vector<std::vector<i64>> divs(n + 1);
    for (i64 d = 1; d <= n; ++d)
        for (i64 m = d; m <= n; m += d) divs[m].push_back(d);
    return divs;
}

}  // namespace

void quad_stream(i64 h_max, const std::function<bool(const QuadrupleKey&)>& fn) {
    if (h_max < 1) throw std::invalid_argument("quad_stream: h_max must be >= 1");
    auto divs = divisor_table(h_max);
    for (i64 h = 2; h <= h_max; ++h)
        for (i64 m = 1; m < h; ++m) {
            i64 n = h - m;
            for (i64 k1 : divs[m])
                for (i64 k3 : divs[n])
                    if (!fn({k1, m / k1, k3, -(n / k3)})) return;
        }
}

std::vector<QuadrupleKey> quad_stream_collect(i64 h_max) {
    std::vector<QuadrupleKey> out;
    quad_stream(h_max, [&](const QuadrupleKey& k) {
        out.push_back(k);
        return true;
    });
    return out;
}

namespace {

using Flat9 = std::array<i64, 9>;

struct Flat9Hash {
    std::size_t operator()(const Flat9& f) const {
        std::uint64_t x = 1469598103934665603ull;
        for (i64 v : f) {
            x ^= static_cast<std::uint64_t>(v);
            x *= 1099511628211ull;
        }
        return static_cast<std::size_t>(x);
    }
};

// Lexicographic minimum of the flattened matrix over row/column permutations.
void min_perm_images(const i64 m[3][3], Flat9& best, bool& have) {
    static const int perms[6][3] = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                                    {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    for (const auto& r : perms)
        for (const auto& c : perms) {
            Flat9 cand{m[r[0]][c[0]], m[r[0]][c[1]], m[r[0]][c[2]],
                       m[r[1]][c[0]], m[r[1]][c[1]], m[r[1]][c[2]],
                       m[r[2]][c[0]], m[r[2]][c[1]], m[r[2]][c[2]]};
            if (!have || cand < best) { best = cand; have = true; }
        }
}

// Canonical forms of a difference matrix under both conventions in one walk.
void canonical_both(const WeightPair& wp, Flat9& no_t, Flat9& with_t) {
    i64 a[3][3], na[3][3], ta[3][3], nta[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            a[i][j] = wp.p[i] - wp.q[j];
            na[i][j] = -a[i][j];
            ta[i][j] = 0;
        }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            ta[i][j] = -a[j][i];  // difference matrix of (q,p)
            nta[i][j] = a[j][i];
        }
    bool have = false;
    min_perm_images(a, no_t, have);
    min_perm_images(na, no_t, have);
    with_t = no_t;
    min_perm_images(ta, with_t, have);
    min_perm_images(nta, with_t, have);
}

bool pos_curved_fast(const Vec3& p, const Vec3& q) {
    i64 pmin = std::min({p[0], p[1], p[2]});
    i64 pmax = std::max({p[0], p[1], p[2]});
    i64 qmin = std::min({q[0], q[1], q[2]});
    i64 qmax = std::max({q[0], q[1], q[2]});
    for (int i = 0; i < 3; ++i) {
        bool p_in = p[i] >= qmin && p[i] <= qmax;
        bool q_in = q[i] >= pmin && q[i] <= pmax;
        if (p_in && q_in) return false;
    }
    return true;
}

// Pairwise-coprimality conditions of the reconstructed pair in key form.
bool manifold_fast(i64 k1, i64 k2, i64 k3, i64 k4a, i64 T) {
    return gcd_i64(k1, k3) == 1 && gcd_i64(k2, k3) == 1 && gcd_i64(k1, k4a) == 1 &&
           gcd_i64(k2, k4a) == 1 && gcd_i64(T, k2 + k4a) == 1 && gcd_i64(T, k1 + k4a) == 1;
}

struct StripeCounts {
    std::uint64_t spaces = 0;
    std::uint64_t theorem_b = 0;
    std::uint64_t free_family = 0;
    std::uint64_t one_point = 0;
};

struct StripeResult {
    i64 h = 0;
    StripeCounts primary;
    StripeCounts other;
    std::vector<std::string> record_lines;
};

struct ClassFlags {
    bool theorem_b = false;
    bool free_family = false;
    bool one_point = false;
    bool one_point_known = false;
};

ClassFlags class_flags(const WeightPair& wp, i64 h, OnePointMode mode, bool transpose_conv) {
    ClassFlags f;
    if (invariant_h(wp) != h) throw std::logic_error("scan: stripe h mismatch");
    if (h % 2 == 0) throw std::logic_error("scan: manifold with even h");
    f.theorem_b = theorem_b_predicate(wp);
    // A free circle action forces the obstruction to vanish, so the family
    // test only needs to run on obstruction-positive classes.
    if (f.theorem_b) f.free_family = detect_free_family(wp, transpose_conv);
    if (mode == OnePointMode::kAll || (mode == OnePointMode::kTheoremBPositive && f.theorem_b)) {
        f.one_point = one_point_decision(wp).has_value();
        f.one_point_known = true;
    }
    return f;
}

std::string record_line(const QuadrupleKey& key, const WeightPair& wp, i64 h,
                        const ClassFlags& f) {
    ordered_json j;
    j["key"] = {key.k1, key.k2, key.k3, key.k4};
    j["p"] = {wp.p[0], wp.p[1], wp.p[2]};
    j["q"] = {wp.q[0], wp.q[1], wp.q[2]};
    j["h"] = h;
    j["manifold"] = true;
    j["pos_curved"] = true;
    j["theorem_b"] = f.theorem_b;
    j["free_family"] = f.free_family;
    if (f.one_point_known)
        j["one_point"] = f.one_point;
    else
        j["one_point"] = nullptr;
    return j.dump();
}

class StripeProcessor {
public:
    StripeProcessor(const std::vector<std::vector<i64>>& divs, const ScanOptions& opts)
        : divs_(divs), opts_(opts) {}

    StripeResult process(i64 h) {
        StripeResult res;
        res.h = h;
        seen_primary_.clear();
        seen_other_.clear();
        const bool both = opts_.both_conventions;
        const bool primary_transpose = opts_.convention == Convention::kTranspose;
        const bool want_records = !opts_.records_path.empty();

        for (i64 m = 1; m < h; ++m) {
            i64 n = h - m;
            for (i64 k1 : divs_[m]) {
                i64 k2 = m / k1;
                // The (k1,k2)-swapped key lies in the same canonical class
                // (column swap), so half the stream suffices.
                if (k1 < k2) continue;
                for (i64 k3 : divs_[n]) {
                    i64 k4a = n / k3;
                    i64 T = k1 + k2 + k3 - k4a;
                    Vec3 p{T, k3, -k4a};
                    Vec3 q{0, T - k1, T - k2};
                    if (!pos_curved_fast(p, q)) continue;
                    if (!manifold_fast(k1, k2, k3, k4a, T)) continue;

                    WeightPair wp = WeightPair::raw(p, q);
                    Flat9 no_t, with_t;
                    canonical_both(wp, no_t, with_t);
                    const Flat9& prim = primary_transpose ? with_t : no_t;
                    const Flat9& oth = primary_transpose ? no_t : with_t;

                    if (seen_primary_.insert(prim).second) {
                        ClassFlags f = class_flags(wp, h, opts_.one_point_mode, primary_transpose);
                        res.primary.spaces++;
                        if (f.theorem_b) res.primary.theorem_b++;
                        if (f.free_family) res.primary.free_family++;
                        if (f.one_point) res.primary.one_point++;
                        if (want_records)
                            res.record_lines.push_back(
                                record_line({k1, k2, k3, -k4a}, wp, h, f));
                    }
                    if (both && seen_other_.insert(oth).second) {
                        ClassFlags f = class_flags(wp, h, opts_.one_point_mode, !primary_transpose);
                        res.other.spaces++;
                        if (f.theorem_b) res.other.theorem_b++;
                        if (f.free_family) res.other.free_family++;
                        if (f.one_point) res.other.one_point++;
                    }
                }
            }
        }
        return res;
    }

private:
    const std::vector<std::vector<i64>>& divs_;
    const ScanOptions& opts_;
    std::unordered_set<Flat9, Flat9Hash> seen_primary_;
    std::unordered_set<Flat9, Flat9Hash> seen_other_;
};

json totals_to_json(const ConventionTotals& t) {
    json per_h = json::array();
    for (std::size_t h = 0; h < t.per_h.size(); ++h)
        if (t.per_h[h]) per_h.push_back({h, t.per_h[h]});
    return {{"spaces", t.spaces},
            {"theorem_b_positive", t.theorem_b_positive},
            {"free_family", t.free_family},
            {"one_point_admitting", t.one_point_admitting},
            {"per_h", per_h}};
}

ConventionTotals totals_from_json(const json& j, i64 h_max) {
    ConventionTotals t;
    t.spaces = j.at("spaces").get<std::uint64_t>();
    t.theorem_b_positive = j.at("theorem_b_positive").get<std::uint64_t>();
    t.free_family = j.at("free_family").get<std::uint64_t>();
    t.one_point_admitting = j.at("one_point_admitting").get<std::uint64_t>();
    t.per_h.assign(h_max + 1, 0);
    for (const auto& e : j.at("per_h")) {
        i64 h = e.at(0).get<i64>();
        if (h < 0 || h > h_max) throw std::runtime_error("checkpoint: per_h out of range");
        t.per_h[h] = e.at(1).get<std::uint32_t>();
    }
    return t;
}

void write_checkpoint(const ScanOptions& opts, i64 next_h, const ConventionTotals& prim,
                      const ConventionTotals* other) {
    json j;
    j["version"] = 1;
    j["h_max"] = opts.h_max;
    j["both"] = opts.both_conventions;
    j["convention"] = static_cast<int>(opts.convention);
    j["one_point_mode"] = static_cast<int>(opts.one_point_mode);
    j["next_h"] = next_h;
    j["primary"] = totals_to_json(prim);
    j["other"] = other ? totals_to_json(*other) : json();
    std::string tmp = opts.checkpoint_path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::trunc);
        if (!os) throw std::runtime_error("checkpoint: cannot write " + tmp);
        os << j.dump() << "\n";
    }
    if (std::rename(tmp.c_str(), opts.checkpoint_path.c_str()) != 0)
        throw std::runtime_error("checkpoint: rename failed");
}

}  // namespace

ScanSummary scan(const ScanOptions& opts) {
    if (opts.h_max < 1) throw std::invalid_argument("scan: h_max must be >= 1");
    if (opts.h_max > 2000000)
        throw std::invalid_argument("scan: h_max above supported bound (2e6)");
    if (!opts.records_path.empty() && !opts.checkpoint_path.empty())
        throw std::invalid_argument("scan: records and checkpointing cannot be combined");

    auto t0 = std::chrono::steady_clock::now();
    ScanSummary sum;
    sum.h_max = opts.h_max;
    sum.both_conventions = opts.both_conventions;
    sum.convention = opts.convention;
    sum.one_point_mode = opts.one_point_mode;
    sum.totals.per_h.assign(opts.h_max + 1, 0);
    if (opts.both_conventions) {
        sum.totals_other.emplace();
        sum.totals_other->per_h.assign(opts.h_max + 1, 0);
    }

    i64 start_h = 2;
    // Resume from a checkpoint when present.
    if (!opts.checkpoint_path.empty()) {
        std::ifstream is(opts.checkpoint_path);
        if (is) {
            json j;
            try {
                is >> j;
                if (j.at("version").get<int>() != 1) throw std::runtime_error("bad version");
                if (j.at("h_max").get<i64>() != opts.h_max ||
                    j.at("both").get<bool>() != opts.both_conventions ||
                    j.at("convention").get<int>() != static_cast<int>(opts.convention) ||
                    j.at("one_point_mode").get<int>() != static_cast<int>(opts.one_point_mode))
                    throw std::runtime_error("configuration mismatch");
                start_h = j.at("next_h").get<i64>();
                sum.totals = totals_from_json(j.at("primary"), opts.h_max);
                if (opts.both_conventions)
                    *sum.totals_other = totals_from_json(j.at("other"), opts.h_max);
                sum.resumed = true;
            } catch (const std::exception& e) {
                throw std::runtime_error(std::string("scan: corrupted or mismatched checkpoint (") +
                                         e.what() + "); refusing to restart");
            }
        }
    }

    const i64 stop_h = opts.stop_after_h > 0 ? std::min(opts.stop_after_h, opts.h_max)
                                             : opts.h_max;
    int threads = opts.threads > 0 ? opts.threads
                                   : static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    sum.shards = threads;

    auto divs = divisor_table(opts.h_max);

    // Contiguous chunks of stripes with roughly equal cost (cost_h ~ h).
    struct Chunk { i64 begin, end; };
    std::vector<Chunk> chunks;
    {
        i64 total = 0;
        for (i64 h = start_h; h <= stop_h; ++h) total += h;
        i64 target = std::max<i64>(1, total / std::max(256, threads * 32));
        i64 begin = start_h, acc = 0;
        for (i64 h = start_h; h <= stop_h; ++h) {
            acc += h;
            if (acc >= target || h == stop_h) {
                chunks.push_back({begin, h + 1});
                begin = h + 1;
                acc = 0;
            }
        }
    }

    std::vector<std::vector<StripeResult>> results(chunks.size());
    std::vector<char> done(chunks.size(), 0);
    std::mutex mu;
    std::condition_variable cv;
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::string fail_msg;

    auto worker = [&]() {
        StripeProcessor proc(divs, opts);
        for (;;) {
            std::size_t idx = next.fetch_add(1);
            if (idx >= chunks.size() || failed.load()) return;
            std::vector<StripeResult> out;
            try {
                for (i64 h = chunks[idx].begin; h < chunks[idx].end; ++h)
                    out.push_back(proc.process(h));
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lk(mu);
                failed = true;
                if (fail_msg.empty()) fail_msg = e.what();
                cv.notify_all();
                return;
            }
            {
                std::lock_guard<std::mutex> lk(mu);
                results[idx] = std::move(out);
                done[idx] = 1;
            }
            cv.notify_all();
        }
    };

    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);

    std::ofstream records;
    if (!opts.records_path.empty()) {
        records.open(opts.records_path, std::ios::trunc);
        if (!records) {
            failed = true;
            fail_msg = "scan: cannot open records path " + opts.records_path;
        }
    }

    i64 merged_h = start_h - 1;
    i64 last_ckpt_h = merged_h;
    for (std::size_t idx = 0; idx < chunks.size() && !failed.load(); ++idx) {
        {
            std::unique_lock<std::mutex> lk(mu);
            cv.wait(lk, [&] { return done[idx] || failed.load(); });
        }
        if (failed.load()) break;
        for (StripeResult& sr : results[idx]) {
            sum.totals.spaces += sr.primary.spaces;
            sum.totals.theorem_b_positive += sr.primary.theorem_b;
            sum.totals.free_family += sr.primary.free_family;
            sum.totals.one_point_admitting += sr.primary.one_point;
            sum.totals.per_h[sr.h] = static_cast<std::uint32_t>(sr.primary.spaces);
            if (sum.totals_other) {
                sum.totals_other->spaces += sr.other.spaces;
                sum.totals_other->theorem_b_positive += sr.other.theorem_b;
                sum.totals_other->free_family += sr.other.free_family;
                sum.totals_other->one_point_admitting += sr.other.one_point;
                sum.totals_other->per_h[sr.h] = static_cast<std::uint32_t>(sr.other.spaces);
            }
            if (records.is_open())
                for (const std::string& line : sr.record_lines) records << line << "\n";
            merged_h = sr.h;
        }
        results[idx].clear();
        results[idx].shrink_to_fit();
        if (opts.progress) opts.progress(merged_h, opts.h_max);
        if (!opts.checkpoint_path.empty() && merged_h - last_ckpt_h >= opts.checkpoint_every_h) {
            write_checkpoint(opts, merged_h + 1, sum.totals,
                             sum.totals_other ? &*sum.totals_other : nullptr);
            last_ckpt_h = merged_h;
        }
    }
    for (auto& th : pool) th.join();
    if (failed.load()) throw std::runtime_error(fail_msg.empty() ? "scan failed" : fail_msg);

    sum.complete = stop_h == opts.h_max;
    sum.next_h = merged_h + 1;
    if (!opts.checkpoint_path.empty())
        write_checkpoint(opts, merged_h + 1, sum.totals,
                         sum.totals_other ? &*sum.totals_other : nullptr);
    sum.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return sum;
}

std::set<CanonicalKey> scan_key_set(i64 h_max, Convention conv) {
    std::set<CanonicalKey> out;
    quad_stream(h_max, [&](const QuadrupleKey& k) {
        WeightPair wp = reconstruct(k);
        if (is_positively_curved(wp) && is_manifold(wp))
            out.insert(normalize(wp, conv == Convention::kTranspose));
        return true;
    });
    return out;
}

std::set<CanonicalKey> brute_box_oracle(i64 h_max, Convention conv) {
    if (h_max < 1 || h_max > 200)
        throw std::invalid_argument("brute_box_oracle: h_max must be in [1,200]");
    const i64 B = 2 * h_max;

    std::set<CanonicalKey> out;
    const bool transpose = conv == Convention::kTranspose;
    // q1 = 0 and q3 = sum(p) - q2. The h bound |q2^2 - sp*q2 + e2p| <= h_max
    // confines q2 to at most two short intervals around the parabola roots.
    for (i64 p1 = -B; p1 <= B; ++p1)
        for (i64 p2 = -B; p2 <= B; ++p2)
            for (i64 p3 = -B; p3 <= B; ++p3) {
                i64 sp = p1 + p2 + p3;
                i64 e2p = p1 * p2 + p1 * p3 + p2 * p3;
                auto value = [&](i64 q2) { return q2 * q2 - sp * q2 + e2p; };
                double disc = 0.25 * double(sp) * double(sp) - double(e2p) + double(h_max);
                if (disc < 0) continue;  // parabola never dips to h_max
                double root = std::sqrt(disc);
                i64 lo = static_cast<i64>(std::floor(0.5 * double(sp) - root)) - 2;
                i64 hi = static_cast<i64>(std::ceil(0.5 * double(sp) + root)) + 2;
                lo = std::max(lo, std::max(-B, sp - B));
                hi = std::min(hi, std::min(B, sp + B));
                // Skip the stretch where the parabola is below -h_max.
                i64 d1 = hi + 1, d2 = hi;
                double disc2 = 0.25 * double(sp) * double(sp) - double(e2p) - double(h_max);
                if (disc2 >= 0) {
                    double root2 = std::sqrt(disc2);
                    d1 = static_cast<i64>(std::floor(0.5 * double(sp) - root2)) - 2;
                    d2 = static_cast<i64>(std::ceil(0.5 * double(sp) + root2)) + 2;
                }
                for (i64 q2 = lo; q2 <= hi; ++q2) {
                    if (q2 > d1 && q2 < d2 && value(q2) < -h_max) { q2 = d2 - 1; continue; }
                    i64 habs = std::abs(value(q2));
                    if (habs > h_max || habs == 0) continue;
                    Vec3 p{p1, p2, p3}, q{0, q2, sp - q2};
                    if (!pos_curved_fast(p, q)) continue;
                    WeightPair wp = WeightPair::raw(p, q);
                    if (!is_manifold(wp)) continue;
                    out.insert(normalize(wp, transpose));
                }
            }
    return out;
}

bool detect_free_family(const WeightPair& wp, bool transpose_convention) {
    for (const WeightPair& r : orbit_representatives(wp, transpose_convention)) {
        if (r.p[0] == r.p[1] && r.p[1] == r.p[2]) return true;  // Aloff-Wallach
        if (r.q[1] == 0 && r.p[2] == r.p[0] + r.p[1] && r.q[2] == 2 * r.p[2])
            return true;  // free two-torus family
    }
    return false;
}

}  // namespace esch
