#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "construct.hpp"

namespace esch {

// Normalized 4-integer presentation: k1 = p1-q2, k2 = p1-q3, k3 = p2-q1,
// k4 = p3-q1 with k1,k2,k3 > 0 > k4 and h = k1*k2 - k3*k4 > 0.
struct QuadrupleKey {
    i64 k1 = 1, k2 = 1, k3 = 1, k4 = -1;

    i64 h() const { return k1 * k2 - k3 * k4; }
    friend bool operator==(const QuadrupleKey&, const QuadrupleKey&) = default;
    bool operator<(const QuadrupleKey& o) const {
        return std::array<i64, 4>{k1, k2, k3, k4} < std::array<i64, 4>{o.k1, o.k2, o.k3, o.k4};
    }
};

// p = (k1+k2+k3+k4, k3, k4), q = (0, k2+k3+k4, k1+k3+k4).
WeightPair reconstruct(const QuadrupleKey& key);
QuadrupleKey extract_key(const WeightPair& wp);  // reads the four differences

// Yields every key with k1,k2,k3 >= 1, k4 <= -1 and k1*k2 + k3*|k4| <= h_max,
// ordered by (h, k1*k2, k1, k3). Returns false from the callback to stop.
void quad_stream(i64 h_max, const std::function<bool(const QuadrupleKey&)>& fn);
std::vector<QuadrupleKey> quad_stream_collect(i64 h_max);

enum class Convention { kNoTranspose = 0, kTranspose = 1 };

enum class OnePointMode { kOff = 0, kTheoremBPositive = 1, kAll = 2 };

struct ScanRecord {
    QuadrupleKey key;   // key of the canonical representative
    WeightPair wp;      // canonical representative (q1 = 0)
    i64 h = 0;
    bool manifold = true;
    bool pos_curved = true;
    bool theorem_b = false;
    bool free_family = false;
    std::optional<bool> one_point;
};

struct ConventionTotals {
    std::uint64_t spaces = 0;
    std::uint64_t theorem_b_positive = 0;
    std::uint64_t free_family = 0;
    std::uint64_t one_point_admitting = 0;
    std::vector<std::uint32_t> per_h;  // index h, size h_max+1

    friend bool operator==(const ConventionTotals&, const ConventionTotals&) = default;
};

struct ScanSummary {
    i64 h_max = 0;
    bool both_conventions = false;
    Convention convention = Convention::kTranspose;
    OnePointMode one_point_mode = OnePointMode::kTheoremBPositive;
    ConventionTotals totals;                       // selected convention
    std::optional<ConventionTotals> totals_other;  // the other one, when both
    int shards = 1;
    double wall_seconds = 0;
    bool complete = true;   // false when stopped early at a checkpoint
    i64 next_h = 0;         // first unprocessed stripe when incomplete
    bool resumed = false;
};

struct ScanOptions {
    i64 h_max = 1000;
    Convention convention = Convention::kTranspose;
    bool both_conventions = false;
    int threads = 0;  // <= 0: hardware concurrency
    OnePointMode one_point_mode = OnePointMode::kTheoremBPositive;
    std::string records_path;     // JSONL, one record per line; empty = off
    std::string checkpoint_path;  // empty = off
    i64 checkpoint_every_h = 4096;
    i64 stop_after_h = 0;  // testing hook: stop once stripes <= this are done
    std::function<void(i64 h_done, i64 h_max)> progress;
};

// Exhaustive enumeration of positively curved Eschenburg manifolds with
// h <= h_max, deduplicated by canonical key within h-stripes. Deterministic
// for fixed options regardless of thread count; resumable via checkpoint.
ScanSummary scan(const ScanOptions& opts);

// Independent validator: all trace-balanced pairs with q1 = 0 and entries in
// [-2*h_max, 2*h_max], filtered and canonicalized. Test scale only.
std::set<CanonicalKey> brute_box_oracle(i64 h_max, Convention conv);

// Canonical key set produced by scan-side enumeration, for comparison.
std::set<CanonicalKey> scan_key_set(i64 h_max, Convention conv);

// Membership (up to normalization equivalence) in one of the two families
// that admit a free circle action.
bool detect_free_family(const WeightPair& wp, bool transpose_convention = true);

}  // namespace esch
