#pragma once

#include <collatz/natural.hpp>

#include <boost/container_hash/hash.hpp>

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

namespace collatz {

// Parameter of the accelerated qx+1 map; q must be odd and >= 3.
class QMap {
public:
    QMap() : q_(3) {}
    explicit QMap(unsigned q);
    unsigned value() const { return q_; }
    friend bool operator==(QMap a, QMap b) { return a.q_ == b.q_; }

private:
    unsigned q_;
};

// One application: even m -> m/2, odd m -> (q*m + 1)/2.
Natural step(const Natural& m, QMap q = QMap());

// The plain halving map m -> floor(m/2), conjugate to the digit shift.
Natural halving_shift(const Natural& m);

enum class OrbitVerdict {
    reached_cycle,   // a value repeated; the cycle is reported
    cutoff,          // step budget exhausted with no repeat
    bound_exceeded,  // iterate left the configured bound
};

struct OrbitOptions {
    std::uint64_t max_steps = 100000;
    // Orbit aborts when an iterate exceeds this; 0 disables the check.
    Natural magnitude_bound = Natural(1) << 256;
    // Trajectory storage is capped; past the cap only checkpoints are kept.
    std::uint64_t full_trajectory_limit = 10000;
    std::uint64_t checkpoint_stride = 1024;
};

template <class V>
struct OrbitRecord {
    V start{};
    // Iterates before the first repeat (or the whole prefix when truncated).
    std::vector<V> trajectory;
    bool truncated = false;
    std::vector<std::pair<std::uint64_t, V>> checkpoints;
    V peak{};
    OrbitVerdict verdict = OrbitVerdict::cutoff;
    // Cycle rotated so its smallest element comes first.
    std::vector<V> cycle;
    // Applications performed up to the verdict; for reached_cycle this is the
    // index of the application that produced the repeated value.
    std::uint64_t steps = 0;
    bool reached_primary_cycle = false;
};

OrbitRecord<Natural> orbit(const Natural& start, QMap q = QMap(),
                           const OrbitOptions& opts = OrbitOptions());

namespace detail {

// Shared orbit walker. StepFn advances a value; BoundFn reports when a value
// has left the allowed region (checked on produced values, not the start).
template <class V, class StepFn, class BoundFn>
OrbitRecord<V> walk_orbit(const V& start, StepFn step_fn, BoundFn out_of_bounds,
                          std::uint64_t max_steps, std::uint64_t trajectory_limit,
                          std::uint64_t checkpoint_stride) {
    OrbitRecord<V> rec;
    rec.start = start;
    rec.peak = start;

    std::unordered_map<V, std::uint64_t, boost::hash<V>> first_seen;
    first_seen.emplace(start, 0);
    rec.trajectory.push_back(start);
    if (checkpoint_stride) rec.checkpoints.emplace_back(0, start);

    V cur = start;
    for (std::uint64_t pos = 0; pos < max_steps; ++pos) {
        V next = step_fn(cur);
        std::uint64_t next_pos = pos + 1;
        if (next > rec.peak) rec.peak = next;
        if (out_of_bounds(next)) {
            rec.verdict = OrbitVerdict::bound_exceeded;
            rec.steps = next_pos;
            return rec;
        }
        auto it = first_seen.find(next);
        if (it != first_seen.end()) {
            rec.verdict = OrbitVerdict::reached_cycle;
            rec.steps = next_pos;
            // Cycle = positions [it->second, pos]; re-walk from the repeated
            // value instead of inverting the position map.
            std::uint64_t len = pos + 1 - it->second;
            rec.cycle.reserve(static_cast<std::size_t>(len));
            V c = next;
            for (std::uint64_t i = 0; i < len; ++i) {
                rec.cycle.push_back(c);
                c = step_fn(c);
            }
            auto min_it = std::min_element(rec.cycle.begin(), rec.cycle.end());
            std::rotate(rec.cycle.begin(), min_it, rec.cycle.end());
            return rec;
        }
        first_seen.emplace(next, next_pos);
        if (rec.trajectory.size() < trajectory_limit)
            rec.trajectory.push_back(next);
        else
            rec.truncated = true;
        if (checkpoint_stride && next_pos % checkpoint_stride == 0)
            rec.checkpoints.emplace_back(next_pos, next);
        cur = std::move(next);
    }
    rec.verdict = OrbitVerdict::cutoff;
    rec.steps = max_steps;
    return rec;
}

} // namespace detail

} // namespace collatz
