#pragma once

#include <collatz/conjugate_map.hpp>

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace collatz {

// One cell of the depth-n dyadic partition: [index/2^n, (index+1)/2^n).
// The label is the cell's fraction-digit word (big-endian bits of index).
struct IntervalId {
    unsigned depth = 1;
    std::uint64_t index = 0;

    std::string label() const;
    Dyadic lower() const;
    Dyadic upper() const;

    friend bool operator==(const IntervalId& a, const IntervalId& b) {
        return a.depth == b.depth && a.index == b.index;
    }
    friend bool operator!=(const IntervalId& a, const IntervalId& b) { return !(a == b); }
};

// Coded points inside a cell come from one residue class of integers:
// m mod 2^depth equals the bit-reversed label. Note the reversal: label "10"
// (cell [1/2, 3/4)) corresponds to m congruent to 1, not 2.
struct ResidueClass {
    std::uint64_t residue = 0;
    std::uint64_t modulus = 1;
};
ResidueClass residue_of_interval(const IntervalId& cell);

// The unique depth-n cell containing x; x must be a value in [0, 1).
IntervalId interval_of(const Dyadic& x, unsigned depth);

// The two cells the map sends this cell's residue class into. They are always
// adjacent siblings (indices 2u, 2u+1), returned in index order.
std::array<IntervalId, 2> image_intervals(const IntervalId& cell, QMap q = QMap());

struct TransferGraph {
    unsigned depth = 1;
    QMap q;
    // successors[k] = image cell indices of cell k, ascending.
    std::vector<std::array<std::uint32_t, 2>> successors;
    std::size_t node_count() const { return successors.size(); }
};
TransferGraph transfer_graph(unsigned depth, QMap q = QMap(), unsigned max_depth = 14);

struct ConnectivityReport {
    bool strongly_connected = false;
    // Least t with every length-t reach set equal to the whole node set;
    // empty when no such t exists within step_cap.
    std::optional<unsigned> primitivity_exponent;
    // Per node: least t with its length-t reach set full; 0 = not within cap.
    std::vector<unsigned> covering_steps;
    unsigned max_covering = 0;
    unsigned step_cap = 0;
};
ConnectivityReport connectivity_report(const TransferGraph& graph);

// Graph-description text: node lines `"w" [branch=0|1];`, then edge lines
// `"w" -> "v"`, each with `[label="0|1"]` (the source's branch symbol) when
// edge_labels is set. Nodes ascending, edges in (source, target) order.
std::string automaton_export(const TransferGraph& graph, bool edge_labels = true);

// 0/1 incidence matrix, one CSV line per source cell, streamed.
void matrix_csv(const TransferGraph& graph, std::ostream& out);

// Exact extrema of the map over a cell's coded points up to a sample depth
// (the cell's residue class below 2^sample_depth, left endpoint included).
struct SpanReport {
    IntervalId cell;
    unsigned sample_depth = 0;
    std::uint64_t samples = 0;
    Dyadic min_value;
    Dyadic max_value;
    Dyadic span;  // max - min
    Dyadic argmin;
    Dyadic argmax;
};
SpanReport span_measurement(const IntervalId& cell, unsigned sample_depth, QMap q = QMap());

// Difference quotients of every sample against the cell's argmin, exact.
// Points whose |quotient| is exactly 3/2 are listed separately. q=3 map.
struct SlopeEntry {
    Dyadic x;
    ExactRatio ratio;
};
struct SlopeReport {
    IntervalId cell;
    unsigned sample_depth = 0;
    Dyadic anchor;        // the argmin
    Dyadic anchor_value;
    std::vector<SlopeEntry> entries;  // ascending x, anchor excluded
    std::vector<Dyadic> flagged;
};
SlopeReport slope_pattern_report(const IntervalId& cell, unsigned sample_depth);

// Cross-validates the residue successor formula against raw orbits: for each
// m, the cell of encode(step(m)) must be one of the two predicted successors
// of the cell of encode(m).
ScanReport scan_residue_soundness(std::uint64_t m_max, unsigned depth, QMap q, Exec exec);

} // namespace collatz
