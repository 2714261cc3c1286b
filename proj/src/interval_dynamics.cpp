#include <collatz/interval_dynamics.hpp>

#include <algorithm>
#include <climits>
#include <ostream>
#include <stdexcept>

namespace collatz {

namespace mp = boost::multiprecision;

namespace {

void check_cell(const IntervalId& cell) {
    if (cell.depth < 1 || cell.depth > 63)
        throw std::invalid_argument("IntervalId: depth out of range");
    if (cell.index >> cell.depth)
        throw std::invalid_argument("IntervalId: index out of range for depth");
}

std::uint64_t rev_bits_u64(std::uint64_t v, unsigned width) {
    return detail::reverse_u64(v) >> (64 - width);
}

} // namespace

std::string IntervalId::label() const {
    check_cell(*this);
    std::string out(depth, '0');
    for (unsigned i = 0; i < depth; ++i)
        if ((index >> (depth - 1 - i)) & 1) out[i] = '1';
    return out;
}

Dyadic IntervalId::lower() const {
    check_cell(*this);
    return Dyadic(Natural(index), depth);
}

Dyadic IntervalId::upper() const {
    check_cell(*this);
    return Dyadic(Natural(index) + 1, depth);
}

ResidueClass residue_of_interval(const IntervalId& cell) {
    check_cell(cell);
    return ResidueClass{rev_bits_u64(cell.index, cell.depth),
                        std::uint64_t(1) << cell.depth};
}

IntervalId interval_of(const Dyadic& x, unsigned depth) {
    if (depth < 1 || depth > 63)
        throw std::invalid_argument("interval_of: depth out of range");
    if (x.is_one())
        throw std::domain_error("interval_of: 1 lies in no half-open cell");
    Natural k;
    if (x.depth() <= depth)
        k = x.numerator() << (depth - x.depth());
    else
        k = x.numerator() >> (x.depth() - depth);
    return IntervalId{depth, k.convert_to<std::uint64_t>()};
}

std::array<IntervalId, 2> image_intervals(const IntervalId& cell, QMap q) {
    check_cell(cell);
    if (cell.depth > 32 || q.value() > (1u << 30))
        throw std::invalid_argument("image_intervals: parameters too large");
    const unsigned n = cell.depth;
    const std::uint64_t half_mod = std::uint64_t(1) << (n - 1);
    const std::uint64_t r = rev_bits_u64(cell.index, n);
    // The map sends the class r (mod 2^n) onto a full class mod 2^(n-1),
    // which splits into two classes mod 2^n: s and s + 2^(n-1).
    std::uint64_t s;
    if (r % 2 == 0)
        s = (r / 2) & (half_mod - 1);
    else
        s = ((std::uint64_t(q.value()) * r + 1) / 2) & (half_mod - 1);
    std::uint64_t k0 = rev_bits_u64(s, n);  // even: reversed top bit is clear
    return {IntervalId{n, k0}, IntervalId{n, k0 + 1}};
}

TransferGraph transfer_graph(unsigned depth, QMap q, unsigned max_depth) {
    if (max_depth > 20) max_depth = 20;  // node table memory guard
    if (depth < 1 || depth > max_depth)
        throw std::invalid_argument("transfer_graph: depth out of range");
    TransferGraph g;
    g.depth = depth;
    g.q = q;
    const std::uint64_t n_cells = std::uint64_t(1) << depth;
    g.successors.resize(n_cells);
    for (std::uint64_t k = 0; k < n_cells; ++k) {
        auto img = image_intervals(IntervalId{depth, k}, q);
        g.successors[k] = {static_cast<std::uint32_t>(img[0].index),
                           static_cast<std::uint32_t>(img[1].index)};
    }
    return g;
}

namespace {

// Forward BFS marking over an adjacency described by a callback.
template <class Neighbours>
std::size_t bfs_count(std::size_t n, Neighbours neigh) {
    std::vector<char> seen(n, 0);
    std::vector<std::uint32_t> queue;
    queue.reserve(n);
    queue.push_back(0);
    seen[0] = 1;
    std::size_t count = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        neigh(queue[head], [&](std::uint32_t v) {
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                queue.push_back(v);
            }
        });
    }
    return count;
}

} // namespace

ConnectivityReport connectivity_report(const TransferGraph& graph) {
    const std::size_t n = graph.node_count();
    ConnectivityReport rep;
    rep.step_cap = 4 * graph.depth + 64;
    rep.covering_steps.assign(n, 0);
    if (n == 0) return rep;

    // Strong connectivity: reach everything from node 0 and reach node 0
    // from everything (one forward and one reverse search).
    std::vector<std::vector<std::uint32_t>> rev(n);
    for (std::size_t v = 0; v < n; ++v)
        for (auto s : graph.successors[v]) rev[s].push_back(static_cast<std::uint32_t>(v));
    auto fwd_neigh = [&](std::uint32_t u, auto&& visit) {
        for (auto s : graph.successors[u]) visit(s);
    };
    auto rev_neigh = [&](std::uint32_t u, auto&& visit) {
        for (auto s : rev[u]) visit(s);
    };
    rep.strongly_connected =
        bfs_count(n, fwd_neigh) == n && bfs_count(n, rev_neigh) == n;

    // Exact length-t reach sets as bitset rows; row_t(v) is full exactly when
    // every cell is reachable from v in exactly t steps. The recurrence
    // prepends a step: row_t(v) = row_{t-1}(s0(v)) | row_{t-1}(s1(v)).
    const std::size_t words = (n + 63) / 64;
    std::vector<std::uint64_t> cur(n * words, 0), next(n * words, 0);
    for (std::size_t v = 0; v < n; ++v)
        for (auto s : graph.successors[v])
            cur[v * words + s / 64] |= std::uint64_t(1) << (s % 64);

    const std::uint64_t last_mask =
        n % 64 ? (std::uint64_t(1) << (n % 64)) - 1 : ~std::uint64_t(0);
    auto row_full = [&](const std::vector<std::uint64_t>& m, std::size_t v) {
        for (std::size_t w = 0; w + 1 < words; ++w)
            if (m[v * words + w] != ~std::uint64_t(0)) return false;
        return m[v * words + words - 1] == last_mask;
    };

    std::size_t covered = 0;
    for (unsigned t = 1; t <= rep.step_cap; ++t) {
        std::size_t full_now = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (row_full(cur, v)) {
                ++full_now;
                if (rep.covering_steps[v] == 0) {
                    rep.covering_steps[v] = t;
                    ++covered;
                }
            }
        }
        if (full_now == n) {
            if (!rep.primitivity_exponent) rep.primitivity_exponent = t;
            if (covered == n) break;
        }
        if (t == rep.step_cap) break;
        for (std::size_t v = 0; v < n; ++v) {
            const std::uint64_t* a = &cur[std::size_t(graph.successors[v][0]) * words];
            const std::uint64_t* b = &cur[std::size_t(graph.successors[v][1]) * words];
            std::uint64_t* dst = &next[v * words];
            for (std::size_t w = 0; w < words; ++w) dst[w] = a[w] | b[w];
        }
        cur.swap(next);
    }
    rep.max_covering = *std::max_element(rep.covering_steps.begin(), rep.covering_steps.end());
    return rep;
}

std::string automaton_export(const TransferGraph& graph, bool edge_labels) {
    std::string out = "digraph transfer {\n";
    const std::uint64_t n = graph.node_count();
    for (std::uint64_t k = 0; k < n; ++k) {
        IntervalId cell{graph.depth, k};
        char branch = (k >> (graph.depth - 1)) ? '1' : '0';
        out += "  \"" + cell.label() + "\" [branch=" + branch + "];\n";
    }
    for (std::uint64_t k = 0; k < n; ++k) {
        IntervalId cell{graph.depth, k};
        std::string src_label = cell.label();
        char branch = (k >> (graph.depth - 1)) ? '1' : '0';
        for (auto s : graph.successors[k]) {
            IntervalId target{graph.depth, s};
            out += "  \"" + src_label + "\" -> \"" + target.label() + "\"";
            if (edge_labels) {
                out += " [label=\"";
                out += branch;
                out += "\"]";
            }
            out += ";\n";
        }
    }
    out += "}\n";
    return out;
}

void matrix_csv(const TransferGraph& graph, std::ostream& out) {
    const std::size_t n = graph.node_count();
    std::string line;
    line.reserve(2 * n);
    for (std::size_t v = 0; v < n; ++v) {
        line.clear();
        for (std::size_t u = 0; u < n; ++u) {
            if (u) line += ',';
            line += (u == graph.successors[v][0] || u == graph.successors[v][1]) ? '1' : '0';
        }
        line += '\n';
        out << line;
    }
}

SpanReport span_measurement(const IntervalId& cell, unsigned sample_depth, QMap q) {
    check_cell(cell);
    if (sample_depth <= cell.depth)
        throw std::invalid_argument("span_measurement: sample depth must exceed cell depth");
    if (sample_depth - cell.depth > 24)
        throw std::invalid_argument("span_measurement: too many samples");
    SpanReport rep;
    rep.cell = cell;
    rep.sample_depth = sample_depth;
    ResidueClass rc = residue_of_interval(cell);
    const std::uint64_t limit = std::uint64_t(1) << sample_depth;
    for (std::uint64_t m = rc.residue; m < limit; m += rc.modulus) {
        Dyadic x = encode(Natural(m));
        Dyadic y = interval_step(x, q);
        if (rep.samples == 0 || y < rep.min_value ||
            (y == rep.min_value && x < rep.argmin)) {
            rep.min_value = y;
            rep.argmin = x;
        }
        if (rep.samples == 0 || y > rep.max_value ||
            (y == rep.max_value && x < rep.argmax)) {
            rep.max_value = y;
            rep.argmax = x;
        }
        ++rep.samples;
    }
    if (rep.samples) rep.span = dyadic_sub(rep.max_value, rep.min_value);
    return rep;
}

SlopeReport slope_pattern_report(const IntervalId& cell, unsigned sample_depth) {
    QMap q3;
    SpanReport span = span_measurement(cell, sample_depth, q3);
    SlopeReport rep;
    rep.cell = cell;
    rep.sample_depth = sample_depth;
    rep.anchor = span.argmin;
    rep.anchor_value = span.min_value;
    ResidueClass rc = residue_of_interval(cell);
    const std::uint64_t limit = std::uint64_t(1) << sample_depth;
    const ExactRatio three_halves(Natural(3), Natural(2));
    for (std::uint64_t m = rc.residue; m < limit; m += rc.modulus) {
        Dyadic x = encode(Natural(m));
        if (x == rep.anchor) continue;
        Dyadic y = interval_step(x, q3);
        SlopeEntry entry{x, exact_quotient(rep.anchor_value, y, rep.anchor, x)};
        rep.entries.push_back(std::move(entry));
    }
    std::sort(rep.entries.begin(), rep.entries.end(),
              [](const SlopeEntry& a, const SlopeEntry& b) { return a.x < b.x; });
    for (const auto& entry : rep.entries)
        if (entry.ratio.abs() == three_halves) rep.flagged.push_back(entry.x);
    return rep;
}

ScanReport scan_residue_soundness(std::uint64_t m_max, unsigned depth, QMap q, Exec exec) {
    if (depth < 1 || depth > 32)
        throw std::invalid_argument("scan_residue_soundness: depth out of range");
    ScanReport rep;
    if (m_max < 1) return rep;
    unsigned long long failures = 0, checked = 0;
    unsigned long long first = ULLONG_MAX;
    const std::int64_t hi = static_cast<std::int64_t>(m_max);
    const bool par = exec == Exec::parallel;
#pragma omp parallel for if (par) schedule(static) \
    reduction(+ : failures, checked) reduction(min : first)
    for (std::int64_t m = 1; m <= hi; m += 1) {
        Natural big(m);
        IntervalId from = interval_of(encode(big), depth);
        IntervalId to = interval_of(encode(step(big, q)), depth);
        auto img = image_intervals(from, q);
        ++checked;
        if (to != img[0] && to != img[1]) {
            ++failures;
            if (static_cast<unsigned long long>(m) < first)
                first = static_cast<unsigned long long>(m);
        }
    }
    rep.checked = checked;
    rep.failures = failures;
    rep.has_failure = failures != 0;
    if (rep.has_failure) rep.first_failure = Natural(first);
    return rep;
}

} // namespace collatz
