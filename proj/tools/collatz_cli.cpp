// Command-line front end: coding, orbits, transfer graphs, plot data, and the
// verification harness. Exit codes: 0 success, 1 verified failure or
// non-convergence, 2 usage error.

#include <CLI11.hpp>

#include <collatz/analysis.hpp>

#include <cctype>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace collatz;

Natural parse_natural(const std::string& s) {
    if (s.empty())
        throw std::invalid_argument("expected a nonnegative integer");
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw std::invalid_argument("not a nonnegative integer: " + s);
    return Natural(s);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

int run_encode(const std::string& value, const std::string& format) {
    Dyadic x = encode(parse_natural(value));
    if (format == "exact")
        std::cout << x.exact_string() << "\n";
    else if (format == "decimal")
        std::cout << x.decimal_string() << "\n";
    else if (format == "binary")
        std::cout << x.binary_string() << "\n";
    else
        std::cout << x.exact_string() << " (" << x.decimal_string() << ")\n";
    return 0;
}

int run_decode(const std::string& value) {
    std::cout << decode(parse_dyadic(value)).str() << "\n";
    return 0;
}

int run_orbit(const std::string& start, unsigned q, std::uint64_t max_steps,
              const std::string& magnitude_bound) {
    OrbitOptions opts;
    opts.max_steps = max_steps;
    if (!magnitude_bound.empty()) opts.magnitude_bound = parse_natural(magnitude_bound);
    OrbitRecord<Natural> rec = orbit(parse_natural(start), QMap(q), opts);

    std::string line;
    for (const auto& v : rec.trajectory) {
        if (!line.empty()) line += ' ';
        line += v.str();
    }
    if (rec.truncated) line += " ...";
    line += " | ";
    switch (rec.verdict) {
        case OrbitVerdict::reached_cycle: {
            line += "cycle(";
            for (std::size_t i = 0; i < rec.cycle.size(); ++i) {
                if (i) line += ',';
                line += rec.cycle[i].str();
            }
            line += ") in " + std::to_string(rec.steps) + " steps";
            break;
        }
        case OrbitVerdict::cutoff:
            line += "cutoff after " + std::to_string(rec.steps) + " steps, peak " +
                    rec.peak.str();
            break;
        case OrbitVerdict::bound_exceeded:
            line += "magnitude bound exceeded at step " + std::to_string(rec.steps) +
                    ", peak " + rec.peak.str();
            break;
    }
    std::cout << line << "\n";
    return rec.verdict == OrbitVerdict::reached_cycle ? 0 : 1;
}

int run_g_orbit(const std::string& start, unsigned q, std::uint64_t max_steps,
                unsigned max_depth) {
    IntervalOrbitOptions opts;
    opts.max_steps = max_steps;
    opts.max_depth = max_depth;
    OrbitRecord<Dyadic> rec = interval_orbit(parse_dyadic(start), QMap(q), opts);

    std::string line;
    for (const auto& v : rec.trajectory) {
        if (!line.empty()) line += ' ';
        line += v.decimal_string();
    }
    if (rec.truncated) line += " ...";
    line += " | ";
    if (rec.verdict == OrbitVerdict::reached_cycle) {
        line += "cycle(";
        for (std::size_t i = 0; i < rec.cycle.size(); ++i) {
            if (i) line += ", ";
            line += rec.cycle[i].decimal_string();
        }
        line += ") in " + std::to_string(rec.steps) + " steps";
    } else {
        line += "cutoff after " + std::to_string(rec.steps) + " steps, peak " +
                rec.peak.decimal_string();
    }
    std::cout << line << "\n";
    return rec.verdict == OrbitVerdict::reached_cycle ? 0 : 1;
}

int run_intervals(unsigned depth, unsigned q, const std::string& emit,
                  const std::string& out_path) {
    TransferGraph graph = transfer_graph(depth, QMap(q), 14);
    if (!emit.empty()) {
        std::ofstream file;
        bool to_file = !out_path.empty();
        if (to_file) {
            file.open(out_path, std::ios::binary);
            if (!file)
                throw std::invalid_argument("cannot open output file: " + out_path);
        }
        std::ostream& os = to_file ? static_cast<std::ostream&>(file) : std::cout;
        if (emit == "matrix")
            matrix_csv(graph, os);
        else
            os << automaton_export(graph, emit == "automaton");
        if (!to_file) return 0;  // emission owns stdout; no summary mixed in
    }
    ConnectivityReport rep = connectivity_report(graph);
    std::cout << "depth: " << depth << "\n"
              << "q: " << q << "\n"
              << "nodes: " << graph.node_count() << "\n"
              << "residue_convention: reversed-label\n"
              << "strongly_connected: " << (rep.strongly_connected ? "true" : "false") << "\n"
              << "primitivity_exponent: "
              << (rep.primitivity_exponent ? std::to_string(*rep.primitivity_exponent)
                                           : std::string("none"))
              << "\n"
              << "max_covering_time: " << rep.max_covering << "\n";
    return 0;
}

int run_plot_data(const std::vector<std::string>& window, unsigned sample_depth,
                  unsigned q, const std::string& out_path) {
    Dyadic lo = parse_dyadic(window.at(0));
    Dyadic hi = parse_dyadic(window.at(1));
    if (!(lo < hi))
        throw std::invalid_argument("plot-data: window must satisfy lo < hi");

    // Exact grid bounds: smallest k with k/2^sd >= lo, first k with k/2^sd >= hi.
    auto ceil_scaled = [sample_depth](const Dyadic& v) -> std::uint64_t {
        Natural k;
        if (v.depth() <= sample_depth) {
            k = v.numerator() << (sample_depth - v.depth());
        } else {
            unsigned shift = v.depth() - sample_depth;
            k = (v.numerator() + (Natural(1) << shift) - 1) >> shift;
        }
        return k.convert_to<std::uint64_t>();
    };
    const std::uint64_t k_begin = ceil_scaled(lo);
    const std::uint64_t k_end = ceil_scaled(hi);

    std::ofstream file;
    bool to_file = !out_path.empty();
    if (to_file) {
        file.open(out_path, std::ios::binary);
        if (!file)
            throw std::invalid_argument("cannot open output file: " + out_path);
    }
    std::ostream& os = to_file ? static_cast<std::ostream&>(file) : std::cout;

    QMap qq(q);
    os << "x_num,x_depth,x_float,y_num,y_depth,y_float\n";
    for (std::uint64_t k = k_begin; k < k_end; ++k) {
        Dyadic x = Dyadic(Natural(k), sample_depth).canonical();
        Dyadic y = interval_step(x, qq);
        os << x.numerator().str() << ',' << x.depth() << ',' << format_double(x.approx())
           << ',' << y.numerator().str() << ',' << y.depth() << ','
           << format_double(y.approx()) << "\n";
    }
    return 0;
}

int run_verify(unsigned q, const std::string& scale, const std::string& report_path) {
    VerifyBounds bounds;
    if (scale == "small")
        bounds = VerifyBounds::small_scale();
    else if (scale == "full")
        bounds = VerifyBounds::full_scale();
    else
        bounds = VerifyBounds::none();
    VerificationReport rep = verify_all(QMap(q), bounds, scale, Exec::parallel);
    std::string text = rep.to_text();
    std::cout << text;
    if (!report_path.empty()) {
        std::ofstream file(report_path, std::ios::binary);
        if (!file)
            throw std::invalid_argument("cannot open report file: " + report_path);
        file << text;
    }
    return rep.all_passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact dyadic arithmetic for qx+1 maps and their interval conjugate"};
    app.require_subcommand(1);

    auto* enc = app.add_subcommand("encode", "Code an integer as a binary fraction in [0,1)");
    std::string enc_value;
    std::string enc_format = "both";
    enc->add_option("value", enc_value, "nonnegative integer")->required();
    enc->add_option("--format", enc_format, "both|exact|decimal|binary")
        ->check(CLI::IsMember({"both", "exact", "decimal", "binary"}));

    auto* dec = app.add_subcommand("decode", "Recover the integer behind a coded point");
    std::string dec_value;
    dec->add_option("value", dec_value, "dyadic literal: k/2^n, 0.1101b, or exact decimal")
        ->required();

    auto* orb = app.add_subcommand("orbit", "Iterate the integer map to a cycle or a bound");
    std::string orb_start, orb_bound;
    unsigned orb_q = 3;
    std::uint64_t orb_max_steps = 100000;
    orb->add_option("start", orb_start, "starting integer")->required();
    orb->add_option("--q", orb_q, "odd multiplier, default 3");
    orb->add_option("--max-steps", orb_max_steps, "step budget");
    orb->add_option("--magnitude-bound", orb_bound, "abort above this value (0 disables)");

    auto* gorb = app.add_subcommand("g-orbit", "Iterate the interval map from a dyadic point");
    std::string gorb_start;
    unsigned gorb_q = 3;
    std::uint64_t gorb_max_steps = 100000;
    unsigned gorb_max_depth = 4096;
    gorb->add_option("start", gorb_start, "dyadic literal in (0,1)")->required();
    gorb->add_option("--q", gorb_q, "odd multiplier, default 3");
    gorb->add_option("--max-steps", gorb_max_steps, "step budget");
    gorb->add_option("--max-depth", gorb_max_depth, "cutoff for iterate depth");

    auto* ivs = app.add_subcommand("intervals", "Partition transfer graph and connectivity");
    unsigned ivs_depth = 0;
    unsigned ivs_q = 3;
    std::string ivs_emit, ivs_out;
    ivs->add_option("--depth", ivs_depth, "partition depth (1..14)")
        ->required()
        ->check(CLI::Range(1u, 14u));
    ivs->add_option("--q", ivs_q, "odd multiplier, default 3");
    ivs->add_option("--emit", ivs_emit, "matrix|graph|automaton")
        ->check(CLI::IsMember({"matrix", "graph", "automaton"}));
    ivs->add_option("--out", ivs_out, "write the emission to this file");

    auto* plot = app.add_subcommand("plot-data", "Exact CSV of (x, g(x)) on a grid");
    std::vector<std::string> plot_window{"0", "1"};
    unsigned plot_depth = 10;
    unsigned plot_q = 3;
    std::string plot_out;
    plot->add_option("--window", plot_window, "window bounds LO HI (dyadic literals)")
        ->expected(2);
    plot->add_option("--sample-depth", plot_depth, "grid depth (1..20)")
        ->check(CLI::Range(1u, 20u));
    plot->add_option("--q", plot_q, "odd multiplier, default 3");
    plot->add_option("--out", plot_out, "write CSV to this file");

    auto* ver = app.add_subcommand("verify", "Run the claim-by-claim verification suite");
    unsigned ver_q = 3;
    std::string ver_scale = "small";
    std::string ver_report;
    ver->add_option("--q", ver_q, "odd multiplier, default 3");
    ver->add_option("--scale", ver_scale, "small|full|none")
        ->check(CLI::IsMember({"small", "full", "none"}));
    ver->add_option("--report", ver_report, "also write the report to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (enc->parsed()) return run_encode(enc_value, enc_format);
        if (dec->parsed()) return run_decode(dec_value);
        if (orb->parsed()) return run_orbit(orb_start, orb_q, orb_max_steps, orb_bound);
        if (gorb->parsed()) return run_g_orbit(gorb_start, gorb_q, gorb_max_steps, gorb_max_depth);
        if (ivs->parsed()) return run_intervals(ivs_depth, ivs_q, ivs_emit, ivs_out);
        if (plot->parsed()) return run_plot_data(plot_window, plot_depth, plot_q, plot_out);
        if (ver->parsed()) return run_verify(ver_q, ver_scale, ver_report);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
