// Command-line front end: green, jump, align, sweep, oracle, blocks, format.
//
// Exit codes: 0 ok, 2 input error, 3 disconnected network, 4 oracle
// mismatch, 5 enumeration bound exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "jumplab/errors.hpp"
#include "jumplab/green.hpp"
#include "jumplab/jump.hpp"
#include "jumplab/labels.hpp"
#include "jumplab/multigraph.hpp"
#include "jumplab/problem_file.hpp"

namespace {

using namespace jumplab;

enum ExitCode : int {
    kOk = 0,
    kInputError = 2,
    kDisconnected = 3,
    kOracleMismatch = 4,
    kEnumerationBound = 5,
};

std::optional<std::size_t> env_bound() {
    const char* raw = std::getenv("JUMPLAB_ENUM_BOUND");
    if (raw == nullptr || *raw == '\0') {
        return std::nullopt;
    }
    try {
        std::size_t used = 0;
        const unsigned long value = std::stoul(raw, &used);
        if (raw[used] != '\0') {
            throw std::invalid_argument(raw);
        }
        return value;
    } catch (const std::exception&) {
        throw InputError(std::string("JUMPLAB_ENUM_BOUND is not a nonnegative integer: '") + raw + "'", 0);
    }
}

// Self-test hook: a rational added to every oracle value, so that the
// mismatch path (exit 4) can be exercised.
Rational oracle_skew() {
    const char* raw = std::getenv("JUMPLAB_ORACLE_SKEW");
    if (raw == nullptr || *raw == '\0') {
        return Rational(0);
    }
    try {
        return Rational::parse(raw);
    } catch (const std::exception&) {
        throw InputError(std::string("JUMPLAB_ORACLE_SKEW is not a rational: '") + raw + "'", 0);
    }
}

struct Options {
    std::string file;
    std::string x;
    std::string y;
    std::string d;
    std::string e;
    std::string orders;
    std::string csv;
    std::int64_t max_order = 3;
    bool faces = false;
};

ProblemFile load(const Options& opt) {
    ProblemFile p = load_problem(opt.file);
    if (!opt.orders.empty()) {
        p.orders = parse_inline_orders(p, opt.orders);
    }
    return p;
}

std::string label_text(const Label& l) {
    std::string out = "(";
    for (std::size_t i = 0; i < l.size(); ++i) {
        out += (i ? "," : "") + std::to_string(l[i]);
    }
    return out + ")";
}

// Divisor names for jump and sweep: D defaults to "D" when declared, else the
// first declared divisor; E defaults to "E" when declared, else to D.
std::pair<std::string, std::string> jump_divisors(const ProblemFile& p, const Options& opt) {
    std::string d = opt.d;
    if (d.empty()) {
        if (p.divisors.contains("D")) {
            d = "D";
        } else if (!p.divisors.empty()) {
            d = p.divisors.begin()->first;
        } else {
            throw InputError("the file declares no divisors", 0);
        }
    }
    std::string e = opt.e;
    if (e.empty()) {
        e = p.divisors.contains("E") ? "E" : d;
    }
    return {d, e};
}

int cmd_green(const Options& opt) {
    const ProblemFile p = load(opt);
    const LabelledGraph lg = p.labelled_graph();
    const auto mu = pullback_orders(lg, p.order_vector());
    const GreenValue g = green_detailed(lg.graph, mu, p.combinatorial_divisor(opt.x), p.combinatorial_divisor(opt.y));
    std::cout << g.value << "\n";
    if (g.nonzero_degree) {
        std::cerr << "note: a divisor has nonzero total degree\n";
    }
    return kOk;
}

int cmd_jump(const Options& opt) {
    const ProblemFile p = load(opt);
    const LabelledGraph lg = p.labelled_graph();
    const auto [dn, en] = jump_divisors(p, opt);
    const JumpResult j = height_jump(lg, p.section_divisor(dn), p.section_divisor(en), p.order_vector());
    std::cout << "j = " << j.value << "\n";
    std::cout << "gr(full) = " << j.full << "\n";
    for (std::size_t i = 0; i < j.single.size(); ++i) {
        std::cout << "gr(" << lg.basis.name(i) << ") = " << j.single[i] << "\n";
    }
    std::cout << "aligned: " << (j.alignment.aligned ? "true" : "false") << "\n";
    return kOk;
}

int cmd_align(const Options& opt) {
    const ProblemFile p = load(opt);
    const LabelledGraph lg = p.labelled_graph();
    const AlignmentVerdict verdict = is_aligned(lg);
    if (verdict.aligned) {
        std::cout << "aligned\n";
        return kOk;
    }
    const AlignmentWitness& w = *verdict.witness;
    std::cout << "not aligned: cycle [";
    for (std::size_t i = 0; i < w.cycle.edges.size(); ++i) {
        std::cout << (i ? ", " : "") << lg.graph.edge(w.cycle.edges[i]).id;
    }
    std::cout << "], edges " << lg.graph.edge(w.first).id << ", " << lg.graph.edge(w.second).id << ", labels "
              << label_text(lg.labels[w.first]) << ", " << label_text(lg.labels[w.second]) << "\n";
    return kOk;
}

void write_rows(std::ostream& out, const std::vector<SweepRow>& rows) {
    for (const SweepRow& row : rows) {
        for (const auto m : row.orders) {
            out << m << ",";
        }
        out << row.value.numerator().get_str() << "," << row.value.denominator().get_str() << "\n";
    }
}

int cmd_sweep(const Options& opt) {
    const ProblemFile p = load(opt);
    const LabelledGraph lg = p.labelled_graph();
    const auto [dn, en] = jump_divisors(p, opt);
    const SweepResult s = sweep(lg, p.section_divisor(dn), p.section_divisor(en), opt.max_order);

    std::ostringstream csv;
    for (const auto& name : lg.basis.names()) {
        csv << name << ",";
    }
    csv << "num,den\n";
    write_rows(csv, s.interior);
    if (opt.faces) {
        write_rows(csv, s.faces);
    }
    if (opt.csv.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream file(opt.csv);
        if (!file) {
            throw InputError("cannot write '" + opt.csv + "'", 0);
        }
        file << csv.str();
    }
    std::cout << "rows: " << s.interior.size() << ", min: " << s.summary.min << ", max: " << s.summary.max
              << ", all nonnegative: " << (s.summary.all_nonnegative ? "true" : "false")
              << ", all zero: " << (s.summary.all_zero ? "true" : "false")
              << ", homogeneous: " << (s.homogeneous ? "true" : "false") << "\n";
    return kOk;
}

int cmd_oracle(const Options& opt) {
    const ProblemFile p = load(opt);
    const LabelledGraph lg = p.labelled_graph();
    const std::size_t bound = env_bound().value_or(kDefaultOracleBound);
    if (lg.graph.edge_count() > bound) {
        throw TooLargeForEnumeration(lg.graph.edge_count(), bound);
    }
    const auto mu = pullback_orders(lg, p.order_vector());
    const Rational skew = oracle_skew();
    const auto n = lg.graph.vertex_count();
    for (VertexIndex u = 0; u < n; ++u) {
        for (VertexIndex v = u + 1; v < n; ++v) {
            const auto x = CombinatorialDivisor::point_difference(n, u, v);
            const Rational direct = green(lg.graph, mu, x, x);
            const Rational oracle = resistance_oracle(lg.graph, mu, u, v, bound) + skew;
            std::cout << lg.graph.vertex_name(u) << " " << lg.graph.vertex_name(v) << " " << direct << "\n";
            if (direct != oracle) {
                std::cout << "MISMATCH at " << lg.graph.vertex_name(u) << " " << lg.graph.vertex_name(v)
                          << ": green " << direct << ", oracle " << oracle << "\n";
                return kOracleMismatch;
            }
        }
    }
    std::cout << "MATCH\n";
    return kOk;
}

int cmd_blocks(const Options& opt) {
    const ProblemFile p = load(opt);
    const LabelledGraph lg = p.labelled_graph();
    const BlockDecomposition blocks = biconnected_blocks(lg.graph);
    for (std::size_t b = 0; b < blocks.blocks.size(); ++b) {
        const Block& block = blocks.blocks[b];
        std::cout << "block " << b << (block.is_loop ? " (loop)" : block.is_bridge ? " (bridge)" : "") << ": edges";
        for (const EdgeIndex e : block.edges) {
            std::cout << " " << lg.graph.edge(e).id;
        }
        std::cout << "; vertices";
        for (const VertexIndex v : block.vertices) {
            std::cout << " " << lg.graph.vertex_name(v);
        }
        std::cout << "\n";
    }
    std::cout << "cut vertices:";
    for (const VertexIndex v : blocks.cut_vertices) {
        std::cout << " " << lg.graph.vertex_name(v);
    }
    std::cout << "\n";
    return kOk;
}

int cmd_format(const Options& opt) {
    std::cout << serialize_problem(load_problem(opt.file));
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Green's functions, height jumps and alignment on labelled graphs"};
    app.require_subcommand(1);
    Options opt;

    auto add_file = [&](CLI::App* sub) { sub->add_option("file", opt.file, "problem file (JSON)")->required(); };
    auto add_orders = [&](CLI::App* sub) {
        sub->add_option("--orders", opt.orders, "inline orders, e.g. z1=1,z2=3 (overrides the file)");
    };
    auto add_jump_divisors = [&](CLI::App* sub) {
        sub->add_option("--D", opt.d, "first divisor (default: D, else the first declared)");
        sub->add_option("--E", opt.e, "second divisor (default: E, else the first divisor)");
    };

    auto* green_cmd = app.add_subcommand("green", "Green's function gr(X, Y) of the pulled-back network");
    add_file(green_cmd);
    green_cmd->add_option("--X", opt.x, "first divisor")->required();
    green_cmd->add_option("--Y", opt.y, "second divisor")->required();
    add_orders(green_cmd);

    auto* jump_cmd = app.add_subcommand("jump", "height jump with its per-term breakdown");
    add_file(jump_cmd);
    add_jump_divisors(jump_cmd);
    add_orders(jump_cmd);

    auto* align_cmd = app.add_subcommand("align", "alignment verdict with a witness cycle");
    add_file(align_cmd);

    auto* sweep_cmd = app.add_subcommand("sweep", "jump over all orders in {1..max}^r");
    add_file(sweep_cmd);
    add_jump_divisors(sweep_cmd);
    sweep_cmd->add_option("--max", opt.max_order, "largest order")->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--csv", opt.csv, "write the table here instead of stdout");
    sweep_cmd->add_flag("--faces", opt.faces, "also emit rows with some order equal to zero");

    auto* oracle_cmd = app.add_subcommand("oracle", "compare Green's function with the spanning-tree oracle");
    add_file(oracle_cmd);
    add_orders(oracle_cmd);

    auto* blocks_cmd = app.add_subcommand("blocks", "biconnected decomposition");
    add_file(blocks_cmd);

    auto* format_cmd = app.add_subcommand("format", "print the file in canonical form");
    add_file(format_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*green_cmd) return cmd_green(opt);
        if (*jump_cmd) return cmd_jump(opt);
        if (*align_cmd) return cmd_align(opt);
        if (*sweep_cmd) return cmd_sweep(opt);
        if (*oracle_cmd) return cmd_oracle(opt);
        if (*blocks_cmd) return cmd_blocks(opt);
        if (*format_cmd) return cmd_format(opt);
    } catch (const DisconnectedNetwork& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDisconnected;
    } catch (const TooLargeForEnumeration& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kEnumerationBound;
    } catch (const Error& e) {
        std::cerr << "error: " << opt.file << ": " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
