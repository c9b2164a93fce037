#include "graphcode/cli.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "graphcode/errors.hpp"
#include "graphcode/graph.hpp"
#include "graphcode/graphcode.hpp"
#include "graphcode/graphstate.hpp"
#include "graphcode/oracle.hpp"

namespace graphcode {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file '" + path + "'", 1, 1);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

GraphFormat format_from_name(const std::string& name) {
    if (name == "edgelist") return GraphFormat::EdgeList;
    if (name == "adj") return GraphFormat::Adjacency;
    return GraphFormat::Graph6;
}

SimpleGraph load_graph(const std::string& path, const std::string& format) {
    return parse_graph(read_file(path), format_from_name(format));
}

// B files hold either the headered matrix format or bare rows of bits.
BinaryMatrix load_b_matrix(const std::string& path) {
    const std::string text = read_file(path);
    try {
        return parse_matrix(text);
    } catch (const ParseError&) {
        std::vector<std::string> rows;
        std::istringstream lines(text);
        std::string line;
        while (std::getline(lines, line)) {
            std::string bits;
            for (char c : line) {
                if (c == '0' || c == '1') {
                    bits.push_back(c);
                } else if (!std::isspace(static_cast<unsigned char>(c))) {
                    throw ParseError("expected '0' or '1' in B matrix", 1, 1);
                }
            }
            if (!bits.empty()) rows.push_back(bits);
        }
        if (rows.empty()) throw ParseError("empty B matrix file", 1, 1);
        return BinaryMatrix::from_strings(rows);
    }
}

struct CheckResult {
    std::string name;
    bool pass;
    double fidelity;
    std::string detail;
};

void print_report(const std::vector<CheckResult>& checks, bool as_json, std::ostream& out) {
    if (as_json) {
        json report = json::array();
        for (const auto& c : checks) {
            json entry{{"check", c.name}, {"pass", c.pass}, {"fidelity", c.fidelity}};
            if (!c.detail.empty()) entry["detail"] = c.detail;
            report.push_back(entry);
        }
        out << report.dump(2) << '\n';
    } else {
        for (const auto& c : checks) {
            out << (c.pass ? "PASS " : "FAIL ") << c.name << " fidelity="
                << std::setprecision(12) << c.fidelity;
            if (!c.detail.empty()) out << " (" << c.detail << ')';
            out << '\n';
        }
    }
}

int cmd_stabilizers(const std::string& path, const std::string& format, bool as_json,
                    std::ostream& out) {
    const GraphState state(load_graph(path, format));
    if (as_json) {
        json arr = json::array();
        for (const auto& gen : state.generators()) arr.push_back(gen.to_string());
        out << arr.dump(2) << '\n';
    } else {
        for (const auto& gen : state.generators()) out << gen.to_string() << '\n';
    }
    return 0;
}

int cmd_derive_code(const std::string& path, const std::string& format,
                    std::optional<std::size_t> k, const std::optional<std::string>& b_file,
                    bool as_json, std::ostream& out) {
    const SimpleGraph g = load_graph(path, format);
    GraphCode code = [&] {
        if (b_file) {
            BinaryMatrix b = load_b_matrix(*b_file);
            if (k && *k != b.rows()) {
                throw std::domain_error("--k disagrees with the row count of the B file");
            }
            if (!validate_b(b, g)) {
                throw std::domain_error("B file does not validate against the graph (need "
                                        "independent rows with B Gamma(G) = 0)");
            }
            return make_graph_code(g, std::move(b));
        }
        if (!k) throw std::domain_error("need --k or --b-file to derive a code");
        return derive_graph_code(g, *k);
    }();
    const std::size_t d = distance(code);

    if (as_json) {
        json bundle = code_to_json(code);
        bundle["d"] = d;
        out << bundle.dump(2) << '\n';
    } else {
        out << "[[" << code.n() << ',' << code.k() << ',' << d << "]] graph code\n";
        out << "graph6: " << to_graph6(code.ext.inner()) << '\n';
        out << "B:\n";
        for (std::size_t i = 0; i < code.ext.b().rows(); ++i) {
            out << "  " << code.ext.b().row(i).to_string() << '\n';
        }
        out << "logical Z:\n";
        for (const auto& op : code.logical_z) out << "  " << op.to_string() << '\n';
        out << "logical X:\n";
        for (const auto& op : code.logical_x) out << "  " << op.to_string() << '\n';
        out << "stabilizers:\n";
        for (const auto& op : code.stabilizers) out << "  " << op.to_string() << '\n';
    }
    return 0;
}

int cmd_syndrome(const std::string& code_path, const std::string& error_string, bool as_json,
                 std::ostream& out) {
    json bundle;
    try {
        bundle = json::parse(read_file(code_path));
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid code bundle JSON: ") + e.what(), 1, 1);
    }
    const GraphCode code = code_from_json(bundle);
    const PauliOperator error = PauliOperator::from_string(error_string);
    const Syndrome s = syndrome(code, error);
    if (as_json) {
        out << json{{"syndrome", s.bits}}.dump(2) << '\n';
    } else {
        out << s.to_string() << '\n';
    }
    return 0;
}

int cmd_lc(const std::string& path, const std::string& format, std::optional<std::size_t> vertex,
           bool orbit, std::size_t max_size, bool as_json, std::ostream& out) {
    const SimpleGraph g = load_graph(path, format);
    if (orbit) {
        const OrbitResult result = lc_orbit(g, max_size);
        if (as_json) {
            json arr = json::array();
            for (const auto& member : result.graphs) arr.push_back(to_graph6(member));
            out << json{{"orbit", arr}, {"truncated", result.truncated}}.dump(2) << '\n';
        } else {
            for (const auto& member : result.graphs) out << to_graph6(member) << '\n';
            if (result.truncated) out << "(truncated at " << max_size << ")\n";
        }
        return 0;
    }
    if (!vertex) throw std::domain_error("need --vertex or --orbit");
    if (*vertex < 1 || *vertex > g.vertex_count()) {
        throw std::domain_error("vertex " + std::to_string(*vertex) + " out of range 1.." +
                                std::to_string(g.vertex_count()));
    }
    const std::size_t v = *vertex - 1;  // paper labels are 1-based
    const SimpleGraph complemented = local_complement(g, v);
    const LocalCliffordOp op = lc_operator(g, v);

    auto factor_text = [](const GateFactor& f) {
        return gate_name(f.gate) + "@" + std::to_string(f.qubit + 1);
    };
    if (as_json) {
        json factors = json::array();
        for (const auto& f : op.factors()) {
            factors.push_back({{"gate", gate_name(f.gate)}, {"qubit", f.qubit + 1}});
        }
        out << json{{"graph6", to_graph6(complemented)}, {"operator", factors}}.dump(2) << '\n';
    } else {
        out << to_graph6(complemented) << '\n';
        std::string line;
        for (const auto& f : op.factors()) {
            if (!line.empty()) line += ", ";
            line += factor_text(f);
        }
        out << line << '\n';
    }
    return 0;
}

// The oracle identity suite: Eq.-level checks on one graph, optionally with
// a code at the requested k.
std::vector<CheckResult> run_verification(const SimpleGraph& g, std::optional<std::size_t> k_flag,
                                          std::size_t depth, std::uint64_t seed) {
    std::vector<CheckResult> checks;
    const std::size_t n = g.vertex_count();
    const StateVector graph_state = build_graph_state(g);
    const GraphState symbolic(g);

    {
        double worst = 1.0;
        for (const auto& gen : symbolic.generators()) {
            worst = std::min(worst, 1.0 - max_amplitude_diff(apply_pauli(graph_state, gen),
                                                             graph_state));
        }
        checks.push_back({"graph-state-generators-fix-state", worst >= 1.0 - 1e-10, worst, ""});
    }
    {
        double worst = 1.0;
        for (std::size_t v = 0; v < n; ++v) {
            const StateVector lhs = build_graph_state(local_complement(g, v));
            const StateVector rhs = apply_local_clifford(graph_state, lc_operator(g, v));
            worst = std::min(worst, fidelity(lhs, rhs));
        }
        checks.push_back({"local-complementation-matches-graph-rewrite", worst >= 1.0 - 1e-10,
                          worst, ""});
    }

    const std::size_t kernel_dim = nullspace(g.adjacency()).rows();
    const std::size_t k = k_flag.value_or(kernel_dim);
    if (k == 0 || k > kernel_dim) {
        const bool pass = !k_flag.has_value();
        checks.push_back({"code-derivation", pass, pass ? 1.0 : 0.0,
                          "kernel dimension is " + std::to_string(kernel_dim) +
                              (pass ? "; no code checks to run" : ", cannot encode k=" +
                              std::to_string(k))});
        return checks;
    }

    const GraphCode code = derive_graph_code(g, k);
    {
        // |G> = sum_c |c>_L
        std::vector<std::complex<double>> acc(std::size_t{1} << n, {0, 0});
        for (std::size_t c = 0; c < (std::size_t{1} << k); ++c) {
            BinaryVector outcomes(k);
            for (std::size_t i = 0; i < k; ++i) outcomes.set(i, (c >> (k - 1 - i)) & 1u);
            const StateVector sector = project_logical(graph_state, code.logical_z, outcomes);
            for (std::size_t a = 0; a < acc.size(); ++a) acc[a] += sector.amplitudes()[a];
        }
        const StateVector sum =
            StateVector::from_amplitudes(n, std::move(acc), false).normalized();
        const double f = fidelity(sum, graph_state);
        checks.push_back({"logical-sector-superposition", f >= 1.0 - 1e-10, f, ""});
    }
    if (k + n <= 14) {
        double worst = 1.0;
        for (std::size_t c = 0; c < (std::size_t{1} << k); ++c) {
            BinaryVector info(k);
            for (std::size_t i = 0; i < k; ++i) info.set(i, (c >> (k - 1 - i)) & 1u);
            const StateVector expected = project_logical(graph_state, code.logical_z, info);
            const auto forced = encode_teleport(g, code.ext.b(), info);
            worst = std::min(worst, fidelity(forced.state, expected));
            for (std::uint64_t s = 0; s < 3; ++s) {
                const auto sampled =
                    encode_teleport(g, code.ext.b(), info, OutcomePolicy::random(seed + s));
                worst = std::min(worst, fidelity(sampled.state, expected));
            }
        }
        checks.push_back({"encode-teleport-matches-projection", worst >= 1.0 - 1e-10, worst, ""});

        // Transport along a chain of feasible local complementations.
        GraphCode current = code;
        const BinaryVector info(k);
        double worst_transport = 1.0;
        std::size_t steps = 0;
        std::string detail;
        for (std::size_t step = 0; step < depth; ++step) {
            std::optional<std::size_t> pick;
            for (std::size_t v = 0; v < n; ++v) {
                const SimpleGraph candidate = local_complement(current.ext.inner(), v);
                if (nullspace(candidate.adjacency()).rows() >= k) {
                    pick = v;
                    break;
                }
            }
            if (!pick) {
                detail = "stopped after " + std::to_string(steps) +
                         " steps: no vertex admits k=" + std::to_string(k);
                break;
            }
            TransportResult moved = lc_transport(current, *pick, info);
            for (const auto& gen : moved.code2.stabilizers) {
                worst_transport = std::min(
                    worst_transport, 1.0 - max_amplitude_diff(apply_pauli(moved.state, gen),
                                                              moved.state));
            }
            current = std::move(moved.code2);
            ++steps;
        }
        checks.push_back({"transport-preserves-stabilization", worst_transport >= 1.0 - 1e-10,
                          worst_transport, detail});
    } else {
        checks.push_back({"encode-teleport-matches-projection", false, 0.0,
                          "k+n exceeds the oracle bound of 14 qubits"});
    }
    return checks;
}

int cmd_verify(const std::string& path, const std::string& format, std::optional<std::size_t> k,
               std::size_t depth, std::uint64_t seed, bool as_json, std::ostream& out) {
    const SimpleGraph g = load_graph(path, format);
    const auto checks = run_verification(g, k, depth, seed);
    print_report(checks, as_json, out);
    for (const auto& c : checks) {
        if (!c.pass) return 1;
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"graph states, local complementation, and graph codes"};
    app.require_subcommand(1);

    std::string graph_file;
    std::string format = "edgelist";
    std::string code_file;
    std::string error_string;
    std::optional<std::size_t> k;
    std::optional<std::string> b_file;
    std::optional<std::size_t> vertex;
    bool orbit = false;
    std::size_t max_size = 1000;
    std::size_t depth = 1;
    std::uint64_t seed = 12345;
    bool as_json = false;

    const auto format_check = CLI::IsMember({"edgelist", "adj", "graph6"});

    auto* stab = app.add_subcommand("stabilizers", "print the graph-state stabilizer generators");
    stab->add_option("graph-file", graph_file)->required();
    stab->add_option("--format", format)->check(format_check);
    stab->add_flag("--json", as_json);

    auto* derive = app.add_subcommand("derive-code", "derive an [[n,k,d]] graph code");
    derive->add_option("graph-file", graph_file)->required();
    derive->add_option("--format", format)->check(format_check);
    derive->add_option("--k", k, "number of encoded qubits");
    derive->add_option("--b-file", b_file, "explicit B matrix (rows of bits)");
    derive->add_flag("--json", as_json);

    auto* syn = app.add_subcommand("syndrome", "syndrome of an error against a code bundle");
    syn->add_option("code-json", code_file)->required();
    syn->add_option("error", error_string)->required();
    syn->add_flag("--json", as_json);

    auto* lc = app.add_subcommand("lc", "local complementation or LC orbit");
    lc->add_option("graph-file", graph_file)->required();
    lc->add_option("--format", format)->check(format_check);
    lc->add_option("--vertex", vertex, "vertex to complement (1-based)");
    lc->add_flag("--orbit", orbit, "enumerate the LC orbit");
    lc->add_option("--max", max_size, "orbit size cap");
    lc->add_flag("--json", as_json);

    auto* verify = app.add_subcommand("verify", "run the oracle identity suite");
    verify->add_option("graph-file", graph_file)->required();
    verify->add_option("--format", format)->check(format_check);
    verify->add_option("--k", k, "encoded qubits (default: kernel dimension)");
    verify->add_option("--depth", depth, "length of the transport chain");
    verify->add_option("--seed", seed, "seed for sampled measurement outcomes");
    verify->add_flag("--json", as_json);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (stab->parsed()) return cmd_stabilizers(graph_file, format, as_json, out);
        if (derive->parsed()) return cmd_derive_code(graph_file, format, k, b_file, as_json, out);
        if (syn->parsed()) return cmd_syndrome(code_file, error_string, as_json, out);
        if (lc->parsed()) return cmd_lc(graph_file, format, vertex, orbit, max_size, as_json, out);
        if (verify->parsed()) return cmd_verify(graph_file, format, k, depth, seed, as_json, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    err << "error: no subcommand\n";
    return 2;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    args.reserve(static_cast<std::size_t>(argc > 0 ? argc - 1 : 0));
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args, out, err);
}

}  // namespace graphcode
