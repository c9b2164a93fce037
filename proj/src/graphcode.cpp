#include "graphcode/graphcode.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace graphcode {

BinaryMatrix derive_b(const SimpleGraph& g, std::size_t k) {
    const BinaryMatrix kernel = nullspace(g.adjacency());
    if (k == 0 || k > kernel.rows()) {
        throw std::domain_error("infeasible k=" + std::to_string(k) + ": kernel dimension of Gamma(G) is " +
                                std::to_string(kernel.rows()) + ", so maximum feasible k is " +
                                std::to_string(kernel.rows()));
    }
    std::vector<BinaryVector> rows;
    rows.reserve(k);
    for (std::size_t i = 0; i < k; ++i) rows.push_back(kernel.row(i));
    return BinaryMatrix::from_rows(std::move(rows));
}

bool validate_b(const BinaryMatrix& b, const SimpleGraph& g) {
    if (b.rows() == 0 || b.cols() != g.vertex_count()) return false;
    if (rank(b) != b.rows()) return false;
    return mat_mul(b, g.adjacency()).is_zero();
}

std::vector<PauliOperator> logical_z_ops(const BinaryMatrix& b) {
    std::vector<PauliOperator> out;
    out.reserve(b.rows());
    for (std::size_t i = 0; i < b.rows(); ++i) {
        out.emplace_back(BinaryVector(b.cols()), b.row(i), 0);
    }
    return out;
}

std::vector<PauliOperator> extract_stabilizers(const SimpleGraph& g,
                                               std::span<const PauliOperator> logical_z) {
    std::vector<PauliOperator> current = GraphState(g).generators();
    for (const auto& zbar : logical_z) {
        if (zbar.size() != g.vertex_count()) {
            throw std::invalid_argument("logical Z size mismatch in extract_stabilizers");
        }
        std::vector<PauliOperator> commuting;
        std::vector<PauliOperator> anticommuting;
        for (const auto& op : current) {
            (commutes(op, zbar) ? commuting : anticommuting).push_back(op);
        }
        if (anticommuting.empty()) {
            throw std::domain_error(
                "degenerate logical operator: a logical Z commutes with every remaining "
                "generator, so k overcounts the encoded qubits");
        }
        const PauliOperator& pivot = anticommuting.front();
        for (std::size_t i = 1; i < anticommuting.size(); ++i) {
            commuting.push_back(multiply(pivot, anticommuting[i]));
        }
        current = std::move(commuting);
    }
    if (current.size() != g.vertex_count() - logical_z.size()) {
        throw std::domain_error("degenerate logical operator: extraction ended with " +
                                std::to_string(current.size()) + " generators, expected " +
                                std::to_string(g.vertex_count() - logical_z.size()));
    }
    return current;
}

std::vector<PauliOperator> logical_x_ops(const GraphCode& code) {
    const std::size_t n = code.n();
    const std::size_t k = code.k();
    const std::vector<PauliOperator> generators = GraphState(code.ext.inner()).generators();

    // Commutation is GF(2)-linear in the generator exponents: the candidate
    // prod_j K_j^{c_j} anticommutes with Zbar_i iff (A c)_i = 1 where
    // A[i][j] = <K_j, Zbar_i>. Membership in the graph-state group makes the
    // result commute with every extracted stabilizer automatically.
    BinaryMatrix a(k, n);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a.set(i, j, !commutes(generators[j], code.logical_z[i]));
        }
    }

    std::vector<PauliOperator> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        BinaryVector target(k);
        target.set(i, true);
        const std::optional<BinaryVector> coeffs = solve(a, target);
        if (!coeffs) {
            throw std::runtime_error("no logical X solution; the code invariants are broken upstream");
        }
        PauliOperator xbar(n);
        for (std::size_t j = 0; j < n; ++j) {
            if (coeffs->get(j)) xbar = multiply(xbar, generators[j]);
        }
        out.push_back(std::move(xbar));
    }
    return out;
}

GraphCode make_graph_code(SimpleGraph g, BinaryMatrix b) {
    if (!validate_b(b, g)) {
        throw std::domain_error("invalid B matrix: need independent rows with B Gamma(G) = 0");
    }
    std::vector<PauliOperator> logical_z = logical_z_ops(b);
    std::vector<PauliOperator> stabilizers = extract_stabilizers(g, logical_z);
    GraphCode code{ExtendedGraph(std::move(b), std::move(g)), std::move(logical_z), {},
                   std::move(stabilizers)};
    code.logical_x = logical_x_ops(code);
    return code;
}

GraphCode derive_graph_code(const SimpleGraph& g, std::size_t k) {
    return make_graph_code(g, derive_b(g, k));
}

std::string Syndrome::to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (i) out << ", ";
        out << (bits[i] < 0 ? "-1" : "+1");
    }
    out << ')';
    return out.str();
}

Syndrome syndrome(const GraphCode& code, const PauliOperator& error) {
    if (error.size() != code.n()) throw std::invalid_argument("error length does not match the code");
    Syndrome s;
    s.bits.reserve(code.stabilizers.size());
    for (const auto& gen : code.stabilizers) {
        s.bits.push_back(commutes(gen, error) ? +1 : -1);
    }
    return s;
}

namespace {

BinaryMatrix symplectic_rows(std::span<const PauliOperator> ops, std::size_t n) {
    std::vector<BinaryVector> rows;
    rows.reserve(ops.size());
    for (const auto& op : ops) rows.push_back(op.symplectic_row());
    if (rows.empty()) return BinaryMatrix(0, 2 * n);
    return BinaryMatrix::from_rows(std::move(rows));
}

}  // namespace

namespace {

// Lexicographic successor of a w-combination of {0..n-1}; false when exhausted.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t w = c.size();
    for (std::size_t i = w; i-- > 0;) {
        if (c[i] != i + n - w) {
            ++c[i];
            for (std::size_t j = i + 1; j < w; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

std::size_t distance(const GraphCode& code) {
    const std::size_t n = code.n();
    if (n > 14) {
        throw std::domain_error("distance is brute force and limited to n <= 14 qubits");
    }
    const BinaryMatrix stab_rows = symplectic_rows(code.stabilizers, n);

    // Enumerate supports by weight, then letters on the support; the first
    // undetected non-stabilizer operator found is minimal by construction.
    for (std::size_t w = 1; w <= n; ++w) {
        std::vector<std::size_t> support(w);
        for (std::size_t i = 0; i < w; ++i) support[i] = i;
        do {
            std::size_t letter_count = 1;
            for (std::size_t i = 0; i < w; ++i) letter_count *= 3;
            for (std::size_t mask = 0; mask < letter_count; ++mask) {
                BinaryVector x(n), z(n);
                std::size_t rest = mask;
                for (std::size_t i = 0; i < w; ++i) {
                    const std::size_t letter = rest % 3;  // 0=X, 1=Z, 2=Y
                    rest /= 3;
                    if (letter != 1) x.set(support[i], true);
                    if (letter != 0) z.set(support[i], true);
                }
                const PauliOperator candidate(std::move(x), std::move(z), 0);
                bool in_normalizer = true;
                for (const auto& gen : code.stabilizers) {
                    if (!commutes(gen, candidate)) {
                        in_normalizer = false;
                        break;
                    }
                }
                if (!in_normalizer) continue;
                if (!in_row_span(stab_rows, candidate.symplectic_row())) return w;
            }
        } while (next_combination(support, n));
    }
    throw std::domain_error("no logical operator found; the code has no encoded qubits");
}

bool group_equal(std::span<const PauliOperator> a, std::span<const PauliOperator> b) {
    if (a.empty() && b.empty()) return true;
    const std::size_t n = a.empty() ? b.front().size() : a.front().size();
    const BinaryMatrix rows_a = symplectic_rows(a, n);
    const BinaryMatrix rows_b = symplectic_rows(b, n);

    // Every generator of one side must be an exact signed product of the
    // other side's generators (multiplication order is immaterial for
    // commuting sets).
    auto contains_exactly = [n](std::span<const PauliOperator> gens, const BinaryMatrix& gen_rows,
                                const PauliOperator& target) {
        const auto coeffs = solve(gen_rows.transpose(), target.symplectic_row());
        if (!coeffs) return false;
        PauliOperator product{n};
        for (std::size_t j = 0; j < gens.size(); ++j) {
            if (coeffs->get(j)) product = multiply(product, gens[j]);
        }
        return product == target;
    };
    for (const auto& op : b) {
        if (!contains_exactly(a, rows_a, op)) return false;
    }
    for (const auto& op : a) {
        if (!contains_exactly(b, rows_b, op)) return false;
    }
    return true;
}

nlohmann::json code_to_json(const GraphCode& code) {
    auto strings = [](const std::vector<PauliOperator>& ops) {
        std::vector<std::string> out;
        out.reserve(ops.size());
        for (const auto& op : ops) out.push_back(op.to_string());
        return out;
    };
    std::vector<std::string> b_rows;
    for (std::size_t i = 0; i < code.ext.b().rows(); ++i) {
        b_rows.push_back(code.ext.b().row(i).to_string());
    }
    return nlohmann::json{{"n", code.n()},
                          {"k", code.k()},
                          {"graph", to_graph6(code.ext.inner())},
                          {"B", b_rows},
                          {"stabilizers", strings(code.stabilizers)},
                          {"logical_z", strings(code.logical_z)},
                          {"logical_x", strings(code.logical_x)}};
}

GraphCode code_from_json(const nlohmann::json& j) {
    const SimpleGraph g = from_graph6(j.at("graph").get<std::string>());
    const BinaryMatrix b = BinaryMatrix::from_strings(j.at("B").get<std::vector<std::string>>());
    auto parse_ops = [](const nlohmann::json& arr) {
        std::vector<PauliOperator> out;
        for (const auto& s : arr) out.push_back(PauliOperator::from_string(s.get<std::string>()));
        return out;
    };
    GraphCode code{ExtendedGraph(b, g), parse_ops(j.at("logical_z")), parse_ops(j.at("logical_x")),
                   parse_ops(j.at("stabilizers"))};
    if (code.n() != j.at("n").get<std::size_t>() || code.k() != j.at("k").get<std::size_t>()) {
        throw std::invalid_argument("code bundle n/k fields disagree with the graph and B");
    }
    return code;
}

}  // namespace graphcode
