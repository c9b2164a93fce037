#include "graphcode/graph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "graphcode/errors.hpp"

namespace graphcode {

SimpleGraph SimpleGraph::from_adjacency(BinaryMatrix adj) {
    if (adj.rows() != adj.cols()) throw std::invalid_argument("adjacency matrix must be square");
    for (std::size_t r = 0; r < adj.rows(); ++r) {
        if (adj.get(r, r)) throw std::invalid_argument("adjacency matrix has nonzero diagonal");
        for (std::size_t c = r + 1; c < adj.cols(); ++c) {
            if (adj.get(r, c) != adj.get(c, r)) {
                throw std::invalid_argument("adjacency matrix is not symmetric");
            }
        }
    }
    SimpleGraph g;
    g.adj_ = std::move(adj);
    return g;
}

SimpleGraph SimpleGraph::from_edges(
    std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    SimpleGraph g(n);
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop rejected");
        if (g.edge(u, v)) throw std::invalid_argument("duplicate edge rejected");
        g.add_edge_unchecked(u, v);
    }
    return g;
}

void SimpleGraph::add_edge_unchecked(std::size_t u, std::size_t v) {
    adj_.set(u, v, true);
    adj_.set(v, u, true);
}

std::vector<std::size_t> SimpleGraph::neighborhood(std::size_t v) const {
    if (v >= vertex_count()) throw std::out_of_range("vertex index out of range");
    std::vector<std::size_t> out;
    for (std::size_t u = 0; u < vertex_count(); ++u) {
        if (adj_.get(v, u)) out.push_back(u);
    }
    return out;
}

std::size_t SimpleGraph::degree(std::size_t v) const {
    if (v >= vertex_count()) throw std::out_of_range("vertex index out of range");
    return adj_.row(v).popcount();
}

std::vector<std::pair<std::size_t, std::size_t>> SimpleGraph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < vertex_count(); ++u) {
        for (std::size_t v = u + 1; v < vertex_count(); ++v) {
            if (adj_.get(u, v)) out.emplace_back(u, v);
        }
    }
    return out;
}

SimpleGraph local_complement(const SimpleGraph& g, std::size_t v) {
    const std::size_t n = g.vertex_count();
    if (v >= n) throw std::out_of_range("vertex index out of range");
    BinaryMatrix adj = g.adjacency();
    const BinaryVector column = g.adjacency().row(v);  // symmetric, row == column
    for (std::size_t i = 0; i < n; ++i) {
        if (!column.get(i)) continue;
        for (std::size_t j = 0; j < n; ++j) {
            // Outer-product term Gamma_v Gamma_v^T with Lambda zeroing the diagonal.
            if (i != j && column.get(j)) adj.set(i, j, !adj.get(i, j));
        }
    }
    return SimpleGraph::from_adjacency(std::move(adj));
}

namespace {

struct Token {
    std::size_t value;
    std::size_t line;
    std::size_t col;
};

std::vector<Token> tokenize_counts(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t line = 1, col = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++col;
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            Token t{0, line, col};
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                t.value = t.value * 10 + static_cast<std::size_t>(text[i] - '0');
                if (t.value > 1'000'000) throw ParseError("number out of range", line, col);
                ++i;
                ++col;
            }
            tokens.push_back(t);
        } else {
            throw ParseError("unexpected character '" + std::string(1, c) + "'", line, col);
        }
    }
    return tokens;
}

SimpleGraph parse_edge_list(std::string_view text) {
    const auto tokens = tokenize_counts(text);
    if (tokens.empty()) throw ParseError("expected vertex count", 1, 1);
    if (tokens.size() % 2 == 0) {
        const auto& t = tokens.back();
        throw ParseError("edge is missing its second endpoint", t.line, t.col);
    }
    const std::size_t n = tokens[0].value;

    // Labels are 1-based unless a 0 appears anywhere in the file.
    bool zero_based = false;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (tokens[i].value == 0) zero_based = true;
    }

    BinaryMatrix adj(n, n);
    for (std::size_t i = 1; i + 1 < tokens.size(); i += 2) {
        const Token& tu = tokens[i];
        const Token& tv = tokens[i + 1];
        std::size_t u = tu.value;
        std::size_t v = tv.value;
        if (!zero_based) {
            --u;
            --v;
        }
        if (u >= n) throw ParseError("vertex label out of range", tu.line, tu.col);
        if (v >= n) throw ParseError("vertex label out of range", tv.line, tv.col);
        if (u == v) throw ParseError("self-loop rejected", tu.line, tu.col);
        if (adj.get(u, v)) throw ParseError("duplicate edge rejected", tu.line, tu.col);
        adj.set(u, v, true);
        adj.set(v, u, true);
    }
    return SimpleGraph::from_adjacency(std::move(adj));
}

// Locate the (r, c) adjacency cell in the matrix text for error reporting.
std::pair<std::size_t, std::size_t> locate_cell(std::string_view text, std::size_t cell_index) {
    std::size_t line = 1, col = 1;
    std::size_t seen = 0;
    bool header_done = false;
    std::size_t header_tokens = 0;
    bool in_number = false;
    for (char c : text) {
        if (!header_done) {
            const bool digit = std::isdigit(static_cast<unsigned char>(c)) != 0;
            if (digit && !in_number) {
                in_number = true;
                ++header_tokens;
            } else if (!digit) {
                in_number = false;
            }
            if (header_tokens == 2 && !digit) header_done = true;
        } else if (c == '0' || c == '1') {
            if (seen == cell_index) return {line, col};
            ++seen;
        }
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

SimpleGraph parse_adjacency(std::string_view text) {
    const BinaryMatrix m = parse_matrix(text);
    if (m.rows() != m.cols()) {
        throw ParseError("adjacency matrix must be square", 1, 1);
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (m.get(r, r)) {
            const auto [line, col] = locate_cell(text, r * m.cols() + r);
            throw ParseError("self-loop rejected (nonzero diagonal)", line, col);
        }
        for (std::size_t c = r + 1; c < m.cols(); ++c) {
            if (m.get(r, c) != m.get(c, r)) {
                const auto [line, col] = locate_cell(text, c * m.cols() + r);
                throw ParseError("asymmetric adjacency matrix", line, col);
            }
        }
    }
    return SimpleGraph::from_adjacency(m);
}

constexpr std::size_t kGraph6MaxShort = 62;

}  // namespace

SimpleGraph from_graph6(std::string_view text) {
    // Strip the optional header and trailing whitespace.
    constexpr std::string_view kHeader = ">>graph6<<";
    if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    if (text.empty()) throw ParseError("empty graph6 string", 1, 1);

    auto byte_at = [&](std::size_t i) -> std::size_t {
        const unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw ParseError("invalid graph6 character", 1, i + 1);
        return c - 63;
    };

    std::size_t pos = 0;
    std::size_t n = 0;
    if (text[0] == '~') {
        if (text.size() >= 2 && text[1] == '~') {
            throw ParseError("graph6 graphs beyond 258047 vertices unsupported", 1, 1);
        }
        if (text.size() < 4) throw ParseError("truncated graph6 size field", 1, text.size());
        n = (byte_at(1) << 12) | (byte_at(2) << 6) | byte_at(3);
        pos = 4;
    } else {
        n = byte_at(0);
        pos = 1;
    }

    const std::size_t bit_count = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t expected = (bit_count + 5) / 6;
    if (text.size() - pos != expected) {
        throw ParseError("graph6 body has wrong length", 1, text.size());
    }

    BinaryMatrix adj(n, n);
    std::size_t bit = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++bit) {
            const std::size_t value = byte_at(pos + bit / 6);
            if ((value >> (5 - bit % 6)) & 1u) {
                adj.set(i, j, true);
                adj.set(j, i, true);
            }
        }
    }
    return SimpleGraph::from_adjacency(std::move(adj));
}

std::string to_graph6(const SimpleGraph& g) {
    const std::size_t n = g.vertex_count();
    std::string out;
    if (n <= kGraph6MaxShort) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw std::invalid_argument("graph too large for graph6 output");
    }

    std::size_t bit = 0;
    unsigned char group = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            group = static_cast<unsigned char>(group << 1) | (g.edge(i, j) ? 1u : 0u);
            if (++bit % 6 == 0) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
            }
        }
    }
    if (bit % 6 != 0) {
        group = static_cast<unsigned char>(group << (6 - bit % 6));
        out.push_back(static_cast<char>(group + 63));
    }
    return out;
}

SimpleGraph parse_graph(std::string_view text, GraphFormat format) {
    switch (format) {
        case GraphFormat::EdgeList: return parse_edge_list(text);
        case GraphFormat::Adjacency: return parse_adjacency(text);
        case GraphFormat::Graph6: return from_graph6(text);
    }
    throw std::invalid_argument("unknown graph format");
}

std::string write_graph(const SimpleGraph& g, GraphFormat format) {
    switch (format) {
        case GraphFormat::EdgeList: {
            std::ostringstream out;
            out << g.vertex_count() << '\n';
            for (const auto& [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
            return out.str();
        }
        case GraphFormat::Adjacency: return format_matrix(g.adjacency());
        case GraphFormat::Graph6: return to_graph6(g);
    }
    throw std::invalid_argument("unknown graph format");
}

ExtendedGraph::ExtendedGraph(BinaryMatrix b, SimpleGraph inner)
    : b_(std::move(b)), inner_(std::move(inner)) {
    if (b_.cols() != inner_.vertex_count()) {
        throw std::invalid_argument("B column count must match the inner graph size");
    }
    if (!mat_mul(b_, inner_.adjacency()).is_zero()) {
        throw std::invalid_argument("B is not orthogonal to the adjacency matrix (B Gamma != 0)");
    }
    if (rank(b_) != b_.rows()) {
        throw std::invalid_argument("B rows are linearly dependent");
    }
}

BinaryMatrix ExtendedGraph::full_adjacency() const {
    const std::size_t k = input_count();
    const std::size_t n = output_count();
    BinaryMatrix full(k + n, k + n);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (b_.get(i, j)) {
                full.set(i, k + j, true);
                full.set(k + j, i, true);
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (inner_.adjacency().get(i, j)) full.set(k + i, k + j, true);
        }
    }
    return full;
}

}  // namespace graphcode
