#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphcode/f2linalg.hpp"

namespace graphcode {

// Undirected simple graph on n labeled vertices: symmetric adjacency matrix
// with zero diagonal, vertices indexed from 0.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(std::size_t n) : adj_(n, n) {}

    // Validates symmetry and zero diagonal.
    static SimpleGraph from_adjacency(BinaryMatrix adj);
    // Rejects self-loops and duplicate edges.
    static SimpleGraph from_edges(std::size_t n,
                                  const std::vector<std::pair<std::size_t, std::size_t>>& edges);

    std::size_t vertex_count() const { return adj_.rows(); }
    bool edge(std::size_t u, std::size_t v) const { return adj_.get(u, v); }
    const BinaryMatrix& adjacency() const { return adj_; }

    std::vector<std::size_t> neighborhood(std::size_t v) const;
    std::size_t degree(std::size_t v) const;
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    bool operator==(const SimpleGraph& o) const = default;

private:
    void add_edge_unchecked(std::size_t u, std::size_t v);

    BinaryMatrix adj_;
};

// tau_v(G) = Gamma + Gamma_v Gamma_v^T + Lambda over GF(2): complements the
// subgraph induced on the neighborhood of v, leaves everything else alone.
SimpleGraph local_complement(const SimpleGraph& g, std::size_t v);

enum class GraphFormat { EdgeList, Adjacency, Graph6 };

// Edge list: first line n, then one edge "u v" per line. Labels may be
// 1-based (the default) or 0-based; a 0 label switches the whole file to
// 0-based. Adjacency: the f2linalg matrix format. Graph6: standard 6-bit
// encoding.
SimpleGraph parse_graph(std::string_view text, GraphFormat format);
std::string write_graph(const SimpleGraph& g, GraphFormat format);

SimpleGraph from_graph6(std::string_view text);
std::string to_graph6(const SimpleGraph& g);

// The (n+k)-vertex graph of a graph code: k input vertices attached to the
// n-vertex inner graph through B, with B Gamma(G) = 0 and rank(B) = k.
class ExtendedGraph {
public:
    ExtendedGraph(BinaryMatrix b, SimpleGraph inner);

    std::size_t input_count() const { return b_.rows(); }    // k
    std::size_t output_count() const { return b_.cols(); }   // n
    const BinaryMatrix& b() const { return b_; }
    const SimpleGraph& inner() const { return inner_; }

    // Block adjacency ((0, B), (B^T, Gamma)) materialized on demand.
    BinaryMatrix full_adjacency() const;

private:
    BinaryMatrix b_;
    SimpleGraph inner_;
};

}  // namespace graphcode
