#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "graphcode/graph.hpp"
#include "graphcode/graphstate.hpp"
#include "graphcode/pauli.hpp"

namespace graphcode {

// An [[n, k]] graph code: the extended graph (B plus inner graph), the k
// logical Z operators read off B, the n-k stabilizer generators produced by
// the pivot-product extraction, and k logical X operators solved from the
// commutation constraints.
struct GraphCode {
    ExtendedGraph ext;
    std::vector<PauliOperator> logical_z;
    std::vector<PauliOperator> logical_x;
    std::vector<PauliOperator> stabilizers;

    std::size_t n() const { return ext.output_count(); }
    std::size_t k() const { return ext.input_count(); }
};

// First k rows of the echelon kernel basis of Gamma(G); throws when the
// kernel dimension is smaller than k, naming the maximum feasible k.
BinaryMatrix derive_b(const SimpleGraph& g, std::size_t k);

// True iff b has independent rows and b Gamma(G) = 0.
bool validate_b(const BinaryMatrix& b, const SimpleGraph& g);

// Row i of B becomes the Z-only operator Zbar_i.
std::vector<PauliOperator> logical_z_ops(const BinaryMatrix& b);

// The stabilizer extraction of the paper: starting from the graph-state
// generators, for each Zbar split the current list into the commuting set M
// and the anticommuting set A, pick the lowest-index element of A as pivot
// and replace A by {pivot * a}. Throws "degenerate logical operator" when a
// Zbar anticommutes with nothing (only possible for dependent inputs).
std::vector<PauliOperator> extract_stabilizers(const SimpleGraph& g,
                                               std::span<const PauliOperator> logical_z);

// Logical X operators as products of graph-state generators, solved over
// GF(2) so that Xbar_i anticommutes with Zbar_i and commutes with every
// other Zbar. Expects code.logical_z and code.stabilizers populated.
std::vector<PauliOperator> logical_x_ops(const GraphCode& code);

// Full derivation pipelines.
GraphCode make_graph_code(SimpleGraph g, BinaryMatrix b);
GraphCode derive_graph_code(const SimpleGraph& g, std::size_t k);

// +-1 outcomes of the stabilizer generators against an error; entry i is -1
// iff the error anticommutes with stabilizers[i].
struct Syndrome {
    std::vector<int> bits;
    std::string to_string() const;  // "(-1, +1, -1, +1)"
    bool operator==(const Syndrome&) const = default;
};
Syndrome syndrome(const GraphCode& code, const PauliOperator& error);

// Minimum weight of a Pauli commuting with every stabilizer whose (x|z) row
// is outside the stabilizer span. Weight-ordered brute force, n <= 14.
std::size_t distance(const GraphCode& code);

// Sign-exact equality of the groups generated by two pairwise-commuting
// Hermitian generator sets.
bool group_equal(std::span<const PauliOperator> a, std::span<const PauliOperator> b);

// JSON code bundle {n, k, graph, B, stabilizers, logical_z, logical_x}.
nlohmann::json code_to_json(const GraphCode& code);
GraphCode code_from_json(const nlohmann::json& j);

}  // namespace graphcode
