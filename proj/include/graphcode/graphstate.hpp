#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "graphcode/graph.hpp"
#include "graphcode/pauli.hpp"

namespace graphcode {

// Single-qubit Clifford factors appearing in the local-complementation
// operator: sqrt(-iX) = exp(-i pi/4 X) on the complemented vertex and
// sqrt(iZ) = exp(+i pi/4 Z) on each of its neighbors.
enum class LocalGate { SqrtMinusIX, SqrtPlusIZ };

std::string gate_name(LocalGate gate);  // "sqrt(-iX)" / "sqrt(iZ)"

struct GateFactor {
    std::size_t qubit;
    LocalGate gate;
    bool operator==(const GateFactor&) const = default;
};

// A product of single-qubit factors, listed left to right; the rightmost
// factor acts first on a state.
class LocalCliffordOp {
public:
    LocalCliffordOp() = default;
    explicit LocalCliffordOp(std::vector<GateFactor> factors) : factors_(std::move(factors)) {}

    const std::vector<GateFactor>& factors() const { return factors_; }
    bool empty() const { return factors_.empty(); }
    std::size_t size() const { return factors_.size(); }

    bool operator==(const LocalCliffordOp&) const = default;

private:
    std::vector<GateFactor> factors_;
};

// A graph plus its stabilizer generators K_j = X_j prod_{b in N_j} Z_b.
class GraphState {
public:
    explicit GraphState(SimpleGraph g);

    const SimpleGraph& graph() const { return graph_; }
    const std::vector<PauliOperator>& generators() const { return generators_; }

private:
    SimpleGraph graph_;
    std::vector<PauliOperator> generators_;
};

// U_v(G) = sqrt(-iX) on v followed by sqrt(iZ) on each neighbor of v in
// ascending qubit order.
LocalCliffordOp lc_operator(const SimpleGraph& g, std::size_t v);

// Image of X^x Z^z on one qubit under conjugation by a gate, as
// i^phase X^x' Z^z'. Frozen from the 2x2 matrix algebra; unit tests rederive
// it densely.
struct PauliImage {
    bool x;
    bool z;
    unsigned phase;
};
PauliImage conjugate_single(LocalGate gate, bool x, bool z);

// U p U^dagger computed symbolically from the single-qubit table.
PauliOperator conjugate_pauli(PauliOperator p, const LocalCliffordOp& op);

// {U K_j U^dagger} for all generators; generates the stabilizer group of the
// locally complemented graph state when op = lc_operator(g, v).
std::vector<PauliOperator> conjugate_generators(const GraphState& state, const LocalCliffordOp& op);

struct OrbitResult {
    std::vector<SimpleGraph> graphs;  // BFS discovery order, input first
    bool truncated = false;
};

// Closure of g under local complementation at every vertex, deduplicated by
// exact labeled adjacency, stopped once max_size graphs have been collected.
OrbitResult lc_orbit(const SimpleGraph& g, std::size_t max_size);

}  // namespace graphcode
