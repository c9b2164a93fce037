#pragma once

#include <random>
#include <vector>

#include "graphcode/f2linalg.hpp"
#include "graphcode/graph.hpp"
#include "graphcode/pauli.hpp"

namespace testutil {

inline bool coin(std::mt19937_64& rng) { return (rng() >> 32) & 1u; }

inline graphcode::BinaryMatrix random_matrix(std::mt19937_64& rng, std::size_t rows,
                                             std::size_t cols) {
    graphcode::BinaryMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, coin(rng));
    }
    return m;
}

inline graphcode::SimpleGraph random_graph(std::mt19937_64& rng, std::size_t n) {
    graphcode::BinaryMatrix adj(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (coin(rng)) {
                adj.set(i, j, true);
                adj.set(j, i, true);
            }
        }
    }
    return graphcode::SimpleGraph::from_adjacency(std::move(adj));
}

inline bool is_connected(const graphcode::SimpleGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) return true;
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t u : g.neighborhood(v)) {
            if (!seen[u]) {
                seen[u] = true;
                ++count;
                stack.push_back(u);
            }
        }
    }
    return count == n;
}

inline graphcode::SimpleGraph random_connected_graph(std::mt19937_64& rng, std::size_t n) {
    while (true) {
        graphcode::SimpleGraph g = random_graph(rng, n);
        if (is_connected(g)) return g;
    }
}

inline graphcode::PauliOperator random_pauli(std::mt19937_64& rng, std::size_t n) {
    graphcode::BinaryVector x(n), z(n);
    for (std::size_t i = 0; i < n; ++i) {
        x.set(i, coin(rng));
        z.set(i, coin(rng));
    }
    return {std::move(x), std::move(z), static_cast<unsigned>(rng() % 4)};
}

// Random Hermitian Pauli written as a signed letter string.
inline graphcode::PauliOperator random_hermitian_pauli(std::mt19937_64& rng, std::size_t n) {
    static const char kLetters[] = {'I', 'X', 'Y', 'Z'};
    std::string s = coin(rng) ? "-" : "";
    for (std::size_t i = 0; i < n; ++i) s.push_back(kLetters[rng() % 4]);
    return graphcode::PauliOperator::from_string(s);
}

inline graphcode::SimpleGraph ring5() {
    return graphcode::SimpleGraph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
}

inline graphcode::SimpleGraph star4() {
    return graphcode::SimpleGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
}

}  // namespace testutil
