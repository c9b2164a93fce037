#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace graphcode {

// Fixed-length vector over GF(2), bit-packed into 64-bit words.
// Trailing bits of the last word are kept zero so equality and hashing can
// work on the raw words.
class BinaryVector {
public:
    BinaryVector() = default;
    explicit BinaryVector(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    static BinaryVector from_string(std::string_view bits);

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
    bool operator[](std::size_t i) const { return get(i); }
    void set(std::size_t i, bool v);
    void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

    BinaryVector& operator^=(const BinaryVector& o);
    friend BinaryVector operator^(BinaryVector a, const BinaryVector& b) { return a ^= b; }

    // GF(2) inner product.
    bool dot(const BinaryVector& o) const;
    std::size_t popcount() const;
    bool any() const;

    BinaryVector concat(const BinaryVector& o) const;

    bool operator==(const BinaryVector& o) const = default;

    std::string to_string() const;
    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

// Dense row-major matrix over GF(2); rows are BinaryVectors.
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    BinaryMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows, BinaryVector(cols)) {}

    static BinaryMatrix identity(std::size_t n);
    static BinaryMatrix from_strings(const std::vector<std::string>& rows);
    static BinaryMatrix from_rows(std::vector<BinaryVector> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { data_[r].set(c, v); }
    const BinaryVector& row(std::size_t r) const { return data_[r]; }
    void xor_row(std::size_t target, std::size_t source) { data_[target] ^= data_[source]; }
    void swap_rows(std::size_t a, std::size_t b) { std::swap(data_[a], data_[b]); }

    BinaryMatrix transpose() const;
    bool is_zero() const;

    bool operator==(const BinaryMatrix& o) const = default;

    // Rows of 0/1 characters, newline separated, no size header.
    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BinaryVector> data_;
};

std::size_t rank(BinaryMatrix m);

// Reduced row echelon form. Pivots are chosen lowest column index first, so
// the result is the canonical basis of the row space (zero rows dropped).
struct RrefResult {
    BinaryMatrix reduced;             // zero rows removed
    std::vector<std::size_t> pivots;  // pivot column per surviving row
};
RrefResult rref(BinaryMatrix m);

// Basis of {v : m v = 0}, returned in reduced echelon form (canonical for
// the kernel as a subspace). Row count equals cols(m) - rank(m).
BinaryMatrix nullspace(const BinaryMatrix& m);

BinaryMatrix mat_mul(const BinaryMatrix& a, const BinaryMatrix& b);
BinaryVector mat_vec(const BinaryMatrix& a, const BinaryVector& v);

bool in_row_span(const BinaryMatrix& m, const BinaryVector& v);

// Deterministic solution of a x = b (free variables set to zero), or nullopt
// when the system is inconsistent.
std::optional<BinaryVector> solve(const BinaryMatrix& a, const BinaryVector& b);

// Plain-text matrix format: first line "rows cols", then rows*cols of 0/1
// characters with arbitrary interleaved whitespace.
BinaryMatrix parse_matrix(std::string_view text);
std::string format_matrix(const BinaryMatrix& m);

}  // namespace graphcode
