#include "graphcode/f2linalg.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "graphcode/errors.hpp"

namespace graphcode {

BinaryVector BinaryVector::from_string(std::string_view bits) {
    BinaryVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.set(i, true);
        } else if (bits[i] != '0') {
            throw ParseError("expected '0' or '1' in bit string", 1, i + 1);
        }
    }
    return v;
}

void BinaryVector::set(std::size_t i, bool v) {
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (v) {
        words_[i / 64] |= mask;
    } else {
        words_[i / 64] &= ~mask;
    }
}

BinaryVector& BinaryVector::operator^=(const BinaryVector& o) {
    if (o.n_ != n_) throw std::invalid_argument("BinaryVector size mismatch in xor");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    return *this;
}

bool BinaryVector::dot(const BinaryVector& o) const {
    if (o.n_ != n_) throw std::invalid_argument("BinaryVector size mismatch in dot");
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & o.words_[w];
    return std::popcount(acc) & 1u;
}

std::size_t BinaryVector::popcount() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool BinaryVector::any() const {
    for (auto w : words_) {
        if (w) return true;
    }
    return false;
}

BinaryVector BinaryVector::concat(const BinaryVector& o) const {
    BinaryVector out(n_ + o.n_);
    for (std::size_t i = 0; i < n_; ++i) out.set(i, get(i));
    for (std::size_t i = 0; i < o.n_; ++i) out.set(n_ + i, o.get(i));
    return out;
}

std::string BinaryVector::to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i) {
        if (get(i)) s[i] = '1';
    }
    return s;
}

BinaryMatrix BinaryMatrix::identity(std::size_t n) {
    BinaryMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BinaryMatrix BinaryMatrix::from_strings(const std::vector<std::string>& rows) {
    std::vector<BinaryVector> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(BinaryVector::from_string(r));
    return from_rows(std::move(out));
}

BinaryMatrix BinaryMatrix::from_rows(std::vector<BinaryVector> rows) {
    BinaryMatrix m;
    m.rows_ = rows.size();
    m.cols_ = rows.empty() ? 0 : rows.front().size();
    for (const auto& r : rows) {
        if (r.size() != m.cols_) throw std::invalid_argument("ragged rows in BinaryMatrix");
    }
    m.data_ = std::move(rows);
    return m;
}

BinaryMatrix BinaryMatrix::transpose() const {
    BinaryMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (get(r, c)) t.set(c, r, true);
        }
    }
    return t;
}

bool BinaryMatrix::is_zero() const {
    for (const auto& r : data_) {
        if (r.any()) return false;
    }
    return true;
}

std::string BinaryMatrix::to_string() const {
    std::string out;
    for (std::size_t r = 0; r < rows_; ++r) {
        out += data_[r].to_string();
        out += '\n';
    }
    return out;
}

RrefResult rref(BinaryMatrix m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows() && !m.get(pivot, c)) ++pivot;
        if (pivot == m.rows()) continue;
        m.swap_rows(r, pivot);
        for (std::size_t j = 0; j < m.rows(); ++j) {
            if (j != r && m.get(j, c)) m.xor_row(j, r);
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<BinaryVector> kept;
    kept.reserve(r);
    for (std::size_t i = 0; i < r; ++i) kept.push_back(m.row(i));
    return {BinaryMatrix::from_rows(std::move(kept)), std::move(pivots)};
}

std::size_t rank(BinaryMatrix m) { return rref(std::move(m)).pivots.size(); }

BinaryMatrix nullspace(const BinaryMatrix& m) {
    const auto red = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : red.pivots) is_pivot[p] = true;

    std::vector<BinaryVector> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        BinaryVector v(n);
        v.set(f, true);
        for (std::size_t t = 0; t < red.pivots.size(); ++t) {
            if (red.reduced.get(t, f)) v.set(red.pivots[t], true);
        }
        basis.push_back(std::move(v));
    }
    // Canonicalize: the kernel has a unique reduced-echelon basis.
    auto canonical = rref(BinaryMatrix::from_rows(std::move(basis)));
    BinaryMatrix out = std::move(canonical.reduced);
    if (out.rows() == 0) out = BinaryMatrix(0, n);
    return out;
}

BinaryMatrix mat_mul(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul dimension mismatch");
    BinaryMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.get(r, k)) {
                for (std::size_t c = 0; c < b.cols(); ++c) {
                    if (b.get(k, c)) out.set(r, c, !out.get(r, c));
                }
            }
        }
    }
    return out;
}

BinaryVector mat_vec(const BinaryMatrix& a, const BinaryVector& v) {
    if (a.cols() != v.size()) throw std::invalid_argument("mat_vec dimension mismatch");
    BinaryVector out(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) out.set(r, a.row(r).dot(v));
    return out;
}

bool in_row_span(const BinaryMatrix& m, const BinaryVector& v) {
    if (v.size() != m.cols()) throw std::invalid_argument("in_row_span dimension mismatch");
    std::vector<BinaryVector> rows;
    rows.reserve(m.rows() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    const std::size_t base = rank(BinaryMatrix::from_rows(rows));
    rows.push_back(v);
    return rank(BinaryMatrix::from_rows(std::move(rows))) == base;
}

std::optional<BinaryVector> solve(const BinaryMatrix& a, const BinaryVector& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("solve dimension mismatch");
    // Eliminate on the augmented matrix [a | b].
    std::vector<BinaryVector> rows;
    rows.reserve(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        BinaryVector tail(1);
        tail.set(0, b.get(r));
        rows.push_back(a.row(r).concat(tail));
    }
    auto red = rref(BinaryMatrix::from_rows(std::move(rows)));
    BinaryVector x(a.cols());
    for (std::size_t t = 0; t < red.pivots.size(); ++t) {
        if (red.pivots[t] == a.cols()) return std::nullopt;  // pivot in the b column
        x.set(red.pivots[t], red.reduced.get(t, a.cols()));
    }
    return x;
}

namespace {

struct TextCursor {
    std::string_view text;
    std::size_t pos = 0;
    std::size_t line = 1;
    std::size_t col = 1;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    void advance() {
        if (text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }
    void skip_space() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }
};

std::size_t read_count(TextCursor& cur, const char* what) {
    cur.skip_space();
    if (cur.done() || !std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        throw ParseError(std::string("expected ") + what, cur.line, cur.col);
    }
    std::size_t value = 0;
    while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        value = value * 10 + static_cast<std::size_t>(cur.peek() - '0');
        if (value > 1'000'000) throw ParseError(std::string(what) + " out of range", cur.line, cur.col);
        cur.advance();
    }
    return value;
}

}  // namespace

BinaryMatrix parse_matrix(std::string_view text) {
    TextCursor cur{text};
    const std::size_t rows = read_count(cur, "row count");
    const std::size_t cols = read_count(cur, "column count");
    BinaryMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            cur.skip_space();
            if (cur.done()) throw ParseError("unexpected end of matrix data", cur.line, cur.col);
            const char ch = cur.peek();
            if (ch != '0' && ch != '1') {
                throw ParseError("expected '0' or '1'", cur.line, cur.col);
            }
            m.set(r, c, ch == '1');
            cur.advance();
        }
    }
    cur.skip_space();
    if (!cur.done()) throw ParseError("trailing characters after matrix data", cur.line, cur.col);
    return m;
}

std::string format_matrix(const BinaryMatrix& m) {
    std::ostringstream out;
    out << m.rows() << ' ' << m.cols() << '\n';
    out << m.to_string();
    return out.str();
}

}  // namespace graphcode
