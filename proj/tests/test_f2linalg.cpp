#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "graphcode/errors.hpp"
#include "graphcode/f2linalg.hpp"
#include "test_util.hpp"

using namespace graphcode;

namespace {

// Independent oracle: every kernel vector by exhaustive enumeration.
std::vector<BinaryVector> enumerate_kernel(const BinaryMatrix& m) {
    std::vector<BinaryVector> out;
    const std::size_t n = m.cols();
    for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
        BinaryVector v(n);
        for (std::size_t i = 0; i < n; ++i) v.set(i, (bits >> i) & 1u);
        if (!mat_vec(m, v).any()) out.push_back(std::move(v));
    }
    return out;
}

bool kernel_matches_enumeration(const BinaryMatrix& m) {
    const BinaryMatrix basis = nullspace(m);
    const auto all = enumerate_kernel(m);
    // |kernel| must be 2^rows(basis), and every enumerated vector must lie in
    // the span (the reverse inclusion follows from m v = 0 per basis row).
    if (all.size() != (std::size_t{1} << basis.rows())) return false;
    for (const auto& v : all) {
        if (v.any() && !in_row_span(basis, v)) return false;
    }
    for (std::size_t r = 0; r < basis.rows(); ++r) {
        if (mat_vec(m, basis.row(r)).any()) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("bit vector basics") {
    BinaryVector v = BinaryVector::from_string("01101");
    CHECK(v.size() == 5);
    CHECK(v.to_string() == "01101");
    CHECK(v.popcount() == 3);
    CHECK(v.dot(BinaryVector::from_string("01000")));
    CHECK(!v.dot(BinaryVector::from_string("01100")));
    CHECK((v ^ v) == BinaryVector(5));
    CHECK(v.concat(BinaryVector::from_string("11")).to_string() == "0110111");

    // Words beyond one limb.
    BinaryVector wide(70);
    wide.set(69, true);
    wide.set(1, true);
    CHECK(wide.popcount() == 2);
    CHECK(wide.to_string().back() == '1');
}

TEST_CASE("rank examples") {
    CHECK(rank(BinaryMatrix::identity(2)) == 2);
    CHECK(rank(BinaryMatrix(3, 3)) == 0);
    // Gamma(T4), eliminated by hand: rows {0111, 1000} survive.
    CHECK(rank(BinaryMatrix::from_strings({"0111", "1000", "1000", "1000"})) == 2);
}

TEST_CASE("nullspace examples") {
    // Gamma(R5) has even degrees, so the all-ones vector is in the kernel;
    // enumeration confirms nothing else is.
    const BinaryMatrix gamma_r5 = testutil::ring5().adjacency();
    const BinaryMatrix kernel = nullspace(gamma_r5);
    REQUIRE(kernel.rows() == 1);
    CHECK(kernel.row(0).to_string() == "11111");
    CHECK(kernel_matches_enumeration(gamma_r5));
    CHECK(rank(gamma_r5) == 4);

    // Kernel of Gamma(T4)^T: spans {0110, 0011, 0101} and so contains both
    // B rows used by the paper's [[4,2,2]] walkthrough.
    const BinaryMatrix gamma_t4 = testutil::star4().adjacency();
    const BinaryMatrix kernel_t4 = nullspace(gamma_t4.transpose());
    REQUIRE(kernel_t4.rows() == 2);
    CHECK(in_row_span(kernel_t4, BinaryVector::from_string("0110")));
    CHECK(in_row_span(kernel_t4, BinaryVector::from_string("0011")));
    CHECK(in_row_span(kernel_t4, BinaryVector::from_string("0101")));
    CHECK(!in_row_span(kernel_t4, BinaryVector::from_string("1000")));

    CHECK(nullspace(BinaryMatrix::identity(3)).rows() == 0);
}

TEST_CASE("nullspace is deterministic echelon form") {
    const BinaryMatrix kernel = nullspace(testutil::star4().adjacency());
    REQUIRE(kernel.rows() == 2);
    // Canonical reduced basis of span{0110, 0011}.
    CHECK(kernel.row(0).to_string() == "0101");
    CHECK(kernel.row(1).to_string() == "0011");
    CHECK(nullspace(testutil::star4().adjacency()) == kernel);
}

TEST_CASE("mat_mul examples") {
    std::mt19937_64 rng(7);
    const BinaryMatrix m = testutil::random_matrix(rng, 4, 6);
    CHECK(mat_mul(BinaryMatrix::identity(4), m) == m);

    const BinaryMatrix col = BinaryMatrix::from_strings({"1", "1"});
    const BinaryMatrix row = BinaryMatrix::from_strings({"11"});
    CHECK(mat_mul(col, row) == BinaryMatrix::from_strings({"11", "11"}));

    const BinaryMatrix b = BinaryMatrix::from_strings({"11111"});
    CHECK(mat_mul(b, testutil::ring5().adjacency()).is_zero());

    CHECK_THROWS_AS(mat_mul(BinaryMatrix(2, 3), BinaryMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("nullspace properties on random matrices") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 1 + rng() % 12;
        const std::size_t cols = 1 + rng() % 12;
        const BinaryMatrix m = testutil::random_matrix(rng, rows, cols);
        const BinaryMatrix basis = nullspace(m);
        CHECK(rank(m) + basis.rows() == cols);
        for (std::size_t r = 0; r < basis.rows(); ++r) {
            CHECK(!mat_vec(m, basis.row(r)).any());
        }
        if (basis.rows() > 0) {
            std::vector<BinaryVector> basis_rows;
            for (std::size_t r = 0; r < basis.rows(); ++r) basis_rows.push_back(basis.row(r));
            CHECK(rank(BinaryMatrix::from_rows(basis_rows)) == basis.rows());
        }
        if (cols <= 12) CHECK(kernel_matches_enumeration(m));
    }
}

TEST_CASE("solve finds consistent solutions and rejects inconsistent ones") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t rows = 1 + rng() % 8;
        const std::size_t cols = 1 + rng() % 8;
        const BinaryMatrix a = testutil::random_matrix(rng, rows, cols);
        BinaryVector x(cols);
        for (std::size_t i = 0; i < cols; ++i) x.set(i, testutil::coin(rng));
        const BinaryVector b = mat_vec(a, x);
        const auto solved = solve(a, b);
        REQUIRE(solved.has_value());
        CHECK(mat_vec(a, *solved) == b);
    }
    const BinaryMatrix a = BinaryMatrix::from_strings({"10", "10"});
    CHECK(!solve(a, BinaryVector::from_string("10")).has_value());
    CHECK(solve(a, BinaryVector::from_string("11")).has_value());
}

TEST_CASE("matrix text format round trip") {
    const BinaryMatrix m = BinaryMatrix::from_strings({"0111", "1000", "1000", "1000"});
    CHECK(parse_matrix(format_matrix(m)) == m);
    CHECK(parse_matrix("2 3\n0 1 1\n  101") == BinaryMatrix::from_strings({"011", "101"}));

    CHECK_THROWS_AS(parse_matrix("2 2\n01"), ParseError);
    CHECK_THROWS_AS(parse_matrix("2 2\n0101x"), ParseError);
    CHECK_THROWS_AS(parse_matrix("x"), ParseError);
    try {
        parse_matrix("2 2\n02\n01");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 2);
    }
}
