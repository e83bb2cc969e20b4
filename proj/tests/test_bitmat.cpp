#include <doctest.h>

#include "bframe/bitmat.hpp"
#include "bframe/group.hpp"
#include "test_util.hpp"

using namespace bframe;
using bframe_test::random_matrix;
using bframe_test::random_vector;

namespace {

BitVector from_bits(const std::string& bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) v.set(i, bits[i] == '1');
    return v;
}

}  // namespace

TEST_CASE("dot product") {
    CHECK(dot(from_bits("1101"), from_bits("1101")) == 1);
    CHECK(dot(from_bits("1100"), from_bits("1100")) == 0);  // even vectors self-orthogonal
    CHECK(dot(from_bits("101"), from_bits("011")) == 1);
    CHECK(dot(from_bits("011"), from_bits("101")) == 1);
    CHECK_THROWS_AS(dot(from_bits("10"), from_bits("100")), dimension_error);
}

TEST_CASE("matmul identity and permutations") {
    std::mt19937_64 rng(1);
    BitMatrix m = random_matrix(3, 5, rng);
    CHECK(matmul(BitMatrix::identity(3), m) == m);

    FiniteGroup z6 = FiniteGroup::cyclic(6);
    BitMatrix r2 = right_regular(z6, 2);
    CHECK(matmul(r2, r2) == right_regular(z6, 4));

    for (int t = 0; t < 5; ++t) {
        BitMatrix p(8, 8);
        std::vector<std::size_t> perm{0, 1, 2, 3, 4, 5, 6, 7};
        std::shuffle(perm.begin(), perm.end(), rng);
        for (std::size_t i = 0; i < 8; ++i) p.set(i, perm[i], true);
        CHECK(matmul(p, transpose(p)) == BitMatrix::identity(8));
    }
    CHECK_THROWS_AS(matmul(BitMatrix(2, 3), BitMatrix(2, 3)), dimension_error);
}

TEST_CASE("rank") {
    CHECK(rank(BitMatrix::identity(9)) == 9);
    BitMatrix z(4, 7);
    CHECK(rank(z) == 0);

    BitMatrix gram = load_bit_grid(bframe_test::fixture("z3sq_gram.mat"));
    CHECK(rank(gram) == 5);

    // I_9 + R over the orbit {(1,0),(2,0)} of Z_3^2
    FiniteGroup g = FiniteGroup::zpq(3, 2);
    BitMatrix m = BitMatrix::identity(9);
    m = add(m, right_regular(g, g.index_of({1, 0})));
    m = add(m, right_regular(g, g.index_of({2, 0})));
    CHECK(rank(m) == 3);
}

TEST_CASE("symmetry and idempotence") {
    CHECK(is_symmetric(BitMatrix::identity(4)));
    CHECK(is_idempotent(BitMatrix::identity(4)));

    BitMatrix gram = load_bit_grid(bframe_test::fixture("z3sq_gram.mat"));
    CHECK(is_symmetric(gram));
    CHECK(is_idempotent(gram));

    // sum of R_j over {0,1,2,4} in Z_7: idempotent but not symmetric
    FiniteGroup z7 = FiniteGroup::cyclic(7);
    BitMatrix m(7, 7);
    for (uint32_t j : {0, 1, 2, 4}) m = add(m, right_regular(z7, j));
    CHECK(!is_symmetric(m));
    CHECK(is_idempotent(m));

    CHECK_THROWS_AS(is_symmetric(BitMatrix(2, 3)), dimension_error);
}

TEST_CASE("left inverse existence") {
    CHECK(left_inverse_exists(BitMatrix::identity(5)));
    BitMatrix m(4, 3);
    m.set(0, 0, true);
    m.set(1, 1, true);  // column 2 is zero
    CHECK(!left_inverse_exists(m));
}

TEST_CASE("transpose laws") {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 10; ++t) {
        BitMatrix a = random_matrix(6, 9, rng);
        BitMatrix b = random_matrix(9, 4, rng);
        CHECK(transpose(matmul(a, b)) == matmul(transpose(b), transpose(a)));
        CHECK(transpose(transpose(a)) == a);
    }
}

TEST_CASE("rank equals rank of transpose") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        BitMatrix a = random_matrix(12, 20, rng);
        CHECK(rank(a) == rank(transpose(a)));
    }
}

TEST_CASE("adjoint identity for dot") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 20; ++t) {
        BitMatrix m = random_matrix(7, 11, rng);
        BitVector x = random_vector(7, rng);
        BitVector y = random_vector(11, rng);
        CHECK(dot(x, matvec(m, y)) == dot(matvec(transpose(m), x), y));
    }
}

TEST_CASE("row space and kernel are dual") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 10; ++t) {
        BitMatrix m = random_matrix(8, 13, rng);
        auto rows = row_space_basis(m);
        auto kern = kernel_basis(m);
        CHECK(rows.size() + kern.size() == 13);
        for (const auto& r : rows)
            for (const auto& k : kern) CHECK(dot(r, k) == 0);
        for (const auto& k : kern) CHECK(matvec(m, k).is_zero());
    }
}

TEST_CASE("bit grid parsing") {
    BitMatrix m = parse_bit_grid("1 0 1\n010\n");
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK(m.get(0, 2));
    CHECK(!m.get(1, 2));
    CHECK(parse_bit_grid(m.to_string()) == m);

    auto multi = parse_bit_grids("11\n00\n\n1\n");
    CHECK(multi.size() == 2);
    CHECK(multi[1].rows() == 1);

    CHECK_THROWS_AS(parse_bit_grid("102"), parse_error);
    CHECK_THROWS_AS(parse_bit_grid("10\n100"), parse_error);
    CHECK_THROWS_AS(parse_bit_grid(""), parse_error);
}
