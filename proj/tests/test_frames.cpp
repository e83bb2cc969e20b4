#include <doctest.h>

#include <random>

#include "bframe/classify.hpp"
#include "bframe/frames.hpp"
#include "bframe/gramchar.hpp"
#include "test_util.hpp"

using namespace bframe;
using bframe_test::fixture;
using bframe_test::random_unitary;

namespace {

// the cyclic-shift representation of Z_27 on Z_2^9
Representation z27_shift_rep() {
    FiniteGroup z27 = FiniteGroup::cyclic(27);
    BitMatrix s9(9, 9);
    for (uint32_t i = 0; i < 9; ++i) s9.set((i + 1) % 9, i, true);
    std::vector<BitMatrix> mats;
    BitMatrix cur = BitMatrix::identity(9);
    for (uint32_t i = 0; i < 27; ++i) {
        mats.push_back(cur);
        cur = matmul(s9, cur);
    }
    return Representation(z27, std::move(mats));
}

VectorFamily standard_basis_family(std::size_t n) {
    std::vector<BitVector> vecs;
    for (std::size_t i = 0; i < n; ++i) {
        BitVector v(n);
        v.set(i, true);
        vecs.push_back(v);
    }
    return VectorFamily(n, std::move(vecs));
}

}  // namespace

TEST_CASE("analysis and synthesis") {
    VectorFamily basis = standard_basis_family(4);
    CHECK(analysis(basis) == BitMatrix::identity(4));
    CHECK(synthesis(basis) == BitMatrix::identity(4));
    CHECK(is_parseval(basis));

    // triple copy of the canonical basis: synthesis is [I_9 I_9 I_9]
    Representation rep = z27_shift_rep();
    BitVector e1(9);
    e1.set(0, true);
    VectorFamily fam = orbit_frame(rep, e1);
    BitMatrix ts = synthesis(fam);
    REQUIRE(ts.rows() == 9);
    REQUIRE(ts.cols() == 27);
    for (uint32_t j = 0; j < 27; ++j)
        for (uint32_t r = 0; r < 9; ++r) CHECK(ts.get(r, j) == (j % 9 == r));
    CHECK(frame_operator(fam) == BitMatrix::identity(9));
    CHECK(is_parseval(fam));
}

TEST_CASE("shift orbit of the nine-bit seed spans but is not Parseval") {
    Representation rep = z27_shift_rep();
    BitMatrix seed = parse_bit_grid("101111110");
    VectorFamily fam = orbit_frame(rep, seed.row(0));
    CHECK(rank(analysis(fam)) == 9);  // a frame
    CHECK(!is_parseval(fam));
}

TEST_CASE("gabor fixtures") {
    FiniteGroup hw3 = FiniteGroup::load_cayley(fixture("hw3.cayley"));
    BitMatrix t1 = load_bit_grid(fixture("gabor_theta1.mat"));
    BitMatrix t2 = load_bit_grid(fixture("gabor_theta2.mat"));
    VectorFamily f1 = VectorFamily::from_analysis(transpose(t1), hw3);
    VectorFamily f2 = VectorFamily::from_analysis(transpose(t2), hw3);
    CHECK(!is_parseval(f1));
    CHECK(is_parseval(f2));

    // the Parseval one is a group frame: representation recovery succeeds
    Representation rep = representation_from_frame(f2);
    CHECK(rep.is_unitary());
    CHECK(rep.is_homomorphism());
    for (uint32_t g = 0; g < 27; ++g)
        CHECK(matvec(rep[g], f2[0]) == f2[g]);

    // and its orbit reproduces the family
    VectorFamily regenerated = orbit_frame(rep, f2[0]);
    for (uint32_t g = 0; g < 27; ++g) CHECK(regenerated[g] == f2[g]);
}

TEST_CASE("z3sq fixture frame") {
    FiniteGroup g = FiniteGroup::zpq(3, 2);
    BitMatrix theta = load_bit_grid(fixture("z3sq_frame.mat"));
    BitMatrix gram_fixture = load_bit_grid(fixture("z3sq_gram.mat"));
    VectorFamily fam = VectorFamily::from_analysis(theta, g);
    CHECK(is_parseval(fam));
    CHECK(gramian(fam) == gram_fixture);
    CHECK(rank(gram_fixture) == 5);

    Representation rep = representation_from_frame(fam);
    auto rhos = load_bit_grids(fixture("z3sq_rho.mat"));
    REQUIRE(rhos.size() == 9);
    for (uint32_t i = 0; i < 9; ++i) CHECK(rep[i] == rhos[i]);
    CHECK(rep.is_homomorphism());
    CHECK(rep.is_unitary());
}

TEST_CASE("orbit of a basis vector under the left regular representation") {
    FiniteGroup z3 = FiniteGroup::cyclic(3);
    Representation rep = Representation::left_regular_rep(z3);
    BitVector delta(3);
    delta.set(0, true);
    VectorFamily fam = orbit_frame(rep, delta);
    CHECK(analysis(fam) == BitMatrix::identity(3));
}

TEST_CASE("shift-frame representation recovery gives the shift") {
    Representation rep = z27_shift_rep();
    BitVector e1(9);
    e1.set(0, true);
    VectorFamily fam = orbit_frame(rep, e1);
    Representation rec = representation_from_frame(fam);
    CHECK(rec[1] == rep[1]);  // the 9x9 cyclic shift
    CHECK(rec.is_homomorphism());
}

TEST_CASE("representation recovery rejects non-group frames") {
    FiniteGroup z3 = FiniteGroup::cyclic(3);
    // {e1, e2, 0} is Parseval for Z_2^2 but its Gramian diag(1,1,0) is not in
    // the group algebra
    std::vector<BitVector> vecs(3, BitVector(2));
    vecs[0].set(0, true);
    vecs[1].set(1, true);
    VectorFamily fam(2, std::move(vecs), z3);
    CHECK(is_parseval(fam));
    CHECK_THROWS_WITH_AS(representation_from_frame(fam), doctest::Contains("not a group frame"),
                         domain_error);

    // non-Parseval input is rejected outright
    Representation rep = z27_shift_rep();
    BitMatrix seed = parse_bit_grid("101111110");
    VectorFamily bad = orbit_frame(rep, seed.row(0));
    CHECK_THROWS_AS(representation_from_frame(bad), domain_error);
}

TEST_CASE("frame operator identity matches the pointwise reconstruction") {
    // exhaustive over Z_2^n for small n: S = I iff x = sum <x, f_j> f_j
    auto reconstructs = [](const VectorFamily& fam) {
        std::size_t n = fam.dim();
        for (uint64_t bits = 0; bits < (uint64_t{1} << n); ++bits) {
            BitVector x(n);
            for (std::size_t b = 0; b < n; ++b) x.set(b, bits >> b & 1);
            BitVector acc(n);
            for (std::size_t j = 0; j < fam.size(); ++j)
                if (dot(x, fam[j])) acc ^= fam[j];
            if (!(acc == x)) return false;
        }
        return true;
    };
    VectorFamily parseval =
        VectorFamily::from_analysis(load_bit_grid(fixture("z3sq_frame.mat")));
    CHECK(is_parseval(parseval));
    CHECK(reconstructs(parseval));

    Representation rep = z27_shift_rep();
    VectorFamily not_parseval = orbit_frame(rep, parse_bit_grid("101111110").row(0));
    CHECK(!is_parseval(not_parseval));
    CHECK(!reconstructs(not_parseval));
}

TEST_CASE("parseval families satisfy theta theta* theta = theta") {
    FiniteGroup g = FiniteGroup::zpq(3, 2);
    BitMatrix theta = load_bit_grid(fixture("z3sq_frame.mat"));
    CHECK(matmul(matmul(theta, transpose(theta)), theta) == theta);
    BitMatrix t2 = transpose(load_bit_grid(fixture("gabor_theta2.mat")));
    CHECK(matmul(matmul(t2, transpose(t2)), t2) == t2);
}

TEST_CASE("parseval gramians are symmetric idempotents with an odd column") {
    for (const std::string& name : {"z3sq_frame.mat"}) {
        BitMatrix theta = load_bit_grid(fixture(name));
        VectorFamily fam = VectorFamily::from_analysis(theta);
        BitMatrix gram = gramian(fam);
        CHECK(is_symmetric(gram));
        CHECK(is_idempotent(gram));
        bool odd_col = false;
        for (std::size_t j = 0; j < gram.cols(); ++j)
            if (gram.col(j).odd()) odd_col = true;
        CHECK(odd_col);
    }
}

TEST_CASE("unitary images share the Gramian") {
    std::mt19937_64 rng(11);
    BitMatrix theta = load_bit_grid(fixture("z3sq_frame.mat"));
    VectorFamily fam = VectorFamily::from_analysis(theta);
    for (int t = 0; t < 10; ++t) {
        BitMatrix u = random_unitary(5, rng);
        REQUIRE(matmul(u, transpose(u)) == BitMatrix::identity(5));
        std::vector<BitVector> mapped;
        for (std::size_t j = 0; j < fam.size(); ++j) mapped.push_back(matvec(u, fam[j]));
        VectorFamily img(5, std::move(mapped));
        CHECK(gramian(img) == gramian(fam));
        CHECK(is_parseval(img));
    }
}

TEST_CASE("frames reconstructed from Gramians") {
    // every nu-mask Gramian of Z_9 and Z_3^2 is realized exactly
    for (const FiniteGroup& g : {FiniteGroup::cyclic(9), FiniteGroup::zpq(3, 2)}) {
        SdoPartition part(g);
        uint64_t nontrivial = part.orbit_count() - 1;
        for (uint64_t m = 0; m < (uint64_t{1} << nontrivial); ++m) {
            BitMatrix gram = gram_from_nu({&part, m << 1 | 1});
            VectorFamily fam = parseval_frame_from_gramian(gram, g);
            CHECK(is_parseval(fam));
            CHECK(gramian(fam) == gram);
            CHECK(fam.dim() == rank(gram));
        }
    }
    CHECK_THROWS_AS(parseval_frame_from_gramian(parse_bit_grid("01\n10")), domain_error);
}

TEST_CASE("single erasures keep the rank-7 frame left-invertible") {
    FiniteGroup g = FiniteGroup::zpq(3, 2);
    SdoPartition part(g);
    BitMatrix gram = gram_from_nu({&part, 0b0111 << 1 | 1});
    REQUIRE(rank(gram) == 7);
    VectorFamily fam = parseval_frame_from_gramian(gram, g);
    BitMatrix theta = analysis(fam);
    for (std::size_t erased = 0; erased < 9; ++erased) {
        BitMatrix sub(8, 7);
        std::size_t out = 0;
        for (std::size_t i = 0; i < 9; ++i)
            if (i != erased) sub.set_row(out++, theta.row(i));
        CHECK(left_inverse_exists(sub));
    }
}
