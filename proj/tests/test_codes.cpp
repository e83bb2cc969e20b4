#include <doctest.h>

#include "bframe/classify.hpp"
#include "bframe/codes.hpp"
#include "test_util.hpp"

using namespace bframe;

namespace {

BitMatrix nu_gram(const FiniteGroup& g, const SdoPartition& part,
                  const std::vector<uint32_t>& orbit_reps) {
    uint64_t mask = 1;
    for (uint32_t rep : orbit_reps) mask |= uint64_t{1} << part.orbit_of(rep);
    return gram_from_nu({&part, mask});
}

}  // namespace

TEST_CASE("code_weight basics") {
    CodeReport rep = code_weight(BitMatrix::identity(12));
    CHECK(rep.weight == 1);
    CHECK(rep.dim == 12);
    CHECK(rep.strategy == "enumeration");

    CHECK_THROWS_AS(code_weight(BitMatrix(4, 4)), domain_error);
}

TEST_CASE("code_weight on catalog Gramians") {
    FiniteGroup g32 = FiniteGroup::zpq(3, 2);
    SdoPartition p32(g32);
    BitMatrix g7 = nu_gram(g32, p32, {g32.index_of({1, 0}), g32.index_of({1, 1}),
                                      g32.index_of({0, 1})});
    REQUIRE(rank(g7) == 7);
    CHECK(code_weight(g7).weight == 2);

    FiniteGroup g33 = FiniteGroup::zpq(3, 3);
    SdoPartition p33(g33);
    BitMatrix g93 = nu_gram(g33, p33, {g33.index_of({0, 0, 1})});
    CodeReport r = code_weight(g93);
    CHECK(r.dim == 9);
    CHECK(r.weight == 3);

    FiniteGroup g53 = FiniteGroup::zpq(5, 3);
    SdoPartition p53(g53);
    BitMatrix g525 = nu_gram(g53, p53,
                             {g53.index_of({0, 0, 1}), g53.index_of({1, 1, 0}),
                              g53.index_of({1, 1, 1}), g53.index_of({1, 1, 2}),
                              g53.index_of({1, 1, 3}), g53.index_of({1, 1, 4})});
    CodeReport r2 = code_weight(g525);
    CHECK(r2.dim == 5);
    CHECK(r2.weight == 25);
}

TEST_CASE("dual-dependency strategy kicks in above rank 26") {
    FiniteGroup z125 = FiniteGroup::cyclic(125);
    SdoPartition part(z125);
    BitMatrix gram = nu_gram(z125, part, {1});  // orbit of 1, size 100
    REQUIRE(rank(gram) == 121);
    CodeReport r = code_weight(gram);
    CHECK(r.strategy == "dual_dependency");
    CHECK(r.weight == 2);

    BitMatrix g101 = nu_gram(z125, part, {1, 5});
    REQUIRE(rank(g101) == 101);
    CHECK(code_weight(g101).weight == 2);
}

TEST_CASE("the two strategies agree where both run") {
    FiniteGroup g33 = FiniteGroup::zpq(3, 3);
    SdoPartition p33(g33);
    InducedAction act(p33, aut_generators(g33));
    ClassCatalog cat = classify_closure(p33, act, true);
    int checked = 0;
    for (const auto& c : cat.classes) {
        BitMatrix gram = gram_from_nu({&p33, c.canonical_mask << 1 | 1});
        std::size_t dual = detail::dual_min_distance(gram, 8);
        if (*c.code_weight <= 8) {
            CHECK(dual == *c.code_weight);
            ++checked;
        } else {
            CHECK(dual == 0);  // beyond the dual-search cap
        }
    }
    CHECK(checked >= 25);
}

TEST_CASE("dual search agrees with enumeration on random codes") {
    // random rank-20 row spaces over 40 columns keep the dual search honest
    // across the whole d range, including the meet-in-the-middle branch
    std::mt19937_64 rng(17);
    for (int t = 0; t < 20; ++t) {
        BitMatrix m = bframe_test::random_matrix(20, 40, rng);
        auto basis = row_space_basis(m);
        if (basis.size() != 20) continue;
        std::size_t w = code_weight(m).weight;
        std::size_t dual = detail::dual_min_distance(m, 8);
        if (w <= 8) CHECK(dual == w);
        else CHECK(dual == 0);
    }
}

TEST_CASE("dual search reaches distances seven and eight") {
    // the perfect [23,12,7] cyclic code and its [24,12,8] extension
    const int g[12] = {1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1};
    BitMatrix golay(12, 23);
    for (std::size_t s = 0; s < 12; ++s)
        for (std::size_t i = 0; i < 12; ++i)
            if (g[i]) golay.set(s, s + i, true);
    CHECK(code_weight(golay).weight == 7);
    CHECK(detail::dual_min_distance(golay, 8) == 7);

    BitMatrix extended(12, 24);
    for (std::size_t s = 0; s < 12; ++s) {
        std::size_t parity = 0;
        for (std::size_t j = 0; j < 23; ++j) {
            if (golay.get(s, j)) {
                extended.set(s, j, true);
                ++parity;
            }
        }
        extended.set(s, 23, parity & 1);
    }
    CHECK(code_weight(extended).weight == 8);
    CHECK(detail::dual_min_distance(extended, 8) == 8);
    CHECK(detail::dual_min_distance(extended, 7) == 0);  // nothing below eight
}

TEST_CASE("robustness figures") {
    FiniteGroup z9 = FiniteGroup::cyclic(9);
    SdoPartition p9(z9);
    BitMatrix g93 = nu_gram(z9, p9, {3});
    CodeReport r = robustness(g93);
    CHECK(r.weight == 3);
    CHECK(r.erasure_max == 2);
    CHECK(r.bitflip_max == 1);

    FiniteGroup z125 = FiniteGroup::cyclic(125);
    SdoPartition p125(z125);
    CodeReport r2 = robustness(nu_gram(z125, p125, {5, 25}));
    CHECK(r2.dim == 5);
    CHECK(r2.weight == 25);
    CHECK(r2.erasure_max == 24);
    CHECK(r2.bitflip_max == 12);
}

TEST_CASE("code weight is a switching invariant") {
    std::mt19937_64 rng(13);
    FiniteGroup g32 = FiniteGroup::zpq(3, 2);
    SdoPartition p32(g32);
    BitMatrix gram = nu_gram(g32, p32, {g32.index_of({1, 0})});
    std::size_t w = code_weight(gram).weight;
    for (int t = 0; t < 8; ++t) {
        std::vector<std::size_t> perm(9);
        for (std::size_t i = 0; i < 9; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        BitMatrix p(9, 9);
        for (std::size_t i = 0; i < 9; ++i) p.set(i, perm[i], true);
        BitMatrix conj = matmul(transpose(p), matmul(gram, p));
        CHECK(code_weight(conj).weight == w);
    }
}

TEST_CASE("row-space weight is constant along induced-orbit images") {
    FiniteGroup g32 = FiniteGroup::zpq(3, 2);
    SdoPartition p32(g32);
    InducedAction act(p32, aut_generators(g32));
    auto gens = act.nontrivial_perms();
    for (uint64_t m = 0; m < 16; ++m) {
        std::size_t w = code_weight(gram_from_nu({&p32, m << 1 | 1})).weight;
        for (const auto& perm : gens) {
            uint64_t im = apply_perm_to_mask(m, perm);
            CHECK(code_weight(gram_from_nu({&p32, im << 1 | 1})).weight == w);
        }
    }
}

TEST_CASE("code weight matches the analysis-operator range on fixtures") {
    // rows of the synthesis operator span the range of the analysis operator,
    // which coincides with the Gramian range for Parseval families
    FiniteGroup z9 = FiniteGroup::cyclic(9);
    SdoPartition p9(z9);
    BitMatrix gram = nu_gram(z9, p9, {3});
    VectorFamily fam = parseval_frame_from_gramian(gram, z9);
    CHECK(code_weight(gram).weight == code_weight(synthesis(fam)).weight);
}

TEST_CASE("erasure simulation on the weight-3 cyclic frame") {
    FiniteGroup z9 = FiniteGroup::cyclic(9);
    SdoPartition p9(z9);
    VectorFamily fam = parseval_frame_from_gramian(nu_gram(z9, p9, {3}), z9);

    ErasureReport r0 = simulate_erasures(fam, 0);
    CHECK(r0.patterns_checked == 1);
    CHECK(r0.all_recovered());

    ErasureReport r2 = simulate_erasures(fam, 2);
    CHECK(r2.patterns_checked == 36);
    CHECK(r2.all_recovered());

    ErasureReport r3 = simulate_erasures(fam, 3);
    CHECK(r3.patterns_checked == 84);
    CHECK(r3.failures == 3);
    REQUIRE(r3.witness.has_value());
    CHECK(r3.failures > 0);
}

TEST_CASE("erasure simulation on the rank-7 product frame") {
    FiniteGroup g32 = FiniteGroup::zpq(3, 2);
    SdoPartition p32(g32);
    BitMatrix gram = nu_gram(g32, p32, {g32.index_of({1, 0}), g32.index_of({1, 1}),
                                        g32.index_of({0, 1})});
    VectorFamily fam = parseval_frame_from_gramian(gram, g32);
    ErasureReport r1 = simulate_erasures(fam, 1);
    CHECK(r1.patterns_checked == 9);
    CHECK(r1.all_recovered());
    ErasureReport r2 = simulate_erasures(fam, 2);
    CHECK(!r2.all_recovered());
}

TEST_CASE("erasure capacity and sampling") {
    FiniteGroup z125 = FiniteGroup::cyclic(125);
    SdoPartition p(z125);
    VectorFamily fam = parseval_frame_from_gramian(nu_gram(z125, p, {5, 25}), z125);
    CHECK_THROWS_AS(simulate_erasures(fam, 5, /*exhaustive=*/true), capacity_error);
    ErasureReport r = simulate_erasures(fam, 5, /*exhaustive=*/false, 200, 1);
    CHECK(r.patterns_checked == 200);
    CHECK(r.all_recovered());  // weight 25 tolerates far more than 5 erasures
}

TEST_CASE("bit-flip simulation") {
    FiniteGroup z9 = FiniteGroup::cyclic(9);
    SdoPartition p9(z9);
    VectorFamily fam = parseval_frame_from_gramian(nu_gram(z9, p9, {3}), z9);

    BitflipReport r0 = simulate_bitflips(fam, 0, 500, 0);
    CHECK(r0.recovery_rate() == 1.0);

    BitflipReport r1 = simulate_bitflips(fam, 1, 10000, 0);
    CHECK(r1.exact_recoveries == 10000);

    BitflipReport r2 = simulate_bitflips(fam, 2, 10000, 0);
    CHECK(r2.exact_recoveries < 10000);
    REQUIRE(r2.witness_error.has_value());
    CHECK(r2.witness_error->size() == 2);
}

TEST_CASE("weight enumeration is unchanged by the worker cap") {
    FiniteGroup z125 = FiniteGroup::cyclic(125);
    SdoPartition p(z125);
    BitMatrix gram = nu_gram(z125, p, {1, 25});  // rank 21
    setenv("BFRAME_THREADS", "4", 1);
    std::size_t parallel = code_weight(gram).weight;
    unsetenv("BFRAME_THREADS");
    CHECK(parallel == code_weight(gram).weight);
    CHECK(parallel == 10);
}

TEST_CASE("decoder reports distance ties") {
    // weight-2 code: a flip on one of two differing coordinates lands midway
    // between codewords, and the decoder must not pick arbitrarily
    FiniteGroup g32 = FiniteGroup::zpq(3, 2);
    SdoPartition p32(g32);
    BitMatrix gram = gram_from_nu({&p32, 0b0111 << 1 | 1});
    REQUIRE(code_weight(gram).weight == 2);
    VectorFamily fam = parseval_frame_from_gramian(gram, g32);
    BitflipReport r = simulate_bitflips(fam, 1, 4000, 3);
    CHECK(r.ties > 0);
    CHECK(r.misdecodes == 0);
}
