#include "bframe/codes.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <random>
#include <thread>

#include <nlohmann/json.hpp>

namespace bframe {

using json = nlohmann::json;

namespace {

std::size_t worker_count() {
    if (const char* env = std::getenv("BFRAME_THREADS")) {
        long n = std::strtol(env, nullptr, 10);
        if (n >= 1) return std::min<std::size_t>(static_cast<std::size_t>(n), 64);
    }
    return 1;
}

// Minimum weight over the codewords indexed by [lo, hi): Gray-code walk
// seeded at lo.
std::size_t min_weight_range(const std::vector<BitVector>& basis, std::size_t ncols,
                             uint64_t lo, uint64_t hi) {
    std::size_t words = words_for(ncols);
    std::vector<uint64_t> cur(words, 0);
    uint64_t prev_gray = lo ^ (lo >> 1);
    for (uint64_t g = prev_gray; g;) {
        int b = std::countr_zero(g);
        g &= g - 1;
        auto bw = basis[b].words();
        for (std::size_t i = 0; i < words; ++i) cur[i] ^= bw[i];
    }
    std::size_t best = ncols + 1;
    if (lo != 0) {
        std::size_t w = 0;
        for (uint64_t v : cur) w += std::popcount(v);
        best = w;
    }
    for (uint64_t x = lo + 1; x < hi; ++x) {
        uint64_t gray = x ^ (x >> 1);
        uint64_t diff = gray ^ prev_gray;
        prev_gray = gray;
        auto bw = basis[std::countr_zero(diff)].words();
        std::size_t w = 0;
        for (std::size_t i = 0; i < words; ++i) {
            cur[i] ^= bw[i];
            w += std::popcount(cur[i]);
        }
        best = std::min(best, w);
        if (best == 1) break;
    }
    return best;
}

// All 2^r - 1 nonzero combinations, partitioned by index prefix across the
// workers allowed by BFRAME_THREADS.
std::size_t min_weight_enumeration(const std::vector<BitVector>& basis, std::size_t ncols) {
    std::size_t r = basis.size();
    uint64_t total = uint64_t{1} << r;
    std::size_t workers = std::min<uint64_t>(worker_count(), total / 4096 + 1);
    if (workers <= 1) return min_weight_range(basis, ncols, 0, total);
    std::vector<std::size_t> results(workers, ncols + 1);
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t) {
        uint64_t lo = total / workers * t;
        uint64_t hi = t + 1 == workers ? total : total / workers * (t + 1);
        pool.emplace_back([&, t, lo, hi] {
            results[t] = min_weight_range(basis, ncols, lo, hi);
        });
    }
    for (auto& th : pool) th.join();
    return *std::min_element(results.begin(), results.end());
}

// Columns of the kernel basis matrix H as (k - r)-bit values. The minimum
// distance of the row space is the least d with d dependent columns of H.
std::vector<uint32_t> parity_columns(const BitMatrix& g) {
    std::vector<BitVector> kernel = kernel_basis(g);
    std::vector<uint32_t> cols(g.cols(), 0);
    for (std::size_t i = 0; i < kernel.size(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j)
            if (kernel[i].get(j)) cols[j] |= uint32_t{1} << i;
    return cols;
}

// Smallest d <= dmax with d distinct dependent columns, or 0 when none.
// Direct search up to d = 5; meet-in-the-middle with a 3-column prefix table
// for d in 6..8 (prefix max index must stay below the suffix min index, so
// every d-subset splits exactly once).
std::size_t min_dependent_columns(const std::vector<uint32_t>& cols, std::size_t corank,
                                  std::size_t dmax) {
    std::size_t n = cols.size();
    if (corank == 0) return n ? 1 : 0;
    for (uint32_t c : cols)
        if (c == 0) return 1;
    // after this point all columns are nonzero and, if no d=2, distinct
    {
        std::vector<uint32_t> sorted(cols);
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return 2;
    }
    if (dmax < 3) return 0;
    std::vector<uint32_t> col_at(uint64_t{1} << corank, 0);  // value -> column index + 1
    for (std::size_t j = n; j-- > 0;) col_at[cols[j]] = static_cast<uint32_t>(j + 1);
    auto completing_col_after = [&](uint32_t v, std::size_t after) -> bool {
        // columns are distinct at this point, so one lookup suffices
        uint32_t hit = col_at[v];
        return hit != 0 && hit - 1 > after;
    };
    for (std::size_t d = 3; d <= std::min<std::size_t>(dmax, 5); ++d) {
        if (n < d) continue;
        // choose d-1 columns, look up the completing column
        std::vector<std::size_t> idx(d - 1);
        for (std::size_t i = 0; i < d - 1; ++i) idx[i] = i;
        while (true) {
            uint32_t v = 0;
            for (std::size_t i : idx) v ^= cols[i];
            if (v != 0 && completing_col_after(v, idx.back())) return d;
            std::size_t i = d - 1;
            while (i-- > 0) {
                if (idx[i] + 1 < n - (d - 2 - i)) {
                    ++idx[i];
                    for (std::size_t t = i + 1; t < d - 1; ++t) idx[t] = idx[t - 1] + 1;
                    break;
                }
                if (i == 0) goto next_d;
            }
        }
    next_d:;
    }
    for (std::size_t d = 6; d <= dmax; ++d) {
        if (n < d) continue;
        // prefix table: value -> minimal possible max index of a 3-subset
        std::vector<uint32_t> minmax(uint64_t{1} << corank, UINT32_MAX);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                for (std::size_t c = b + 1; c < n; ++c) {
                    uint32_t v = cols[a] ^ cols[b] ^ cols[c];
                    if (c < minmax[v]) minmax[v] = static_cast<uint32_t>(c);
                }
        std::size_t rsize = d - 3;
        std::vector<std::size_t> idx(rsize);
        for (std::size_t i = 0; i < rsize; ++i) idx[i] = i;
        while (true) {
            uint32_t v = 0;
            for (std::size_t i : idx) v ^= cols[i];
            if (minmax[v] < idx[0]) return d;
            std::size_t i = rsize;
            while (i-- > 0) {
                if (idx[i] + 1 < n - (rsize - 1 - i)) {
                    ++idx[i];
                    for (std::size_t t = i + 1; t < rsize; ++t) idx[t] = idx[t - 1] + 1;
                    break;
                }
                if (i == 0) goto next_d2;
            }
        }
    next_d2:;
    }
    return 0;
}

}  // namespace

CodeReport code_weight(const BitMatrix& g) {
    std::vector<BitVector> basis = row_space_basis(g);
    std::size_t r = basis.size();
    std::size_t k = g.cols();
    if (r == 0) throw domain_error("code_weight: zero matrix has no code");
    CodeReport rep;
    rep.length = k;
    rep.dim = r;
    if (r <= 26) {
        rep.weight = min_weight_enumeration(basis, k);
        rep.strategy = "enumeration";
    } else if (k - r <= 26) {
        auto cols = parity_columns(g);
        std::size_t d = min_dependent_columns(cols, k - r, 8);
        if (d == 0)
            throw capacity_error("code_weight: weight exceeds the dual-dependency cap of 8 "
                                 "(rank " + std::to_string(r) + ", co-rank " +
                                 std::to_string(k - r) + ")");
        rep.weight = d;
        rep.strategy = "dual_dependency";
    } else {
        throw capacity_error("code_weight: unsupported sizes (rank " + std::to_string(r) +
                             ", co-rank " + std::to_string(k - r) + " both above 26)");
    }
    rep.erasure_max = rep.weight - 1;
    rep.bitflip_max = (rep.weight - 1) / 2;
    return rep;
}

CodeReport robustness(const BitMatrix& g) { return code_weight(g); }

namespace detail {

std::size_t dual_min_distance(const BitMatrix& g, std::size_t dmax) {
    std::size_t r = row_space_basis(g).size();
    std::size_t corank = g.cols() - r;
    if (corank > 26) throw capacity_error("dual_min_distance: co-rank above 26");
    return min_dependent_columns(parity_columns(g), corank, dmax);
}

}  // namespace detail

std::string CodeReport::to_json() const {
    json j;
    j["length"] = length;
    j["dim"] = dim;
    j["weight"] = weight;
    j["erasure_max"] = erasure_max;
    j["bitflip_max"] = bitflip_max;
    j["strategy"] = strategy;
    return j.dump(2);
}

namespace {

uint64_t binomial(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    uint64_t r = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > (uint64_t{1} << 40)) return r;  // saturate well above any cap
    }
    return r;
}

bool full_rank_without_rows(const BitMatrix& theta, const std::vector<uint32_t>& erased) {
    BitMatrix sub(theta.rows() - erased.size(), theta.cols());
    std::size_t out = 0;
    std::size_t ei = 0;
    for (std::size_t i = 0; i < theta.rows(); ++i) {
        if (ei < erased.size() && erased[ei] == i) {
            ++ei;
            continue;
        }
        sub.set_row(out++, theta.row(i));
    }
    return rank(sub) == theta.cols();
}

}  // namespace

ErasureReport simulate_erasures(const VectorFamily& f, std::size_t m, bool exhaustive,
                                uint64_t trials, uint64_t seed) {
    BitMatrix theta = analysis(f);
    std::size_t k = theta.rows();
    if (m > k) throw domain_error("simulate_erasures: more erasures than coordinates");
    ErasureReport rep;
    rep.m = m;
    rep.exhaustive = exhaustive;
    if (exhaustive) {
        if (binomial(k, m) > 10'000'000)
            throw capacity_error("simulate_erasures: C(k,m) above 10^7; use sampled mode");
        std::vector<uint32_t> idx(m);
        for (std::size_t i = 0; i < m; ++i) idx[i] = static_cast<uint32_t>(i);
        bool done = m == 0;
        while (true) {
            ++rep.patterns_checked;
            if (!full_rank_without_rows(theta, idx)) {
                ++rep.failures;
                if (!rep.witness) rep.witness = idx;
            }
            if (done) break;
            std::size_t i = m;
            bool advanced = false;
            while (i-- > 0) {
                if (idx[i] + 1 < k - (m - 1 - i)) {
                    ++idx[i];
                    for (std::size_t t = i + 1; t < m; ++t) idx[t] = idx[t - 1] + 1;
                    advanced = true;
                    break;
                }
            }
            if (!advanced) break;
        }
    } else {
        std::mt19937_64 rng(seed);
        for (uint64_t t = 0; t < trials; ++t) {
            std::vector<uint32_t> pool(k);
            for (std::size_t i = 0; i < k; ++i) pool[i] = static_cast<uint32_t>(i);
            std::shuffle(pool.begin(), pool.end(), rng);
            std::vector<uint32_t> idx(pool.begin(), pool.begin() + m);
            std::sort(idx.begin(), idx.end());
            ++rep.patterns_checked;
            if (!full_rank_without_rows(theta, idx)) {
                ++rep.failures;
                if (!rep.witness) rep.witness = idx;
            }
        }
    }
    return rep;
}

std::string ErasureReport::to_json() const {
    json j;
    j["m"] = m;
    j["patterns_checked"] = patterns_checked;
    j["failures"] = failures;
    j["exhaustive"] = exhaustive;
    j["all_recovered"] = all_recovered();
    if (witness) j["witness"] = *witness;
    return j.dump(2);
}

BitflipReport simulate_bitflips(const VectorFamily& f, std::size_t m, uint64_t trials,
                                uint64_t seed) {
    std::size_t n = f.dim();
    if (n > 26) throw capacity_error("simulate_bitflips: 2^n codewords above 2^26");
    BitMatrix theta = analysis(f);
    std::size_t k = theta.rows();
    if (m > k) throw domain_error("simulate_bitflips: more flips than coordinates");
    // all codewords, packed as rows and indexed by message
    BitMatrix codewords(std::size_t{1} << n, k);
    for (uint64_t x = 0; x < (uint64_t{1} << n); ++x) {
        BitVector msg(n);
        for (std::size_t b = 0; b < n; ++b) msg.set(b, x >> b & 1);
        codewords.set_row(x, matvec(theta, msg));
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<uint64_t> msg_dist(0, (uint64_t{1} << n) - 1);
    std::uniform_int_distribution<std::size_t> wt_dist(0, m);
    std::uniform_int_distribution<std::size_t> pos_dist(0, k - 1);
    BitflipReport rep;
    rep.m = m;
    rep.trials = trials;
    for (uint64_t t = 0; t < trials; ++t) {
        uint64_t x = msg_dist(rng);
        std::size_t wt = wt_dist(rng);
        std::vector<uint32_t> flips;
        while (flips.size() < wt) {
            uint32_t p = static_cast<uint32_t>(pos_dist(rng));
            if (std::find(flips.begin(), flips.end(), p) == flips.end()) flips.push_back(p);
        }
        BitVector received = codewords.row(x);
        for (uint32_t p : flips) received.flip(p);
        // nearest codeword; ties are decoding failures
        std::size_t best = k + 1, best_idx = 0;
        bool tie = false;
        auto rw = received.words();
        for (std::size_t c = 0; c < codewords.rows(); ++c) {
            auto cw = codewords.row_words(c);
            std::size_t d = 0;
            for (std::size_t w = 0; w < rw.size(); ++w) d += std::popcount(rw[w] ^ cw[w]);
            if (d < best) {
                best = d;
                best_idx = c;
                tie = false;
            } else if (d == best) {
                tie = true;
            }
        }
        std::sort(flips.begin(), flips.end());
        if (tie) {
            ++rep.ties;
            if (!rep.witness_error) rep.witness_error = flips;
        } else if (best_idx != x) {
            ++rep.misdecodes;
            if (!rep.witness_error) rep.witness_error = flips;
        } else {
            ++rep.exact_recoveries;
        }
    }
    return rep;
}

std::string BitflipReport::to_json() const {
    json j;
    j["m"] = m;
    j["trials"] = trials;
    j["exact_recoveries"] = exact_recoveries;
    j["ties"] = ties;
    j["misdecodes"] = misdecodes;
    j["recovery_rate"] = recovery_rate();
    if (witness_error) j["witness_error"] = *witness_error;
    return j.dump(2);
}

}  // namespace bframe
