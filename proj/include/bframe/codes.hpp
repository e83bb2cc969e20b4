#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bframe/bitmat.hpp"
#include "bframe/frames.hpp"

namespace bframe {

struct CodeReport {
    std::size_t length = 0;       // k, the codeword length
    std::size_t dim = 0;          // rank of the Gramian / row space
    std::size_t weight = 0;       // minimum nonzero codeword weight
    std::size_t erasure_max = 0;  // weight - 1
    std::size_t bitflip_max = 0;  // floor((weight - 1) / 2)
    std::string strategy;         // "enumeration" or "dual_dependency"

    std::string to_json() const;
};

// Minimum weight over nonzero vectors of the row space of G. Strategy is
// auto-selected: full codeword enumeration when rank <= 26, otherwise a
// search for the smallest dependent column set of a kernel basis matrix
// (co-rank <= 26, weight <= 8). Throws capacity_error when neither applies,
// reporting both ranks; throws domain_error for the zero matrix.
CodeReport code_weight(const BitMatrix& g);

// code_weight plus the erasure/bit-flip figures derived from it.
CodeReport robustness(const BitMatrix& g);

namespace detail {
// The dual-dependency route irrespective of rank, for cross-checks; returns 0
// when the weight exceeds dmax. Requires co-rank <= 26.
std::size_t dual_min_distance(const BitMatrix& g, std::size_t dmax);
}  // namespace detail

struct ErasureReport {
    std::size_t m = 0;
    uint64_t patterns_checked = 0;
    uint64_t failures = 0;
    bool exhaustive = true;
    std::optional<std::vector<uint32_t>> witness;  // first failing pattern

    bool all_recovered() const { return failures == 0; }
    std::string to_json() const;
};

// For erasure patterns E with exactly m zeros, checks that E Theta keeps
// full column rank (left-invertibility). Exhaustive mode enumerates all
// C(k, m) patterns (capped at 10^7); sampled mode draws `trials` seeded
// patterns.
ErasureReport simulate_erasures(const VectorFamily& f, std::size_t m,
                                bool exhaustive = true, uint64_t trials = 10000,
                                uint64_t seed = 0);

struct BitflipReport {
    std::size_t m = 0;
    uint64_t trials = 0;
    uint64_t exact_recoveries = 0;
    uint64_t ties = 0;        // decoding declared a failure on a distance tie
    uint64_t misdecodes = 0;  // unique nearest codeword was the wrong one
    std::optional<std::vector<uint32_t>> witness_error;  // first failing flip set

    double recovery_rate() const {
        return trials ? static_cast<double>(exact_recoveries) / trials : 1.0;
    }
    std::string to_json() const;
};

// Random message x and random error of weight <= m; decodes by minimum
// Hamming distance over all 2^n codewords, declaring failure on ties.
// Guaranteed 100% recovery when m <= bitflip_max of the code.
BitflipReport simulate_bitflips(const VectorFamily& f, std::size_t m,
                                uint64_t trials = 10000, uint64_t seed = 0);

}  // namespace bframe
