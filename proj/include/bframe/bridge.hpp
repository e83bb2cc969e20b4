#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bframe/classify.hpp"
#include "bframe/gramchar.hpp"
#include "bframe/group.hpp"

namespace bframe {

// Base-p bijection Z_p^q -> Z_{p^q}: phi(g) = sum p^{i-1} g_i, with g_1 the
// p^0 digit. Under phi^{-1} every binary Parseval cyclic-group frame is
// switching equivalent to a product-group frame.
class PhiMap {
public:
    PhiMap(uint32_t p, uint32_t q);

    uint32_t p() const { return p_; }
    uint32_t q() const { return q_; }
    uint32_t modulus() const { return n_; }

    uint32_t forward(const std::vector<uint32_t>& tuple) const;
    std::vector<uint32_t> inverse(uint32_t residue) const;

    // index translations between the canonical orders of the two groups
    uint32_t product_index_to_residue(uint32_t idx) const { return idx_to_res_[idx]; }
    uint32_t residue_to_product_index(uint32_t res) const { return res_to_idx_[res]; }

private:
    uint32_t p_, q_, n_;
    std::vector<uint32_t> idx_to_res_, res_to_idx_;
};

struct MultSubgroup {
    uint32_t modulus = 0;
    uint32_t generator = 0;
    std::vector<uint32_t> elements;  // powers of the generator, starting at 1
};

// Cyclic subgroup <k> of the unit group of Z_n; requires gcd(k, n) = 1.
MultSubgroup mult_subgroup(uint32_t k, uint32_t n);

// x in y<2> in Z_{p^q}, decided by the p-adic valuation and unit-coset
// criterion rather than orbit enumeration.
bool doubling_coset_test(uint32_t x, uint32_t y, uint32_t p, uint32_t q);

// eta'(g) := eta(phi(g)); valid cyclic coefficient functions map to valid
// product ones, with permutation-equivalent Gramians.
EtaFunction reindex_cyclic_to_product(const EtaFunction& eta_cyclic,
                                      const FiniteGroup& product_group);

// For each SDO of Z_{p^q}, the SDOs of Z_p^q whose phi-image unions to it.
// Key/value are orbit ids in the two partitions.
std::map<uint32_t, std::vector<uint32_t>> sdo_refinement(const SdoPartition& cyclic_part,
                                                         const SdoPartition& product_part);

struct CompareRow {
    uint32_t rank = 0;
    uint32_t product_weight = 0;
    std::vector<std::vector<uint32_t>> product_reps;  // orbit representatives, as tuples
    std::optional<uint32_t> cyclic_weight;
    std::optional<std::vector<uint32_t>> cyclic_reps;  // orbit representatives, residues
};

struct CompareTable {
    uint32_t p = 0, q = 0;
    std::vector<CompareRow> rows;

    std::string to_json() const;
    std::string to_csv() const;
};

// Z_{p^q} vs Z_p^q comparison. For (3,2) and (3,3) both groups are fully
// classified and every cyclic class is matched to its product class through
// reindexing and canonicalization. For (5,3) explicit classification of the
// 2^31 masks is infeasible; the table reports the six selected maximal-weight
// product representatives alongside the matched-rank cyclic classes.
CompareTable compare_groups(uint32_t p, uint32_t q);

}  // namespace bframe
