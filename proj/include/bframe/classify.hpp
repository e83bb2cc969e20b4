#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bframe/gramchar.hpp"
#include "bframe/group.hpp"

namespace bframe {

// Automorphisms permute symmetric doubling orbits; this is the action on
// orbit ids. Each permutation fixes orbit 0 = [e].
class InducedAction {
public:
    InducedAction(const SdoPartition& part, const std::vector<Automorphism>& gens);

    const SdoPartition& partition() const { return *part_; }
    // permutations of all orbit ids, one per generator
    const std::vector<std::vector<uint32_t>>& perms() const { return perms_; }
    // the same permutations restricted to nontrivial orbit ids (0-based)
    std::vector<std::vector<uint32_t>> nontrivial_perms() const;

private:
    const SdoPartition* part_;
    std::vector<std::vector<uint32_t>> perms_;
};

// Masks over nontrivial orbit ids: bit i of a mask selects orbit i+1 of the
// partition; [e] is always included in the Gramian.
struct ClassInfo {
    uint64_t canonical_mask = 0;  // subset-lex least member
    uint64_t size = 0;            // number of masks in the class
    uint32_t rank = 0;            // Gramian rank, constant on the class
    std::optional<uint32_t> code_weight;
};

struct ClassCatalog {
    std::string group_desc;
    std::vector<std::vector<uint32_t>> orbits;  // element lists, [e] first
    std::vector<ClassInfo> classes;             // sorted by (rank, canonical mask)

    std::string to_json() const;
    std::string to_csv() const;
    static ClassCatalog from_json(const std::string& text);

    // per-|J| class counts, |J| = mask popcount + 1 for the [e] orbit
    std::vector<uint64_t> per_size_counts() const;
};

// Compare masks as sorted orbit-id sequences (lexicographic on subsets).
bool subset_lex_less(uint64_t a, uint64_t b);

uint64_t apply_perm_to_mask(uint64_t mask, const std::vector<uint32_t>& perm);

InducedAction induce_action(const SdoPartition& part, const std::vector<Automorphism>& gens);

// Partition all 2^{#nontrivial} masks into automorphic switching equivalence
// classes by breadth-first closure under the generator images. Ranks are
// computed from the representative Gramians; code weights on request.
ClassCatalog classify_closure(const SdoPartition& part, const InducedAction& action,
                              bool with_code_weights = false);

// Per-|J| class counts via the cycle index of the closed induced permutation
// group (Burnside over the group elements); usable when explicit mask
// enumeration is not.
struct PolyaCounts {
    uint64_t group_order = 0;        // order of the closed induced group
    std::vector<uint64_t> per_size;  // index m = number of nontrivial orbits used
    uint64_t total = 0;
};
PolyaCounts classify_polya(const SdoPartition& part, const InducedAction& action,
                           uint64_t group_cap = 10'000'000);

// Subset-lex least image of the mask under the closed group generated by the
// action (BFS over mask images; memory bounded by the class size).
uint64_t canonical_subset(uint64_t mask, const InducedAction& action);

}  // namespace bframe
