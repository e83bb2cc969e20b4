#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bframe/bitmat.hpp"
#include "bframe/group.hpp"

namespace bframe {

// Binary coefficient function eta: G -> Z_2 stored as a bitmask over the
// canonical element order. The Gramian it encodes is sum eta(g) R_g, so eta
// is the compressed identity of a group-frame Gramian.
class EtaFunction {
public:
    EtaFunction(const FiniteGroup& g) : group_(g), bits_(g.order()) {}
    EtaFunction(const FiniteGroup& g, const std::vector<uint32_t>& support);

    const FiniteGroup& group() const { return group_; }
    bool get(uint32_t g) const { return bits_.get(g); }
    void set(uint32_t g, bool v) { bits_.set(g, v); }
    std::size_t weight() const { return bits_.weight(); }
    std::vector<uint32_t> support() const;
    const BitVector& bits() const { return bits_; }

    std::string to_hex() const;
    static EtaFunction from_hex(const FiniteGroup& g, const std::string& hex);

    friend bool operator==(const EtaFunction& a, const EtaFunction& b) {
        return a.group_.same_group(b.group_) && a.bits_ == b.bits_;
    }

private:
    FiniteGroup group_;
    BitVector bits_;
};

struct EtaCheck {
    bool identity_ok = false;   // eta(e) = 1
    bool symmetric = false;     // eta(g) = eta(g^{-1})
    bool conv_idempotent = false;
    bool verdict() const { return identity_ok && symmetric && conv_idempotent; }
};

// G = sum_g eta(g) R_g; entry (a,b) = eta(a^{-1} b).
BitMatrix gram_from_eta(const EtaFunction& eta);

// Reads eta(g) := M_{e,g} and accepts iff rebuilding sum eta(g) R_g gives M
// back; nullopt means M is not in the algebra spanned by the right regular
// representation.
std::optional<EtaFunction> eta_from_gram(const BitMatrix& m, const FiniteGroup& g);

// Mod-2 group convolution (a*b)(h) = sum_g a(g) b(g^{-1} h).
EtaFunction convolve(const EtaFunction& a, const EtaFunction& b);

// The three-condition test: together they hold iff gram_from_eta(eta) is the
// Gramian of a binary Parseval group frame.
EtaCheck check_eta(const EtaFunction& eta);

// For abelian groups: eta(g) = sum_{h^2 = g} eta(h) for all g, equivalent to
// convolution idempotence.
bool square_root_check(const EtaFunction& eta);

// All eta with eta(e) = 1, inversion symmetry and convolution idempotence, in
// ascending bitmask order. Enumerates one bit per inversion class {g, g^-1};
// the search space 2^#classes is capped at 2^24.
std::vector<EtaFunction> enumerate_valid_etas(const FiniteGroup& g);

// Symmetric doubling orbit partition of an odd-order abelian group: the
// orbits of g under squaring and inversion. Orbits are sorted by minimal
// element; orbit 0 is always {e}.
class SdoPartition {
public:
    explicit SdoPartition(const FiniteGroup& g);

    const FiniteGroup& group() const { return group_; }
    std::size_t orbit_count() const { return orbits_.size(); }
    std::size_t nontrivial_count() const { return orbits_.size() - 1; }
    const std::vector<std::vector<uint32_t>>& orbits() const { return orbits_; }
    const std::vector<uint32_t>& orbit(std::size_t id) const { return orbits_[id]; }
    uint32_t orbit_of(uint32_t elem) const { return orbit_of_[elem]; }
    uint32_t representative(std::size_t id) const { return orbits_[id][0]; }

private:
    FiniteGroup group_;
    std::vector<std::vector<uint32_t>> orbits_;
    std::vector<uint32_t> orbit_of_;
};

// nu: orbit ids -> Z_2, bit i of mask = nu(orbit i). Orbit 0 is [e].
struct NuFunction {
    const SdoPartition* partition;
    uint64_t mask;
};

// sum over selected orbits of R_[g] := sum_{h in [g]} R_h. Requires
// nu([e]) = 1.
BitMatrix gram_from_nu(const NuFunction& nu);

EtaFunction eta_from_nu(const NuFunction& nu);

// 2^{#orbits - 1}: the number of distinct Gramians of binary Parseval frames
// for this group, one per unitary equivalence class.
uint64_t count_unitary_classes(const SdoPartition& part);

std::string mask_to_hex(uint64_t mask);
uint64_t hex_to_mask(const std::string& hex);

}  // namespace bframe
