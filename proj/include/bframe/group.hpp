#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "bframe/bitmat.hpp"

namespace bframe {

// Finite group with a fixed canonical element order; elements are indices
// 0..k-1. Canonical orders: Z_n natural, Z_p^q lexicographic on tuples with
// g_1 most significant, direct product lexicographic (left factor major),
// Cayley tables as given. Every matrix and bitmask in the library indexes
// against this order.
class FiniteGroup {
public:
    enum class Backend { cyclic, zpq, direct_product, cayley };

    // Integers mod n under addition.
    static FiniteGroup cyclic(uint32_t n);

    // Tuples (g_1..g_q) over Z_p with componentwise addition, p an odd prime.
    static FiniteGroup zpq(uint32_t p, uint32_t q);

    static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

    // Table row g, column h holds the index of g*h. Group axioms are
    // validated on construction (associativity spot-checked for large k).
    static FiniteGroup from_cayley(const std::vector<std::vector<uint32_t>>& table);

    // Fixture format: first line k, then k rows of k indices.
    static FiniteGroup load_cayley(const std::string& path);

    // "cyclic:n" | "zpq:p,q" | "cayley:<path>"
    static FiniteGroup from_spec(const std::string& spec);

    uint32_t order() const;
    uint32_t op(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;
    uint32_t identity() const;
    bool abelian() const;
    Backend backend() const;
    const std::string& descriptor() const;

    // zpq accessors (throw for other backends)
    uint32_t p() const;
    uint32_t q() const;
    std::vector<uint32_t> tuple_of(uint32_t idx) const;
    uint32_t index_of(const std::vector<uint32_t>& tuple) const;

    bool same_group(const FiniteGroup& o) const { return impl_ == o.impl_; }

private:
    struct Impl;
    explicit FiniteGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

// Element-index permutation satisfying sigma(gh) = sigma(g)sigma(h);
// validated exhaustively on construction for k <= 2048, sampled above.
class Automorphism {
public:
    Automorphism(const FiniteGroup& g, std::vector<uint32_t> perm);

    // Automorphism of Z_p^q given by an invertible q x q matrix over Z_p
    // acting on column tuples.
    static Automorphism from_matrix(const FiniteGroup& g,
                                    const std::vector<std::vector<uint32_t>>& m);

    uint32_t apply(uint32_t g) const { return perm_[g]; }
    const std::vector<uint32_t>& perm() const { return perm_; }
    const FiniteGroup& group() const { return group_; }

private:
    FiniteGroup group_;
    std::vector<uint32_t> perm_;
};

// Permutation matrices of the regular representations in the canonical basis:
// (Lambda_g)_{a,b} = 1 iff a b^{-1} = g and (R_g)_{a,b} = 1 iff a^{-1} b = g.
BitMatrix left_regular(const FiniteGroup& g, uint32_t elem);
BitMatrix right_regular(const FiniteGroup& g, uint32_t elem);

// Generating set of Aut(G). Z_p^q (q >= 2): companion matrix of the first
// primitive degree-q polynomial over Z_p plus the transvection g_1 += g_2;
// certified at construction by closing the matrix group and comparing with
// |GL(q,p)|. Z_p and Z_{p^q} (q = 1 backend): multiplication by the smallest
// generator of the unit group. Other backends are unsupported.
std::vector<Automorphism> aut_generators(const FiniteGroup& g);

// |GL(q,p)| = prod_{i<q} (p^q - p^i)
uint64_t gl_order(uint32_t p, uint32_t q);

bool is_prime(uint32_t n);

// Smallest generator of (Z_n)^x for n an odd prime power.
uint32_t unit_group_generator(uint32_t n);

}  // namespace bframe
