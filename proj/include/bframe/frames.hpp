#pragma once

#include <optional>
#include <vector>

#include "bframe/bitmat.hpp"
#include "bframe/group.hpp"

namespace bframe {

// Ordered family of vectors in Z_2^n. Families are either plainly indexed
// 0..k-1 or indexed by the elements of a group in canonical order; the tag
// matters because automorphic equivalence only makes sense for group-indexed
// families.
class VectorFamily {
public:
    VectorFamily(std::size_t dim, std::vector<BitVector> vectors);
    VectorFamily(std::size_t dim, std::vector<BitVector> vectors, const FiniteGroup& g);

    std::size_t dim() const { return n_; }
    std::size_t size() const { return vecs_.size(); }
    const BitVector& operator[](std::size_t j) const { return vecs_[j]; }
    const std::vector<BitVector>& vectors() const { return vecs_; }
    bool group_indexed() const { return group_.has_value(); }
    const FiniteGroup& group() const;

    // Rows of a bit grid are the vectors transposed, so a k x n grid file is
    // the analysis operator of the family it stores.
    static VectorFamily from_analysis(const BitMatrix& theta);
    static VectorFamily from_analysis(const BitMatrix& theta, const FiniteGroup& g);

private:
    std::size_t n_;
    std::vector<BitVector> vecs_;
    std::optional<FiniteGroup> group_;
};

// Group representation as explicit matrices in canonical element order.
class Representation {
public:
    Representation(const FiniteGroup& g, std::vector<BitMatrix> mats);

    const FiniteGroup& group() const { return group_; }
    std::size_t dim() const { return mats_.empty() ? 0 : mats_[0].rows(); }
    const BitMatrix& operator[](uint32_t g) const { return mats_[g]; }

    // rho_{gh} = rho_g rho_h for all pairs (exhaustive).
    bool is_homomorphism() const;
    bool is_unitary() const;

    static Representation left_regular_rep(const FiniteGroup& g);
    static Representation right_regular_rep(const FiniteGroup& g);

private:
    FiniteGroup group_;
    std::vector<BitMatrix> mats_;
};

// Theta: k x n with row j = f_j^T, so (Theta x)(j) = <x, f_j>.
BitMatrix analysis(const VectorFamily& f);
// Theta^*: n x k.
BitMatrix synthesis(const VectorFamily& f);
// S = Theta^* Theta (n x n).
BitMatrix frame_operator(const VectorFamily& f);
// G = Theta Theta^* (k x k), G_{i,j} = <f_j, f_i>.
BitMatrix gramian(const VectorFamily& f);

// S = I_n, equivalent to the reconstruction identity.
bool is_parseval(const VectorFamily& f);

// The orbit {rho_g f}_{g in Gamma} in canonical order.
VectorFamily orbit_frame(const Representation& rep, const BitVector& seed);

// Recovers the generating unitary representation rho_g = Theta^* Lambda_g
// Theta of a Parseval family whose Gramian lies in the right regular group
// algebra; throws domain_error("not a group frame") otherwise. Unitarity and
// the orbit property rho_g f_e = f_g are validated on every matrix.
Representation representation_from_frame(const VectorFamily& f);

// Orthonormal basis of the range of a symmetric idempotent with an odd
// vector in its range (the Gram characterization); columns assemble to a
// synthesis operator realizing the Gramian.
std::vector<BitVector> orthonormal_range_basis(const BitMatrix& gram);

// A Parseval family (group-indexed when a group is supplied) whose Gramian
// equals the given matrix.
VectorFamily parseval_frame_from_gramian(const BitMatrix& gram);
VectorFamily parseval_frame_from_gramian(const BitMatrix& gram, const FiniteGroup& g);

}  // namespace bframe
