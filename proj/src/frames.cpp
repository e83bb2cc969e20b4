#include "bframe/frames.hpp"

#include <algorithm>

#include "bframe/gramchar.hpp"

namespace bframe {

VectorFamily::VectorFamily(std::size_t dim, std::vector<BitVector> vectors)
    : n_(dim), vecs_(std::move(vectors)) {
    for (const auto& v : vecs_)
        if (v.size() != n_) throw dimension_error("vector family: mixed dimensions");
}

VectorFamily::VectorFamily(std::size_t dim, std::vector<BitVector> vectors,
                           const FiniteGroup& g)
    : VectorFamily(dim, std::move(vectors)) {
    if (vecs_.size() != g.order())
        throw dimension_error("vector family: size differs from group order");
    group_ = g;
}

const FiniteGroup& VectorFamily::group() const {
    if (!group_) throw domain_error("vector family is not group-indexed");
    return *group_;
}

VectorFamily VectorFamily::from_analysis(const BitMatrix& theta) {
    std::vector<BitVector> vecs;
    vecs.reserve(theta.rows());
    for (std::size_t j = 0; j < theta.rows(); ++j) vecs.push_back(theta.row(j));
    return VectorFamily(theta.cols(), std::move(vecs));
}

VectorFamily VectorFamily::from_analysis(const BitMatrix& theta, const FiniteGroup& g) {
    std::vector<BitVector> vecs;
    vecs.reserve(theta.rows());
    for (std::size_t j = 0; j < theta.rows(); ++j) vecs.push_back(theta.row(j));
    return VectorFamily(theta.cols(), std::move(vecs), g);
}

Representation::Representation(const FiniteGroup& g, std::vector<BitMatrix> mats)
    : group_(g), mats_(std::move(mats)) {
    if (mats_.size() != g.order())
        throw dimension_error("representation: matrix count differs from group order");
    for (const auto& m : mats_)
        if (m.rows() != mats_[0].rows() || m.cols() != m.rows())
            throw dimension_error("representation: matrices must be square, equal size");
}

bool Representation::is_homomorphism() const {
    for (uint32_t g = 0; g < group_.order(); ++g)
        for (uint32_t h = 0; h < group_.order(); ++h)
            if (matmul(mats_[g], mats_[h]) != mats_[group_.op(g, h)]) return false;
    return true;
}

bool Representation::is_unitary() const {
    BitMatrix ident = BitMatrix::identity(dim());
    for (const auto& m : mats_)
        if (matmul(m, transpose(m)) != ident) return false;
    return true;
}

Representation Representation::left_regular_rep(const FiniteGroup& g) {
    std::vector<BitMatrix> mats;
    mats.reserve(g.order());
    for (uint32_t x = 0; x < g.order(); ++x) mats.push_back(left_regular(g, x));
    return Representation(g, std::move(mats));
}

Representation Representation::right_regular_rep(const FiniteGroup& g) {
    std::vector<BitMatrix> mats;
    mats.reserve(g.order());
    for (uint32_t x = 0; x < g.order(); ++x) mats.push_back(right_regular(g, x));
    return Representation(g, std::move(mats));
}

BitMatrix analysis(const VectorFamily& f) {
    if (f.size() == 0) throw domain_error("analysis: empty family");
    BitMatrix theta(f.size(), f.dim());
    for (std::size_t j = 0; j < f.size(); ++j) theta.set_row(j, f[j]);
    return theta;
}

BitMatrix synthesis(const VectorFamily& f) { return transpose(analysis(f)); }

BitMatrix frame_operator(const VectorFamily& f) {
    BitMatrix theta = analysis(f);
    return matmul(transpose(theta), theta);
}

BitMatrix gramian(const VectorFamily& f) {
    BitMatrix theta = analysis(f);
    return matmul(theta, transpose(theta));
}

bool is_parseval(const VectorFamily& f) {
    return frame_operator(f) == BitMatrix::identity(f.dim());
}

VectorFamily orbit_frame(const Representation& rep, const BitVector& seed) {
    if (seed.size() != rep.dim())
        throw dimension_error("orbit_frame: seed length differs from representation dim");
    std::vector<BitVector> vecs;
    vecs.reserve(rep.group().order());
    for (uint32_t g = 0; g < rep.group().order(); ++g)
        vecs.push_back(matvec(rep[g], seed));
    return VectorFamily(seed.size(), std::move(vecs), rep.group());
}

Representation representation_from_frame(const VectorFamily& f) {
    const FiniteGroup& grp = f.group();
    if (!is_parseval(f))
        throw domain_error("not a group frame: family is not Parseval");
    BitMatrix theta = analysis(f);
    BitMatrix gram = matmul(theta, transpose(theta));
    if (!eta_from_gram(gram, grp))
        throw domain_error("not a group frame: Gramian is outside the group algebra");
    BitMatrix theta_star = transpose(theta);
    std::vector<BitMatrix> mats;
    mats.reserve(grp.order());
    BitMatrix ident = BitMatrix::identity(f.dim());
    for (uint32_t g = 0; g < grp.order(); ++g) {
        BitMatrix rho = matmul(theta_star, matmul(left_regular(grp, g), theta));
        if (matmul(rho, transpose(rho)) != ident)
            throw domain_error("recovered representation matrix is not unitary");
        if (matvec(rho, f[grp.identity()]) != f[g])
            throw domain_error("recovered representation does not reproduce the orbit");
        mats.push_back(std::move(rho));
    }
    return Representation(grp, std::move(mats));
}

std::vector<BitVector> orthonormal_range_basis(const BitMatrix& gram) {
    if (gram.rows() != gram.cols())
        throw dimension_error("orthonormal_range_basis: matrix not square");
    // Range of a symmetric matrix = its row space.
    std::vector<BitVector> pending = row_space_basis(gram);
    std::vector<BitVector> basis;
    while (!pending.empty()) {
        // keep pending vectors orthogonal to the basis found so far
        std::vector<BitVector> reduced;
        for (auto& v : pending) {
            for (const auto& b : basis)
                if (dot(v, b)) v ^= b;
            if (!v.is_zero()) reduced.push_back(std::move(v));
        }
        pending = std::move(reduced);
        if (pending.empty()) break;
        auto odd_it = std::find_if(pending.begin(), pending.end(),
                                   [](const BitVector& v) { return v.odd(); });
        if (odd_it != pending.end()) {
            basis.push_back(*odd_it);
            pending.erase(odd_it);
            continue;
        }
        // all residuals even: pull out a hyperbolic pair u,v with <u,v> = 1
        // and mix it with an odd basis vector b; {u+b, v+b, u+v+b} is an
        // orthonormal triple spanning <u, v, b>
        bool absorbed = false;
        for (std::size_t i = 0; i < pending.size() && !absorbed; ++i) {
            for (std::size_t j = i + 1; j < pending.size() && !absorbed; ++j) {
                if (!dot(pending[i], pending[j])) continue;
                if (basis.empty())
                    throw domain_error(
                        "orthonormal_range_basis: range has no odd vector");
                BitVector u = pending[i], v = pending[j], b = basis.back();
                basis.pop_back();
                basis.push_back(u ^ b);
                basis.push_back(v ^ b);
                basis.push_back(u ^ v ^ b);
                pending.erase(pending.begin() + j);
                pending.erase(pending.begin() + i);
                absorbed = true;
            }
        }
        if (!absorbed)
            throw domain_error("orthonormal_range_basis: degenerate dot product on range");
    }
    return basis;
}

static VectorFamily frame_from_gram_impl(const BitMatrix& gram,
                                         const FiniteGroup* grp) {
    if (!is_symmetric(gram) || !is_idempotent(gram))
        throw domain_error("parseval_frame_from_gramian: matrix is not a symmetric idempotent");
    std::vector<BitVector> basis = orthonormal_range_basis(gram);
    std::size_t k = gram.rows(), n = basis.size();
    // Theta columns are the basis vectors; frame vector f_j is row j.
    std::vector<BitVector> vecs(k, BitVector(n));
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t j = 0; j < k; ++j)
            if (basis[c].get(j)) vecs[j].set(c, true);
    VectorFamily fam = grp ? VectorFamily(n, std::move(vecs), *grp)
                           : VectorFamily(n, std::move(vecs));
    if (gramian(fam) != gram)
        throw domain_error("parseval_frame_from_gramian: reconstruction failed");
    return fam;
}

VectorFamily parseval_frame_from_gramian(const BitMatrix& gram) {
    return frame_from_gram_impl(gram, nullptr);
}

VectorFamily parseval_frame_from_gramian(const BitMatrix& gram, const FiniteGroup& g) {
    if (gram.rows() != g.order())
        throw dimension_error("parseval_frame_from_gramian: size differs from group order");
    return frame_from_gram_impl(gram, &g);
}

}  // namespace bframe
