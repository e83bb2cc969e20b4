#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

// Dense bit-packed linear algebra over GF(2). Rows are packed into 64-bit
// words; bits past the logical length are kept zero so whole-word operations
// (xor, popcount) need no masking in the hot loops.

namespace bframe {

struct dimension_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t length) : n_(length), w_(words_for(length), 0) {}

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i, bool v) {
        uint64_t m = uint64_t{1} << (i & 63);
        if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= uint64_t{1} << (i & 63); }

    std::size_t weight() const {
        std::size_t s = 0;
        for (uint64_t x : w_) s += std::popcount(x);
        return s;
    }
    bool odd() const { return weight() & 1; }
    bool is_zero() const {
        for (uint64_t x : w_) if (x) return false;
        return true;
    }

    BitVector& operator^=(const BitVector& o) {
        if (o.n_ != n_) throw dimension_error("BitVector xor: length mismatch");
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend bool operator==(const BitVector&, const BitVector&) = default;

    std::span<const uint64_t> words() const { return w_; }
    std::span<uint64_t> words() { return w_; }

    std::string to_string() const {
        std::string s(n_, '0');
        for (std::size_t i = 0; i < n_; ++i) if (get(i)) s[i] = '1';
        return s;
    }

private:
    std::size_t n_ = 0;
    std::vector<uint64_t> w_;
    friend class BitMatrix;
};

// Sum a_i b_i mod 2. Not definite: even vectors are self-orthogonal.
int dot(const BitVector& a, const BitVector& b);

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : r_(rows), c_(cols), wpr_(words_for(cols)), bits_(rows * wpr_, 0) {}

    static BitMatrix identity(std::size_t n);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }

    bool get(std::size_t i, std::size_t j) const {
        return (bits_[i * wpr_ + (j >> 6)] >> (j & 63)) & 1;
    }
    void set(std::size_t i, std::size_t j, bool v) {
        uint64_t m = uint64_t{1} << (j & 63);
        uint64_t& w = bits_[i * wpr_ + (j >> 6)];
        if (v) w |= m; else w &= ~m;
    }

    std::span<const uint64_t> row_words(std::size_t i) const {
        return {bits_.data() + i * wpr_, wpr_};
    }
    std::span<uint64_t> row_words(std::size_t i) {
        return {bits_.data() + i * wpr_, wpr_};
    }
    void xor_row(std::size_t dst, std::size_t src) {
        auto* d = bits_.data() + dst * wpr_;
        auto* s = bits_.data() + src * wpr_;
        for (std::size_t k = 0; k < wpr_; ++k) d[k] ^= s[k];
    }
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        auto* x = bits_.data() + a * wpr_;
        auto* y = bits_.data() + b * wpr_;
        for (std::size_t k = 0; k < wpr_; ++k) std::swap(x[k], y[k]);
    }

    BitVector row(std::size_t i) const;
    void set_row(std::size_t i, const BitVector& v);
    BitVector col(std::size_t j) const;
    std::size_t row_weight(std::size_t i) const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

    std::string to_string() const;

private:
    std::size_t r_ = 0, c_ = 0, wpr_ = 0;
    std::vector<uint64_t> bits_;
};

BitMatrix matmul(const BitMatrix& a, const BitMatrix& b);
BitVector matvec(const BitMatrix& a, const BitVector& x);
BitMatrix transpose(const BitMatrix& m);
BitMatrix add(const BitMatrix& a, const BitMatrix& b);

// Row rank via leftmost-pivot Gaussian elimination (deterministic).
std::size_t rank(const BitMatrix& m);

// Reduced row echelon form; pivot column indices out-param optional.
BitMatrix row_echelon(const BitMatrix& m, std::vector<std::size_t>* pivot_cols = nullptr);

// Basis of the row space (the nonzero rows of the echelon form).
std::vector<BitVector> row_space_basis(const BitMatrix& m);

// Basis of {x : Mx = 0}, i.e. the dual of the row space.
std::vector<BitVector> kernel_basis(const BitMatrix& m);

bool is_symmetric(const BitMatrix& m);
bool is_idempotent(const BitMatrix& m);

// True iff rank(m) == cols, so some L with L m = I exists.
bool left_inverse_exists(const BitMatrix& m);

// Text-grid format: one row of 0/1 characters per line, spaces tolerated.
// Blank lines separate matrices when a file holds several.
BitMatrix parse_bit_grid(const std::string& text);
std::vector<BitMatrix> parse_bit_grids(const std::string& text);
BitMatrix load_bit_grid(const std::string& path);
std::vector<BitMatrix> load_bit_grids(const std::string& path);

}  // namespace bframe
