#include "bframe/bitmat.hpp"

#include <fstream>
#include <sstream>

namespace bframe {

int dot(const BitVector& a, const BitVector& b) {
    if (a.size() != b.size()) throw dimension_error("dot: length mismatch");
    uint64_t acc = 0;
    auto aw = a.words(), bw = b.words();
    for (std::size_t i = 0; i < aw.size(); ++i) acc ^= aw[i] & bw[i];
    return std::popcount(acc) & 1;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitVector BitMatrix::row(std::size_t i) const {
    BitVector v(c_);
    auto rw = row_words(i);
    for (std::size_t k = 0; k < wpr_; ++k) v.words()[k] = rw[k];
    return v;
}

void BitMatrix::set_row(std::size_t i, const BitVector& v) {
    if (v.size() != c_) throw dimension_error("set_row: length mismatch");
    auto rw = row_words(i);
    for (std::size_t k = 0; k < wpr_; ++k) rw[k] = v.words()[k];
}

BitVector BitMatrix::col(std::size_t j) const {
    BitVector v(r_);
    for (std::size_t i = 0; i < r_; ++i) v.set(i, get(i, j));
    return v;
}

std::size_t BitMatrix::row_weight(std::size_t i) const {
    std::size_t s = 0;
    for (uint64_t x : row_words(i)) s += std::popcount(x);
    return s;
}

std::string BitMatrix::to_string() const {
    std::string out;
    out.reserve(r_ * (c_ + 1));
    for (std::size_t i = 0; i < r_; ++i) {
        for (std::size_t j = 0; j < c_; ++j) out += get(i, j) ? '1' : '0';
        out += '\n';
    }
    return out;
}

BitMatrix matmul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) throw dimension_error("matmul: inner dimensions differ");
    BitMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto arow = a.row_words(i);
        auto crow = c.row_words(i);
        for (std::size_t wk = 0; wk < arow.size(); ++wk) {
            uint64_t w = arow[wk];
            while (w) {
                std::size_t k = wk * 64 + std::countr_zero(w);
                w &= w - 1;
                auto brow = b.row_words(k);
                for (std::size_t t = 0; t < crow.size(); ++t) crow[t] ^= brow[t];
            }
        }
    }
    return c;
}

BitVector matvec(const BitMatrix& a, const BitVector& x) {
    if (a.cols() != x.size()) throw dimension_error("matvec: dimensions differ");
    BitVector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        uint64_t acc = 0;
        auto rw = a.row_words(i);
        auto xw = x.words();
        for (std::size_t k = 0; k < rw.size(); ++k) acc ^= rw[k] & xw[k];
        y.set(i, std::popcount(acc) & 1);
    }
    return y;
}

BitMatrix transpose(const BitMatrix& m) {
    BitMatrix t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto rw = m.row_words(i);
        for (std::size_t wk = 0; wk < rw.size(); ++wk) {
            uint64_t w = rw[wk];
            while (w) {
                std::size_t j = wk * 64 + std::countr_zero(w);
                w &= w - 1;
                t.set(j, i, true);
            }
        }
    }
    return t;
}

BitMatrix add(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw dimension_error("add: shape mismatch");
    BitMatrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto crow = c.row_words(i);
        auto brow = b.row_words(i);
        for (std::size_t k = 0; k < crow.size(); ++k) crow[k] ^= brow[k];
    }
    return c;
}

BitMatrix row_echelon(const BitMatrix& m, std::vector<std::size_t>* pivot_cols) {
    BitMatrix e = m;
    if (pivot_cols) pivot_cols->clear();
    std::size_t r = 0;
    for (std::size_t c = 0; c < e.cols() && r < e.rows(); ++c) {
        std::size_t piv = r;
        while (piv < e.rows() && !e.get(piv, c)) ++piv;
        if (piv == e.rows()) continue;
        e.swap_rows(r, piv);
        for (std::size_t i = 0; i < e.rows(); ++i)
            if (i != r && e.get(i, c)) e.xor_row(i, r);
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    return e;
}

std::size_t rank(const BitMatrix& m) {
    std::vector<std::size_t> piv;
    row_echelon(m, &piv);
    return piv.size();
}

std::vector<BitVector> row_space_basis(const BitMatrix& m) {
    std::vector<std::size_t> piv;
    BitMatrix e = row_echelon(m, &piv);
    std::vector<BitVector> basis;
    basis.reserve(piv.size());
    for (std::size_t i = 0; i < piv.size(); ++i) basis.push_back(e.row(i));
    return basis;
}

std::vector<BitVector> kernel_basis(const BitMatrix& m) {
    std::vector<std::size_t> piv;
    BitMatrix e = row_echelon(m, &piv);
    std::vector<bool> is_piv(m.cols(), false);
    for (std::size_t c : piv) is_piv[c] = true;
    std::vector<BitVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_piv[f]) continue;
        BitVector v(m.cols());
        v.set(f, true);
        for (std::size_t i = 0; i < piv.size(); ++i)
            if (e.get(i, f)) v.set(piv[i], true);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool is_symmetric(const BitMatrix& m) {
    if (m.rows() != m.cols()) throw dimension_error("is_symmetric: matrix not square");
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.cols(); ++j)
            if (m.get(i, j) != m.get(j, i)) return false;
    return true;
}

bool is_idempotent(const BitMatrix& m) {
    if (m.rows() != m.cols()) throw dimension_error("is_idempotent: matrix not square");
    return matmul(m, m) == m;
}

bool left_inverse_exists(const BitMatrix& m) { return rank(m) == m.cols(); }

BitMatrix parse_bit_grid(const std::string& text) {
    auto all = parse_bit_grids(text);
    if (all.size() != 1) throw parse_error("expected exactly one bit grid");
    return all[0];
}

std::vector<BitMatrix> parse_bit_grids(const std::string& text) {
    std::vector<BitMatrix> out;
    std::vector<std::string> rows;
    auto flush = [&] {
        if (rows.empty()) return;
        BitMatrix m(rows.size(), rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows[0].size())
                throw parse_error("bit grid rows have unequal length");
            for (std::size_t j = 0; j < rows[i].size(); ++j)
                m.set(i, j, rows[i][j] == '1');
        }
        out.push_back(std::move(m));
        rows.clear();
    };
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        std::string bits;
        for (char ch : line) {
            if (ch == '0' || ch == '1') bits += ch;
            else if (ch == ' ' || ch == '\t' || ch == '\r') continue;
            else throw parse_error(std::string("unexpected character in bit grid: ") + ch);
        }
        if (bits.empty()) flush();
        else rows.push_back(bits);
    }
    flush();
    if (out.empty()) throw parse_error("empty bit grid");
    return out;
}

static std::string slurp(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw parse_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

BitMatrix load_bit_grid(const std::string& path) { return parse_bit_grid(slurp(path)); }
std::vector<BitMatrix> load_bit_grids(const std::string& path) { return parse_bit_grids(slurp(path)); }

}  // namespace bframe
