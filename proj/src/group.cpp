#include "bframe/group.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>

namespace bframe {

struct FiniteGroup::Impl {
    Backend kind;
    uint32_t k = 0;
    uint32_t e = 0;
    bool abelian = false;
    std::string desc;
    uint32_t p = 0, q = 0;                    // zpq only
    std::vector<uint32_t> table;              // cayley only, k*k
    std::shared_ptr<const Impl> left, right;  // direct_product only
    std::vector<uint32_t> inv;

    void fill_inverses();

    uint32_t op(uint32_t a, uint32_t b) const {
        switch (kind) {
            case Backend::cyclic: return (a + b) % k;
            case Backend::zpq: {
                uint32_t out = 0, stride = k / p, aa = a, bb = b;
                for (uint32_t i = 0; i < q; ++i) {
                    uint32_t da = aa / stride, db = bb / stride;
                    out = out * p + (da + db) % p;
                    aa %= stride;
                    bb %= stride;
                    stride /= p;
                }
                return out;
            }
            case Backend::direct_product: {
                uint32_t kb = right->k;
                return left->op(a / kb, b / kb) * kb + right->op(a % kb, b % kb);
            }
            case Backend::cayley: return table[a * k + b];
        }
        return 0;
    }
};

uint32_t FiniteGroup::order() const { return impl_->k; }
uint32_t FiniteGroup::op(uint32_t a, uint32_t b) const { return impl_->op(a, b); }
uint32_t FiniteGroup::inv(uint32_t a) const { return impl_->inv[a]; }
uint32_t FiniteGroup::identity() const { return impl_->e; }
bool FiniteGroup::abelian() const { return impl_->abelian; }
FiniteGroup::Backend FiniteGroup::backend() const { return impl_->kind; }
const std::string& FiniteGroup::descriptor() const { return impl_->desc; }

uint32_t FiniteGroup::p() const {
    if (impl_->kind != Backend::zpq) throw domain_error("p(): not a Z_p^q group");
    return impl_->p;
}
uint32_t FiniteGroup::q() const {
    if (impl_->kind != Backend::zpq) throw domain_error("q(): not a Z_p^q group");
    return impl_->q;
}

std::vector<uint32_t> FiniteGroup::tuple_of(uint32_t idx) const {
    uint32_t pp = p(), qq = q();
    std::vector<uint32_t> t(qq);
    for (uint32_t i = qq; i-- > 0;) {
        t[i] = idx % pp;
        idx /= pp;
    }
    return t;
}

uint32_t FiniteGroup::index_of(const std::vector<uint32_t>& tuple) const {
    uint32_t pp = p();
    if (tuple.size() != q()) throw domain_error("index_of: wrong tuple length");
    uint32_t idx = 0;
    for (uint32_t d : tuple) {
        if (d >= pp) throw domain_error("index_of: digit out of range");
        idx = idx * pp + d;
    }
    return idx;
}

void FiniteGroup::Impl::fill_inverses() {
    inv.assign(k, 0);
    switch (kind) {
        case Backend::cyclic:
            for (uint32_t a = 0; a < k; ++a) inv[a] = (k - a) % k;
            break;
        case Backend::zpq: {
            uint32_t stride = k / p;
            for (uint32_t a = 0; a < k; ++a) {
                uint32_t out = 0, aa = a, s = stride;
                for (uint32_t i = 0; i < q; ++i) {
                    out = out * p + (p - aa / s) % p;
                    aa %= s;
                    s /= p;
                }
                inv[a] = out;
            }
            break;
        }
        case Backend::direct_product: {
            uint32_t kb = right->k;
            for (uint32_t a = 0; a < k; ++a)
                inv[a] = left->inv[a / kb] * kb + right->inv[a % kb];
            break;
        }
        case Backend::cayley: {
            // found by scanning; doubles as the inverse-axiom validation
            for (uint32_t a = 0; a < k; ++a) {
                bool found = false;
                for (uint32_t b = 0; b < k; ++b) {
                    if (op(a, b) == e) {
                        if (op(b, a) != e)
                            throw domain_error("cayley: one-sided inverse");
                        inv[a] = b;
                        found = true;
                        break;
                    }
                }
                if (!found) throw domain_error("cayley: missing inverse");
            }
            break;
        }
    }
}

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FiniteGroup FiniteGroup::cyclic(uint32_t n) {
    if (n < 1) throw domain_error("cyclic: order must be positive");
    if (n > (1u << 16)) throw capacity_error("cyclic: order above 2^16");
    auto im = std::make_shared<Impl>();
    im->kind = Backend::cyclic;
    im->k = n;
    im->e = 0;
    im->abelian = true;
    im->desc = "cyclic:" + std::to_string(n);
    im->fill_inverses();
    return FiniteGroup(im);
}

FiniteGroup FiniteGroup::zpq(uint32_t p, uint32_t q) {
    if (p == 2 || !is_prime(p)) throw domain_error("zpq: p must be an odd prime");
    if (q < 1) throw domain_error("zpq: q must be positive");
    uint64_t k = 1;
    for (uint32_t i = 0; i < q; ++i) {
        k *= p;
        if (k > (1u << 16)) throw capacity_error("zpq: order above 2^16");
    }
    auto im = std::make_shared<Impl>();
    im->kind = Backend::zpq;
    im->k = static_cast<uint32_t>(k);
    im->e = 0;
    im->abelian = true;
    im->p = p;
    im->q = q;
    im->desc = "zpq:" + std::to_string(p) + "," + std::to_string(q);
    im->fill_inverses();
    return FiniteGroup(im);
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    uint64_t k = uint64_t{a.order()} * b.order();
    if (k > (1u << 16)) throw capacity_error("direct_product: order above 2^16");
    auto im = std::make_shared<Impl>();
    im->kind = Backend::direct_product;
    im->k = static_cast<uint32_t>(k);
    im->left = a.impl_;
    im->right = b.impl_;
    im->e = a.identity() * b.order() + b.identity();
    im->abelian = a.abelian() && b.abelian();
    im->desc = "(" + a.descriptor() + ")x(" + b.descriptor() + ")";
    im->fill_inverses();
    return FiniteGroup(im);
}

FiniteGroup FiniteGroup::from_cayley(const std::vector<std::vector<uint32_t>>& table) {
    uint32_t k = static_cast<uint32_t>(table.size());
    if (k == 0) throw domain_error("cayley: empty table");
    if (k > (1u << 16)) throw capacity_error("cayley: order above 2^16");
    auto im = std::make_shared<Impl>();
    im->kind = Backend::cayley;
    im->k = k;
    im->table.resize(std::size_t{k} * k);
    for (uint32_t i = 0; i < k; ++i) {
        if (table[i].size() != k) throw domain_error("cayley: table is not square");
        for (uint32_t j = 0; j < k; ++j) {
            if (table[i][j] >= k) throw domain_error("cayley: entry out of range");
            im->table[i * k + j] = table[i][j];
        }
    }
    // Latin square check
    for (uint32_t i = 0; i < k; ++i) {
        std::vector<bool> seen_row(k, false), seen_col(k, false);
        for (uint32_t j = 0; j < k; ++j) {
            if (seen_row[im->table[i * k + j]])
                throw domain_error("cayley: row " + std::to_string(i) + " is not a permutation");
            seen_row[im->table[i * k + j]] = true;
            if (seen_col[im->table[j * k + i]])
                throw domain_error("cayley: column " + std::to_string(i) + " is not a permutation");
            seen_col[im->table[j * k + i]] = true;
        }
    }
    // two-sided identity
    bool have_e = false;
    for (uint32_t c = 0; c < k && !have_e; ++c) {
        bool ok = true;
        for (uint32_t j = 0; j < k; ++j)
            if (im->table[c * k + j] != j || im->table[j * k + c] != j) { ok = false; break; }
        if (ok) { im->e = c; have_e = true; }
    }
    if (!have_e) throw domain_error("cayley: no two-sided identity");
    // associativity: exhaustive for small k, seeded random triples above
    if (k <= 40) {
        for (uint32_t a = 0; a < k; ++a)
            for (uint32_t b = 0; b < k; ++b)
                for (uint32_t c = 0; c < k; ++c)
                    if (im->op(im->op(a, b), c) != im->op(a, im->op(b, c)))
                        throw domain_error("cayley: product is not associative");
    } else {
        std::mt19937_64 rng(0);
        std::uniform_int_distribution<uint32_t> d(0, k - 1);
        for (int t = 0; t < 10000; ++t) {
            uint32_t a = d(rng), b = d(rng), c = d(rng);
            if (im->op(im->op(a, b), c) != im->op(a, im->op(b, c)))
                throw domain_error("cayley: product is not associative");
        }
    }
    im->abelian = true;
    for (uint32_t a = 0; a < k && im->abelian; ++a)
        for (uint32_t b = a + 1; b < k; ++b)
            if (im->op(a, b) != im->op(b, a)) { im->abelian = false; break; }
    im->desc = "cayley:" + std::to_string(k);
    im->fill_inverses();
    return FiniteGroup(im);
}

FiniteGroup FiniteGroup::load_cayley(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw parse_error("cannot open cayley file: " + path);
    uint32_t k;
    if (!(f >> k)) throw parse_error("cayley file: missing order");
    std::vector<std::vector<uint32_t>> table(k, std::vector<uint32_t>(k));
    for (uint32_t i = 0; i < k; ++i)
        for (uint32_t j = 0; j < k; ++j)
            if (!(f >> table[i][j])) throw parse_error("cayley file: truncated table");
    auto g = from_cayley(table);
    return g;
}

FiniteGroup FiniteGroup::from_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw domain_error("group spec: expected kind:args");
    std::string kind = spec.substr(0, colon), args = spec.substr(colon + 1);
    auto number = [&](const std::string& s) -> uint32_t {
        try {
            std::size_t pos = 0;
            unsigned long v = std::stoul(s, &pos);
            if (pos != s.size() || v > UINT32_MAX) throw std::out_of_range(s);
            return static_cast<uint32_t>(v);
        } catch (const std::exception&) {
            throw domain_error("group spec: bad number '" + s + "'");
        }
    };
    if (kind == "cyclic") return cyclic(number(args));
    if (kind == "zpq") {
        auto comma = args.find(',');
        if (comma == std::string::npos) throw domain_error("group spec: zpq needs p,q");
        return zpq(number(args.substr(0, comma)), number(args.substr(comma + 1)));
    }
    if (kind == "cayley") return load_cayley(args);
    throw domain_error("group spec: unknown kind " + kind);
}

Automorphism::Automorphism(const FiniteGroup& g, std::vector<uint32_t> perm)
    : group_(g), perm_(std::move(perm)) {
    uint32_t k = g.order();
    if (perm_.size() != k) throw domain_error("automorphism: wrong permutation size");
    std::vector<bool> seen(k, false);
    for (uint32_t x : perm_) {
        if (x >= k || seen[x]) throw domain_error("automorphism: not a permutation");
        seen[x] = true;
    }
    if (perm_[g.identity()] != g.identity())
        throw domain_error("automorphism: does not fix the identity");
    auto check = [&](uint32_t a, uint32_t b) {
        if (perm_[g.op(a, b)] != g.op(perm_[a], perm_[b]))
            throw domain_error("automorphism: not a homomorphism");
    };
    if (k <= 2048) {
        for (uint32_t a = 0; a < k; ++a)
            for (uint32_t b = 0; b < k; ++b) check(a, b);
    } else {
        std::mt19937_64 rng(0);
        std::uniform_int_distribution<uint32_t> d(0, k - 1);
        for (int t = 0; t < 20000; ++t) check(d(rng), d(rng));
    }
}

Automorphism Automorphism::from_matrix(const FiniteGroup& g,
                                        const std::vector<std::vector<uint32_t>>& m) {
    uint32_t p = g.p(), q = g.q();
    if (m.size() != q) throw domain_error("from_matrix: wrong matrix size");
    std::vector<uint32_t> perm(g.order());
    for (uint32_t x = 0; x < g.order(); ++x) {
        auto t = g.tuple_of(x);
        std::vector<uint32_t> img(q, 0);
        for (uint32_t i = 0; i < q; ++i) {
            if (m[i].size() != q) throw domain_error("from_matrix: wrong matrix size");
            uint64_t s = 0;
            for (uint32_t j = 0; j < q; ++j) s += uint64_t{m[i][j]} * t[j];
            img[i] = static_cast<uint32_t>(s % p);
        }
        perm[x] = g.index_of(img);
    }
    return Automorphism(g, std::move(perm));
}

BitMatrix left_regular(const FiniteGroup& g, uint32_t elem) {
    uint32_t k = g.order();
    BitMatrix m(k, k);
    for (uint32_t b = 0; b < k; ++b) m.set(g.op(elem, b), b, true);
    return m;
}

BitMatrix right_regular(const FiniteGroup& g, uint32_t elem) {
    uint32_t k = g.order();
    BitMatrix m(k, k);
    for (uint32_t a = 0; a < k; ++a) m.set(a, g.op(a, elem), true);
    return m;
}

uint64_t gl_order(uint32_t p, uint32_t q) {
    uint64_t pq = 1;
    for (uint32_t i = 0; i < q; ++i) pq *= p;
    uint64_t o = 1, pi = 1;
    for (uint32_t i = 0; i < q; ++i) {
        o *= pq - pi;
        pi *= p;
    }
    return o;
}

uint32_t unit_group_generator(uint32_t n) {
    std::vector<uint32_t> units;
    for (uint32_t x = 1; x < n; ++x)
        if (std::gcd(x, n) == 1) units.push_back(x);
    for (uint32_t z : units) {
        if (z == 1 && units.size() > 1) continue;
        uint64_t x = 1;
        std::size_t ord = 0;
        do {
            x = x * z % n;
            ++ord;
        } while (x != 1);
        if (ord == units.size()) return z;
    }
    throw domain_error("unit group of Z_" + std::to_string(n) + " is not cyclic");
}

namespace {

using Mat = std::vector<uint32_t>;  // q*q entries, row-major, mod p

Mat mat_mul(const Mat& a, const Mat& b, uint32_t p, uint32_t q) {
    Mat c(q * q, 0);
    for (uint32_t i = 0; i < q; ++i)
        for (uint32_t l = 0; l < q; ++l) {
            uint32_t v = a[i * q + l];
            if (!v) continue;
            for (uint32_t j = 0; j < q; ++j)
                c[i * q + j] = (c[i * q + j] + v * b[l * q + j]) % p;
        }
    return c;
}

uint64_t encode(const Mat& m, uint32_t p) {
    uint64_t v = 0;
    for (uint32_t x : m) v = v * p + x;
    return v;
}

// order of m in GL(q,p), bounded by cap
uint64_t mat_order(const Mat& m, uint32_t p, uint32_t q, uint64_t cap) {
    Mat ident(q * q, 0);
    for (uint32_t i = 0; i < q; ++i) ident[i * q + i] = 1;
    Mat x = m;
    for (uint64_t n = 1; n <= cap; ++n) {
        if (x == ident) return n;
        x = mat_mul(x, m, p, q);
    }
    return 0;
}

// companion matrix of x^q = c_{q-1} x^{q-1} + ... + c_0 acting on tuples
Mat companion(const std::vector<uint32_t>& coeffs, uint32_t q) {
    Mat m(q * q, 0);
    for (uint32_t i = 0; i + 1 < q; ++i) m[(i + 1) * q + i] = 1;
    for (uint32_t i = 0; i < q; ++i) m[i * q + (q - 1)] = coeffs[i];
    return m;
}

// first companion matrix (coefficients in lexicographic order, c_0 most
// significant) of full multiplicative order p^q - 1, i.e. of a primitive
// polynomial
Mat primitive_companion(uint32_t p, uint32_t q) {
    uint64_t pq = 1;
    for (uint32_t i = 0; i < q; ++i) pq *= p;
    std::vector<uint32_t> coeffs(q, 0);
    uint64_t total = pq;
    for (uint64_t v = 0; v < total; ++v) {
        uint64_t x = v;
        for (uint32_t i = q; i-- > 0;) {
            coeffs[i] = static_cast<uint32_t>(x % p);
            x /= p;
        }
        Mat m = companion(coeffs, q);
        if (mat_order(m, p, q, pq - 1) == pq - 1) return m;
    }
    throw domain_error("no primitive polynomial found");
}

uint64_t matrix_group_order(const std::vector<Mat>& gens, uint32_t p, uint32_t q,
                            uint64_t cap) {
    uint64_t space = 1;
    for (uint32_t i = 0; i < q * q; ++i) {
        space *= p;
        if (space > (uint64_t{1} << 40)) throw capacity_error("matrix closure too large");
    }
    std::vector<bool> seen(space, false);
    Mat ident(q * q, 0);
    for (uint32_t i = 0; i < q; ++i) ident[i * q + i] = 1;
    std::vector<Mat> frontier{ident};
    seen[encode(ident, p)] = true;
    uint64_t count = 1;
    while (!frontier.empty()) {
        std::vector<Mat> next;
        for (const Mat& m : frontier) {
            for (const Mat& g : gens) {
                Mat prod = mat_mul(g, m, p, q);
                uint64_t code = encode(prod, p);
                if (!seen[code]) {
                    seen[code] = true;
                    ++count;
                    if (count > cap) throw capacity_error("matrix closure exceeds cap");
                    next.push_back(std::move(prod));
                }
            }
        }
        frontier = std::move(next);
    }
    return count;
}

}  // namespace

std::vector<Automorphism> aut_generators(const FiniteGroup& g) {
    if (g.backend() == FiniteGroup::Backend::cyclic) {
        uint32_t n = g.order();
        if (n == 1) return {};
        // n must be an odd prime power for the unit group to be cyclic here
        uint32_t m = n, p = 0;
        for (uint32_t d = 3; d * d <= m; d += 2)
            if (m % d == 0) { p = d; break; }
        if (p == 0) p = m;
        while (m % p == 0) m /= p;
        if (m != 1 || p == 2 || n % 2 == 0)
            throw domain_error("aut_generators: cyclic order must be an odd prime power");
        uint32_t z = unit_group_generator(n);
        std::vector<uint32_t> perm(n);
        for (uint32_t x = 0; x < n; ++x) perm[x] = static_cast<uint32_t>(uint64_t{x} * z % n);
        std::vector<Automorphism> out;
        out.emplace_back(g, std::move(perm));
        return out;
    }
    if (g.backend() != FiniteGroup::Backend::zpq)
        throw domain_error("aut_generators: unsupported group backend");

    uint32_t p = g.p(), q = g.q();
    if (q == 1) {
        uint32_t z = unit_group_generator(p);
        return {Automorphism::from_matrix(g, {{z}})};
    }
    Mat c = primitive_companion(p, q);
    Mat t(q * q, 0);
    for (uint32_t i = 0; i < q; ++i) t[i * q + i] = 1;
    t[0 * q + 1] = 1;
    uint64_t got = matrix_group_order({c, t}, p, q, gl_order(p, q));
    if (got != gl_order(p, q))
        throw domain_error("aut_generators: generator set closes to order " +
                           std::to_string(got) + ", expected " +
                           std::to_string(gl_order(p, q)));
    auto to_rows = [&](const Mat& m) {
        std::vector<std::vector<uint32_t>> rows(q, std::vector<uint32_t>(q));
        for (uint32_t i = 0; i < q; ++i)
            for (uint32_t j = 0; j < q; ++j) rows[i][j] = m[i * q + j];
        return rows;
    };
    std::vector<Automorphism> out;
    out.push_back(Automorphism::from_matrix(g, to_rows(c)));
    out.push_back(Automorphism::from_matrix(g, to_rows(t)));
    return out;
}

}  // namespace bframe
