#include "bframe/classify.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "bframe/codes.hpp"

namespace bframe {

using json = nlohmann::json;

InducedAction::InducedAction(const SdoPartition& part,
                             const std::vector<Automorphism>& gens)
    : part_(&part) {
    const FiniteGroup& g = part.group();
    for (const auto& a : gens) {
        if (!a.group().same_group(g))
            throw domain_error("induce_action: automorphism of a different group");
        std::vector<uint32_t> perm(part.orbit_count());
        for (std::size_t i = 0; i < part.orbit_count(); ++i) {
            uint32_t img = part.orbit_of(a.apply(part.representative(i)));
            if (part.orbit(img).size() != part.orbit(i).size())
                throw domain_error("induce_action: orbit mapped onto different-sized orbit");
            // sigma~([g]) = [sigma(g)] must not depend on the member chosen
            for (uint32_t h : part.orbit(i))
                if (part.orbit_of(a.apply(h)) != img)
                    throw domain_error("induce_action: map does not descend to orbits");
            perm[i] = img;
        }
        if (perm[0] != 0)
            throw domain_error("induce_action: [e] not fixed");
        perms_.push_back(std::move(perm));
    }
}

std::vector<std::vector<uint32_t>> InducedAction::nontrivial_perms() const {
    std::vector<std::vector<uint32_t>> out;
    for (const auto& p : perms_) {
        std::vector<uint32_t> q(p.size() - 1);
        for (std::size_t i = 1; i < p.size(); ++i) q[i - 1] = p[i] - 1;
        out.push_back(std::move(q));
    }
    return out;
}

InducedAction induce_action(const SdoPartition& part,
                            const std::vector<Automorphism>& gens) {
    return InducedAction(part, gens);
}

bool subset_lex_less(uint64_t a, uint64_t b) {
    while (a || b) {
        if (!a) return true;   // proper prefix
        if (!b) return false;
        int la = std::countr_zero(a), lb = std::countr_zero(b);
        if (la != lb) return la < lb;
        a &= a - 1;
        b &= b - 1;
    }
    return false;
}

uint64_t apply_perm_to_mask(uint64_t mask, const std::vector<uint32_t>& perm) {
    uint64_t out = 0;
    while (mask) {
        int b = std::countr_zero(mask);
        mask &= mask - 1;
        out |= uint64_t{1} << perm[b];
    }
    return out;
}

ClassCatalog classify_closure(const SdoPartition& part, const InducedAction& action,
                              bool with_code_weights) {
    std::size_t n = part.nontrivial_count();
    if (n > 32)
        throw capacity_error("classify_closure: mask space 2^" + std::to_string(n) +
                             " does not fit a machine word; use classify_polya");
    if (n > 26)
        throw capacity_error("classify_closure: 2^" + std::to_string(n) +
                             " masks exceed the exhaustive cap; use classify_polya");
    auto gens = action.nontrivial_perms();
    uint64_t total = uint64_t{1} << n;
    std::vector<bool> visited(total, false);
    ClassCatalog cat;
    cat.group_desc = part.group().descriptor();
    cat.orbits = part.orbits();
    for (uint64_t seed = 0; seed < total; ++seed) {
        if (visited[seed]) continue;
        // breadth-first closure A_0 subset A_1 subset ... until stable
        std::vector<uint64_t> members{seed}, frontier{seed};
        visited[seed] = true;
        uint64_t canon = seed;
        while (!frontier.empty()) {
            std::vector<uint64_t> next;
            for (uint64_t m : frontier) {
                for (const auto& p : gens) {
                    uint64_t im = apply_perm_to_mask(m, p);
                    if (!visited[im]) {
                        visited[im] = true;
                        members.push_back(im);
                        next.push_back(im);
                        if (subset_lex_less(im, canon)) canon = im;
                    }
                }
            }
            frontier = std::move(next);
        }
        ClassInfo info;
        info.canonical_mask = canon;
        info.size = members.size();
        BitMatrix gram = gram_from_nu({&part, canon << 1 | 1});
        info.rank = static_cast<uint32_t>(rank(gram));
        if (with_code_weights) info.code_weight = code_weight(gram).weight;
        cat.classes.push_back(info);
    }
    std::sort(cat.classes.begin(), cat.classes.end(),
              [](const ClassInfo& a, const ClassInfo& b) {
                  if (a.rank != b.rank) return a.rank < b.rank;
                  return subset_lex_less(a.canonical_mask, b.canonical_mask);
              });
    return cat;
}

namespace {

struct PermHash {
    std::size_t operator()(const std::vector<uint8_t>& p) const {
        std::size_t h = 1469598103934665603ull;
        for (uint8_t x : p) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace

PolyaCounts classify_polya(const SdoPartition& part, const InducedAction& action,
                           uint64_t group_cap) {
    std::size_t n = part.nontrivial_count();
    auto gens = action.nontrivial_perms();
    std::vector<std::vector<uint8_t>> gens8;
    for (const auto& g : gens) {
        std::vector<uint8_t> p(n);
        for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<uint8_t>(g[i]);
        gens8.push_back(std::move(p));
    }
    std::vector<uint8_t> ident(n);
    for (std::size_t i = 0; i < n; ++i) ident[i] = static_cast<uint8_t>(i);
    std::unordered_set<std::vector<uint8_t>, PermHash> seen{ident};
    std::vector<std::vector<uint8_t>> frontier{ident};
    PolyaCounts out;
    out.per_size.assign(n + 1, 0);
    std::vector<uint64_t> acc(n + 1, 0);
    auto accumulate = [&](const std::vector<uint8_t>& s) {
        // product over cycles of (1 + x^len)
        std::array<uint64_t, 64> poly{};
        poly[0] = 1;
        std::size_t deg = 0;
        std::vector<bool> done(n, false);
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i]) continue;
            std::size_t len = 0, j = i;
            while (!done[j]) {
                done[j] = true;
                j = s[j];
                ++len;
            }
            for (std::size_t d = deg + 1; d-- > 0;)
                if (poly[d]) poly[d + len] += poly[d];
            deg += len;
        }
        for (std::size_t d = 0; d <= n; ++d) acc[d] += poly[d];
    };
    accumulate(ident);
    while (!frontier.empty()) {
        std::vector<std::vector<uint8_t>> next;
        for (const auto& s : frontier) {
            for (const auto& g : gens8) {
                std::vector<uint8_t> c(n);
                for (std::size_t i = 0; i < n; ++i) c[i] = g[s[i]];
                if (seen.insert(c).second) {
                    if (seen.size() > group_cap)
                        throw capacity_error("classify_polya: closed group exceeds cap");
                    accumulate(c);
                    next.push_back(std::move(c));
                }
            }
        }
        frontier = std::move(next);
    }
    out.group_order = seen.size();
    for (std::size_t d = 0; d <= n; ++d) {
        if (acc[d] % out.group_order != 0)
            throw domain_error("classify_polya: Burnside sum not divisible by group order");
        out.per_size[d] = acc[d] / out.group_order;
        out.total += out.per_size[d];
    }
    return out;
}

uint64_t canonical_subset(uint64_t mask, const InducedAction& action) {
    auto gens = action.nontrivial_perms();
    std::unordered_set<uint64_t> seen{mask};
    std::vector<uint64_t> frontier{mask};
    uint64_t best = mask;
    while (!frontier.empty()) {
        std::vector<uint64_t> next;
        for (uint64_t m : frontier) {
            for (const auto& p : gens) {
                uint64_t im = apply_perm_to_mask(m, p);
                if (seen.insert(im).second) {
                    next.push_back(im);
                    if (subset_lex_less(im, best)) best = im;
                }
            }
        }
        frontier = std::move(next);
    }
    return best;
}

std::vector<uint64_t> ClassCatalog::per_size_counts() const {
    std::size_t n = orbits.size() - 1;
    std::vector<uint64_t> counts(n + 1, 0);
    for (const auto& c : classes) counts[std::popcount(c.canonical_mask)] += 1;
    return counts;
}

std::string ClassCatalog::to_json() const {
    json j;
    j["group"] = group_desc;
    j["orbit_table"] = orbits;
    json cls = json::array();
    for (const auto& c : classes) {
        json e;
        e["canonical_mask_hex"] = mask_to_hex(c.canonical_mask);
        e["size"] = c.size;
        e["rank"] = c.rank;
        if (c.code_weight) e["code_weight"] = *c.code_weight;
        cls.push_back(e);
    }
    j["classes"] = cls;
    return j.dump(2);
}

std::string ClassCatalog::to_csv() const {
    std::string out = "canonical_mask_hex,size,rank,code_weight\n";
    for (const auto& c : classes) {
        out += mask_to_hex(c.canonical_mask) + "," + std::to_string(c.size) + "," +
               std::to_string(c.rank) + ",";
        if (c.code_weight) out += std::to_string(*c.code_weight);
        out += "\n";
    }
    return out;
}

ClassCatalog ClassCatalog::from_json(const std::string& text) {
    json j = json::parse(text);
    ClassCatalog cat;
    cat.group_desc = j.at("group").get<std::string>();
    cat.orbits = j.at("orbit_table").get<std::vector<std::vector<uint32_t>>>();
    for (const auto& e : j.at("classes")) {
        ClassInfo c;
        c.canonical_mask = hex_to_mask(e.at("canonical_mask_hex").get<std::string>());
        c.size = e.at("size").get<uint64_t>();
        c.rank = e.at("rank").get<uint32_t>();
        if (e.contains("code_weight")) c.code_weight = e.at("code_weight").get<uint32_t>();
        cat.classes.push_back(c);
    }
    return cat;
}

}  // namespace bframe
