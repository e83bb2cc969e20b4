#include "bframe/gramchar.hpp"

#include <algorithm>

namespace bframe {

EtaFunction::EtaFunction(const FiniteGroup& g, const std::vector<uint32_t>& support)
    : group_(g), bits_(g.order()) {
    for (uint32_t x : support) {
        if (x >= g.order()) throw domain_error("eta support element out of range");
        bits_.set(x, true);
    }
}

std::vector<uint32_t> EtaFunction::support() const {
    std::vector<uint32_t> out;
    for (uint32_t g = 0; g < group_.order(); ++g)
        if (bits_.get(g)) out.push_back(g);
    return out;
}

std::string EtaFunction::to_hex() const {
    // little-endian nibbles reversed into conventional hex: bit g of the mask
    // is bit g of the integer
    std::size_t nhex = (group_.order() + 3) / 4;
    std::string s;
    for (std::size_t i = nhex; i-- > 0;) {
        uint32_t nib = 0;
        for (uint32_t b = 0; b < 4; ++b) {
            std::size_t bit = i * 4 + b;
            if (bit < group_.order() && bits_.get(bit)) nib |= 1u << b;
        }
        s += "0123456789abcdef"[nib];
    }
    return s;
}

EtaFunction EtaFunction::from_hex(const FiniteGroup& g, const std::string& hex) {
    EtaFunction eta(g);
    std::size_t bit = 0;
    for (std::size_t i = hex.size(); i-- > 0 && bit < g.order();) {
        char c = hex[i];
        uint32_t nib;
        if (c >= '0' && c <= '9') nib = c - '0';
        else if (c >= 'a' && c <= 'f') nib = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') nib = c - 'A' + 10;
        else throw parse_error("bad hex digit in eta mask");
        for (uint32_t b = 0; b < 4 && bit < g.order(); ++b, ++bit)
            if (nib & (1u << b)) eta.set(static_cast<uint32_t>(bit), true);
    }
    return eta;
}

BitMatrix gram_from_eta(const EtaFunction& eta) {
    const FiniteGroup& g = eta.group();
    uint32_t k = g.order();
    BitMatrix m(k, k);
    for (uint32_t a = 0; a < k; ++a) {
        uint32_t ia = g.inv(a);
        for (uint32_t b = 0; b < k; ++b)
            if (eta.get(g.op(ia, b))) m.set(a, b, true);
    }
    return m;
}

std::optional<EtaFunction> eta_from_gram(const BitMatrix& m, const FiniteGroup& g) {
    if (m.rows() != g.order() || m.cols() != g.order())
        throw dimension_error("eta_from_gram: matrix size differs from group order");
    EtaFunction eta(g);
    uint32_t e = g.identity();
    for (uint32_t b = 0; b < g.order(); ++b) eta.set(b, m.get(e, b));
    if (gram_from_eta(eta) == m) return eta;
    return std::nullopt;
}

EtaFunction convolve(const EtaFunction& a, const EtaFunction& b) {
    if (!a.group().same_group(b.group()))
        throw domain_error("convolve: functions live on different groups");
    const FiniteGroup& grp = a.group();
    uint32_t k = grp.order();
    EtaFunction out(grp);
    std::vector<uint32_t> supp = a.support();
    for (uint32_t h = 0; h < k; ++h) {
        int s = 0;
        for (uint32_t g : supp)
            if (b.get(grp.op(grp.inv(g), h))) s ^= 1;
        out.set(h, s);
    }
    return out;
}

EtaCheck check_eta(const EtaFunction& eta) {
    const FiniteGroup& g = eta.group();
    EtaCheck r;
    r.identity_ok = eta.get(g.identity());
    r.symmetric = true;
    for (uint32_t x = 0; x < g.order(); ++x)
        if (eta.get(x) != eta.get(g.inv(x))) { r.symmetric = false; break; }
    r.conv_idempotent = convolve(eta, eta) == eta;
    return r;
}

bool square_root_check(const EtaFunction& eta) {
    const FiniteGroup& g = eta.group();
    if (!g.abelian()) throw domain_error("square_root_check: group must be abelian");
    uint32_t k = g.order();
    std::vector<int> sums(k, 0);
    for (uint32_t h = 0; h < k; ++h)
        if (eta.get(h)) sums[g.op(h, h)] ^= 1;
    for (uint32_t x = 0; x < k; ++x)
        if (sums[x] != static_cast<int>(eta.get(x))) return false;
    return true;
}

std::vector<EtaFunction> enumerate_valid_etas(const FiniteGroup& g) {
    uint32_t k = g.order();
    uint32_t e = g.identity();
    std::vector<std::vector<uint32_t>> classes;  // inversion classes, e excluded
    std::vector<bool> seen(k, false);
    seen[e] = true;
    for (uint32_t x = 0; x < k; ++x) {
        if (seen[x]) continue;
        uint32_t ix = g.inv(x);
        seen[x] = true;
        seen[ix] = true;
        if (ix != x) classes.push_back({x, ix});
        else classes.push_back({x});
    }
    if (classes.size() > 24)
        throw capacity_error(
            "enumerate_valid_etas: " + std::to_string(classes.size()) +
            " inversion classes exceed the brute-force cap of 24; use the "
            "symmetric doubling orbit path for odd-order abelian groups");
    std::vector<EtaFunction> out;
    uint64_t total = uint64_t{1} << classes.size();
    for (uint64_t bits = 0; bits < total; ++bits) {
        EtaFunction eta(g);
        eta.set(e, true);
        for (std::size_t i = 0; i < classes.size(); ++i)
            if (bits >> i & 1)
                for (uint32_t x : classes[i]) eta.set(x, true);
        if (convolve(eta, eta) == eta) out.push_back(std::move(eta));
    }
    std::sort(out.begin(), out.end(), [](const EtaFunction& a, const EtaFunction& b) {
        auto aw = a.bits().words(), bw = b.bits().words();
        for (std::size_t i = aw.size(); i-- > 0;)
            if (aw[i] != bw[i]) return aw[i] < bw[i];
        return false;
    });
    return out;
}

SdoPartition::SdoPartition(const FiniteGroup& g) : group_(g) {
    if (!g.abelian()) throw domain_error("sdo_partition: group must be abelian");
    if (g.order() % 2 == 0) throw domain_error("sdo_partition: group order must be odd");
    uint32_t k = g.order();
    orbit_of_.assign(k, 0);
    std::vector<bool> seen(k, false);
    for (uint32_t x = 0; x < k; ++x) {
        if (seen[x]) continue;
        // closure of {x} under g -> g^2 and g -> g^{-1}
        std::vector<uint32_t> orbit, stack{x};
        seen[x] = true;
        while (!stack.empty()) {
            uint32_t h = stack.back();
            stack.pop_back();
            orbit.push_back(h);
            for (uint32_t nxt : {g.op(h, h), g.inv(h)}) {
                if (!seen[nxt]) {
                    seen[nxt] = true;
                    stack.push_back(nxt);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        orbits_.push_back(std::move(orbit));
    }
    std::sort(orbits_.begin(), orbits_.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    for (std::size_t i = 0; i < orbits_.size(); ++i)
        for (uint32_t h : orbits_[i]) orbit_of_[h] = static_cast<uint32_t>(i);
}

EtaFunction eta_from_nu(const NuFunction& nu) {
    const SdoPartition& part = *nu.partition;
    if (part.orbit_count() < 64 && nu.mask >> part.orbit_count())
        throw domain_error("nu mask selects orbits beyond the partition");
    EtaFunction eta(part.group());
    for (std::size_t i = 0; i < part.orbit_count(); ++i)
        if (nu.mask >> i & 1)
            for (uint32_t h : part.orbit(i)) eta.set(h, true);
    return eta;
}

BitMatrix gram_from_nu(const NuFunction& nu) {
    if (!(nu.mask & 1))
        throw domain_error("gram_from_nu: nu([e]) must be 1");
    return gram_from_eta(eta_from_nu(nu));
}

uint64_t count_unitary_classes(const SdoPartition& part) {
    return uint64_t{1} << (part.orbit_count() - 1);
}

std::string mask_to_hex(uint64_t mask) {
    if (mask == 0) return "0";
    std::string s;
    while (mask) {
        s += "0123456789abcdef"[mask & 15];
        mask >>= 4;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

uint64_t hex_to_mask(const std::string& hex) {
    if (hex.empty()) throw parse_error("empty hex mask");
    uint64_t v = 0;
    std::string h = hex;
    if (h.size() > 2 && h[0] == '0' && (h[1] == 'x' || h[1] == 'X')) h = h.substr(2);
    if (h.size() > 16) throw parse_error("hex mask too long");
    for (char c : h) {
        uint32_t nib;
        if (c >= '0' && c <= '9') nib = c - '0';
        else if (c >= 'a' && c <= 'f') nib = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') nib = c - 'A' + 10;
        else throw parse_error("bad hex digit in mask");
        v = v << 4 | nib;
    }
    return v;
}

}  // namespace bframe
