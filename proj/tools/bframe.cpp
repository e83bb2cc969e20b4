// bframe: construct, classify and evaluate binary Parseval group frames.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bframe/bridge.hpp"
#include "bframe/classify.hpp"
#include "bframe/codes.hpp"
#include "bframe/frames.hpp"
#include "bframe/gramchar.hpp"
#include "bframe/group.hpp"
#include "bframe/plot.hpp"

using namespace bframe;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;     // usage or domain errors
constexpr int kExitCapacity = 2;  // capacity or fixture errors

void write_or_print(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot write " + out_path);
    f << content;
}

int cmd_classify(const std::string& spec, const std::string& mode,
                 const std::string& format, const std::string& out_path) {
    FiniteGroup g = FiniteGroup::from_spec(spec);
    if (mode == "explicit" || mode == "closure") {
        if (!g.abelian() || g.order() % 2 == 0) {
            // generic brute-force path for small groups outside the SDO theory
            auto etas = enumerate_valid_etas(g);
            std::cout << "group " << g.descriptor() << ": " << etas.size()
                      << " valid coefficient functions (no automorphism reduction)\n";
            for (const auto& eta : etas)
                std::cout << "  eta 0x" << eta.to_hex()
                          << " rank " << rank(gram_from_eta(eta)) << "\n";
            return kExitOk;
        }
        SdoPartition part(g);
        InducedAction action(part, aut_generators(g));
        bool weights = g.order() <= 128;
        ClassCatalog cat = classify_closure(part, action, weights);
        std::cout << "group " << g.descriptor() << ": " << cat.classes.size()
                  << " automorphic switching equivalence classes\n";
        auto counts = cat.per_size_counts();
        std::cout << "|J| counts (including [e]):";
        for (std::size_t m = 0; m < counts.size(); ++m)
            if (counts[m]) std::cout << " " << m + 1 << ":" << counts[m];
        std::cout << "\n";
        write_or_print(out_path, format == "csv" ? cat.to_csv() : cat.to_json());
        return kExitOk;
    }
    if (mode == "polya") {
        SdoPartition part(g);
        InducedAction action(part, aut_generators(g));
        PolyaCounts pc = classify_polya(part, action);
        std::cout << "group " << g.descriptor() << ": " << pc.total
                  << " classes via cycle index (induced group order "
                  << pc.group_order << ")\n";
        nlohmann::json j;
        j["group"] = g.descriptor();
        j["induced_group_order"] = pc.group_order;
        j["per_size"] = pc.per_size;
        j["total"] = pc.total;
        write_or_print(out_path, j.dump(2));
        return kExitOk;
    }
    std::cerr << "unknown mode: " << mode << "\n";
    return kExitUsage;
}

int cmd_enumerate(const std::string& spec) {
    FiniteGroup g = FiniteGroup::from_spec(spec);
    auto etas = enumerate_valid_etas(g);
    std::cout << "group " << g.descriptor() << ": " << etas.size()
              << " valid coefficient functions\n";
    for (const auto& eta : etas) std::cout << "0x" << eta.to_hex() << "\n";
    return kExitOk;
}

NuFunction parse_nu(const SdoPartition& part, const std::string& mask_hex) {
    uint64_t mask = hex_to_mask(mask_hex);
    if (part.orbit_count() < 64 && mask >> part.orbit_count())
        throw domain_error("mask selects orbits beyond the partition");
    if (!(mask & 1)) throw domain_error("mask must include orbit [e] (bit 0)");
    return {&part, mask};
}

int cmd_weight(const std::string& spec, const std::string& mask_hex,
               const std::string& out_path) {
    FiniteGroup g = FiniteGroup::from_spec(spec);
    SdoPartition part(g);
    NuFunction nu = parse_nu(part, mask_hex);
    BitMatrix gram = gram_from_nu(nu);
    CodeReport rep = robustness(gram);
    write_or_print(out_path, rep.to_json());
    return kExitOk;
}

int cmd_simulate(const std::string& spec, const std::string& mask_hex,
                 const std::string& type, std::size_t m, const std::string& mode,
                 uint64_t trials, uint64_t seed, const std::string& out_path) {
    FiniteGroup g = FiniteGroup::from_spec(spec);
    SdoPartition part(g);
    NuFunction nu = parse_nu(part, mask_hex);
    BitMatrix gram = gram_from_nu(nu);
    VectorFamily frame = parseval_frame_from_gramian(gram, g);
    if (type == "erasure") {
        ErasureReport rep = simulate_erasures(frame, m, mode == "exhaustive", trials, seed);
        write_or_print(out_path, rep.to_json());
        return kExitOk;
    }
    if (type == "bitflip") {
        BitflipReport rep = simulate_bitflips(frame, m, trials, seed);
        write_or_print(out_path, rep.to_json());
        return kExitOk;
    }
    std::cerr << "unknown simulation type: " << type << "\n";
    return kExitUsage;
}

int cmd_compare(uint32_t p, uint32_t q, const std::string& format,
                const std::string& out_path) {
    CompareTable table = compare_groups(p, q);
    write_or_print(out_path, format == "csv" ? table.to_csv() : table.to_json());
    return kExitOk;
}

int cmd_plot_sdo(const std::string& spec, const std::string& out_path,
                 const std::string& json_path) {
    FiniteGroup g = FiniteGroup::from_spec(spec);
    SdoPlotData data = sdo_plot_data(g);
    std::cout << "Z_" << data.p << "^2: " << data.orbits.size()
              << " nontrivial orbits on " << data.lines.size() << " lines\n";
    if (!out_path.empty()) write_or_print(out_path, data.to_svg());
    if (!json_path.empty()) write_or_print(json_path, data.to_json());
    if (out_path.empty() && json_path.empty()) write_or_print("", data.to_json());
    return kExitOk;
}

// ---- verify: re-derive the shipped fixture claims end to end ----

struct Verifier {
    std::string fixtures;
    std::string only;
    int failures = 0;
    int ran = 0;

    bool enabled(const std::string& name) const {
        return only.empty() || name.find(only) != std::string::npos;
    }
    void check(const std::string& name, const std::function<bool()>& fn) {
        if (!enabled(name)) return;
        ++ran;
        bool ok = false;
        std::string err;
        try {
            ok = fn();
        } catch (const std::exception& e) {
            err = e.what();
        }
        std::cout << (ok ? "PASS" : "FAIL") << "  " << name;
        if (!ok && !err.empty()) std::cout << "  (" << err << ")";
        std::cout << "\n";
        if (!ok) ++failures;
    }
    std::string path(const std::string& name) const {
        std::string p = fixtures + "/" + name;
        if (!std::filesystem::exists(p))
            throw capacity_error("missing fixture " + p);
        return p;
    }
};

int cmd_verify(const std::string& fixtures, const std::string& only) {
    Verifier v{fixtures, only};

    v.check("z27-shift-parseval-basis-orbit", [&] {
        FiniteGroup z27 = FiniteGroup::cyclic(27);
        BitMatrix s9(9, 9);
        for (uint32_t i = 0; i < 9; ++i) s9.set((i + 1) % 9, i, true);
        std::vector<BitMatrix> mats;
        BitMatrix cur = BitMatrix::identity(9);
        for (uint32_t i = 0; i < 27; ++i) {
            mats.push_back(cur);
            cur = matmul(s9, cur);
        }
        Representation rep(z27, std::move(mats));
        BitVector e1(9);
        e1.set(0, true);
        VectorFamily fam = orbit_frame(rep, e1);
        BitMatrix theta_star = synthesis(fam);
        for (uint32_t j = 0; j < 27; ++j)
            for (uint32_t r = 0; r < 9; ++r)
                if (theta_star.get(r, j) != (j % 9 == r)) return false;
        return is_parseval(fam);
    });

    v.check("z27-shift-nonparseval-seed", [&] {
        FiniteGroup z27 = FiniteGroup::cyclic(27);
        BitMatrix s9(9, 9);
        for (uint32_t i = 0; i < 9; ++i) s9.set((i + 1) % 9, i, true);
        std::vector<BitMatrix> mats;
        BitMatrix cur = BitMatrix::identity(9);
        for (uint32_t i = 0; i < 27; ++i) {
            mats.push_back(cur);
            cur = matmul(s9, cur);
        }
        Representation rep(z27, std::move(mats));
        BitMatrix seed = parse_bit_grid("101111110");
        VectorFamily fam = orbit_frame(rep, seed.row(0));
        return !is_parseval(fam) && rank(analysis(fam)) == 9;
    });

    v.check("gabor-theta2-parseval-theta1-not", [&] {
        BitMatrix t1 = load_bit_grid(v.path("gabor_theta1.mat"));
        BitMatrix t2 = load_bit_grid(v.path("gabor_theta2.mat"));
        // files hold Theta^* (9 x 27); analysis operators are the transposes
        VectorFamily f1 = VectorFamily::from_analysis(transpose(t1));
        VectorFamily f2 = VectorFamily::from_analysis(transpose(t2));
        return !is_parseval(f1) && is_parseval(f2);
    });

    v.check("gabor-theta2-group-frame-recovery", [&] {
        FiniteGroup hw3 = FiniteGroup::load_cayley(v.path("hw3.cayley"));
        BitMatrix t2 = load_bit_grid(v.path("gabor_theta2.mat"));
        VectorFamily fam = VectorFamily::from_analysis(transpose(t2), hw3);
        if (!eta_from_gram(gramian(fam), hw3)) return false;
        Representation rep = representation_from_frame(fam);
        return rep.is_unitary() && rep.is_homomorphism();
    });

    v.check("z3sq-frame-gramian-and-rho", [&] {
        FiniteGroup g = FiniteGroup::zpq(3, 2);
        BitMatrix theta = load_bit_grid(v.path("z3sq_frame.mat"));
        BitMatrix gram_fixture = load_bit_grid(v.path("z3sq_gram.mat"));
        VectorFamily fam = VectorFamily::from_analysis(theta, g);
        if (!is_parseval(fam)) return false;
        if (gramian(fam) != gram_fixture) return false;
        if (rank(gram_fixture) != 5) return false;
        Representation rep = representation_from_frame(fam);
        auto rhos = load_bit_grids(v.path("z3sq_rho.mat"));
        if (rhos.size() != 9) return false;
        for (uint32_t i = 0; i < 9; ++i)
            if (rep[i] != rhos[i]) return false;
        return rep.is_unitary() && rep.is_homomorphism();
    });

    v.check("d3-two-gramians", [&] {
        FiniteGroup d3 = FiniteGroup::load_cayley(v.path("d3.cayley"));
        auto etas = enumerate_valid_etas(d3);
        if (etas.size() != 2) return false;
        EtaFunction delta(d3, {0}), rot(d3, {0, 1, 2});
        return etas[0] == delta && etas[1] == rot;
    });

    v.check("z6-two-gramians", [&] {
        FiniteGroup z6 = FiniteGroup::cyclic(6);
        auto etas = enumerate_valid_etas(z6);
        if (etas.size() != 2) return false;
        EtaFunction delta(z6, {0}), evens(z6, {0, 2, 4});
        return etas[0] == delta && etas[1] == evens;
    });

    v.check("z7-idempotent-but-asymmetric", [&] {
        FiniteGroup z7 = FiniteGroup::cyclic(7);
        EtaFunction eta(z7, {0, 1, 2, 4});
        EtaCheck c = check_eta(eta);
        return c.identity_ok && c.conv_idempotent && !c.symmetric && !c.verdict();
    });

    v.check("z17-two-nontrivial-orbits-four-gramians", [&] {
        FiniteGroup z17 = FiniteGroup::cyclic(17);
        SdoPartition part(z17);
        std::vector<uint32_t> d1 = {1, 2, 4, 8, 9, 13, 15, 16};
        std::vector<uint32_t> d3 = {3, 5, 6, 7, 10, 11, 12, 14};
        if (part.orbit_count() != 3) return false;
        if (part.orbit(1) != d1 || part.orbit(2) != d3) return false;
        return count_unitary_classes(part) == 4;
    });

    v.check("z3sq-five-classes", [&] {
        FiniteGroup g = FiniteGroup::zpq(3, 2);
        SdoPartition part(g);
        InducedAction action(part, aut_generators(g));
        ClassCatalog cat = classify_closure(part, action, true);
        return cat.classes.size() == 5;
    });

    v.check("z9-vs-z3sq-table", [&] {
        CompareTable t = compare_groups(3, 2);
        if (t.rows.size() != 5) return false;
        // ranks 1,3,5,7,9 with cyclic matches everywhere except rank 5
        std::map<uint32_t, bool> matched;
        for (const auto& r : t.rows) matched[r.rank] = r.cyclic_reps.has_value();
        return matched.size() == 5 && matched[1] && matched[3] && !matched[5] &&
               matched[7] && matched[9];
    });

    v.check("z27-vs-z3cube-table", [&] {
        CompareTable t = compare_groups(3, 3);
        if (t.rows.size() != 30) return false;
        int matched = 0;
        for (const auto& r : t.rows)
            if (r.cyclic_reps) ++matched;
        return matched == 8;
    });

    v.check("z125-vs-z5cube-selected-rows", [&] {
        CompareTable t = compare_groups(5, 3);
        if (t.rows.size() != 6) return false;
        std::map<uint32_t, std::pair<uint32_t, uint32_t>> expect = {
            {5, {25, 25}},  {21, {25, 10}}, {25, {25, 5}},
            {101, {5, 2}},  {105, {5, 2}},  {121, {2, 2}},
        };
        for (const auto& r : t.rows) {
            auto it = expect.find(r.rank);
            if (it == expect.end()) return false;
            if (r.product_weight != it->second.first) return false;
            if (!r.cyclic_weight || *r.cyclic_weight != it->second.second) return false;
        }
        return true;
    });

    v.check("z5cube-class-counts", [&] {
        FiniteGroup g = FiniteGroup::zpq(5, 3);
        SdoPartition part(g);
        InducedAction action(part, aut_generators(g));
        PolyaCounts pc = classify_polya(part, action);
        static const uint64_t first_half[16] = {1, 1, 1, 2, 3, 5, 12, 22,
                                                42, 92, 174, 296, 476, 669, 832, 948};
        // size s (counting the [e] orbit) sits at per_size[s - 1]
        for (int s = 1; s <= 16; ++s) {
            if (pc.per_size[s - 1] != first_half[s - 1]) return false;
            if (pc.per_size[32 - s] != first_half[s - 1]) return false;
        }
        return pc.total == 7152;
    });

    if (v.ran == 0) {
        std::cerr << "no checks matched filter '" << only << "'\n";
        return kExitUsage;
    }
    std::cout << (v.failures == 0 ? "all checks passed" : "checks failed") << " ("
              << v.ran - v.failures << "/" << v.ran << ")\n";
    return v.failures == 0 ? kExitOk : kExitCapacity;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"binary Parseval group frames: classification and code evaluation"};
    app.require_subcommand(1);

    std::string group_spec, mode = "explicit", format = "json", out_path, mask_hex;
    std::string sim_type = "erasure", sim_mode = "exhaustive", fixtures = "fixtures";
    std::string only, json_path;
    std::size_t m = 1;
    uint64_t trials = 10000, seed = 0;
    uint32_t p = 3, q = 2;

    auto* classify = app.add_subcommand("classify", "partition Gramians into classes");
    classify->add_option("--group", group_spec, "cyclic:n | zpq:p,q | cayley:path")->required();
    classify->add_option("--mode", mode, "explicit | polya");
    classify->add_option("--format", format, "json | csv");
    classify->add_option("--out", out_path, "output path (stdout otherwise)");

    auto* enumerate = app.add_subcommand("enumerate", "brute-force valid coefficient functions");
    enumerate->add_option("--group", group_spec)->required();

    auto* weight = app.add_subcommand("weight", "code weight and robustness of a Gramian");
    weight->add_option("--group", group_spec)->required();
    weight->add_option("--mask", mask_hex, "hex orbit mask, bit 0 = [e]")->required();
    weight->add_option("--out", out_path);

    auto* simulate = app.add_subcommand("simulate", "erasure or bit-flip channel simulation");
    simulate->add_option("--group", group_spec)->required();
    simulate->add_option("--mask", mask_hex, "hex orbit mask, bit 0 = [e]")->required();
    simulate->add_option("--type", sim_type, "erasure | bitflip");
    simulate->add_option("--m", m, "error budget");
    simulate->add_option("--mode", sim_mode, "exhaustive | sampled (erasure only)");
    simulate->add_option("--trials", trials);
    simulate->add_option("--seed", seed);
    simulate->add_option("--out", out_path);

    auto* compare = app.add_subcommand("compare", "cyclic vs product group comparison table");
    compare->add_option("--p", p)->required();
    compare->add_option("--q", q)->required();
    compare->add_option("--format", format, "json | csv");
    compare->add_option("--out", out_path);

    auto* verify = app.add_subcommand("verify-paper", "re-derive the shipped fixture claims");
    verify->add_option("--fixtures", fixtures, "fixture directory");
    verify->add_option("--only", only, "substring filter on check names");

    auto* plot = app.add_subcommand("plot-sdo", "doubling-orbit scatter for zpq groups, q = 2");
    plot->add_option("--group", group_spec)->required();
    plot->add_option("--out", out_path, "SVG output path");
    plot->add_option("--json", json_path, "JSON output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;  // --help exits 0
    }

    try {
        if (classify->parsed()) return cmd_classify(group_spec, mode, format, out_path);
        if (enumerate->parsed()) return cmd_enumerate(group_spec);
        if (weight->parsed()) return cmd_weight(group_spec, mask_hex, out_path);
        if (simulate->parsed())
            return cmd_simulate(group_spec, mask_hex, sim_type, m, sim_mode, trials, seed,
                                out_path);
        if (compare->parsed()) return cmd_compare(p, q, format, out_path);
        if (verify->parsed()) return cmd_verify(fixtures, only);
        if (plot->parsed()) return cmd_plot_sdo(group_spec, out_path, json_path);
    } catch (const capacity_error& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const parse_error& e) {
        std::cerr << "fixture/parse: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
