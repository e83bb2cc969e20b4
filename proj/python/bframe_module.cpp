#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bframe/bridge.hpp"
#include "bframe/classify.hpp"
#include "bframe/codes.hpp"
#include "bframe/frames.hpp"
#include "bframe/gramchar.hpp"
#include "bframe/group.hpp"
#include "bframe/plot.hpp"

namespace py = pybind11;
using namespace bframe;

namespace {

std::vector<std::vector<int>> matrix_rows(const BitMatrix& m) {
    std::vector<std::vector<int>> out(m.rows(), std::vector<int>(m.cols(), 0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m.get(i, j);
    return out;
}

BitMatrix matrix_from_rows(const std::vector<std::vector<int>>& rows) {
    if (rows.empty()) throw domain_error("empty matrix");
    BitMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) throw domain_error("ragged matrix");
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.set(i, j, rows[i][j] & 1);
    }
    return m;
}

}  // namespace

PYBIND11_MODULE(_bframe, m) {
    m.doc() = "binary Parseval group frames over GF(2)";

    py::class_<FiniteGroup>(m, "Group")
        .def_static("from_spec", &FiniteGroup::from_spec, py::arg("spec"))
        .def_static("cyclic", &FiniteGroup::cyclic, py::arg("n"))
        .def_static("zpq", &FiniteGroup::zpq, py::arg("p"), py::arg("q"))
        .def_property_readonly("order", &FiniteGroup::order)
        .def_property_readonly("abelian", &FiniteGroup::abelian)
        .def_property_readonly("descriptor",
                               [](const FiniteGroup& g) { return g.descriptor(); })
        .def("op", &FiniteGroup::op)
        .def("inv", &FiniteGroup::inv);

    m.def("sdo_orbits", [](const FiniteGroup& g) { return SdoPartition(g).orbits(); },
          "symmetric doubling orbit partition, [e] first");

    m.def("enumerate_valid_etas", [](const FiniteGroup& g) {
        std::vector<std::vector<uint32_t>> out;
        for (const auto& eta : enumerate_valid_etas(g)) out.push_back(eta.support());
        return out;
    });

    m.def("check_eta", [](const FiniteGroup& g, const std::vector<uint32_t>& support) {
        EtaCheck c = check_eta(EtaFunction(g, support));
        py::dict d;
        d["identity_ok"] = c.identity_ok;
        d["symmetric"] = c.symmetric;
        d["conv_idempotent"] = c.conv_idempotent;
        d["valid"] = c.verdict();
        return d;
    });

    m.def("gram_from_mask", [](const FiniteGroup& g, uint64_t mask) {
        SdoPartition part(g);
        return matrix_rows(gram_from_nu({&part, mask}));
    }, "Gramian from an orbit mask (bit 0 = [e])");

    m.def("rank", [](const std::vector<std::vector<int>>& rows) {
        return rank(matrix_from_rows(rows));
    });

    m.def("code_weight", [](const std::vector<std::vector<int>>& rows) {
        CodeReport r = code_weight(matrix_from_rows(rows));
        py::dict d;
        d["length"] = r.length;
        d["dim"] = r.dim;
        d["weight"] = r.weight;
        d["erasure_max"] = r.erasure_max;
        d["bitflip_max"] = r.bitflip_max;
        d["strategy"] = r.strategy;
        return d;
    });

    m.def("classify", [](const FiniteGroup& g, bool with_weights) {
        SdoPartition part(g);
        InducedAction action(part, aut_generators(g));
        ClassCatalog cat = classify_closure(part, action, with_weights);
        py::list classes;
        for (const auto& c : cat.classes) {
            py::dict d;
            d["canonical_mask"] = c.canonical_mask;
            d["size"] = c.size;
            d["rank"] = c.rank;
            if (c.code_weight) d["code_weight"] = *c.code_weight;
            classes.append(d);
        }
        return classes;
    }, py::arg("group"), py::arg("with_weights") = false);

    m.def("classify_counts", [](const FiniteGroup& g) {
        SdoPartition part(g);
        InducedAction action(part, aut_generators(g));
        PolyaCounts pc = classify_polya(part, action);
        py::dict d;
        d["group_order"] = pc.group_order;
        d["per_size"] = pc.per_size;
        d["total"] = pc.total;
        return d;
    });

    m.def("phi", [](uint32_t p, uint32_t q, const std::vector<uint32_t>& tuple) {
        return PhiMap(p, q).forward(tuple);
    });
    m.def("phi_inv", [](uint32_t p, uint32_t q, uint32_t residue) {
        return PhiMap(p, q).inverse(residue);
    });
    m.def("doubling_coset_test", &doubling_coset_test);

    m.def("is_parseval_analysis", [](const std::vector<std::vector<int>>& theta) {
        return is_parseval(VectorFamily::from_analysis(matrix_from_rows(theta)));
    }, "rows of theta are the frame vectors transposed");

    m.def("frame_from_gram", [](const std::vector<std::vector<int>>& gram) {
        VectorFamily fam = parseval_frame_from_gramian(matrix_from_rows(gram));
        return matrix_rows(analysis(fam));
    });

    py::register_exception<capacity_error>(m, "CapacityError");
}
