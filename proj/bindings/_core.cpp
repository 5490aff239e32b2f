// Python bindings for the core operations: complexes, cup-i coproducts,
// Steenrod squares, cohomology and the suspension benchmark.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "steenq/bench.hpp"
#include "steenq/cupi.hpp"
#include "steenq/f2linear.hpp"
#include "steenq/io.hpp"
#include "steenq/spaces.hpp"
#include "steenq/steenrod.hpp"

namespace py = pybind11;

namespace {

using VertexList = std::vector<steenq::VertexId>;

steenq::Cochain make_cochain(int degree, const std::vector<VertexList>& support) {
    steenq::Cochain out;
    out.degree = degree;
    for (const VertexList& verts : support) out.support.insert(steenq::Simplex(verts));
    steenq::validate_cochain(out);
    return out;
}

std::vector<VertexList> support_lists(const steenq::Cochain& a) {
    std::vector<VertexList> out;
    for (const steenq::Simplex& s : a.sorted_support()) out.push_back(s.vertices());
    return out;
}

std::vector<std::vector<int>> matrix_rows(const steenq::F2Matrix& m) {
    std::vector<std::vector<int>> rows(m.rows(), std::vector<int>(m.cols(), 0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.get(i, j)) rows[i][j] = 1;
    return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Cup-i products and Steenrod squares on finite simplicial complexes over F2";

    py::register_exception<steenq::parse_error>(m, "ParseError", PyExc_ValueError);

    py::class_<steenq::SimplicialComplex>(m, "SimplicialComplex")
        .def("__len__", [](const steenq::SimplicialComplex& X) { return X.size(); })
        .def_property_readonly("top_dimension", &steenq::SimplicialComplex::top_dimension)
        .def("size", py::overload_cast<int>(&steenq::SimplicialComplex::size, py::const_),
             py::arg("dim"))
        .def(
            "simplices",
            [](const steenq::SimplicialComplex& X, int dim) {
                std::vector<VertexList> out;
                for (const steenq::Simplex& s : X.simplices(dim)) out.push_back(s.vertices());
                return out;
            },
            py::arg("dim"))
        .def(
            "contains",
            [](const steenq::SimplicialComplex& X, const VertexList& verts) {
                return X.contains(steenq::Simplex(verts));
            },
            py::arg("simplex"))
        .def("__eq__", [](const steenq::SimplicialComplex& a,
                          const steenq::SimplicialComplex& b) { return a == b; })
        .def("__repr__", [](const steenq::SimplicialComplex& X) {
            return "<SimplicialComplex with " + std::to_string(X.size()) + " simplices, top dim " +
                   std::to_string(X.top_dimension()) + ">";
        });

    py::class_<steenq::Cochain>(m, "Cochain")
        .def(py::init(&make_cochain), py::arg("degree"), py::arg("support"))
        .def_property_readonly("degree", [](const steenq::Cochain& a) { return a.degree; })
        .def_property_readonly("support", &support_lists)
        .def("__eq__",
             [](const steenq::Cochain& a, const steenq::Cochain& b) { return a == b; })
        .def("__repr__", [](const steenq::Cochain& a) {
            return "<Cochain degree " + std::to_string(a.degree) + ", support size " +
                   std::to_string(a.support.size()) + ">";
        });

    m.def(
        "from_maximal_simplices",
        [](const std::vector<VertexList>& maximal) {
            std::vector<steenq::Simplex> simplices;
            simplices.reserve(maximal.size());
            for (const VertexList& verts : maximal) simplices.emplace_back(verts);
            return steenq::SimplicialComplex::from_maximal_simplices(simplices);
        },
        py::arg("maximal"), "Downward closure of the given simplices.");

    m.def("suspension", &steenq::suspension, py::arg("complex"));
    m.def(
        "wedge",
        [](const steenq::SimplicialComplex& X, const steenq::SimplicialComplex& Y) {
            return steenq::wedge(X, Y);
        },
        py::arg("x"), py::arg("y"), "One-point union at the minimum vertices.");

    m.def("betti_numbers", &steenq::betti_numbers, py::arg("complex"),
          "Mod-2 cohomology dimensions per degree.");
    m.def("is_cocycle", &steenq::is_cocycle, py::arg("complex"), py::arg("cochain"));
    m.def("is_coboundary", &steenq::is_coboundary, py::arg("complex"), py::arg("cochain"));
    m.def("coboundary", &steenq::coboundary, py::arg("complex"), py::arg("cochain"),
          "The coboundary cochain, one degree up.");

    m.def(
        "delta_i",
        [](const VertexList& simplex, int i) {
            std::vector<std::pair<VertexList, VertexList>> out;
            for (const auto& [a, b] : steenq::delta_i_simplex(steenq::Simplex(simplex), i)
                                          .sorted_pairs())
                out.emplace_back(a.vertices(), b.vertices());
            return out;
        },
        py::arg("simplex"), py::arg("i"),
        "Cup-i coproduct of one simplex as a list of vertex-list pairs.");

    m.def(
        "cup",
        [](const steenq::Cochain& a, const steenq::Cochain& b, int i,
           const steenq::SimplicialComplex& X) { return steenq::cup_i_product(a, b, i, X); },
        py::arg("a"), py::arg("b"), py::arg("i"), py::arg("complex"),
        "Cup-i product of two cochains on a complex.");

    m.def(
        "sq",
        [](const steenq::Cochain& a, int k, const steenq::SimplicialComplex& X,
           const std::string& method) {
            if (method == "direct") return steenq::sq_direct_oracle(a, k, X);
            if (method != "fast") throw std::invalid_argument("method must be fast or direct");
            return steenq::sq_cochain(a, k, X);
        },
        py::arg("cochain"), py::arg("k"), py::arg("complex"), py::arg("method") = "fast",
        "Steenrod square of a cochain, by the support-based or the direct method.");

    m.def(
        "sq_matrix",
        [](const steenq::SimplicialComplex& X, int n, int k) {
            return matrix_rows(steenq::sq_matrix(X, n, k));
        },
        py::arg("complex"), py::arg("n"), py::arg("k"),
        "Matrix of Sq^k from degree-n cohomology, as 0/1 rows.");
    m.def(
        "sq_rank",
        [](const steenq::SimplicialComplex& X, int n, int k) {
            return steenq::rank(steenq::sq_matrix(X, n, k));
        },
        py::arg("complex"), py::arg("n"), py::arg("k"),
        "Rank of Sq^k from degree-n cohomology.");

    m.def(
        "space",
        [](const std::string& name) { return steenq::find_space(name).complex; },
        py::arg("name"), "A built-in space by name.");
    m.def("space_names", &steenq::builtin_space_names);

    m.def(
        "load_complex",
        [](const std::string& path) { return steenq::read_complex_file(path); },
        py::arg("path"));
    m.def(
        "dump_complex",
        [](const steenq::SimplicialComplex& X) { return steenq::complex_to_text(X); },
        py::arg("complex"), "Text form: one maximal simplex per line.");

    m.def(
        "bench",
        [](int max_susp, int repeats) {
            std::vector<py::dict> out;
            for (const steenq::BenchRow& r : steenq::run_suspension_benchmark(max_susp, repeats)) {
                py::dict row;
                row["i"] = r.suspension_index;
                row["n_simplices"] = r.n_simplices;
                row["n_target"] = r.n_target;
                row["support"] = r.support;
                row["repeats"] = r.repeats;
                row["fast_s"] = r.fast_seconds;
                row["direct_s"] = r.direct_seconds;
                out.push_back(std::move(row));
            }
            return out;
        },
        py::arg("max_susp") = 6, py::arg("repeats") = 1000,
        "Suspension benchmark rows as dictionaries.");

#ifdef VERSION_INFO
#define STEENQ_STR_(x) #x
#define STEENQ_STR(x) STEENQ_STR_(x)
    m.attr("__version__") = STEENQ_STR(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
