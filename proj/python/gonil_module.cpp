#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gonil/cli.hpp"
#include "gonil/search.hpp"

namespace py = pybind11;
using namespace gonil;

namespace {

Vector to_vector(const std::vector<std::string>& v) {
    Vector out;
    for (const auto& s : v) out.push_back(Rational::parse(s));
    return out;
}

Matrix to_matrix(const std::vector<std::vector<std::string>>& rows) {
    std::vector<Vector> r;
    for (const auto& row : rows) r.push_back(to_vector(row));
    return Matrix::from_rows(r, r.empty() ? 0 : r[0].size());
}

}  // namespace

PYBIND11_MODULE(_gonil, m) {
    m.doc() = "Exact geodesic-orbit tools (JSON strings in, JSON strings out)";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

    m.def("run", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code;
        {
            py::gil_scoped_release release;
            code = run_cli(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"));

    py::class_<SpaceFile>(m, "Space")
        .def_static("from_file", [](const std::string& path) { return load_space_file(path); })
        .def_static("from_json", [](const std::string& text) { return parse_space_text(text); })
        .def_property_readonly("dim", [](const SpaceFile& f) { return f.space.dim(); })
        .def_property_readonly("m_dim", [](const SpaceFile& f) { return f.space.m_dim(); })
        .def_property_readonly("h_dim", [](const SpaceFile& f) { return f.space.h_dim(); })
        .def("to_json", [](const SpaceFile& f) { return space_to_json(f).dump(); })
        .def("natred", [](const SpaceFile& f) { return is_naturally_reductive(f.space).holds; })
        .def("series", [](const SpaceFile& f) {
            return to_json(lower_central_series(subalgebra(f.space.algebra(), f.space.m_span()))).dump();
        })
        .def("solve_alpha", [](const SpaceFile& f, const std::vector<std::string>& xi) {
            const AlphaResult r = solve_alpha(f.space, to_vector(xi));
            if (const auto* s = std::get_if<GeodesicSolution>(&r)) return to_json(*s).dump();
            return std::string("null");
        }, py::arg("xi"))
        .def("go_check", [](const SpaceFile& f, std::size_t samples, std::uint64_t seed) {
            GoParams p;
            p.n_samples = samples;
            p.seed = seed;
            return to_json(go_certify(f.space, p)).dump();
        }, py::arg("samples") = 100, py::arg("seed") = 0)
        .def("verify_thm41", [](const SpaceFile& f) { return to_json(verify_thm41(f.space)).dump(); })
        .def("verify_thm42", [](const SpaceFile& f) { return to_json(verify_thm42(f.space)).dump(); });

    m.def("check_skew", [](const std::vector<std::vector<std::string>>& b,
                           const std::vector<std::vector<std::string>>& g) {
        return check_skew(to_matrix(b), BilinearForm(to_matrix(g)));
    });
    m.def("classify", [](const std::vector<std::vector<std::string>>& b,
                         const std::vector<std::vector<std::string>>& g) {
        return to_json(classify(to_matrix(b), BilinearForm(to_matrix(g)))).dump();
    });
    m.def("signature", [](const std::vector<std::vector<std::string>>& g) {
        return to_json(signature(BilinearForm(to_matrix(g)))).dump();
    });
}
