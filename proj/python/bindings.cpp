#include "orbitcert/certify.hpp"
#include "orbitcert/cli.hpp"
#include "orbitcert/integral.hpp"
#include "orbitcert/lsinduce.hpp"
#include "orbitcert/orbits.hpp"
#include "orbitcert/serialize.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace orbitcert;

namespace {

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_py(const py::object& o) {
    return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

// Accepts ints, strings "p/q" and fractions.Fraction.
Weight to_weight(const RootSystemModel& m, const std::vector<py::object>& xs) {
    std::vector<Rational> v;
    for (const auto& x : xs)
        v.push_back(parse_rational(py::str(x).cast<std::string>()));
    return m.canonicalize(Weight(std::move(v)));
}

std::vector<std::size_t> zero_based(const std::vector<int>& one_based) {
    std::vector<std::size_t> out;
    for (int i : one_based) {
        if (i < 1)
            throw std::invalid_argument("simple root labels are 1-based");
        out.push_back(static_cast<std::size_t>(i - 1));
    }
    return out;
}

LeviDescriptor to_levi(const py::object& o) {
    if (py::isinstance<py::str>(o))
        return levi_from_json(Json::parse(o.cast<std::string>()));
    return levi_from_json(from_py(o));
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact root systems, nilpotent orbits and highest-weight certificates";

    py::register_exception<BoundExceeded>(m, "BoundExceeded");

    m.def("info", [](const std::string& type) {
        auto model = RootSystemModel::build(type);
        return to_py({{"dim", model.dim()}, {"positive_roots", model.positive_roots().size()}, {"rank", model.rank()}});
    }, py::arg("type"));

    m.def("simple_roots", [](const std::string& type) {
        Json out = Json::array();
        for (const auto& a : RootSystemModel::build(type).simple_roots())
            out.push_back(to_json(a));
        return to_py(out);
    }, py::arg("type"));

    m.def("rho", [](const std::string& type) { return to_py(to_json(RootSystemModel::build(type).rho())); },
          py::arg("type"));

    m.def("pairing", [](const std::string& type, const std::vector<py::object>& weight,
                        const std::vector<py::object>& root) {
        auto model = RootSystemModel::build(type);
        return to_string(model.pairing(to_weight(model, weight), to_weight(model, root)));
    }, py::arg("type"), py::arg("weight"), py::arg("root"));

    m.def("delta_prime", [](const std::string& type, const std::vector<py::object>& h) {
        auto model = RootSystemModel::build(type);
        return to_py(to_json(delta_prime(model, make_characteristic(model, to_weight(model, h)))));
    }, py::arg("type"), py::arg("h"));

    m.def("certify", [](const std::string& type, const std::vector<int>& levi, const std::vector<py::object>& h,
                        const std::vector<py::object>& lambda_prime, bool principal) {
        auto model = RootSystemModel::build(type);
        CertificateInput in{zero_based(levi), to_weight(model, h), to_weight(model, lambda_prime), principal};
        return to_py(to_json(certify(model, in)));
    }, py::arg("type"), py::arg("levi"), py::arg("h"), py::arg("lambda_prime"), py::arg("principal") = false);

    m.def("integral", [](const std::string& type, const std::vector<py::object>& lambda_prime) {
        auto model = RootSystemModel::build(type);
        auto lp = to_weight(model, lambda_prime);
        return to_py(to_json(integral_system(model, lp), cor68_dim(model, lp)));
    }, py::arg("type"), py::arg("lambda_prime"));

    m.def("induce", [](const py::object& levi) { return induce(to_levi(levi)).parts; }, py::arg("levi"));

    m.def("is_rigid", [](const std::string& type, std::vector<int> parts) {
        auto p = Partition::make(std::move(parts), parse_classical(type));
        auto r = is_rigid(p, p.total());
        Json j = {{"rigid", r.rigid}};
        if (r.witness)
            j["witness"] = to_json(*r.witness);
        return to_py(j);
    }, py::arg("type"), py::arg("partition"));

    m.def("dim_z", [](const std::string& type, std::vector<int> parts) {
        return dim_z_partition(Partition::make(std::move(parts), parse_classical(type)));
    }, py::arg("type"), py::arg("partition"));

    m.def("collapse", [](const std::string& type, std::vector<int> parts) {
        return collapse(std::move(parts), parse_classical(type)).parts;
    }, py::arg("type"), py::arg("partition"));

    m.def("jordan_oracle", [](const py::object& levi, std::uint64_t seed, int trials) {
        return jordan_oracle(to_levi(levi), seed, trials).parts;
    }, py::arg("levi"), py::arg("seed") = 0, py::arg("trials") = 8);

    m.def("centralizer_oracle", [](const std::string& type, std::vector<int> parts) {
        return centralizer_oracle(Partition::make(std::move(parts), parse_classical(type)));
    }, py::arg("type"), py::arg("partition"));

    m.def("rigid_table", [] { return to_py(rigid_table_json()); });
    m.def("duality_table", [] { return to_py(duality_table_json()); });

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"));
}
