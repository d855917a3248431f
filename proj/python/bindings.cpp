#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "schreier/catalog.hpp"
#include "schreier/cohomology.hpp"
#include "schreier/generators.hpp"
#include "schreier/suite.hpp"

namespace py = pybind11;
using namespace schreier;

namespace {

// pybind11 holders cannot be shared_ptr<const T>, so monoids and actions are boxed.
struct Monoid {
    MonoidPtr ptr;
};

struct Action {
    LaxActionPtr ptr;
};

std::vector<std::vector<Elem>> rows(const FiniteMonoid& m) {
    std::vector<std::vector<Elem>> out(m.order());
    for (Elem x = 0; x < m.order(); ++x) out[x].assign(m.row(x).begin(), m.row(x).end());
    return out;
}

py::list verdicts(const std::vector<Verdict>& vs) {
    py::list out;
    for (const auto& v : vs) out.append(py::make_tuple(v.anchor, v.pass, v.witness));
    return out;
}

py::object from_json(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Finite monoid fibrations, lax actions and Schreier extensions";

    static py::exception<Error> error(m, "SchreierError");
    static py::exception<SizeLimitError> size_error(m, "SizeLimitError", error.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const SizeLimitError& e) {
            py::set_error(size_error, e.what());
        } catch (const Error& e) {
            py::set_error(error, (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
        }
    });

    py::class_<Monoid>(m, "Monoid")
        .def(py::init([](const std::vector<std::vector<Elem>>& table, Elem identity, std::vector<std::string> names) {
                 return Monoid{make_monoid(table, identity, std::move(names))};
             }),
             py::arg("table"), py::arg("identity") = 0, py::arg("names") = std::vector<std::string>{})
        .def_property_readonly("order", [](const Monoid& s) { return s.ptr->order(); })
        .def_property_readonly("identity", [](const Monoid& s) { return s.ptr->identity(); })
        .def_property_readonly("table", [](const Monoid& s) { return rows(*s.ptr); })
        .def_property_readonly("names", [](const Monoid& s) {
            std::vector<std::string> out;
            for (Elem x = 0; x < s.ptr->order(); ++x) out.push_back(s.ptr->name(x));
            return out;
        })
        .def("mul", [](const Monoid& s, Elem x, Elem y) { return s.ptr->mul(x, y); })
        .def("is_group", [](const Monoid& s) { return s.ptr->is_group(); })
        .def("is_commutative", [](const Monoid& s) { return s.ptr->is_commutative(); })
        .def("units", [](const Monoid& s) { return s.ptr->unit_elements(); })
        .def("__len__", [](const Monoid& s) { return s.ptr->order(); })
        .def("__eq__", [](const Monoid& a, const Monoid& b) { return *a.ptr == *b.ptr; })
        .def("__repr__", [](const Monoid& s) { return "<Monoid of order " + std::to_string(s.ptr->order()) + ">"; });

    m.def("cyclic_group", [](std::size_t k) { return Monoid{cyclic_group(k)}; });
    m.def("cyclic_monoid", [](std::size_t k, std::size_t n) { return Monoid{cyclic_monoid(k, n)}; });
    m.def("klein4", [] { return Monoid{klein4()}; });
    m.def("q8", [] { return Monoid{q8()}; });
    m.def("truncated_add", [](std::size_t k) { return Monoid{truncated_add(k)}; });
    m.def("full_transformation", [](std::size_t n) { return Monoid{full_transformation(n)}; });
    m.def("product", [](const Monoid& a, const Monoid& b) { return Monoid{product_monoid(a.ptr, b.ptr).monoid}; });
    m.def("find_isomorphism", [](const Monoid& a, const Monoid& b) -> std::optional<std::vector<Elem>> {
        if (auto iso = find_isomorphism(a.ptr, b.ptr)) return iso->map();
        return std::nullopt;
    });
    m.def("set_size_limit", &set_size_limit);
    m.def("size_limit", &size_limit);

    py::class_<MonoidHom>(m, "Hom")
        .def(py::init([](const Monoid& s, const Monoid& t, std::vector<Elem> map) {
            return MonoidHom(s.ptr, t.ptr, std::move(map));
        }))
        .def_property_readonly("source", [](const MonoidHom& h) { return Monoid{h.source()}; })
        .def_property_readonly("target", [](const MonoidHom& h) { return Monoid{h.target()}; })
        .def_property_readonly("map", &MonoidHom::map);

    py::class_<CartesianReport>(m, "CartesianReport")
        .def_readonly("kernel", &CartesianReport::kernel)
        .def_readonly("pcar", &CartesianReport::pcar)
        .def_readonly("car", &CartesianReport::car)
        .def_readonly("is_prefibration", &CartesianReport::is_prefibration)
        .def_readonly("is_fibration", &CartesianReport::is_fibration);

    m.def("analyze", [](const MonoidHom& h) { return analyze(h); });
    m.def("is_precartesian", &is_precartesian);
    m.def("is_cartesian", &is_cartesian);
    m.def("closure_lemmas", [](const MonoidHom& h) { return verdicts(check_closure_lemmas(h)); });

    py::class_<Action>(m, "LaxAction")
        .def(py::init([](const Monoid& acting, const Monoid& carrier, std::vector<Elem> phi, std::vector<Elem> gamma) {
                 return Action{std::make_shared<const LaxAction>(acting.ptr, carrier.ptr, std::move(phi), std::move(gamma))};
             }),
             py::arg("acting"), py::arg("carrier"), py::arg("phi"), py::arg("gamma"))
        .def("phi", [](const Action& a, Elem n, Elem x) { return a.ptr->phi(n, x); })
        .def("gamma", [](const Action& a, Elem mm, Elem n) { return a.ptr->gamma(mm, n); })
        .def_property_readonly("phi_table", [](const Action& a) { return a.ptr->phi_table(); })
        .def_property_readonly("gamma_table", [](const Action& a) { return a.ptr->gamma_table(); })
        .def("validate", [](const Action& a) {
            auto v = validate_lax(*a.ptr);
            return py::make_tuple(verdicts(v.axioms), v.is_pseudo);
        });
    m.def("quaternion_action", [] { return Action{quaternion_action()}; });

    py::class_<GrothMonoid>(m, "Groth")
        .def_property_readonly("monoid", [](const GrothMonoid& g) { return Monoid{g.underlying}; })
        .def_readonly("projection", &GrothMonoid::projection)
        .def_readonly("inclusion", &GrothMonoid::inclusion)
        .def("report", [](const GrothMonoid& g) {
            auto r = groth_projection_report(g);
            return py::make_tuple(r.report, verdicts(r.verdicts));
        });
    m.def("groth", [](const Action& a) { return groth(a.ptr); });

    py::class_<Cleavage>(m, "Cleavage")
        .def_readonly("kappa", &Cleavage::kappa)
        .def_property_readonly("xi", [](const Cleavage& c) {
            std::vector<Elem> out;
            for (Elem a : c.xi) out.push_back(c.iota(a));
            return out;
        })
        .def("count", [](const Cleavage& c) { return cleavage_count(c); })
        .def("extract_action", [](const Cleavage& c) { return Action{extract_action(c)}; })
        .def("reconstructs", [](const Cleavage& c) { return reconstruct(c).ok(); });
    m.def("canonical_cleavage", [](const MonoidHom& h) { return canonical_cleavage(h); });

    m.def("aut_A", [](const MonoidHom& h) {
        std::vector<Perm> out;
        for (const auto& t : aut_A(canonical_cleavage(h))) out.push_back(t.psi);
        return out;
    });
    m.def("aut_A_bruteforce", &aut_A_bruteforce);

    py::class_<NModule>(m, "Module")
        .def(py::init([](const Monoid& acting, const Monoid& carrier, std::vector<Elem> phi) {
            return NModule(acting.ptr, carrier.ptr, std::move(phi));
        }))
        .def("cocycles", [](const NModule& mod, bool regular) { return enumerate_cocycles(mod, regular); },
             py::arg("regular") = true)
        .def("h2", [](const NModule& mod, bool regular) {
                 py::list out;
                 for (const auto& c : h2(mod, regular)) out.append(py::make_tuple(c.representative, c.size));
                 return out;
             },
             py::arg("regular") = true)
        .def("z1", [](const NModule& mod) { return z1(mod); })
        .def("verify_h2_bijection", [](const NModule& mod, bool regular) {
                 auto b = verify_h2_bijection(mod, regular);
                 py::dict d;
                 d["cocycles"] = b.cocycles;
                 d["classes"] = b.classes;
                 d["congruence_classes"] = b.congruence_classes;
                 d["verdicts"] = verdicts(b.verdicts);
                 return d;
             },
             py::arg("regular") = true);

    m.def("z1_iso", [](const MonoidHom& h) {
        auto z = z1_iso(canonical_cleavage(h));
        py::dict d;
        d["cocycles"] = z.cocycles;
        d["aut_AN_size"] = z.aut_AN_size;
        d["verdicts"] = verdicts(z.verdicts);
        return d;
    });
    m.def("verify_exact_sequences", [](const MonoidHom& h, std::uint64_t seed) {
              auto r = verify_exact_sequences(canonical_cleavage(h), seed);
              py::dict d;
              d["cleavages_checked"] = r.cleavages_checked;
              d["sampled"] = r.sampled;
              d["first"] = verdicts(r.first);
              d["second"] = verdicts(r.second);
              return d;
          },
          py::arg("hom"), py::arg("seed") = 0);

    m.def("load_hom", [](const std::string& p) { return load_hom(p); });
    m.def("load_action", [](const std::string& p) { return Action{load_action(p)}; });
    m.def("load_module", [](const std::string& p) { return load_module(p); });
    m.def("write_catalog", [](const std::string& dir) { write_catalog(dir); });
    m.def("run_suite", [](const std::string& dir, const std::string& scope, std::uint64_t seed) {
              return from_json(run_suite(load_catalog(dir), scope, seed).to_json());
          },
          py::arg("catalog"), py::arg("scope") = "all", py::arg("seed") = 0);
}
