#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sprimary/io.hpp"
#include "sprimary/suites.hpp"

namespace py = pybind11;
using namespace sprimary;

namespace {

json to_json(const py::handle& obj) {
    if (obj.is_none()) return json();
    if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
    if (py::isinstance<py::int_>(obj)) return obj.cast<long long>();
    if (py::isinstance<py::float_>(obj)) return obj.cast<double>();
    if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
    if (py::isinstance<py::list>(obj) || py::isinstance<py::tuple>(obj)) {
        json a = json::array();
        for (auto item : obj) a.push_back(to_json(item));
        return a;
    }
    if (py::isinstance<py::dict>(obj)) {
        json o = json::object();
        for (auto item : obj.cast<py::dict>())
            o[item.first.cast<std::string>()] = to_json(item.second);
        return o;
    }
    throw py::type_error("cannot convert python object to a JSON document");
}

py::object to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null:
            return py::none();
        case json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case json::value_t::number_integer:
        case json::value_t::number_unsigned:
            return py::int_(j.get<long long>());
        case json::value_t::number_float:
            return py::float_(j.get<double>());
        case json::value_t::string:
            return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const auto& x : j) out.append(to_py(x));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = to_py(it.value());
            return out;
        }
        default:
            return py::none();
    }
}

json doc_arg(const py::object& obj) {
    if (py::isinstance<py::str>(obj)) return json::parse(obj.cast<std::string>());
    return to_json(obj);
}

struct PyRing {
    RingPtr ring;
};
struct PyIdeal {
    Ideal ideal;
};
struct PyMSet {
    MultiplicativeSet mset;
};

PyRing make_ring(const py::object& spec, int size_cap) {
    return {construct_ring(doc_arg(spec), size_cap)};
}

CorpusSpec corpus_arg(const py::object& spec) {
    if (spec.is_none()) return CorpusSpec::defaults();
    return CorpusSpec::from_json(doc_arg(spec));
}

}  // namespace

PYBIND11_MODULE(sprimary, m) {
    m.doc() = "S-primary decomposition toolkit for finite commutative rings and Z";

    py::register_exception<ParseError>(m, "DocumentError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "InvalidInput", PyExc_ValueError);

    py::class_<PyRing>(m, "Ring")
        .def(py::init(&make_ring), py::arg("spec"), py::arg("size_cap") = 0,
             "construct a ring from a specification record (dict or JSON string)")
        .def_static("integers", [] { return PyRing{Ring::integers()}; })
        .def_property_readonly("finite", [](const PyRing& r) { return r.ring->is_finite(); })
        .def_property_readonly("size",
                               [](const PyRing& r) -> py::object {
                                   if (!r.ring->is_finite()) return py::none();
                                   return py::int_(r.ring->size());
                               })
        .def_property_readonly("spec", [](const PyRing& r) { return to_py(r.ring->spec()); })
        .def("elements",
             [](const PyRing& r) {
                 py::list out;
                 for (auto& e : enumerate_elements(r.ring))
                     out.append(to_py(r.ring->element_to_json(e.v)));
                 return out;
             })
        .def("add",
             [](const PyRing& r, const py::object& a, const py::object& b) {
                 RingElement x{r.ring, r.ring->element_from_json(to_json(a))};
                 RingElement y{r.ring, r.ring->element_from_json(to_json(b))};
                 return to_py(r.ring->element_to_json(ring_add(x, y).v));
             })
        .def("mul",
             [](const PyRing& r, const py::object& a, const py::object& b) {
                 RingElement x{r.ring, r.ring->element_from_json(to_json(a))};
                 RingElement y{r.ring, r.ring->element_from_json(to_json(b))};
                 return to_py(r.ring->element_to_json(ring_mul(x, y).v));
             })
        .def("neg",
             [](const PyRing& r, const py::object& a) {
                 RingElement x{r.ring, r.ring->element_from_json(to_json(a))};
                 return to_py(r.ring->element_to_json(ring_neg(x).v));
             })
        .def("pow",
             [](const PyRing& r, const py::object& a, long long e) {
                 RingElement x{r.ring, r.ring->element_from_json(to_json(a))};
                 return to_py(r.ring->element_to_json(ring_pow(x, e).v));
             })
        .def("ideal",
             [](const PyRing& r, const py::object& doc) {
                 return PyIdeal{ideal_from_json(r.ring, doc_arg(doc))};
             },
             "ideal from a document: {'gens': [...]} or {'n': k}")
        .def("mset",
             [](const PyRing& r, const py::object& doc) {
                 return PyMSet{mset_from_json(r.ring, doc_arg(doc))};
             })
        .def("ideals",
             [](const PyRing& r) {
                 py::list out;
                 for (auto& I : enumerate_ideals(r.ring)) out.append(PyIdeal{I});
                 return out;
             })
        .def("nilradical", [](const PyRing& r) { return PyIdeal{nilradical(r.ring)}; })
        .def("quotient",
             [](const PyRing& r, const PyIdeal& I) { return PyRing{quotient_ring(r.ring, I.ideal)}; })
        .def("localize",
             [](const PyRing& r, const PyMSet& S) { return PyRing{localize(r.ring, S.mset)}; })
        .def("__repr__", [](const PyRing& r) { return "Ring(" + r.ring->spec().dump() + ")"; });

    py::class_<PyIdeal>(m, "Ideal")
        .def_property_readonly("doc", [](const PyIdeal& I) { return to_py(ideal_to_json(I.ideal)); })
        .def_property_readonly("proper", [](const PyIdeal& I) { return I.ideal.is_proper(); })
        .def("contains",
             [](const PyIdeal& I, const py::object& v) {
                 return I.ideal.contains(I.ideal.ring()->element_from_json(to_json(v)));
             })
        .def("__eq__", [](const PyIdeal& a, const PyIdeal& b) { return a.ideal == b.ideal; })
        .def("__repr__", [](const PyIdeal& I) { return "Ideal" + I.ideal.str(); });

    py::class_<PyMSet>(m, "MultiplicativeSet")
        .def_property_readonly("doc", [](const PyMSet& S) { return to_py(mset_to_json(S.mset)); })
        .def("contains",
             [](const PyMSet& S, const py::object& v) {
                 return S.mset.contains(S.mset.ring()->element_from_json(to_json(v)));
             })
        .def("__repr__", [](const PyMSet& S) { return "MultiplicativeSet(" + S.mset.str() + ")"; });

    m.def("ideal_sum", [](const PyIdeal& a, const PyIdeal& b) {
        return PyIdeal{ideal_sum(a.ideal, b.ideal)};
    });
    m.def("ideal_intersect", [](const PyIdeal& a, const PyIdeal& b) {
        return PyIdeal{ideal_intersect(a.ideal, b.ideal)};
    });
    m.def("ideal_product", [](const PyIdeal& a, const PyIdeal& b) {
        return PyIdeal{ideal_product(a.ideal, b.ideal)};
    });
    m.def("ideal_colon", [](const PyIdeal& I, const py::object& s) {
        return PyIdeal{ideal_colon(I.ideal, {I.ideal.ring(),
                                             I.ideal.ring()->element_from_json(to_json(s))})};
    });
    m.def("radical", [](const PyIdeal& I) { return PyIdeal{radical(I.ideal)}; });
    m.def("saturation", [](const PyIdeal& I, const PyMSet& S) {
        return PyIdeal{saturation(I.ideal, S.mset)};
    });
    m.def("is_divided", [](const PyIdeal& I) { return is_divided(I.ideal); });
    m.def("disjoint", [](const PyIdeal& I, const PyMSet& S) {
        return disjoint_from(I.ideal, S.mset);
    });

    m.def("is_nonnil", [](const PyIdeal& I) { return is_nonnil(I.ideal); });
    m.def("is_prime", [](const PyIdeal& I) { return is_prime_ideal(I.ideal); });
    m.def("is_primary", [](const PyIdeal& I) { return is_primary(I.ideal); });
    m.def("is_irreducible", [](const PyIdeal& I) { return is_irreducible(I.ideal); });
    m.def("is_s_prime", [](const PyIdeal& I, const PyMSet& S) {
        return to_py(certificate_to_json(is_s_prime(I.ideal, S.mset), I.ideal.ring()));
    });
    m.def("is_s_primary", [](const PyIdeal& I, const PyMSet& S) {
        return to_py(certificate_to_json(is_s_primary(I.ideal, S.mset), I.ideal.ring()));
    });
    m.def("is_s_irreducible", [](const PyIdeal& I, const PyMSet& S) {
        return to_py(certificate_to_json(is_s_irreducible(I.ideal, S.mset), I.ideal.ring()));
    });
    m.def("is_s_finite", [](const PyIdeal& I, const PyMSet& S) {
        return to_py(certificate_to_json(is_s_finite(I.ideal, S.mset), I.ideal.ring()));
    });
    m.def("is_sft", [](const PyIdeal& I) {
        return to_py(certificate_to_json(is_sft(I.ideal), I.ideal.ring()));
    });
    m.def("is_s_sft", [](const PyIdeal& I, const PyMSet& S) {
        return to_py(certificate_to_json(is_s_sft(I.ideal, S.mset), I.ideal.ring()));
    });
    m.def("is_radically_s_finite", [](const PyIdeal& I, const PyMSet& S) {
        return to_py(certificate_to_json(is_radically_s_finite(I.ideal, S.mset), I.ideal.ring()));
    });
    m.def("s_noetherian_spectrum", [](const PyRing& R, const PyMSet& S) {
        return to_py(spectrum_to_json(has_s_noetherian_spectrum(R.ring, S.mset), R.ring));
    });

    m.def("decompose",
          [](const PyIdeal& I, const PyMSet& S) -> py::object {
              if (I.ideal.finite_rep()) {
                  auto d = decompose_finite(I.ideal, S.mset);
                  if (!d) return py::none();
                  return to_py(decomposition_to_json(*d));
              }
              return to_py(decomposition_to_json(decompose_integers(I.ideal, S.mset)));
          },
          "S-primary decomposition document, or None when no decomposition exists");
    m.def("minimalize", [](const PyIdeal& I, const PyMSet& S, const py::object& doc) {
        Decomposition input = decomposition_from_json(I.ideal.ring(), S.mset, doc_arg(doc));
        return to_py(decomposition_to_json(minimalize(I.ideal, S.mset, input)));
    });
    m.def("verify_minimality", [](const PyRing& R, const PyMSet& S, const py::object& doc) {
        Decomposition d = decomposition_from_json(R.ring, S.mset, doc_arg(doc));
        return to_py(minimality_to_json(verify_minimality(d, S.mset))); });

    m.def("suite_names", [] { return suite_names(); });
    m.def("run_suite",
          [](const std::string& name, const py::object& corpus) {
              return to_py(run_suite(name, corpus_arg(corpus)).to_json());
          },
          py::arg("name"), py::arg("corpus") = py::none());
    m.def("generate_corpus", [](const py::object& spec) {
        py::list out;
        for (auto& [R, S] : generate_corpus(corpus_arg(spec)))
            out.append(py::make_tuple(PyRing{R}, PyMSet{S}));
        return out;
    }, py::arg("spec") = py::none());

    m.attr("__version__") = "0.1.0";
}
