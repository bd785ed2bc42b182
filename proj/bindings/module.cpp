#include "gpd/builder.hpp"
#include "gpd/fnspace.hpp"
#include "gpd/generator.hpp"
#include "gpd/textio.hpp"
#include "gpd/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

namespace py = pybind11;

namespace {

using namespace gpd;

/// Python-side values own their groupoids through shared_ptr so derived
/// objects can keep their base alive independently of Python GC order.
struct PyGroupoid {
    std::shared_ptr<const FiniteGroupoid> g;
};

struct PySubgroupoid {
    std::shared_ptr<const FiniteGroupoid> parent;
    std::shared_ptr<const Subgroupoid> s;
};

PyGroupoid make_groupoid(FiniteGroupoid g) {
    return PyGroupoid{std::make_shared<const FiniteGroupoid>(std::move(g))};
}

PySubgroupoid make_sub(const PyGroupoid& parent, Subgroupoid s) {
    return PySubgroupoid{parent.g, std::make_shared<const Subgroupoid>(std::move(s))};
}

void check_same_parent(const PyGroupoid& g, const PySubgroupoid& s, const char* what) {
    if (s.parent.get() != g.g.get())
        throw Error(std::string(what) + ": subgroupoid does not belong to this groupoid");
}

}  // namespace

PYBIND11_MODULE(_gpdkit, m) {
    m.doc() = "finite groupoids: double cosets, actions, and exact representation counts";

    py::register_exception<Error>(m, "GpdError");

    py::class_<PyGroupoid>(m, "Groupoid")
        .def_property_readonly("object_count",
                               [](const PyGroupoid& g) { return g.g->object_count(); })
        .def_property_readonly("morphism_count",
                               [](const PyGroupoid& g) { return g.g->morphism_count(); })
        .def_property_readonly("component_count",
                               [](const PyGroupoid& g) { return g.g->component_count(); })
        .def_property_readonly("connected", [](const PyGroupoid& g) { return g.g->connected(); })
        .def("dom", [](const PyGroupoid& g, Mor a) { return g.g->dom(a); })
        .def("cod", [](const PyGroupoid& g, Mor a) { return g.g->cod(a); })
        .def("identity", [](const PyGroupoid& g, Obj x) { return g.g->identity(x); })
        .def("inverse", [](const PyGroupoid& g, Mor a) { return g.g->inverse(a); })
        .def("compose", [](const PyGroupoid& g, Mor g2, Mor g1) { return g.g->compose(g2, g1); })
        .def("hom", [](const PyGroupoid& g, Obj x, Obj y) { return g.g->hom(x, y); })
        .def("isotropy_order", [](const PyGroupoid& g, Obj x) { return g.g->isotropy_order(x); })
        .def("validate",
             [](const PyGroupoid& g) {
                 std::vector<std::string> out;
                 for (const auto& v : validate(*g.g)) out.push_back(v.axiom + ": " + v.message);
                 return out;
             })
        .def("serialize", [](const PyGroupoid& g) { return serialize_groupoid(*g.g); })
        .def("__repr__", [](const PyGroupoid& g) {
            return "<Groupoid objects=" + std::to_string(g.g->object_count()) + " morphisms=" +
                   std::to_string(g.g->morphism_count()) + ">";
        });

    py::class_<PySubgroupoid>(m, "Subgroupoid")
        .def_property_readonly("objects", [](const PySubgroupoid& s) { return s.s->objects(); })
        .def_property_readonly("morphisms", [](const PySubgroupoid& s) { return s.s->morphisms(); })
        .def_property_readonly("wide", [](const PySubgroupoid& s) { return s.s->wide(); })
        .def("check", [](const PySubgroupoid& s) { return s.s->check(); })
        .def("serialize", [](const PySubgroupoid& s) { return serialize_subgroupoid(*s.s); })
        .def("__repr__", [](const PySubgroupoid& s) {
            return "<Subgroupoid objects=" + std::to_string(s.s->objects().size()) +
                   " morphisms=" + std::to_string(s.s->morphisms().size()) + ">";
        });

    m.def("pair_groupoid", [](Obj n) { return make_groupoid(pair_groupoid(n)); });
    m.def("cyclic_group", [](int n) { return make_groupoid(cyclic_group(n)); });
    m.def("symmetric_group", [](int n) { return make_groupoid(symmetric_group(n)); });
    m.def("product",
          [](const PyGroupoid& a, const PyGroupoid& b) { return make_groupoid(product(*a.g, *b.g)); });
    m.def("coproduct", [](const PyGroupoid& a, const PyGroupoid& b) {
        return make_groupoid(coproduct(*a.g, *b.g));
    });
    m.def("build", [](const std::string& expr) { return make_groupoid(build_groupoid(expr)); },
          "groupoid from a builder expression such as 'product(sym(3), pair(2))'");
    m.def("parse", [](const std::string& text) { return make_groupoid(parse_groupoid_text(text)); });
    m.def("load", [](const std::string& path) { return make_groupoid(load_groupoid(path)); });

    m.def("discrete_subgroupoid",
          [](const PyGroupoid& g) { return make_sub(g, Subgroupoid::discrete_wide(*g.g)); });
    m.def("full_subgroupoid",
          [](const PyGroupoid& g) { return make_sub(g, Subgroupoid::full(*g.g)); });
    m.def("iso_subgroupoid", [](const PyGroupoid& g) { return make_sub(g, iso_subgroupoid(*g.g)); });
    m.def("closure",
          [](const PyGroupoid& g, const std::vector<Mor>& seed, bool wide) {
              return make_sub(g, closure(*g.g, seed, wide));
          },
          py::arg("groupoid"), py::arg("seed"), py::arg("wide") = true);
    m.def("subgroupoid_spec", [](const PyGroupoid& g, const std::string& spec) {
        return make_sub(g, build_subgroupoid(*g.g, spec));
    });

    m.def("double_coset_blocks",
          [](const PyGroupoid& g, const PySubgroupoid& h, const PySubgroupoid& k) {
              check_same_parent(g, h, "double_coset_blocks");
              check_same_parent(g, k, "double_coset_blocks");
              return double_cosets(*g.g, *h.s, *k.s).blocks;
          });
    m.def("double_coset_size",
          [](const PyGroupoid& g, const PySubgroupoid& h, const PySubgroupoid& k, Mor mor) {
              check_same_parent(g, h, "double_coset_size");
              check_same_parent(g, k, "double_coset_size");
              DoubleCosetSize s = double_coset_size_formula(*g.g, *h.s, *k.s, mor);
              py::dict out;
              out["size"] = s.size;
              out["delta"] = s.delta;
              out["h_iso"] = s.h_iso;
              out["k_iso"] = s.k_iso;
              out["overlap"] = s.overlap;
              return out;
          });
    m.def("coset_index", [](const PyGroupoid& g, const PySubgroupoid& h) {
        check_same_parent(g, h, "coset_index");
        IndexResult r = coset_index(*g.g, *h.s);
        return py::make_tuple(r.coset_total, r.formula_text);
    });
    m.def("orbit_count_xhk",
          [](const PyGroupoid& g, const PySubgroupoid& h, const PySubgroupoid& k) {
              check_same_parent(g, h, "orbit_count_xhk");
              check_same_parent(g, k, "orbit_count_xhk");
              XhkAction x = x_hk_action(*g.g, *h.s, *k.s);
              Rat value = cf_count(x.gset);
              return rat_to_int(value);
          },
          "number of double cosets, computed by the fixed-point average");
    m.def("char_count",
          [](const PyGroupoid& g, const PySubgroupoid& h, const PySubgroupoid& k) {
              check_same_parent(g, h, "char_count");
              check_same_parent(g, k, "char_count");
              Extracted eh = extract(*h.s), ek = extract(*k.s);
              Representation a = induce_rep(*g.g, *h.s, eh, trivial_rep(eh.groupoid));
              Representation b = induce_rep(*g.g, *k.s, ek, trivial_rep(ek.groupoid));
              return to_string(char_inner_product(a, b));
          },
          "inner product of the induced trivial characters, as an exact rational string");
    m.def("left_coset_sizes", [](const PyGroupoid& g, const PySubgroupoid& h) {
        check_same_parent(g, h, "left_coset_sizes");
        return left_cosets(*g.g, *h.s).gset.carrier_size;
    });
    m.def("invariant_function_dim",
          [](const PyGroupoid& g, const PySubgroupoid& h, const PySubgroupoid& k) {
              check_same_parent(g, h, "invariant_function_dim");
              check_same_parent(g, k, "invariant_function_dim");
              return invariant_function_space(*g.g, *h.s, *k.s).constraint_dim;
          });

    m.def("verify",
          [](const PyGroupoid& g, const PySubgroupoid& h, const PySubgroupoid& k,
             const std::string& label) {
              check_same_parent(g, h, "verify");
              check_same_parent(g, k, "verify");
              VerificationReport r = verify_instance(*g.g, *h.s, *k.s, label);
              py::list rows;
              for (const CheckRow& row : r.rows)
                  rows.append(py::make_tuple(row.check, row.instance, row.expected, row.actual,
                                             row.ok));
              return py::make_tuple(r.all_ok(), rows);
          },
          py::arg("groupoid"), py::arg("h"), py::arg("k"), py::arg("label") = "instance");

    m.def("gen_random", [](std::uint64_t seed, int max_objects, int max_group_order) {
        GenInstance inst = gen_random(seed, max_objects, max_group_order);
        PyGroupoid g{std::shared_ptr<const FiniteGroupoid>(std::move(inst.groupoid))};
        // Rebuild the subgroupoids against the shared copy.
        PySubgroupoid h = make_sub(g, Subgroupoid(*g.g, inst.h->objects(), inst.h->morphisms()));
        PySubgroupoid k = make_sub(g, Subgroupoid(*g.g, inst.k->objects(), inst.k->morphisms()));
        return py::make_tuple(g, h, k, inst.description);
    });
}
