#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hclab/harness.hpp"
#include "hclab/series.hpp"

namespace py = pybind11;
using namespace hclab;

namespace {

// pybind11 holders are non-const; Group is immutable so shedding const on
// the way out is harmless.
std::shared_ptr<Group> unconst(GroupPtr g) { return std::const_pointer_cast<Group>(std::move(g)); }

py::object verdict_to_py(const EmbeddingVerdict& v) {
    py::dict d;
    d["holds"] = v.holds;
    d["witness"] = v.witness ? py::cast(v.witness->elements()) : py::none();
    d["counterexample"] = v.counterexample
                              ? py::make_tuple(v.counterexample->g, v.counterexample->x)
                              : py::object(py::none());
    d["offending_subgroup"] =
        v.offending_subgroup ? py::cast(v.offending_subgroup->elements()) : py::none();
    return d;
}

Subgroup subgroup_from(const std::shared_ptr<Group>& g, const std::vector<int>& members) {
    return Subgroup::from_members(g, members);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "finite-group embedding-property lab";

    py::register_exception<Error>(m, "HclabError");

    py::class_<Group, std::shared_ptr<Group>>(m, "Group")
        .def_property_readonly("order", &Group::order)
        .def_property_readonly("name", &Group::name)
        .def("mul", &Group::mul, py::arg("a"), py::arg("b"))
        .def("inv", &Group::inv, py::arg("a"))
        .def("element_order", &Group::element_order, py::arg("x"))
        .def("label", &Group::label, py::arg("x"))
        .def("__len__", &Group::order)
        .def("__repr__", [](const Group& g) {
            return "<Group " + g.name() + " of order " + std::to_string(g.order()) + ">";
        });

    py::class_<Subgroup>(m, "Subgroup")
        .def_property_readonly("size", &Subgroup::size)
        .def_property_readonly("elements", &Subgroup::elements)
        .def_property_readonly("parent", [](const Subgroup& s) { return unconst(s.parent()); })
        .def("contains", [](const Subgroup& s, int x) { return s.contains(x); })
        .def("__len__", &Subgroup::size)
        .def("__repr__", [](const Subgroup& s) {
            return "<Subgroup of order " + std::to_string(s.size()) + " in " + s.parent()->name() +
                   ">";
        });

    m.def(
        "group", [](const std::string& spec) { return unconst(realize(parse_group_spec(spec))); },
        py::arg("spec"), "realize a group from spec syntax such as 'S4' or 'prod(C3,S3)'");
    m.def(
        "load_group", [](const std::string& path) { return unconst(load_group(path)); },
        py::arg("path"));
    m.def("corpus", [] {
        py::list out;
        for (auto& [spec, g] : standard_corpus()) out.append(unconst(std::move(g)));
        return out;
    });
    m.def("direct_product", [](const std::shared_ptr<Group>& a, const std::shared_ptr<Group>& b) {
        return unconst(direct_product(a, b));
    });
    m.def("quotient", [](const std::shared_ptr<Group>& g, const std::vector<int>& members) {
        auto [q, pi] = quotient(GroupPtr(g), subgroup_from(g, members));
        return py::make_tuple(unconst(q), pi.map);
    });
    m.def("is_isomorphic", [](const std::shared_ptr<Group>& a, const std::shared_ptr<Group>& b) {
        return is_isomorphic(a, b);
    });

    m.def("subgroup", &subgroup_from, py::arg("group"), py::arg("members"));
    m.def("generated_subgroup",
          [](const std::shared_ptr<Group>& g, const std::vector<int>& seed) {
              return generated_subgroup(GroupPtr(g), seed);
          });
    m.def("all_subgroups", [](const std::shared_ptr<Group>& g) {
        auto lat = all_subgroups(GroupPtr(g));
        return lat.subgroups();
    });
    m.def("normalizer", &normalizer);
    m.def("centralizer", [](const Subgroup& h) { return centralizer(h); });
    m.def("normal_core", &normal_core);
    m.def("normal_closure", [](const Subgroup& h) { return normal_closure(h); });
    m.def("sylow_subgroup", [](const std::shared_ptr<Group>& g, int p) {
        return sylow_subgroup(GroupPtr(g), p);
    });

    m.def("center", [](const std::shared_ptr<Group>& g) { return center(GroupPtr(g)); });
    m.def("hypercenter", [](const std::shared_ptr<Group>& g) { return hypercenter(GroupPtr(g)); });
    m.def("derived_subgroup",
          [](const std::shared_ptr<Group>& g) { return derived_subgroup(GroupPtr(g)); });
    m.def("nilpotent_residual",
          [](const std::shared_ptr<Group>& g) { return nilpotent_residual(GroupPtr(g)); });
    m.def("fitting", [](const std::shared_ptr<Group>& g) { return fitting(GroupPtr(g)); });
    m.def("generalized_fitting",
          [](const std::shared_ptr<Group>& g) { return generalized_fitting(GroupPtr(g)); });

    m.def("is_h_subgroup", [](const Subgroup& h) { return verdict_to_py(is_h_subgroup(h)); });
    m.def("is_hc_subgroup", [](const Subgroup& h) { return verdict_to_py(is_hc_subgroup(h)); });
    m.def("is_c_normal", [](const Subgroup& h) { return verdict_to_py(is_c_normal(h)); });
    m.def("is_weakly_h_subgroup",
          [](const Subgroup& h) { return verdict_to_py(is_weakly_h_subgroup(h)); });
    m.def("is_subnormal", [](const Subgroup& h) { return is_subnormal(h); });
    m.def("is_normal", [](const Subgroup& h) { return is_normal(h); });

    m.def("is_nilpotent", [](const std::shared_ptr<Group>& g) { return is_nilpotent(GroupPtr(g)); });
    m.def("is_p_nilpotent",
          [](const std::shared_ptr<Group>& g, int p) { return is_p_nilpotent(GroupPtr(g), p); });
    m.def("is_solvable", [](const std::shared_ptr<Group>& g) { return is_solvable(GroupPtr(g)); });
    m.def("is_supersolvable",
          [](const std::shared_ptr<Group>& g) { return is_supersolvable(GroupPtr(g)); });
    m.def("has_sylow_tower_supersolvable_type", [](const std::shared_ptr<Group>& g) {
        return has_sylow_tower_supersolvable_type(GroupPtr(g));
    });
    m.def("is_quasinilpotent",
          [](const std::shared_ptr<Group>& g) { return is_quasinilpotent(GroupPtr(g)); });

    m.def("statement_ids", [] {
        std::vector<std::string> ids;
        for (const auto& s : statement_registry()) ids.push_back(s.id);
        return ids;
    });
    m.def(
        "verify",
        [](std::vector<std::string> ids, bool diagnostic, int jobs) {
            if (ids.empty())
                for (const auto& s : statement_registry()) ids.push_back(s.id);
            HarnessConfig cfg;
            cfg.diagnostic = diagnostic;
            cfg.jobs = jobs;
            SuiteReport r = verify_suite(ids, standard_corpus(), cfg);
            py::dict out;
            out["green"] = r.green();
            out["fails"] = r.fail_count;
            out["skips"] = r.skip_count;
            out["wall_ms"] = r.wall_ms;
            out["corpus_version"] = r.corpus_version;
            py::dict tallies;
            for (const auto& [id, t] : r.tallies) {
                py::dict d;
                d["pass"] = t.pass;
                d["vacuous"] = t.vacuous;
                d["fail"] = t.fail;
                d["skipped"] = t.skipped;
                d["non_vacuous"] = t.non_vacuous();
                tallies[py::str(id)] = d;
            }
            out["tallies"] = tallies;
            py::list failures;
            for (const auto& c : r.records)
                if (c.verdict == Verdict::Fail) {
                    py::dict d;
                    d["statement"] = c.statement;
                    d["group"] = c.group;
                    d["params"] = c.params;
                    d["witness"] = c.witness;
                    failures.append(d);
                }
            out["failures"] = failures;
            return out;
        },
        py::arg("ids") = std::vector<std::string>{}, py::arg("diagnostic") = false,
        py::arg("jobs") = 1);
}
