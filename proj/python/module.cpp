// Python bindings for the core operations. Programs travel as opaque handles;
// atom sets as lists of names; reports as plain dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "relsimp/json_io.hpp"
#include "relsimp/synthesis.hpp"
#include "relsimp/verify.hpp"

namespace py = pybind11;
using namespace relsimp;

namespace {

py::object json_to_py(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null:
      return py::none();
    case nlohmann::json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case nlohmann::json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case nlohmann::json::value_t::number_float:
      return py::float_(j.get<double>());
    case nlohmann::json::value_t::string:
      return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case nlohmann::json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it) {
        out[py::str(it.key())] = json_to_py(it.value());
      }
      return out;
    }
    default:
      return py::none();
  }
}

RelCtx ctx_from_names(const Program& p, const std::vector<std::string>& remove,
                      const std::optional<std::vector<std::string>>& context) {
  RelCtx ctx;
  ctx.universe = p.full();
  ctx.remove = p.universe->mask_of(remove);
  ctx.context = context ? p.universe->mask_of(*context) : p.full();
  return ctx;
}

py::list sets_to_py(const Universe& u, const std::vector<Mask>& sets) {
  py::list out;
  for (Mask m : sets) out.append(u.sorted_names_of(m));
  return out;
}

py::list pairs_to_py(const SEModelSet& s) {
  py::list out;
  for (SEPair pr : s.pairs) {
    out.append(py::make_tuple(s.universe->sorted_names_of(pr.here),
                              s.universe->sorted_names_of(pr.there)));
  }
  return out;
}

ContextBounds bounds_from_kwargs(int max_rules, int max_body, bool proof_witnesses) {
  ContextBounds bounds;
  bounds.max_rules = max_rules;
  bounds.max_body_literals = max_body;
  bounds.include_proof_witness_family = proof_witnesses;
  return bounds;
}

}  // namespace

PYBIND11_MODULE(relsimp, m) {
  m.doc() = "Relativized simplification toolkit for propositional extended logic programs";

  py::register_exception<parse_error>(m, "ParseError");
  py::register_exception<config_error>(m, "ConfigError");
  py::register_exception<verification_error>(m, "VerificationError");
  py::register_exception<simplify_error>(m, "SimplifyError");
  py::register_exception<forget_error>(m, "ForgetError");

  py::class_<Program>(m, "Program")
      .def_property_readonly("universe",
                             [](const Program& p) { return p.universe->names(); })
      .def_property_readonly("rule_count", [](const Program& p) { return p.rules.size(); })
      .def("__str__", [](const Program& p) { return format_program(p); })
      .def("__repr__", [](const Program& p) {
        return "<Program over " + p.universe->set_text(p.full()) + " with " +
               std::to_string(p.rules.size()) + " rules>";
      });

  m.def(
      "parse_program",
      [](const std::string& text, const std::optional<std::vector<std::string>>& universe) {
        return parse_program(text, universe);
      },
      py::arg("text"), py::arg("universe") = py::none());
  m.def("format_program", &format_program, py::arg("program"));
  m.def(
      "project",
      [](const Program& p, const std::vector<std::string>& atoms) {
        return project(p, p.universe->mask_of(atoms));
      },
      py::arg("program"), py::arg("atoms"));
  m.def(
      "is_a_separated",
      [](const Program& p, const std::vector<std::string>& atoms) {
        return is_a_separated(p, p.universe->mask_of(atoms));
      },
      py::arg("program"), py::arg("atoms"));

  m.def(
      "answer_sets",
      [](const Program& p) { return sets_to_py(*p.universe, answer_sets(p)); },
      py::arg("program"));
  m.def(
      "se_models", [](const Program& p) { return pairs_to_py(se_models(p)); },
      py::arg("program"));
  m.def(
      "rel_se_models",
      [](const Program& p, const std::vector<std::string>& context) {
        return pairs_to_py(rel_se_models(p, p.universe->mask_of(context)));
      },
      py::arg("program"), py::arg("context"));
  m.def(
      "ab_se_models",
      [](const Program& p, const std::vector<std::string>& remove,
         const std::optional<std::vector<std::string>>& context) {
        return pairs_to_py(ab_se_models(p, ctx_from_names(p, remove, context)));
      },
      py::arg("program"), py::arg("remove"), py::arg("context") = py::none());

  m.def(
      "check_simplifiability",
      [](const Program& p, const std::vector<std::string>& remove,
         const std::optional<std::vector<std::string>>& context) {
        RelCtx ctx = ctx_from_names(p, remove, context);
        return json_to_py(simplifiability_json(*p.universe, is_simplifiable(p, ctx)));
      },
      py::arg("program"), py::arg("remove"), py::arg("context") = py::none());

  m.def(
      "simplify",
      [](const Program& p, const std::vector<std::string>& remove,
         const std::optional<std::vector<std::string>>& context) {
        return simplify(p, ctx_from_names(p, remove, context));
      },
      py::arg("program"), py::arg("remove"), py::arg("context") = py::none());

  m.def(
      "forget",
      [](const Program& p, const std::vector<std::string>& remove,
         const std::optional<std::vector<std::string>>& context) {
        Mask a = p.universe->mask_of(remove);
        Mask s = context ? p.universe->mask_of(*context) : (p.full() & ~a);
        return forget_rsp(p, a, s).program;
      },
      py::arg("program"), py::arg("remove"), py::arg("context") = py::none());

  m.def(
      "check_simplification",
      [](const Program& p, const Program& q, const std::vector<std::string>& remove,
         const std::optional<std::vector<std::string>>& context, int max_rules, int max_body,
         bool proof_witnesses) {
        RelCtx ctx = ctx_from_names(p, remove, context);
        VerificationReport report =
            check_simplification(p, q, ctx, bounds_from_kwargs(max_rules, max_body, proof_witnesses));
        return json_to_py(verification_json(report));
      },
      py::arg("program"), py::arg("candidate"), py::arg("remove"),
      py::arg("context") = py::none(), py::arg("max_rules") = 2, py::arg("max_body") = 2,
      py::arg("proof_witnesses") = true);

  m.def(
      "check_equivalence",
      [](const Program& p, const Program& q,
         const std::optional<std::vector<std::string>>& context) {
        Mask b = context ? p.universe->mask_of(*context) : p.full();
        return check_relativized_equivalence(p, q.with_universe(p.universe), b);
      },
      py::arg("program"), py::arg("other"), py::arg("context") = py::none());

  m.def(
      "qbf_eval", [](const std::string& text) { return qbf_eval(parse_qbf(text)); },
      py::arg("text"));
  m.def(
      "qbf_reduce",
      [](const std::string& text) {
        QbfReduction red = qbf_reduce(parse_qbf(text));
        return py::make_tuple(red.p, red.q, red.a_atoms);
      },
      py::arg("text"));
}
