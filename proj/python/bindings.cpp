// Python face of the engine: the same operations the CLI exposes, returning
// plain dicts shaped like the CLI's JSON records.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "psiforge/classify.hpp"
#include "psiforge/errors.hpp"
#include "psiforge/lattice.hpp"
#include "psiforge/psi.hpp"
#include "psiforge/records.hpp"
#include "psiforge/spec_ast.hpp"
#include "psiforge/verify.hpp"

namespace py = pybind11;

namespace {

using namespace psiforge;

std::uint64_t resolve_budget(const std::optional<std::uint64_t>& budget) {
    return budget.value_or(kDefaultLatticeBudget);
}

std::uint64_t psi_checked(const std::string& spec_text) {
    GroupPtr g = build_group(parse_spec(spec_text));
    BigInt a = psi_direct(g).psi;
    BigInt b = psi_via_classes(g).psi;
    BigInt c = psi_via_cyclic_subgroups(g).psi;
    if (a != b || b != c)
        fail(Errc::internal_error, "psi methods disagree on " + g->name());
    return a.convert_to<std::uint64_t>();
}

py::dict record_to_dict(const VerdictRecord& rec) {
    py::dict d;
    d["spec"] = rec.spec;
    d["order"] = rec.order;
    d["psi"] = rec.psi ? py::object(py::int_(*rec.psi)) : py::object(py::none());
    d["verdict"] = rec.verdict;
    d["method"] = rec.method;
    if (rec.witness) {
        py::dict w;
        w["order"] = rec.witness->order;
        w["psi"] = rec.witness->psi;
        d["witness"] = w;
    } else {
        d["witness"] = py::none();
    }
    d["elapsed_ms"] = rec.elapsed_ms;
    return d;
}

py::dict bpsi_py(const std::string& spec_text, const std::string& method,
                 const std::optional<std::uint64_t>& budget) {
    return record_to_dict(evaluate_spec(spec_text, method, resolve_budget(budget)));
}

py::list maximals_py(const std::string& spec_text,
                     const std::optional<std::uint64_t>& budget) {
    GroupPtr g = build_group(parse_spec(spec_text));
    py::list out;
    for (const auto& m :
         maximal_subgroups(enumerate_subgroups(g, resolve_budget(budget)))) {
        py::dict d;
        d["order"] = m.count();
        d["psi"] = psi_of_mask(m);
        out.append(d);
    }
    return out;
}

std::string canonical_py(const std::string& spec_text) {
    return canonical_spec(spec_text);
}

py::list table_rows_py(const std::string& tier) {
    if (tier != "core" && tier != "extended")
        fail(Errc::argument_error, "unknown tier '" + tier + "' (core | extended)");
    py::list out;
    for (const TableRow& row :
         tier == "core" ? table_rows_core() : table_rows_extended()) {
        py::dict d;
        d["spec"] = row.spec;
        d["order"] = row.order;
        out.append(d);
    }
    return out;
}

py::tuple verify_py(const std::string& suite,
                    const std::optional<std::uint64_t>& budget) {
    std::ostringstream out;
    bool ok = run_verify_suite(suite, out, resolve_budget(budget));
    return py::make_tuple(ok, out.str());
}

} // namespace

PYBIND11_MODULE(_psiforge, m) {
    m.doc() = "Finite-group computations: sum of element orders (psi) and the "
              "psi-boundedness property.";

    py::register_exception<Error>(m, "PsiForgeError");

    m.def("psi", &psi_checked, py::arg("spec"),
          "Sum of element orders, computed three independent ways; raises on "
          "disagreement.");
    m.def("bpsi", &bpsi_py, py::arg("spec"), py::arg("method") = "auto",
          py::arg("budget") = py::none(),
          "Decide whether every proper subgroup H has psi(H) < |G|.  Returns a "
          "dict with keys spec, order, psi, verdict, method, witness, "
          "elapsed_ms.  method is 'auto', 'brute', or 'theorem'.");
    m.def("maximals", &maximals_py, py::arg("spec"),
          py::arg("budget") = py::none(),
          "Maximal subgroups as [{'order': ..., 'psi': ...}, ...] in canonical "
          "order.");
    m.def("canonical", &canonical_py, py::arg("spec"),
          "Parse a group expression and return its canonical spelling.");
    m.def("table_rows", &table_rows_py, py::arg("tier") = "core",
          "The catalogue of constructible non-nilpotent psi-bounded groups: "
          "[{'spec': ..., 'order': ...}, ...] for tier 'core' or 'extended'.");
    m.def("verify", &verify_py, py::arg("suite"), py::arg("budget") = py::none(),
          "Run a self-check suite ('formulas', 'theorems', 'table-core', "
          "'table-extended'); returns (ok, report_text).");
}
