#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qseries/claims.hpp"
#include "qseries/harness.hpp"
#include "qseries/identities.hpp"
#include "qseries/partitions.hpp"
#include "qseries/products.hpp"
#include "qseries/report.hpp"

namespace py = pybind11;
using namespace qseries;

namespace {

py::list coefficients(const Series& s) {
    py::list out;
    for (std::size_t i = 0; i <= s.order(); ++i) out.append(py::int_(py::str(s.coefficient(i).get_str())));
    return out;
}

py::dict report_dict(const VerificationReport& r) {
    py::dict d;
    d["id"] = r.id;
    py::dict params;
    for (const auto& [k, v] : r.params) params[py::str(k)] = v;
    d["params"] = params;
    d["argument"] = r.argument;
    d["n_max"] = r.n_max;
    d["verdict"] = to_string(r.verdict);
    d["counterexample_n"] = r.counterexample_n ? py::object(py::int_(*r.counterexample_n)) : py::none();
    d["lhs"] = r.lhs ? py::object(py::int_(*r.lhs)) : py::none();
    d["rhs"] = r.rhs ? py::object(py::int_(*r.rhs)) : py::none();
    d["reason"] = r.reason;
    d["elapsed_ms"] = r.elapsed_ms;
    return d;
}

ParamTuple tuple_from(const py::dict& params, const CongruenceClaim& claim) {
    ParamTuple t;
    for (const auto& d : claim.params) {
        if (params.contains(d.name)) t.emplace_back(d.name, params[py::str(d.name)].cast<long>());
    }
    for (const auto& [k, v] : params) {
        const auto name = k.cast<std::string>();
        bool known = false;
        for (const auto& d : claim.params) known = known || d.name == name;
        if (!known) t.emplace_back(name, v.cast<long>());
    }
    return t;
}

}  // namespace

PYBIND11_MODULE(_qseries, m) {
    m.doc() = "q-series engine and congruence verification harness";

    py::register_exception<EtaParseError>(m, "EtaParseError", PyExc_ValueError);
    py::register_exception<UnknownClaim>(m, "UnknownClaim", PyExc_KeyError);
    py::register_exception<UnknownIdentity>(m, "UnknownIdentity", PyExc_KeyError);

    m.def(
        "expand",
        [](const std::string& eta, std::size_t order, std::uint64_t modulus) {
            const EtaQuotient q = EtaQuotient::parse(eta);
            return coefficients(modulus ? eta_quotient_series_mod(q, order, modulus) : eta_quotient_series(q, order));
        },
        py::arg("eta"), py::arg("order"), py::arg("modulus") = 0, "Coefficients of an eta-quotient through q^order.");

    m.def(
        "pjk",
        [](std::size_t j, std::size_t k, std::size_t order) { return coefficients(series_pjk({j, k}, order)); }, py::arg("j"),
        py::arg("k"), py::arg("order"), "Coefficients of the (j,k)-regular overpartition generating function.");

    m.def(
        "enumerate_pjk", [](std::size_t j, std::size_t k, std::size_t n) { return py::int_(py::str(enumerate_pjk({j, k}, n).get_str())); },
        py::arg("j"), py::arg("k"), py::arg("n"), "Count (j,k)-regular overpartitions of n directly.");

    m.def(
        "verify_identity",
        [](const std::string& id, std::size_t order) {
            const IdentityResult r = verify_identity(id, order);
            py::dict d;
            d["id"] = r.id;
            d["order"] = r.order;
            d["equal"] = r.equal;
            d["first_mismatch"] = r.first_mismatch ? py::object(py::int_(*r.first_mismatch)) : py::none();
            return d;
        },
        py::arg("id"), py::arg("order"));

    m.def("identity_ids", [] {
        std::vector<std::string> ids;
        for (const auto& e : IdentityDatabase::standard().entries()) ids.push_back(e.id);
        return ids;
    });

    m.def(
        "claim_ids",
        [](const std::string& glob, const std::string& group) {
            std::vector<std::string> ids;
            for (const auto* c : ClaimCatalog::standard().select(glob, group)) ids.push_back(c->id);
            return ids;
        },
        py::arg("glob") = "*", py::arg("group") = "");

    m.def(
        "statement", [](const std::string& id) { return ClaimCatalog::standard().find(id).statement(); },
        py::arg("id"));

    m.def(
        "check_claim",
        [](const std::string& id, const py::dict& params, std::size_t n_max, std::size_t budget) {
            const auto& claim = ClaimCatalog::standard().find(id);
            Harness h(HarnessConfig{budget, HarnessConfig{}.min_window});
            return report_dict(h.check_claim(claim, tuple_from(params, claim), n_max));
        },
        py::arg("id"), py::arg("params") = py::dict(), py::arg("n_max") = kDefaultNMax,
        py::arg("budget") = HarnessConfig{}.budget);

    m.def(
        "check_family",
        [](const std::string& id, std::optional<std::size_t> n_max, std::optional<long> max_exponent,
           std::size_t budget) {
            const auto& claim = ClaimCatalog::standard().find(id);
            Harness h(HarnessConfig{budget, HarnessConfig{}.min_window});
            py::list out;
            for (const auto& r : h.check_family(claim, n_max.value_or(default_n_max(claim)), ParamBounds{max_exponent, std::nullopt}))
                out.append(report_dict(r));
            return out;
        },
        py::arg("id"), py::arg("n_max") = py::none(), py::arg("max_exponent") = py::none(),
        py::arg("budget") = HarnessConfig{}.budget);

    m.def("legendre", &legendre, py::arg("a"), py::arg("p"));
}
