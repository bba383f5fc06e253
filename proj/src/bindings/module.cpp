#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "comax/analysis.hpp"
#include "comax/domination.hpp"
#include "comax/numtheory.hpp"
#include "comax/report.hpp"
#include "comax/ringgraph.hpp"

namespace py = pybind11;
using namespace comax;

namespace {

py::int_ mpz_to_py(const mpz_class& v) {
    const std::string s = v.get_str();
    PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

py::list coeffs_to_py(const IntPoly& p) {
    py::list out;
    for (const auto& c : p.coefficients()) out.append(mpz_to_py(c));
    return out;
}

IntPoly poly_from_py(const py::sequence& coeffs) {
    std::vector<mpz_class> v;
    v.reserve(py::len(coeffs));
    for (const auto& item : coeffs) v.emplace_back(py::str(item).cast<std::string>());
    return IntPoly(v);
}

Method method_from_name(const std::string& name) {
    if (name == "auto" || name == "blowup") return Method::blowup;
    if (name == "brute") return Method::brute;
    if (name == "closed-prime") return Method::closed_prime;
    if (name == "closed-prime-power") return Method::closed_prime_power;
    if (name == "closed-prime-power-published") return Method::closed_prime_power_published;
    if (name == "closed-pq") return Method::closed_pq;
    if (name == "closed-pq-powers") return Method::closed_pq_powers;
    if (name == "g2-pqr") return Method::g2_pqr_published;
    throw std::invalid_argument("unknown method: " + name);
}

py::dict shape_to_py(const ShapeReport& s) {
    py::dict d;
    d["unimodal"] = s.unimodal;
    d["mode_indices"] = s.mode_indices;
    d["oscillations"] = s.oscillations;
    d["log_concave"] = s.log_concave;
    d["first_log_concavity_violation"] = s.first_log_concavity_violation
                                             ? py::object(py::int_(*s.first_log_concavity_violation))
                                             : py::object(py::none());
    d["newton_satisfied"] = s.newton_satisfied;
    return d;
}

py::dict bounds_to_py(const AnnulusBounds& b) {
    py::dict d;
    d["r"] = b.r;
    d["R"] = b.R;
    d["r_exact"] = b.r_exact.get_str();
    d["R_exact"] = b.R_exact.get_str();
    d["gamma_multiplicity"] = b.gamma_multiplicity;
    d["window_restricted"] = b.window_restricted;
    return d;
}

py::dict compute(std::uint64_t n, const std::string& method) {
    DominationResult res = comaximal_domination(n, method_from_name(method));
    py::dict d;
    d["n"] = res.n;
    d["method"] = method_name(res.method);
    d["gamma"] = res.gamma;
    d["coefficients"] = coeffs_to_py(res.polynomial);
    return d;
}

py::dict analyze(std::uint64_t n) {
    DominationResult res = comaximal_domination(n, Method::blowup);
    py::dict d;
    d["n"] = n;
    d["gamma"] = res.gamma;
    d["coefficients"] = coeffs_to_py(res.polynomial);
    d["shape"] = shape_to_py(shape_analyze(res.polynomial));
    d["bounds"] = bounds_to_py(enestrom_kakeya(res.polynomial));
    return d;
}

py::dict roots(std::uint64_t n, double tol, unsigned max_iter, bool published) {
    IntPoly poly =
        published ? comaximal_domination(n, Method::closed_prime_power_published).polynomial
                  : comaximal_domination(n, Method::blowup).polynomial;
    RootSet rs = find_roots(poly, tol, max_iter);
    AnnulusBounds bounds = enestrom_kakeya(poly);
    RootClaimReport claims = verify_root_claims(poly, rs, bounds);
    py::dict d;
    d["n"] = n;
    d["converged"] = rs.converged;
    d["iterations"] = rs.iterations_used;
    d["zero_multiplicity"] = rs.zero_multiplicity;
    d["roots"] = rs.roots;
    d["residuals"] = rs.residuals;
    d["bounds"] = bounds_to_py(bounds);
    d["claims_ok"] = claims.all_ok();
    d["claim_violations"] = claims.violations;
    return d;
}

py::list verify(std::uint64_t n, bool brute, bool brute_g2) {
    py::list out;
    for (const auto& disc : verify_n(n, brute, brute_g2)) {
        py::dict d;
        d["claim_id"] = disc.claim_id;
        d["verified"] = disc.verified;
        d["published_variant"] = disc.published_variant;
        d["detail"] = disc.detail;
        out.append(d);
    }
    return out;
}

py::dict structure(std::uint64_t n) {
    StructureCheck c = verify_structure(n);
    py::dict d;
    d["ok"] = c.ok;
    d["diagnostic"] = c.diagnostic;
    return d;
}

}  // namespace

PYBIND11_MODULE(comax, m) {
    m.doc() = "domination polynomials of co-maximal graphs of Z_n";

    m.def("compute", &compute, py::arg("n"), py::arg("method") = "blowup",
          "Compute D(Gamma(Z_n), x); coefficients ascending, exact integers.");
    m.def("analyze", &analyze, py::arg("n"),
          "Coefficient-shape classification and Enestrom-Kakeya annulus.");
    m.def("roots", &roots, py::arg("n"), py::arg("tol") = 1e-10,
          py::arg("max_iter") = 5000, py::arg("published") = false,
          "All complex roots with residuals and root-claim checks.");
    m.def("verify", &verify, py::arg("n"), py::arg("brute") = false,
          py::arg("brute_g2") = false,
          "Arbitrate the closed forms against the blow-up (and oracle).");
    m.def("verify_structure", &structure, py::arg("n"),
          "Compare the blow-up construction to the ground-truth graph.");
    m.def(
        "shape",
        [](const py::sequence& coeffs) { return shape_to_py(shape_analyze(poly_from_py(coeffs))); },
        py::arg("coefficients"),
        "Shape classification of an arbitrary coefficient sequence.");
    m.def(
        "euler_phi", [](std::uint64_t n) { return euler_phi(factorize(n)); }, py::arg("n"));
    m.def(
        "brute_force",
        [](std::uint64_t n) { return coeffs_to_py(brute_force_counts(build_comaximal(n))); },
        py::arg("n"), "Oracle dominating-set counts by subset enumeration (n <= 30).");
}
