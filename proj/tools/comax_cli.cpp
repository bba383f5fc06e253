#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <string>

#include "comax/analysis.hpp"
#include "comax/domination.hpp"
#include "comax/report.hpp"

using namespace comax;

namespace {

constexpr int kExitBadArgs = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitNoConvergence = 4;

Method parse_method(const std::string& name, bool published) {
    if (name == "auto" || name == "blowup") return Method::blowup;
    if (name == "brute") return Method::brute;
    if (name == "closed-prime") return Method::closed_prime;
    if (name == "closed-prime-power")
        return published ? Method::closed_prime_power_published : Method::closed_prime_power;
    if (name == "closed-pq") return Method::closed_pq;
    if (name == "closed-pq-powers") return Method::closed_pq_powers;
    if (name == "g2-pqr") return Method::g2_pqr_published;
    throw std::invalid_argument("unknown method: " + name);
}

void emit(const RunReport& rep, const std::string& format, const RootSet* roots_for_csv) {
    if (format == "json") {
        std::cout << to_json(rep).dump(2) << "\n";
    } else {
        if (roots_for_csv)
            std::cout << roots_csv(*roots_for_csv);
        else
            std::cout << polynomial_csv(rep.polynomial);
    }
}

int cmd_compute(std::uint64_t n, const std::string& method, bool published,
                const std::string& format) {
    const Method m = parse_method(method, published);  // bad names exit 2 via main
    DominationResult res;
    try {
        res = comaximal_domination(n, m);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    RunReport rep;
    rep.n = n;
    rep.methods_run = {method_name(res.method)};
    rep.polynomial = res.polynomial.coeff_strings();
    rep.gamma = res.gamma;
    emit(rep, format, nullptr);
    return 0;
}

int cmd_verify(const std::string& range, bool brute, bool brute_g2) {
    std::uint64_t lo = 0, hi = 0;
    const auto pos = range.find("..");
    try {
        if (pos == std::string::npos) throw std::invalid_argument("range");
        lo = std::stoull(range.substr(0, pos));
        hi = std::stoull(range.substr(pos + 2));
    } catch (...) {
        std::cerr << "error: range must look like a..b\n";
        return kExitBadArgs;
    }
    if (lo < 2 || hi > 200 || lo > hi) {
        std::cerr << "error: range must lie within 2..200\n";
        return kExitBadArgs;
    }
    nlohmann::json rows = nlohmann::json::array();
    bool corrected_failure = false;
    for (std::uint64_t n = lo; n <= hi; ++n) {
        for (const auto& d : verify_n(n, brute, brute_g2)) {
            nlohmann::json row = to_json(d);
            row["n"] = n;
            rows.push_back(row);
            if (!d.verified && !d.published_variant) corrected_failure = true;
        }
    }
    nlohmann::json out;
    out["range"] = {{"from", lo}, {"to", hi}};
    out["claims"] = rows;
    out["all_corrected_verified"] = !corrected_failure;
    std::cout << out.dump(2) << "\n";
    return corrected_failure ? 1 : 0;
}

int cmd_analyze(std::uint64_t n, const std::string& format) {
    auto res = comaximal_domination(n, Method::blowup);
    RunReport rep;
    rep.n = n;
    rep.methods_run = {"blowup"};
    rep.polynomial = res.polynomial.coeff_strings();
    rep.gamma = res.gamma;
    rep.shape = shape_analyze(res.polynomial);
    rep.bounds = enestrom_kakeya(res.polynomial);
    emit(rep, format, nullptr);
    return 0;
}

int cmd_roots(std::uint64_t n, bool published, double tol, unsigned max_iter,
              const std::string& svg_path, const std::string& format) {
    IntPoly poly;
    try {
        poly = published
                   ? comaximal_domination(n, Method::closed_prime_power_published).polynomial
                   : comaximal_domination(n, Method::blowup).polynomial;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    RootSet rs = find_roots(poly, tol, max_iter);
    AnnulusBounds bounds = enestrom_kakeya(poly);
    RootClaimReport claims = verify_root_claims(poly, rs, bounds);

    RunReport rep;
    rep.n = n;
    rep.methods_run = {published ? "closed_prime_power_published" : "blowup"};
    rep.polynomial = poly.coeff_strings();
    rep.gamma = poly.low_index();
    rep.bounds = bounds;
    rep.roots = rs;
    Discrepancy claim;
    claim.claim_id = "root_claims(annulus,vieta,conjugate)";
    claim.verified = claims.all_ok();
    claim.detail = claims.violations.empty() ? "all checks passed" : claims.violations.front();
    rep.discrepancies.push_back(claim);

    if (!svg_path.empty()) write_file_atomic(svg_path, roots_svg(rs, &bounds));
    emit(rep, format, format == "csv" ? &rs : nullptr);
    return rs.converged ? 0 : kExitNoConvergence;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"domination polynomials of co-maximal graphs of Z_n"};
    app.require_subcommand(1);

    std::uint64_t n = 0;
    std::string method = "auto";
    std::string format = "json";
    std::string range;
    std::string svg_path;
    bool published = false;
    bool brute = false;
    bool brute_g2 = false;
    double tol = 1e-10;
    unsigned max_iter = 5000;

    auto* compute = app.add_subcommand("compute", "compute D(Gamma(Z_n), x)");
    compute->add_option("--n", n)->required();
    compute->add_option("--method", method);
    compute->add_flag("--published", published);
    compute->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    auto* verify = app.add_subcommand("verify", "arbitrate closed forms against the blow-up and oracle");
    verify->add_option("--range", range)->required();
    verify->add_flag("--brute", brute);
    verify->add_flag("--brute-g2", brute_g2);

    auto* analyze = app.add_subcommand("analyze", "shape and annulus analysis");
    analyze->add_option("--n", n)->required();
    analyze->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    auto* roots = app.add_subcommand("roots", "complex roots with residuals");
    roots->add_option("--n", n)->required();
    roots->add_option("--tol", tol);
    roots->add_option("--max-iter", max_iter);
    roots->add_option("--svg", svg_path);
    roots->add_flag("--published", published);
    roots->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadArgs;
    }

    try {
        if (compute->parsed()) return cmd_compute(n, method, published, format);
        if (verify->parsed()) return cmd_verify(range, brute, brute_g2);
        if (analyze->parsed()) return cmd_analyze(n, format);
        if (roots->parsed()) return cmd_roots(n, published, tol, max_iter, svg_path, format);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArgs;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitBadArgs;
}
