#include "comax/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace comax {

nlohmann::json to_json(const Discrepancy& d) {
    return {{"claim_id", d.claim_id},
            {"status", d.verified ? "verified" : "discrepant"},
            {"detail", d.detail}};
}

nlohmann::json to_json(const RunReport& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["methods_run"] = r.methods_run;
    j["polynomial"] = r.polynomial;
    j["gamma"] = r.gamma;
    if (r.shape) {
        nlohmann::json s;
        s["unimodal"] = r.shape->unimodal;
        s["mode_indices"] = r.shape->mode_indices;
        s["oscillations"] = r.shape->oscillations;
        s["log_concave"] = r.shape->log_concave;
        s["first_log_concavity_violation"] =
            r.shape->first_log_concavity_violation
                ? nlohmann::json(*r.shape->first_log_concavity_violation)
                : nlohmann::json(nullptr);
        s["newton_satisfied"] = r.shape->newton_satisfied;
        s["first_newton_violation"] = r.shape->first_newton_violation
                                          ? nlohmann::json(*r.shape->first_newton_violation)
                                          : nlohmann::json(nullptr);
        j["shape"] = s;
    } else {
        j["shape"] = nullptr;
    }
    if (r.bounds) {
        j["bounds"] = {{"r", r.bounds->r},
                       {"R", r.bounds->R},
                       {"r_exact", r.bounds->r_exact.get_str()},
                       {"R_exact", r.bounds->R_exact.get_str()},
                       {"gamma_multiplicity", r.bounds->gamma_multiplicity},
                       {"window_restricted", r.bounds->window_restricted}};
    } else {
        j["bounds"] = nullptr;
    }
    if (r.roots) {
        nlohmann::json arr = nlohmann::json::array();
        for (std::size_t i = 0; i < r.roots->roots.size(); ++i)
            arr.push_back({{"re", r.roots->roots[i].real()},
                           {"im", r.roots->roots[i].imag()},
                           {"residual", r.roots->residuals[i]}});
        j["roots"] = arr;
        j["roots_converged"] = r.roots->converged;
        j["roots_iterations"] = r.roots->iterations_used;
    } else {
        j["roots"] = nullptr;
    }
    nlohmann::json disc = nlohmann::json::array();
    for (const auto& d : r.discrepancies) disc.push_back(to_json(d));
    j["discrepancies"] = disc;
    return j;
}

std::string polynomial_csv(const std::vector<std::string>& coeffs) {
    std::ostringstream os;
    os << "index,coefficient\n";
    for (std::size_t i = 0; i < coeffs.size(); ++i) os << i << "," << coeffs[i] << "\n";
    return os.str();
}

std::string roots_csv(const RootSet& rs) {
    std::ostringstream os;
    os << "re,im,residual\n";
    os.precision(17);
    for (std::size_t i = 0; i < rs.roots.size(); ++i)
        os << rs.roots[i].real() << "," << rs.roots[i].imag() << "," << rs.residuals[i] << "\n";
    return os.str();
}

std::optional<std::size_t> first_diff(const IntPoly& a, const IntPoly& b) {
    const std::size_t top =
        static_cast<std::size_t>(std::max(a.degree(), b.degree()) + 1);
    for (std::size_t i = 0; i < top; ++i)
        if (a.coeff(i) != b.coeff(i)) return i;
    return std::nullopt;
}

namespace {

Discrepancy compare_polys(std::string claim_id, const IntPoly& got, const IntPoly& expect,
                          bool published) {
    Discrepancy d;
    d.claim_id = std::move(claim_id);
    d.published_variant = published;
    auto idx = first_diff(got, expect);
    if (!idx) {
        d.verified = true;
        d.detail = "exact match";
    } else {
        std::ostringstream os;
        os << "first differing coefficient at index " << *idx << " (degrees " << got.degree()
           << " vs " << expect.degree() << ")";
        d.detail = os.str();
    }
    return d;
}

}  // namespace

std::vector<Discrepancy> verify_n(std::uint64_t n, bool include_brute, bool include_brute_g2) {
    std::vector<Discrepancy> out;
    auto f = factorize(n);
    auto spec = build_blowup_spec(n);
    IntPoly blow = blowup_domination(spec);

    if (include_brute && n <= 24) {
        IntPoly oracle = brute_force_counts(build_comaximal(n));
        out.push_back(compare_polys("blowup_vs_oracle", blow, oracle, false));
    }
    if (f.is_prime()) {
        out.push_back(compare_polys("closed_prime_vs_blowup", closed_prime(n), blow, false));
    } else if (f.is_prime_power()) {
        const auto p = f.factors[0].prime;
        const auto m = f.factors[0].exponent;
        out.push_back(compare_polys("closed_prime_power(corrected)_vs_blowup",
                                    closed_prime_power(p, m, PrimePowerVariant::corrected), blow,
                                    false));
        out.push_back(compare_polys("closed_prime_power(published)_vs_blowup",
                                    closed_prime_power(p, m, PrimePowerVariant::published), blow,
                                    true));
    } else if (f.factors.size() == 2) {
        const auto p = f.factors[0].prime, q = f.factors[1].prime;
        const auto n1 = f.factors[0].exponent, n2 = f.factors[1].exponent;
        if (n1 == 1 && n2 == 1)
            out.push_back(compare_polys("closed_pq_vs_blowup", closed_pq(p, q), blow, false));
        else
            out.push_back(compare_polys("closed_pq_powers_vs_blowup",
                                        closed_pq_powers(p, n1, q, n2), blow, false));
    }
    if (include_brute_g2 && f.factors.size() == 3 && f.is_square_free()) {
        IntPoly g2 = blowup_g2(spec);
        std::uint64_t g2_order = 0;
        for (auto m : spec.class_sizes) g2_order += m;
        if (g2_order <= 24) {
            IntPoly oracle = brute_force_counts(expand_g2(spec));
            out.push_back(compare_polys("g2_blowup_vs_oracle", g2, oracle, false));
        }
        out.push_back(compare_polys(
            "g2_pqr(published)_vs_blowup",
            g2_pqr_published(f.factors[0].prime, f.factors[1].prime, f.factors[2].prime), g2,
            true));
    }
    return out;
}

std::string roots_svg(const RootSet& rs, const AnnulusBounds* bounds) {
    // fixed 800x800 viewBox centered on the origin
    double extent = 1.0;
    for (const auto& z : rs.roots) extent = std::max(extent, std::abs(z));
    if (bounds) extent = std::max(extent, bounds->R);
    extent *= 1.1;
    const double scale = 360.0 / extent;  // world units -> px, origin at (400, 400)
    auto X = [&](double x) { return 400.0 + scale * x; };
    auto Y = [&](double y) { return 400.0 - scale * y; };

    std::ostringstream os;
    os.precision(10);
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<!-- root scatter; 1 world unit = " << scale << " px, origin at (400,400)";
    if (bounds) os << "; annulus r=" << bounds->r << " R=" << bounds->R;
    os << " -->\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 800\">\n";
    os << "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
    os << "<line x1=\"0\" y1=\"400\" x2=\"800\" y2=\"400\" stroke=\"#999\"/>\n";
    os << "<line x1=\"400\" y1=\"0\" x2=\"400\" y2=\"800\" stroke=\"#999\"/>\n";
    // unit markers on both axes
    for (int k = -static_cast<int>(extent); k <= static_cast<int>(extent); ++k) {
        if (k == 0) continue;
        os << "<line x1=\"" << X(k) << "\" y1=\"396\" x2=\"" << X(k)
           << "\" y2=\"404\" stroke=\"#999\"/>\n";
        os << "<line x1=\"396\" y1=\"" << Y(k) << "\" x2=\"404\" y2=\"" << Y(k)
           << "\" stroke=\"#999\"/>\n";
    }
    if (bounds) {
        os << "<circle cx=\"400\" cy=\"400\" r=\"" << scale * bounds->r
           << "\" fill=\"none\" stroke=\"#1f77b4\" stroke-dasharray=\"4 3\"/>\n";
        os << "<circle cx=\"400\" cy=\"400\" r=\"" << scale * bounds->R
           << "\" fill=\"none\" stroke=\"#1f77b4\"/>\n";
    }
    for (const auto& z : rs.roots)
        os << "<circle cx=\"" << X(z.real()) << "\" cy=\"" << Y(z.imag())
           << "\" r=\"4\" fill=\"#d62728\"/>\n";
    os << "</svg>\n";
    return os.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open " + tmp);
        f << content;
        if (!f.good()) throw std::runtime_error("write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("rename failed for " + path);
}

}  // namespace comax
