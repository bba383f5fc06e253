#ifndef COMAX_REPORT_HPP
#define COMAX_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "comax/analysis.hpp"
#include "comax/domination.hpp"

namespace comax {

struct Discrepancy {
    std::string claim_id;
    bool verified = false;
    bool published_variant = false;  // discrepancies here are expected, not failures
    std::string detail;
};

struct RunReport {
    std::uint64_t n = 0;
    std::vector<std::string> methods_run;
    std::vector<std::string> polynomial;  // decimal strings, ascending degree
    std::size_t gamma = 0;
    std::optional<ShapeReport> shape;
    std::optional<AnnulusBounds> bounds;
    std::optional<RootSet> roots;
    std::vector<Discrepancy> discrepancies;
};

nlohmann::json to_json(const RunReport& r);
nlohmann::json to_json(const Discrepancy& d);

std::string polynomial_csv(const std::vector<std::string>& coeffs);
std::string roots_csv(const RootSet& rs);

/// First coefficient index where the two polynomials differ.
std::optional<std::size_t> first_diff(const IntPoly& a, const IntPoly& b);

/// All arbitration claims for a single n: blow-up vs applicable closed forms,
/// optionally vs the brute-force oracle, optionally the pqr G_2 checks.
std::vector<Discrepancy> verify_n(std::uint64_t n, bool include_brute, bool include_brute_g2);

/// Static scatter plot of a root set with optional annulus circles.
std::string roots_svg(const RootSet& rs, const AnnulusBounds* bounds);

/// Writes via a temp file in the same directory, then renames.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace comax

#endif
