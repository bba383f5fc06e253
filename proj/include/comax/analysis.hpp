#ifndef COMAX_ANALYSIS_HPP
#define COMAX_ANALYSIS_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "comax/polynomial.hpp"

namespace comax {

struct ShapeReport {
    bool unimodal = false;
    std::vector<std::size_t> mode_indices;  // indices attaining the maximum
    unsigned oscillations = 0;
    bool log_concave = false;
    std::optional<std::size_t> first_log_concavity_violation;
    bool newton_satisfied = false;
    std::optional<std::size_t> first_newton_violation;
};

/// Coefficient-shape analysis with exact integer arithmetic. Plateaus are
/// compressed before direction analysis; oscillations count rise-to-fall
/// reversals and a sequence is unimodal when its direction pattern is a run
/// of rises followed by a run of falls.
ShapeReport shape_analyze(const IntPoly& p);

struct AnnulusBounds {
    mpq_class r_exact;
    mpq_class R_exact;
    double r = 0.0;
    double R = 0.0;
    unsigned gamma_multiplicity = 0;
    bool window_restricted = false;  // interior zeros forced a sub-window
};

/// Enestrom-Kakeya bounds of the cofactor after deflating x^gamma.
AnnulusBounds enestrom_kakeya(const IntPoly& p);

/// Closed-form R = (p(p-1) + 2*alpha*p + alpha(alpha-1)) / (2(alpha+p)) with
/// alpha = p^{m-1}, for the published prime-power polynomial.
mpq_class prime_power_R(std::uint64_t p, unsigned m);

/// 1 + max_i |a_i| / |a_d|.
double cauchy_bound(const IntPoly& p);

struct RootSet {
    std::vector<std::complex<double>> roots;  // zero root listed gamma times first
    std::vector<double> residuals;
    unsigned iterations_used = 0;
    bool converged = false;
    unsigned zero_multiplicity = 0;
};

/// Deterministic simultaneous iteration (Ehrlich-Aberth with serial updates,
/// run in extended precision sized to the coefficients) after exact deflation
/// of the x^gamma factor. Non-convergence is reported through the converged
/// flag, not an exception.
RootSet find_roots(const IntPoly& p, double tol, unsigned max_iter);

struct RootClaimReport {
    bool annulus_ok = false;
    bool vieta_sum_ok = false;
    bool vieta_product_ok = false;
    bool conjugate_pairs_ok = false;
    double max_modulus = 0.0;
    std::vector<std::string> violations;
    bool all_ok() const {
        return annulus_ok && vieta_sum_ok && vieta_product_ok && conjugate_pairs_ok;
    }
};

RootClaimReport verify_root_claims(const IntPoly& p, const RootSet& roots,
                                   const AnnulusBounds& bounds);

}  // namespace comax

#endif
