#include "comax/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace comax {

ShapeReport shape_analyze(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("shape_analyze: zero polynomial");
    const auto& c = p.coefficients();
    for (const auto& e : c)
        if (e < 0) throw std::invalid_argument("shape_analyze: negative coefficient");

    ShapeReport rep;
    const mpz_class* mx = &c[0];
    for (const auto& e : c)
        if (e > *mx) mx = &e;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] == *mx) rep.mode_indices.push_back(i);

    // plateau compression, then direction signs
    std::vector<const mpz_class*> comp;
    for (const auto& e : c)
        if (comp.empty() || *comp.back() != e) comp.push_back(&e);
    std::vector<int> signs;
    for (std::size_t i = 1; i < comp.size(); ++i)
        signs.push_back(*comp[i] > *comp[i - 1] ? 1 : -1);

    unsigned peaks = 0;
    bool fall_then_rise = false;
    for (std::size_t i = 1; i < signs.size(); ++i) {
        if (signs[i - 1] > 0 && signs[i] < 0) ++peaks;
        if (signs[i - 1] < 0 && signs[i] > 0) fall_then_rise = true;
    }
    rep.oscillations = peaks;
    rep.unimodal = !fall_then_rise;  // pattern is rises followed by falls

    const long d = p.degree();
    rep.log_concave = true;
    rep.newton_satisfied = true;
    for (long i = 1; i < d; ++i) {
        const mpz_class& prev = p.coeff(i - 1);
        const mpz_class& cur = p.coeff(i);
        const mpz_class& next = p.coeff(i + 1);
        if (rep.log_concave && cur * cur < prev * next) {
            rep.log_concave = false;
            rep.first_log_concavity_violation = static_cast<std::size_t>(i);
        }
        // cross-multiplied Newton inequality, exact
        if (rep.newton_satisfied &&
            cur * cur * i * (d - i) < prev * next * (i + 1) * (d - i + 1)) {
            rep.newton_satisfied = false;
            rep.first_newton_violation = static_cast<std::size_t>(i);
        }
    }
    return rep;
}

AnnulusBounds enestrom_kakeya(const IntPoly& p) {
    const auto& c = p.coefficients();
    for (const auto& e : c)
        if (e < 0) throw std::invalid_argument("enestrom_kakeya: negative coefficient");
    std::size_t positives = 0;
    for (const auto& e : c)
        if (e > 0) ++positives;
    if (positives < 2)
        throw std::invalid_argument("enestrom_kakeya: need at least two positive coefficients");

    AnnulusBounds b;
    b.gamma_multiplicity = static_cast<unsigned>(p.low_index());
    const std::size_t lo = p.low_index();
    const std::size_t hi = static_cast<std::size_t>(p.degree());

    // maximal window of strictly positive coefficients inside [lo, hi]
    std::size_t best_s = lo, best_e = lo, best_len = 0;
    std::size_t s = lo;
    bool in_run = false;
    for (std::size_t i = lo; i <= hi + 1; ++i) {
        const bool pos = i <= hi && p.coeff(i) > 0;
        if (pos && !in_run) { s = i; in_run = true; }
        if (!pos && in_run) {
            if (i - s > best_len) { best_s = s; best_e = i - 1; best_len = i - s; }
            in_run = false;
        }
    }
    if (best_s != lo || best_e != hi) b.window_restricted = true;

    bool first = true;
    for (std::size_t i = best_s; i < best_e; ++i) {
        mpq_class ratio(p.coeff(i), p.coeff(i + 1));
        ratio.canonicalize();
        if (first) {
            b.r_exact = b.R_exact = ratio;
            first = false;
        } else {
            if (ratio < b.r_exact) b.r_exact = ratio;
            if (ratio > b.R_exact) b.R_exact = ratio;
        }
    }
    b.r = b.r_exact.get_d();
    b.R = b.R_exact.get_d();
    return b;
}

mpq_class prime_power_R(std::uint64_t p, unsigned m) {
    mpz_class alpha = 1;
    for (unsigned i = 0; i + 1 < m; ++i) alpha *= p;
    mpq_class R(mpz_class(p) * (p - 1) + 2 * alpha * p + alpha * (alpha - 1),
                2 * (alpha + p));
    R.canonicalize();
    return R;
}

double cauchy_bound(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("cauchy_bound: zero polynomial");
    const long d = p.degree();
    mpq_class mx = 0;
    for (long i = 0; i < d; ++i) {
        mpq_class r(abs(p.coeff(i)), abs(p.coeff(d)));
        r.canonicalize();
        if (r > mx) mx = r;
    }
    return 1.0 + mx.get_d();
}

namespace {

// Complex arithmetic over GMP floats. The coefficients here are hundreds of
// bits wide and evaluation near a root cluster cancels almost all of them, so
// hardware floats drown that region in rounding noise: the sweeps must run
// with precision tied to the coefficient size.
struct CF {
    mpf_class re, im;
};

CF cf_sub(const CF& a, const CF& b) { return {a.re - b.re, a.im - b.im}; }

CF cf_mul(const CF& a, const CF& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

mpf_class cf_abs2(const CF& a) { return a.re * a.re + a.im * a.im; }

// Caller guarantees b != 0.
CF cf_div(const CF& a, const CF& b) {
    mpf_class n = cf_abs2(b);
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

mpf_class cf_abs(const CF& a) { return sqrt(cf_abs2(a)); }

mpf_class residual_at(const std::vector<mpf_class>& c, const CF& z) {
    CF v{mpf_class(0), mpf_class(0)};
    mpf_class scale = 0;
    const mpf_class az = cf_abs(z);
    for (std::size_t i = c.size(); i-- > 0;) {
        v = cf_mul(v, z);
        v.re += c[i];
        scale = scale * az + abs(c[i]);
    }
    mpf_class num = cf_abs(v);
    return scale > 0 ? mpf_class(num / scale) : num;
}

}  // namespace

RootSet find_roots(const IntPoly& p, double tol, unsigned max_iter) {
    if (p.degree() < 1) throw std::invalid_argument("find_roots: degree must be >= 1");
    if (p.degree() > 2000) throw std::invalid_argument("find_roots: degree exceeds 2000");
    RootSet rs;
    const std::size_t gamma = p.low_index();
    rs.zero_multiplicity = static_cast<unsigned>(gamma);
    const auto& a = p.coefficients();
    const std::size_t d = a.size() - 1 - gamma;  // cofactor degree

    for (std::size_t i = 0; i < gamma; ++i) {
        rs.roots.emplace_back(0.0, 0.0);
        rs.residuals.push_back(0.0);
    }
    if (d == 0) {
        rs.converged = true;
        return rs;
    }

    std::size_t amax_bits = 1;
    for (std::size_t i = gamma; i < a.size(); ++i)
        if (a[i] != 0) amax_bits = std::max(amax_bits, mpz_sizeinbase(a[i].get_mpz_t(), 2));

    // Start circle: the Cauchy disk is far too large when a middle coefficient
    // dwarfs the leading one, so cap it with the Fujiwara bound (computed from
    // coefficient bit lengths; a rough radius is all that is needed).
    const double lead_bits =
        static_cast<double>(mpz_sizeinbase(a.back().get_mpz_t(), 2));
    double fuji_log = -1024.0;
    for (std::size_t i = 0; i < d; ++i) {
        const mpz_class& ci = a[gamma + i];
        if (ci == 0) continue;
        const double bits = static_cast<double>(mpz_sizeinbase(ci.get_mpz_t(), 2));
        fuji_log = std::max(fuji_log, (bits - lead_bits) / static_cast<double>(d - i));
    }
    std::vector<mpz_class> cof(a.begin() + gamma, a.end());
    const double radius =
        std::min(cauchy_bound(IntPoly(cof)) / 2.0, 2.0 * std::exp2(fuji_log));

    // Enough precision that the evaluation noise floor sits far below the
    // coefficient mass anywhere inside the start circle.
    const unsigned long prec =
        static_cast<unsigned long>(amax_bits) +
        static_cast<unsigned long>(
            static_cast<double>(d) * std::max(1.0, std::log2(radius + 2.0))) +
        96;

    std::vector<mpf_class> c(d + 1);
    for (std::size_t i = 0; i <= d; ++i) c[i] = mpf_class(a[gamma + i], prec);

    constexpr double kAngleOffset = 0.4;  // keeps guesses off the real axis
    std::vector<CF> z;
    z.reserve(d);
    for (std::size_t k = 0; k < d; ++k) {
        const double th = 2.0 * std::numbers::pi * static_cast<double>(k) / d + kAngleOffset;
        z.push_back({mpf_class(radius * std::cos(th), prec),
                     mpf_class(radius * std::sin(th), prec)});
    }

    const mpf_class f_tol(tol, prec);
    const CF zero{mpf_class(0, prec), mpf_class(0, prec)};
    unsigned iter = 0;
    bool done = false;
    // Ehrlich-Aberth sweeps with serial (in-place) updates. The repulsion term
    // keeps approximations from piling onto one root of a tight cluster, and
    // serial updates break the symmetric trajectories that make synchronous
    // sweeps collapse two approximations onto the same root.
    auto sweep = [&]() {
        mpf_class max_step(0, prec);
        for (std::size_t k = 0; k < d; ++k) {
            CF pv = zero, dv = zero;
            for (std::size_t j = d + 1; j-- > 0;) {
                dv = cf_mul(dv, z[k]);
                dv.re += pv.re;
                dv.im += pv.im;
                pv = cf_mul(pv, z[k]);
                pv.re += c[j];
            }
            CF corr = zero;
            if (cf_abs2(dv) != 0) {
                const CF newton = cf_div(pv, dv);
                CF repulse = zero;
                for (std::size_t j = 0; j < d; ++j) {
                    if (j == k) continue;
                    CF diff = cf_sub(z[k], z[j]);
                    if (cf_abs2(diff) == 0) continue;
                    CF inv = cf_div(CF{mpf_class(1, prec), mpf_class(0, prec)}, diff);
                    repulse.re += inv.re;
                    repulse.im += inv.im;
                }
                CF denom = cf_mul(newton, repulse);
                denom.re = 1 - denom.re;
                denom.im = -denom.im;
                corr = cf_abs2(denom) == 0 ? newton : cf_div(newton, denom);
            }
            const CF next = cf_sub(z[k], corr);
            mpf_class step = cf_abs(corr) / (cf_abs(next) + 1);
            if (step > max_step) max_step = step;
            z[k] = next;
        }
        return max_step;
    };
    for (; iter < max_iter && !done; ++iter) {
        sweep();
        done = true;
        for (std::size_t k = 0; k < d; ++k)
            if (residual_at(c, z[k]) >= f_tol) { done = false; break; }
    }
    rs.iterations_used = iter;
    rs.converged = done;

    // A residual below tol can still leave clustered roots with forward error
    // the Vieta checks would see; polish until the steps reach the precision
    // floor.
    mpf_class step_floor(1, prec);
    step_floor >>= (prec - prec / 8);
    for (unsigned extra = 0; extra < 64; ++extra)
        if (sweep() < step_floor) break;

    // canonical root order for reproducible output
    std::sort(z.begin(), z.end(), [](const CF& x, const CF& y) {
        if (x.re != y.re) return x.re < y.re;
        return x.im < y.im;
    });
    for (const auto& zk : z) {
        rs.roots.emplace_back(zk.re.get_d(), zk.im.get_d());
        rs.residuals.push_back(residual_at(c, zk).get_d());
    }
    return rs;
}

RootClaimReport verify_root_claims(const IntPoly& p, const RootSet& roots,
                                   const AnnulusBounds& bounds) {
    RootClaimReport rep;
    const double eps = 1e-9 * bounds.R;
    rep.annulus_ok = true;
    for (const auto& z : roots.roots) {
        const double m = std::abs(z);
        if (m == 0.0) continue;
        rep.max_modulus = std::max(rep.max_modulus, m);
        if (m < bounds.r - eps || m > bounds.R + eps) {
            rep.annulus_ok = false;
            std::ostringstream os;
            os << "root modulus " << m << " outside [" << bounds.r << ", " << bounds.R << "]";
            rep.violations.push_back(os.str());
        }
    }

    const long d = p.degree();
    // Vieta: sum of roots = -a_{d-1}/a_d
    std::complex<double> sum = 0.0;
    for (const auto& z : roots.roots) sum += z;
    mpq_class s_exact(-p.coeff(d - 1), p.coeff(d));
    s_exact.canonicalize();
    const double target_sum = s_exact.get_d();
    const double denom_s = std::max(1.0, std::abs(target_sum));
    rep.vieta_sum_ok = std::abs(sum - std::complex<double>(target_sum, 0.0)) / denom_s <= 1e-6;
    if (!rep.vieta_sum_ok) rep.violations.push_back("vieta sum mismatch");

    // Vieta: product of nonzero roots = +/- a_gamma / a_d
    std::complex<double> prod = 1.0;
    for (const auto& z : roots.roots)
        if (std::abs(z) != 0.0) prod *= z;
    mpq_class p_exact(p.coeff(p.low_index()), p.coeff(d));
    p_exact.canonicalize();
    const double target_abs = std::abs(p_exact.get_d());
    const double denom_p = std::max(1.0, target_abs);
    rep.vieta_product_ok = std::abs(std::abs(prod) - target_abs) / denom_p <= 1e-6;
    if (!rep.vieta_product_ok) rep.violations.push_back("vieta product mismatch");

    // conjugate pairing of non-real roots
    rep.conjugate_pairs_ok = true;
    const double pair_tol = 1e-6 * std::max(1.0, rep.max_modulus);
    std::vector<bool> used(roots.roots.size(), false);
    for (std::size_t i = 0; i < roots.roots.size(); ++i) {
        const auto& z = roots.roots[i];
        if (used[i] || std::abs(z.imag()) <= pair_tol) continue;
        bool found = false;
        for (std::size_t j = 0; j < roots.roots.size(); ++j) {
            if (j == i || used[j]) continue;
            if (std::abs(roots.roots[j] - std::conj(z)) <= pair_tol) {
                used[i] = used[j] = true;
                found = true;
                break;
            }
        }
        if (!found) {
            rep.conjugate_pairs_ok = false;
            rep.violations.push_back("unpaired non-real root");
        }
    }
    return rep;
}

}  // namespace comax
