#include "comax/domination.hpp"

#include <cstddef>
#include <stdexcept>

namespace comax {

std::string method_name(Method m) {
    switch (m) {
        case Method::brute: return "brute";
        case Method::blowup: return "blowup";
        case Method::closed_prime: return "closed_prime";
        case Method::closed_prime_power: return "closed_prime_power";
        case Method::closed_prime_power_published: return "closed_prime_power_published";
        case Method::closed_pq: return "closed_pq";
        case Method::closed_pq_powers: return "closed_pq_powers";
        case Method::g2_pqr_published: return "g2_pqr_published";
    }
    return "?";
}

namespace {

// Recursive subset walk with two prunings: once every vertex is covered the
// remaining vertices are free (binomial tail), and a branch dies when even
// taking all remaining vertices cannot cover the graph.
struct BruteState {
    std::vector<std::uint64_t> closed;   // N[v] masks
    std::vector<std::uint64_t> suffix;   // OR of closed[v..]
    std::uint64_t full = 0;
    std::size_t order = 0;
    std::vector<std::vector<std::uint64_t>> tail_binom;  // C(r, j)
    std::vector<std::uint64_t> counts;

    void walk(std::size_t v, std::size_t chosen, std::uint64_t covered) {
        if (covered == full) {
            const std::size_t remaining = order - v;
            for (std::size_t j = 0; j <= remaining; ++j)
                counts[chosen + j] += tail_binom[remaining][j];
            return;
        }
        if (v == order) return;
        if ((covered | suffix[v]) != full) return;
        walk(v + 1, chosen, covered);
        walk(v + 1, chosen + 1, covered | closed[v]);
    }
};

}  // namespace

IntPoly brute_force_counts(const SimpleGraph& g) {
    const std::size_t n = g.order();
    if (n > 30) throw std::invalid_argument("brute_force_counts: order exceeds cap of 30");
    BruteState st;
    st.order = n;
    st.full = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
    st.closed.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
        std::uint64_t m = std::uint64_t(1) << v;
        for (std::size_t u = 0; u < n; ++u)
            if (u != v && g.adjacent(u, v)) m |= std::uint64_t(1) << u;
        st.closed[v] = m;
    }
    st.suffix.assign(n + 1, 0);
    for (std::size_t v = n; v-- > 0;) st.suffix[v] = st.suffix[v + 1] | st.closed[v];
    st.tail_binom.assign(n + 1, {});
    for (std::size_t r = 0; r <= n; ++r) {
        st.tail_binom[r].assign(r + 1, 1);
        for (std::size_t j = 1; j < r; ++j)
            st.tail_binom[r][j] = st.tail_binom[r - 1][j - 1] + st.tail_binom[r - 1][j];
    }
    st.counts.assign(n + 1, 0);
    if (n > 0) st.walk(0, 0, 0);
    std::vector<mpz_class> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) c[k] = mpz_class(static_cast<unsigned long>(st.counts[k]));
    c[0] = 0;  // the empty set is not a dominating set
    return IntPoly(std::move(c));
}

IntPoly union_compose(const IntPoly& d1, const IntPoly& d2) { return d1 * d2; }

IntPoly join_compose(const IntPoly& d1, std::uint64_t order1,
                     const IntPoly& d2, std::uint64_t order2) {
    if (order1 == 0) return d2;
    if (order2 == 0) return d1;
    IntPoly a = binomial_power(static_cast<std::size_t>(order1)) - IntPoly::one();
    IntPoly b = binomial_power(static_cast<std::size_t>(order2)) - IntPoly::one();
    return a * b + d1 + d2;
}

IntPoly blowup_g2(const BlowupSpec& spec) {
    const std::size_t t = spec.class_sizes.size();
    if (t > 24) throw std::invalid_argument("blowup_g2: more than 24 divisor classes");
    std::vector<std::uint32_t> nbr(t, 0);
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j)
            if (i != j && spec.base.graph.adjacent(i, j)) nbr[i] |= std::uint32_t(1) << j;

    // Half tables of products of g_i = (1+x)^{m_i} - 1 over subsets, so each
    // selection costs one polynomial multiplication.
    const std::size_t tl = t / 2, th = t - tl;
    const std::uint32_t low_mask = (std::uint32_t(1) << tl) - 1;
    auto build = [&](std::size_t base, std::size_t bits) {
        std::vector<IntPoly> tab(std::size_t(1) << bits, IntPoly::one());
        for (std::uint32_t m = 1; m < tab.size(); ++m) {
            const unsigned b = static_cast<unsigned>(__builtin_ctz(m));
            IntPoly g = binomial_power(static_cast<std::size_t>(spec.class_sizes[base + b])) -
                        IntPoly::one();
            tab[m] = tab[m & (m - 1)] * g;
        }
        return tab;
    };
    auto prodL = build(0, tl);
    auto prodH = build(tl, th);

    IntPoly acc;
    const std::uint32_t limit = t == 32 ? 0 : (std::uint32_t(1) << t);
    for (std::uint32_t T = 0;; ++T) {
        bool valid = true;
        std::uint64_t shift = 0;
        std::uint32_t A = 0;
        for (std::size_t i = 0; i < t; ++i) {
            if ((T >> i) & 1) {
                if (nbr[i] & T)
                    A |= std::uint32_t(1) << i;
                else
                    shift += spec.class_sizes[i];  // no neighbor selected: take all
            } else if (!(nbr[i] & T)) {
                valid = false;  // unselected class with no selected neighbor
                break;
            }
        }
        if (valid) {
            const std::uint32_t al = A & low_mask, ah = A >> tl;
            IntPoly term = al == 0 ? prodH[ah] : (ah == 0 ? prodL[al] : prodL[al] * prodH[ah]);
            acc = acc + term.shifted(static_cast<std::size_t>(shift));
        }
        if (T + 1 == limit) break;
    }
    return acc;
}

IntPoly blowup_domination(const BlowupSpec& spec) {
    std::uint64_t g2_order = 0;
    for (auto m : spec.class_sizes) g2_order += m;
    IntPoly g2 = blowup_g2(spec);
    // {0} u G_2, then join with the unit clique
    IntPoly h = union_compose(g2, IntPoly::monomial(1));
    IntPoly units = binomial_power(static_cast<std::size_t>(spec.unit_count)) - IntPoly::one();
    return join_compose(units, spec.unit_count, h, g2_order + 1);
}

namespace {

FactoredInteger require_shape(std::uint64_t n, Method m) {
    auto f = factorize(n);
    switch (m) {
        case Method::closed_prime:
            if (!f.is_prime()) throw std::invalid_argument(std::to_string(n) + " is not prime");
            break;
        case Method::closed_prime_power:
        case Method::closed_prime_power_published:
            if (!f.is_prime_power() || f.factors[0].exponent < 2)
                throw std::invalid_argument(std::to_string(n) +
                                            " is not a prime power p^m with m >= 2");
            break;
        case Method::closed_pq:
            if (f.factors.size() != 2 || !f.is_square_free())
                throw std::invalid_argument(std::to_string(n) +
                                            " is not a product of two distinct primes");
            break;
        case Method::closed_pq_powers:
            if (f.factors.size() != 2)
                throw std::invalid_argument(std::to_string(n) + " is not of the form p^a q^b");
            break;
        case Method::g2_pqr_published:
            if (f.factors.size() != 3 || !f.is_square_free())
                throw std::invalid_argument(std::to_string(n) +
                                            " is not a product of three distinct primes");
            break;
        default:
            break;
    }
    return f;
}

}  // namespace

DominationResult comaximal_domination(std::uint64_t n, Method method) {
    if (n < 2) throw std::invalid_argument("comaximal_domination: n must be >= 2");
    DominationResult res;
    res.n = n;
    res.method = method;
    switch (method) {
        case Method::brute:
            res.polynomial = brute_force_counts(build_comaximal(n));
            break;
        case Method::blowup:
            res.polynomial = blowup_domination(build_blowup_spec(n));
            break;
        case Method::closed_prime:
            require_shape(n, method);
            res.polynomial = closed_prime(n);
            break;
        case Method::closed_prime_power:
        case Method::closed_prime_power_published: {
            auto f = require_shape(n, method);
            res.polynomial = closed_prime_power(
                f.factors[0].prime, f.factors[0].exponent,
                method == Method::closed_prime_power ? PrimePowerVariant::corrected
                                                     : PrimePowerVariant::published);
            break;
        }
        case Method::closed_pq: {
            auto f = require_shape(n, method);
            res.polynomial = closed_pq(f.factors[0].prime, f.factors[1].prime);
            break;
        }
        case Method::closed_pq_powers: {
            auto f = require_shape(n, method);
            res.polynomial = closed_pq_powers(f.factors[0].prime, f.factors[0].exponent,
                                              f.factors[1].prime, f.factors[1].exponent);
            break;
        }
        case Method::g2_pqr_published: {
            auto f = require_shape(n, method);
            res.polynomial =
                g2_pqr_published(f.factors[0].prime, f.factors[1].prime, f.factors[2].prime);
            break;
        }
    }
    res.gamma = res.polynomial.low_index();
    return res;
}

IntPoly closed_prime(std::uint64_t p) {
    auto f = factorize(p);
    if (!f.is_prime()) throw std::invalid_argument("closed_prime: input is composite");
    return binomial_power(static_cast<std::size_t>(p)) - IntPoly::one();
}

IntPoly closed_prime_power(std::uint64_t p, unsigned m, PrimePowerVariant variant) {
    if (!factorize(p).is_prime()) throw std::invalid_argument("closed_prime_power: p not prime");
    if (m < 2) throw std::invalid_argument("closed_prime_power: m must be >= 2");
    std::uint64_t pm1 = 1;
    for (unsigned i = 0; i + 1 < m; ++i) pm1 *= p;
    const std::uint64_t pm = pm1 * p;
    if (variant == PrimePowerVariant::corrected)
        return binomial_power(pm) - binomial_power(pm1) + IntPoly::monomial(pm1);
    return binomial_power(pm1) * (binomial_power(p) - IntPoly::one()) + IntPoly::monomial(pm1);
}

IntPoly closed_pq(std::uint64_t p, std::uint64_t q) {
    if (!(p < q) || !factorize(p).is_prime() || !factorize(q).is_prime())
        throw std::invalid_argument("closed_pq: need primes p < q");
    return binomial_power(p * q) - binomial_power(p + q - 1) +
           ((binomial_power(p - 1) - IntPoly::one()) * (binomial_power(q - 1) - IntPoly::one()))
               .shifted(1) +
           IntPoly::monomial(p) + IntPoly::monomial(q);
}

IntPoly closed_pq_powers(std::uint64_t p, unsigned n1, std::uint64_t q, unsigned n2) {
    if (!(p < q) || !factorize(p).is_prime() || !factorize(q).is_prime() || n1 < 1 || n2 < 1)
        throw std::invalid_argument("closed_pq_powers: need primes p < q and positive exponents");
    if (n1 == 1 && n2 == 1) return closed_pq(p, q);
    std::uint64_t n = 1;
    for (unsigned i = 0; i < n1; ++i) n *= p;
    for (unsigned i = 0; i < n2; ++i) n *= q;
    const std::uint64_t phi = euler_phi(factorize(n));
    const std::uint64_t core = n / (p * q);
    const std::uint64_t aq = core * (q - 1);  // n(q-1)/(pq)
    const std::uint64_t ap = core * (p - 1);  // n(p-1)/(pq)
    // The trailing monomials carry the x^{n/pq} factor of the isolated block
    // as well; leaving them unshifted fails the brute-force cross-check.
    return binomial_power(n) - binomial_power(n - phi) +
           ((binomial_power(aq) - IntPoly::one()) * (binomial_power(ap) - IntPoly::one()))
               .shifted(core) +
           IntPoly::monomial(core + aq) + IntPoly::monomial(core + ap);
}

IntPoly g2_pqr_published(std::uint64_t p, std::uint64_t q, std::uint64_t r) {
    if (!(p < q && q < r))
        throw std::invalid_argument("g2_pqr_published: need primes p < q < r");
    auto phi = [](std::uint64_t v) { return euler_phi(factorize(v)); };
    auto factor = [&](std::uint64_t big, std::uint64_t small) {
        return (binomial_power(phi(big)) - IntPoly::one()) * binomial_power(phi(small)) +
               IntPoly::monomial(phi(small));
    };
    return factor(p * q, r) * factor(p * r, q) * factor(q * r, p);
}

mpz_class pqr_case_counts(std::uint64_t p, std::uint64_t q, std::uint64_t r, std::uint64_t k) {
    if (!(p < q && q < r))
        throw std::invalid_argument("pqr_case_counts: need primes p < q < r");
    auto phi = [](std::uint64_t v) { return euler_phi(factorize(v)); };
    const std::uint64_t fp = phi(p), fq = phi(q), fr = phi(r);
    const std::uint64_t fpq = phi(p * q), fpr = phi(p * r), fqr = phi(q * r);
    if (k < 3) return 0;
    mpz_class total = 0;
    // (a): all three of A_p, A_q, A_r hit
    for (std::uint64_t a = 1; a <= fpq && a < k; ++a)
        for (std::uint64_t b = 1; b <= fpr && a + b < k; ++b)
            for (std::uint64_t c = 1; c <= fqr && a + b + c <= k; ++c) {
                const std::uint64_t d = k - a - b - c;
                if (d > fp + fq + fr) continue;
                total += binomial(fpq, a) * binomial(fpr, b) * binomial(fqr, c) *
                         binomial(fp + fq + fr, d);
            }
    // (b), (c), (d): one of the three small classes forced in full
    auto three = [&](std::uint64_t forced, std::uint64_t x, std::uint64_t y, std::uint64_t rest) {
        if (k < forced) return;
        const std::uint64_t kk = k - forced;
        for (std::uint64_t a = 1; a <= x && a < kk; ++a)
            for (std::uint64_t b = 1; b <= y && a + b <= kk; ++b) {
                const std::uint64_t c = kk - a - b;
                if (c > rest) continue;
                total += binomial(x, a) * binomial(y, b) * binomial(rest, c);
            }
    };
    three(fp, fpq, fpr, fq + fr);
    three(fq, fpq, fqr, fp + fr);
    three(fr, fpr, fqr, fp + fq);
    // (e), (f), (g): two small classes forced in full
    auto two = [&](std::uint64_t forced, std::uint64_t x, std::uint64_t rest) {
        if (k < forced) return;
        const std::uint64_t kk = k - forced;
        for (std::uint64_t a = 1; a <= x && a <= kk; ++a) {
            const std::uint64_t b = kk - a;
            if (b > rest) continue;
            total += binomial(x, a) * binomial(rest, b);
        }
    };
    two(fp + fq, fpq, fr);
    two(fp + fr, fpr, fq);
    two(fq + fr, fqr, fp);
    // (h): all three small classes taken in full, nothing else
    if (k == fp + fq + fr) total += 1;
    return total;
}

LowerBoundReport lower_bound_check(std::uint64_t n, const std::vector<mpq_class>& sample_points) {
    auto f = factorize(n);
    LowerBoundReport rep;
    rep.n = n;
    rep.equality_expected = f.factors.size() == 1;
    const std::uint64_t phi = euler_phi(f);
    std::uint64_t tail_exp = 1;
    if (!f.is_square_free()) {
        tail_exp = 1;
        for (unsigned i = 1; i < f.factors[0].exponent; ++i) tail_exp *= f.factors[0].prime;
    }
    IntPoly bound = binomial_power(n) - binomial_power(n - phi) + IntPoly::monomial(tail_exp);
    IntPoly d = blowup_domination(build_blowup_spec(n));
    IntPoly diff = d - bound;
    rep.equality_holds = diff.is_zero();
    for (const auto& x : sample_points) {
        LowerBoundPoint pt;
        pt.x = x;
        pt.difference = diff.eval(x);
        pt.sign = sgn(pt.difference);
        rep.points.push_back(std::move(pt));
    }
    return rep;
}

}  // namespace comax
