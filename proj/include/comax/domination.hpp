#ifndef COMAX_DOMINATION_HPP
#define COMAX_DOMINATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "comax/polynomial.hpp"
#include "comax/ringgraph.hpp"

namespace comax {

enum class Method {
    brute,
    blowup,
    closed_prime,
    closed_prime_power,
    closed_prime_power_published,
    closed_pq,
    closed_pq_powers,
    g2_pqr_published,
};

std::string method_name(Method m);

struct DominationResult {
    std::uint64_t n = 0;
    Method method = Method::blowup;
    IntPoly polynomial;
    std::size_t gamma = 0;  // lowest nonzero index
};

/// Exact per-cardinality dominating-set counts by subset enumeration with
/// closed-neighborhood bit masks. Throws for order > 30.
IntPoly brute_force_counts(const SimpleGraph& g);

/// Domination polynomial of a disjoint union: the product.
IntPoly union_compose(const IntPoly& d1, const IntPoly& d2);

/// Domination polynomial of a join. An order-0 operand leaves the other
/// unchanged.
IntPoly join_compose(const IntPoly& d1, std::uint64_t order1,
                     const IntPoly& d2, std::uint64_t order2);

/// D(G_2, x): the blow-up of the divisor graph only. Sum over subsets of
/// divisor classes; throws when the class count exceeds 24.
IntPoly blowup_g2(const BlowupSpec& spec);

/// D(Gamma(Z_n), x) assembled from the blow-up: zero vertex composed by
/// union with G_2, then joined with the unit clique.
IntPoly blowup_domination(const BlowupSpec& spec);

DominationResult comaximal_domination(std::uint64_t n, Method method);

/// (1+x)^p - 1. Throws for composite p.
IntPoly closed_prime(std::uint64_t p);

enum class PrimePowerVariant { corrected, published };

/// corrected: (1+x)^{p^m} - (1+x)^{p^{m-1}} + x^{p^{m-1}}
/// published: (1+x)^{p^{m-1}}((1+x)^p - 1) + x^{p^{m-1}}, exactly as printed.
IntPoly closed_prime_power(std::uint64_t p, unsigned m, PrimePowerVariant variant);

IntPoly closed_pq(std::uint64_t p, std::uint64_t q);

/// n = p^{n1} q^{n2}; (n1, n2) = (1, 1) delegates to closed_pq.
IntPoly closed_pq_powers(std::uint64_t p, unsigned n1, std::uint64_t q, unsigned n2);

/// The printed three-factor product for D(G_2, x) with n = pqr, verbatim.
IntPoly g2_pqr_published(std::uint64_t p, std::uint64_t q, std::uint64_t r);

/// Total of the printed case sums (a)-(h) for d(G_2, k) with n = pqr.
mpz_class pqr_case_counts(std::uint64_t p, std::uint64_t q, std::uint64_t r,
                          std::uint64_t k);

struct LowerBoundPoint {
    mpq_class x;
    mpq_class difference;  // D(Gamma(Z_n), x) - bound(x)
    int sign = 0;
};

struct LowerBoundReport {
    std::uint64_t n = 0;
    bool equality_expected = false;  // single prime factor
    bool equality_holds = false;     // difference identically zero
    std::vector<LowerBoundPoint> points;
};

LowerBoundReport lower_bound_check(std::uint64_t n, const std::vector<mpq_class>& sample_points);

}  // namespace comax

#endif
