#ifndef COMAX_POLYNOMIAL_HPP
#define COMAX_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace comax {

/// Dense univariate polynomial over arbitrary-precision integers, coefficients
/// indexed by ascending degree. Always kept in canonical (trimmed) form, so
/// equality is structural. The zero polynomial is the empty coefficient list.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static IntPoly one() { return IntPoly({mpz_class(1)}); }
    static IntPoly monomial(std::size_t k, mpz_class c = 1);

    bool is_zero() const { return coeffs_.empty(); }
    /// degree() is -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    const mpz_class& coeff(std::size_t i) const;
    const std::vector<mpz_class>& coefficients() const { return coeffs_; }

    /// Lowest index with a nonzero coefficient; 0 for the zero polynomial.
    std::size_t low_index() const;

    IntPoly shifted(std::size_t k) const;

    /// Exact Horner evaluation.
    mpq_class eval(const mpq_class& x) const;
    mpz_class eval(const mpz_class& x) const;

    /// Coefficients as decimal strings (JSON-safe).
    std::vector<std::string> coeff_strings() const;

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

/// (1+x)^k via the Pascal-row recurrence; coefficient i is C(k, i).
IntPoly binomial_power(std::size_t k);

mpz_class binomial(std::uint64_t n, std::uint64_t k);

}  // namespace comax

#endif
