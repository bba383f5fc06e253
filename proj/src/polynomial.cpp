#include "comax/polynomial.hpp"

#include <algorithm>

namespace comax {

namespace {
const mpz_class kZero = 0;
}

IntPoly IntPoly::monomial(std::size_t k, mpz_class c) {
    if (c == 0) return IntPoly();
    std::vector<mpz_class> v(k + 1);
    v[k] = std::move(c);
    return IntPoly(std::move(v));
}

const mpz_class& IntPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

std::size_t IntPoly::low_index() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return i;
    return 0;
}

IntPoly IntPoly::shifted(std::size_t k) const {
    if (is_zero() || k == 0) return k == 0 ? *this : IntPoly();
    std::vector<mpz_class> v(coeffs_.size() + k);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i + k] = coeffs_[i];
    return IntPoly(std::move(v));
}

mpq_class IntPoly::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

mpz_class IntPoly::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

std::vector<std::string> IntPoly::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.get_str());
    return out;
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
    return IntPoly(std::move(v));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<mpz_class> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPoly(std::move(v));
}

IntPoly binomial_power(std::size_t k) {
    std::vector<mpz_class> c(k + 1);
    c[0] = 1;
    for (std::size_t n = 1; n <= k; ++n)
        for (std::size_t j = n; j >= 1; --j) c[j] += c[j - 1];
    return IntPoly(std::move(c));
}

mpz_class binomial(std::uint64_t n, std::uint64_t k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace comax
