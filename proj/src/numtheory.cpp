#include "comax/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace comax {

bool FactoredInteger::is_square_free() const {
    for (const auto& pp : factors)
        if (pp.exponent > 1) return false;
    return true;
}

FactoredInteger factorize(std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("factorize: n must be >= 2");
    FactoredInteger f;
    f.n = n;
    std::uint64_t m = n;
    for (std::uint64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p) continue;
        unsigned e = 0;
        while (m % p == 0) { m /= p; ++e; }
        f.factors.push_back({p, e});
    }
    if (m > 1) f.factors.push_back({m, 1});
    return f;
}

std::uint64_t euler_phi(const FactoredInteger& f) {
    std::uint64_t phi = 1;
    for (const auto& pp : f.factors) {
        std::uint64_t pe = 1;
        for (unsigned i = 1; i < pp.exponent; ++i) pe *= pp.prime;
        phi *= pe * (pp.prime - 1);
    }
    return phi;
}

std::uint64_t tau(const FactoredInteger& f) {
    std::uint64_t t = 1;
    for (const auto& pp : f.factors) t *= pp.exponent + 1;
    return t;
}

std::vector<std::uint64_t> proper_divisors(const FactoredInteger& f) {
    std::vector<std::uint64_t> divs{1};
    for (const auto& pp : f.factors) {
        const std::size_t base = divs.size();
        std::uint64_t pe = 1;
        for (unsigned e = 1; e <= pp.exponent; ++e) {
            pe *= pp.prime;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pe);
        }
    }
    std::sort(divs.begin(), divs.end());
    divs.erase(divs.begin());   // 1
    divs.pop_back();            // n
    return divs;
}

std::uint64_t class_size(const FactoredInteger& f, std::uint64_t d) {
    if (d <= 1 || d >= f.n || f.n % d != 0)
        throw std::invalid_argument("class_size: d is not a proper divisor of n");
    return euler_phi(factorize(f.n / d));
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    return std::gcd(a, b);
}

}  // namespace comax
