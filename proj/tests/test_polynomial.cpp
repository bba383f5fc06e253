#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "comax/domination.hpp"
#include "comax/polynomial.hpp"
#include "comax/ringgraph.hpp"

using namespace comax;

namespace {

IntPoly poly(std::initializer_list<long> cs) {
    std::vector<mpz_class> v;
    for (long c : cs) v.emplace_back(c);
    return IntPoly(std::move(v));
}

IntPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, 20);
    std::uniform_int_distribution<long> coef(-1000000, 1000000);
    std::vector<mpz_class> v(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& c : v) c = coef(rng);
    return IntPoly(std::move(v));
}

}  // namespace

TEST_CASE("canonical form and degree") {
    CHECK(IntPoly().is_zero());
    CHECK(IntPoly().degree() == -1);
    CHECK(poly({0, 0, 0}).is_zero());
    CHECK(poly({1, 2, 0, 0}).degree() == 1);
    CHECK(poly({0, 1}) == IntPoly::monomial(1));
    CHECK(IntPoly::monomial(3, 2) == poly({0, 0, 0, 2}));
    CHECK(poly({0, 0, 5}).low_index() == 2);
}

TEST_CASE("arithmetic basics") {
    CHECK(poly({1, 1}) + poly({-1, 1}) == poly({0, 2}));
    CHECK(poly({0, 2, 1}) + poly({0, 3}) == poly({0, 5, 1}));
    CHECK(poly({1, 1}) * poly({1, 1}) == poly({1, 2, 1}));
    CHECK(IntPoly::monomial(2) * IntPoly::monomial(3) == IntPoly::monomial(5));
    CHECK(poly({3, 1}) * IntPoly() == IntPoly());
    CHECK(poly({3, 1}) * IntPoly::one() == poly({3, 1}));
    CHECK(poly({1, 2}) - poly({1, 2}) == IntPoly());
    CHECK(IntPoly().shifted(7) == IntPoly());
    CHECK(IntPoly::one().shifted(3) == IntPoly::monomial(3));
    CHECK(poly({0, 2}).shifted(1) == poly({0, 0, 2}));
}

TEST_CASE("binomial_power") {
    CHECK(binomial_power(0) == IntPoly::one());
    CHECK(binomial_power(5) == poly({1, 5, 10, 10, 5, 1}));
    CHECK(binomial_power(32).coeff(16) == 601080390);
    CHECK(binomial(32, 16) == 601080390);
    for (std::size_t k = 1; k <= 64; ++k) {
        auto b = binomial_power(k);
        CHECK(b.degree() == static_cast<long>(k));
        for (std::size_t i = 0; i <= k; ++i) CHECK(b.coeff(i) == binomial(k, i));
    }
}

TEST_CASE("binomial rows are log-concave") {
    for (std::size_t k = 2; k <= 500; ++k) {
        auto b = binomial_power(k);
        for (std::size_t i = 1; i < k; ++i)
            CHECK(b.coeff(i) * b.coeff(i) >= b.coeff(i - 1) * b.coeff(i + 1));
    }
}

TEST_CASE("exact evaluation") {
    IntPoly p = binomial_power(5) - IntPoly::one();
    CHECK(p.eval(mpz_class(1)) == 31);
    CHECK(IntPoly().eval(mpq_class(7, 3)) == 0);
    CHECK(poly({1, 0, 1}).eval(mpq_class(1, 2)) == mpq_class(5, 4));
}

TEST_CASE("evaluation at 1 sums the n=15 coefficients") {
    IntPoly d = comaximal_domination(15, Method::blowup).polynomial;
    CHECK(d.eval(mpz_class(1)) == 32687);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(20240915);
    for (int t = 0; t < 1000; ++t) {
        IntPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<long> num(-50, 50);
    for (int t = 0; t < 200; ++t) {
        IntPoly a = random_poly(rng), b = random_poly(rng);
        mpq_class x(num(rng), 7);
        x.canonicalize();
        CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
        CHECK((a + b).eval(x) == a.eval(x) + b.eval(x));
    }
}

TEST_CASE("coefficient strings round-trip") {
    IntPoly p = binomial_power(200);
    auto s = p.coeff_strings();
    REQUIRE(s.size() == 201);
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(mpz_class(s[i]) == p.coeff(i));
}

TEST_CASE("dominating-set totals stay below the power set") {
    for (std::uint64_t n = 2; n <= 12; ++n) {
        IntPoly d = brute_force_counts(build_comaximal(n));
        mpz_class total = d.eval(mpz_class(1));
        mpz_class cap = (mpz_class(1) << n) - 1;
        CHECK(total <= cap);
        CHECK(total == comaximal_domination(n, Method::blowup).polynomial.eval(mpz_class(1)));
    }
}
