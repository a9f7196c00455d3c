#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ellipt/lambda_product.hpp"

using namespace ellipt;

namespace {

LambdaProduct random_product(std::mt19937_64& rng, bool allow_negative) {
    std::uniform_int_distribution<long> m_dist(1, 12);
    std::uniform_int_distribution<long> e_dist(allow_negative ? -3 : 1, 3);
    std::uniform_int_distribution<int> count_dist(1, 4);
    std::map<Int, Int> factors;
    const int count = count_dist(rng);
    for (int i = 0; i < count; ++i) {
        const long e = e_dist(rng);
        if (e != 0) factors[Int(m_dist(rng))] += e;
    }
    std::erase_if(factors, [](const auto& kv) { return kv.second == 0; });
    return LambdaProduct(std::move(factors));
}

}  // namespace

TEST_CASE("empty product is the constant one") {
    LambdaProduct one;
    CHECK(one.is_empty());
    CHECK(one.degree() == 0);
    CHECK(one.order_at_one() == 0);
    CHECK(one.value_at_one() == 1);
    CHECK(one.expand() == IntPolynomial::one());
}

TEST_CASE("binomial factors multiply with exponent bookkeeping") {
    LambdaProduct p = LambdaProduct::binomial(4) * LambdaProduct::binomial(4) *
                      LambdaProduct::binomial(2, -1);
    CHECK(p.factors() == std::map<Int, Int>{{Int(2), Int(-1)}, {Int(4), Int(2)}});
    CHECK(p.degree() == 6);
    CHECK(p.order_at_one() == 1);
    // Exponents cancel back to the unit.
    CHECK((p * LambdaProduct::binomial(4, -2) * LambdaProduct::binomial(2)).is_empty());
}

TEST_CASE("degree and value at one") {
    // (t^8-1)(t^2-1) / ((t^4-1)(t-1)): the W_2^3 characteristic polynomial.
    LambdaProduct phi(std::map<Int, Int>{
        {Int(1), Int(-1)}, {Int(2), Int(1)}, {Int(4), Int(-1)}, {Int(8), Int(1)}});
    CHECK(phi.degree() == 5);
    CHECK(phi.order_at_one() == 0);
    CHECK(phi.value_at_one() == Rat(4));  // (8 * 2) / (4 * 1)
    LambdaProduct vanishing(std::map<Int, Int>{{Int(3), Int(1)}});
    CHECK(vanishing.order_at_one() == 1);
    CHECK_THROWS_AS(vanishing.value_at_one(), std::domain_error);
}

TEST_CASE("expansion matches hand results") {
    LambdaProduct phi(std::map<Int, Int>{
        {Int(1), Int(-1)}, {Int(2), Int(1)}, {Int(4), Int(-1)}, {Int(8), Int(1)}});
    CHECK(phi.expand() == IntPolynomial(std::vector<Int>{1, 1, 0, 0, 1, 1}));
    // (t^6-1)(t-1) / ((t^2-1)(t^3-1)) = t^2 - t + 1.
    LambdaProduct cyclo(
        {{Int(1), Int(1)}, {Int(2), Int(-1)}, {Int(3), Int(-1)}, {Int(6), Int(1)}});
    CHECK(cyclo.expand() == IntPolynomial(std::vector<Int>{1, -1, 1}));
    CHECK(LambdaProduct::binomial(3).expand() ==
          IntPolynomial(std::vector<Int>{-1, 0, 0, 1}));
}

TEST_CASE("expansion error paths") {
    // (t-1)/(t^2-1) is not a polynomial.
    LambdaProduct bad({{Int(1), Int(1)}, {Int(2), Int(-1)}});
    CHECK_THROWS_WITH_AS(bad.expand(), "not a polynomial", std::domain_error);
    CHECK_THROWS_WITH_AS(LambdaProduct::binomial(20001).expand(), "too large",
                         std::domain_error);
    // A custom cap is honored.
    CHECK_THROWS_WITH_AS(LambdaProduct::binomial(11).expand(Int(10)), "too large",
                         std::domain_error);
    CHECK(LambdaProduct::binomial(10).expand(Int(10)).degree() == 10);
}

TEST_CASE("evaluation agrees with expansion at random rational points") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 6);
    for (int trial = 0; trial < 40; ++trial) {
        const LambdaProduct p = random_product(rng, false);
        const IntPolynomial expanded = p.expand();
        for (int point = 0; point < 5; ++point) {
            Rat t0;
            do {
                t0 = Rat(num(rng), den(rng));
                t0.canonicalize();
            } while (t0 == 1 || t0 == -1);
            CHECK(p.evaluate(t0) == expanded.evaluate(t0));
        }
    }
    CHECK_THROWS_AS(LambdaProduct::binomial(5).evaluate(Rat(1)), std::domain_error);
}

TEST_CASE("root-of-unity products on known cases") {
    // (t-1)(-t-1) = -(t^2-1).
    CHECK(LambdaProduct::binomial(1).root_of_unity_product(2) ==
          LambdaProduct(std::map<Int, Int>{{Int(2), Int(1)}}, -1));
    // m even: the two factors coincide, (t^2-1)^2.
    CHECK(LambdaProduct::binomial(2).root_of_unity_product(2) ==
          LambdaProduct(std::map<Int, Int>{{Int(2), Int(2)}}));
    // gcd(2,4)=2, k=2: ((-1)^3 (t^4-1))^2 = +(t^4-1)^2.
    CHECK(LambdaProduct::binomial(2).root_of_unity_product(4) ==
          LambdaProduct(std::map<Int, Int>{{Int(4), Int(2)}}));
    CHECK(LambdaProduct::binomial(3).root_of_unity_product(3) ==
          LambdaProduct(std::map<Int, Int>{{Int(3), Int(3)}}));
}

TEST_CASE("root-of-unity product is multiplicative and scales degree") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        const LambdaProduct p = random_product(rng, true);
        const LambdaProduct q = random_product(rng, true);
        for (long d = 2; d <= 5; ++d) {
            CHECK((p * q).root_of_unity_product(d) ==
                  p.root_of_unity_product(d) * q.root_of_unity_product(d));
            CHECK(p.root_of_unity_product(d).degree() == Int(d) * p.degree());
        }
    }
}

TEST_CASE("squarefree part") {
    CHECK(squarefree_part(Rat(1)) == 1);
    CHECK(squarefree_part(Rat(18)) == 2);
    CHECK(squarefree_part(Rat(50)) == 2);
    CHECK(squarefree_part(Rat(12, 49)) == 3);
    CHECK(squarefree_part(Rat(-4, 9)) == -1);
    CHECK(squarefree_part(Rat(-75, 8)) == -6);
    CHECK_THROWS_AS(squarefree_part(Rat(0)), std::domain_error);
    // A prime beyond the trial bound but below its square is still certified.
    CHECK(squarefree_part(Rat(1000003)) == 1000003);
    // Two distinct huge primes cannot be certified squarefree by trial division.
    const Rat uncertifiable = Rat(Int("1000003") * Int("1000033"));
    CHECK_THROWS_WITH_AS(squarefree_part(uncertifiable),
                         "squarefree_part: square part not certifiable within trial bound",
                         std::domain_error);
}

TEST_CASE("squarefree part is a square-class invariant") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> pick(-40, 40);
    std::uniform_int_distribution<long> den(1, 20);
    for (int trial = 0; trial < 150; ++trial) {
        long qn = pick(rng);
        if (qn == 0) qn = 11;
        Rat q(qn, den(rng));
        q.canonicalize();
        long rn = pick(rng);
        if (rn == 0) rn = 3;
        Rat r(rn, den(rng));
        r.canonicalize();
        CHECK(squarefree_part(q * r * r) == squarefree_part(q));
        const Int s = squarefree_part(q);
        // The certified part really is squarefree: no square divisor > 1.
        for (long p = 2; p * p <= 200; ++p) CHECK(s % (p * p) != 0);
    }
}
