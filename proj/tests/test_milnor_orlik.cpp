#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ellipt/milnor_orlik.hpp"

using namespace ellipt;

namespace {

Divisor random_divisor(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> m_dist(1, 10);
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 3);
    std::uniform_int_distribution<int> count_dist(0, 3);
    std::map<Int, Rat> terms;
    const int count = count_dist(rng);
    for (int i = 0; i < count; ++i) {
        Rat c(num(rng), den(rng));
        c.canonicalize();
        if (c != 0) terms[Int(m_dist(rng))] += c;
    }
    std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
    return Divisor(std::move(terms));
}

}  // namespace

TEST_CASE("weight systems validate their entries") {
    CHECK_THROWS_AS(WeightSystem({}), std::invalid_argument);
    CHECK_THROWS_AS(WeightSystem({Rat(1, 2)}), std::invalid_argument);
    CHECK_THROWS_AS(WeightSystem({Rat(2), Rat(0)}), std::invalid_argument);
    const WeightSystem smooth({Rat(1)});
    CHECK(smooth.weights() == std::vector<Rat>{Rat(1)});
    const WeightSystem ws({Rat(2), Rat(4), Rat(8, 3)});
    CHECK(ws.size() == 3);
}

TEST_CASE("lambda elements multiply by the gcd-lcm law") {
    CHECK(Divisor::lambda(2) * Divisor::lambda(3) == Divisor::lambda(6));
    CHECK(Divisor::lambda(4) * Divisor::lambda(6) == Divisor::lambda(12, Rat(2)));
    CHECK(Divisor::lambda(2) * Divisor::lambda(2) == Divisor::lambda(2, Rat(2)));
    CHECK(Divisor::one() * Divisor::lambda(7) == Divisor::lambda(7));
}

TEST_CASE("divisor algebra is commutative, associative, and bilinear") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        const Divisor a = random_divisor(rng);
        const Divisor b = random_divisor(rng);
        const Divisor c = random_divisor(rng);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * (b - c) == a * b - a * c);
        CHECK(a * Divisor::one() == a);
    }
}

TEST_CASE("weight divisors") {
    // w = 8/3: (1/3) Lambda_8 - Lambda_1.
    CHECK(weight_divisor(Rat(8, 3)) ==
          Divisor({{Int(8), Rat(1, 3)}, {Int(1), Rat(-1)}}));
    CHECK(weight_divisor(Rat(2)) == Divisor({{Int(2), Rat(1)}, {Int(1), Rat(-1)}}));
    // w = 1 is the smooth direction: the zero divisor.
    CHECK(weight_divisor(Rat(1)).is_zero());
    CHECK_THROWS_AS(weight_divisor(Rat(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(weight_divisor(Rat(0)), std::invalid_argument);
}

TEST_CASE("monodromy characteristic polynomial of the W_2^3 chart") {
    const LambdaProduct cp = monodromy_char_poly(WeightSystem({Rat(2), Rat(4), Rat(8, 3)}));
    CHECK(cp.factors() == std::map<Int, Int>{{Int(1), Int(-1)},
                                             {Int(2), Int(1)},
                                             {Int(4), Int(-1)},
                                             {Int(8), Int(1)}});
    CHECK(cp.unit() == 1);
    CHECK(cp.degree() == 5);
    CHECK(milnor_number(WeightSystem({Rat(2), Rat(4), Rat(8, 3)})) == 5);
}

TEST_CASE("a weight of one kills the invariants") {
    const WeightSystem ws({Rat(3), Rat(1), Rat(5)});
    CHECK(monodromy_char_poly(ws).is_empty());
    CHECK(milnor_number(ws) == 0);
}

TEST_CASE("non-integral data is rejected, not rounded") {
    CHECK_THROWS_WITH_AS(monodromy_char_poly(WeightSystem({Rat(8, 3)})),
                         "non-integral divisor", std::domain_error);
    CHECK_THROWS_WITH_AS(milnor_number(WeightSystem({Rat(2), Rat(5, 2)})),
                         "non-integral Milnor number", std::domain_error);
}

TEST_CASE("ordinary double point in two variables") {
    // (Lambda_2 - Lambda_1)^2 = 2 Lambda_2 - 2 Lambda_2 + Lambda_1 = Lambda_1:
    // the vanishing cycle is monodromy-invariant.
    const Divisor d2 = weight_divisor(Rat(2));
    CHECK(d2 * d2 == Divisor::one());
    const LambdaProduct cp = monodromy_char_poly(WeightSystem({Rat(2), Rat(2)}));
    CHECK(cp.expand() == IntPolynomial(std::vector<Int>{-1, 1}));
    CHECK(milnor_number(WeightSystem({Rat(2), Rat(2)})) == 1);
}
