#include <doctest.h>

#include <random>

#include "adem/milnor.hpp"
#include "test_seed.hpp"

using namespace adem;
using milnor::coproduct;
using milnor::coproduct_gen;
using milnor::dual_gen;
using milnor::dual_mul;
using milnor::dual_unit;
using milnor::DualMonomial;
using milnor::TensorElement;

TEST_CASE("generator coproducts")
{
    // k = 1: primitive
    TensorElement d1(2, 2);
    d1.add_term({dual_gen(1), dual_unit()}, 1);
    d1.add_term({dual_unit(), dual_gen(1)}, 1);
    CHECK(coproduct_gen(1, 2, 6) == d1);

    // k = 2, p = 2: b2 (x) 1 + b1 (x) b1^2 + 1 (x) b2
    TensorElement d2(2, 2);
    d2.add_term({dual_gen(2), dual_unit()}, 1);
    d2.add_term({dual_gen(1), dual_gen(1, 2)}, 1);
    d2.add_term({dual_unit(), dual_gen(2)}, 1);
    CHECK(coproduct_gen(2, 2, 6) == d2);

    // k = 2, p = 3: middle exponent is 3
    TensorElement d23(3, 2);
    d23.add_term({dual_gen(2), dual_unit()}, 1);
    d23.add_term({dual_gen(1), dual_gen(1, 3)}, 1);
    d23.add_term({dual_unit(), dual_gen(2)}, 1);
    CHECK(coproduct_gen(2, 3, 6) == d23);

    CHECK_THROWS_AS(coproduct_gen(7, 2, 6), std::out_of_range);
    CHECK_THROWS_AS(coproduct_gen(0, 2, 6), std::out_of_range);
}

TEST_CASE("coproduct of monomials")
{
    // unit -> 1 (x) 1
    CHECK(coproduct(dual_unit(), 2, 6) == TensorElement::unit(2, 2));

    // b1^2 at p = 2: cross terms vanish
    TensorElement sq(2, 2);
    sq.add_term({dual_gen(1, 2), dual_unit()}, 1);
    sq.add_term({dual_unit(), dual_gen(1, 2)}, 1);
    CHECK(coproduct(dual_gen(1, 2), 2, 6) == sq);

    // b1 b2 = product of the generator coproducts
    auto prod = milnor::mul(coproduct_gen(1, 2, 6), coproduct_gen(2, 2, 6));
    CHECK(coproduct(dual_mul(dual_gen(1), dual_gen(2)), 2, 6) == prod);

    DualMonomial too_big = dual_gen(9);
    CHECK_THROWS_AS(coproduct(too_big, 2, 6), std::out_of_range);
}

TEST_CASE("coproduct is an algebra morphism on random monomials")
{
    std::mt19937_64 rng(g_test_seed + 20);
    std::uniform_int_distribution<int> idx(1, 5);
    std::uniform_int_distribution<long long> exp(0, 3);
    for (int p : {2, 3}) {
        for (int trial = 0; trial < 20; ++trial) {
            DualMonomial a, b;
            for (int t = 0; t < 2; ++t) {
                a = dual_mul(a, dual_gen(idx(rng), exp(rng)));
                b = dual_mul(b, dual_gen(idx(rng), exp(rng)));
            }
            auto lhs = coproduct(dual_mul(a, b), p, 5);
            auto rhs = milnor::mul(coproduct(a, p, 5), coproduct(b, p, 5));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("coassociativity and counit")
{
    for (int p : {2, 3}) {
        auto rep = milnor::check_coassociativity(p, 6);
        CAPTURE(p);
        CHECK(rep.pass);
    }
    CHECK(milnor::check_coassociativity(3, 4).pass);
    CHECK(milnor::check_coassociativity(2, 1).pass);  // primitive b1

    // K = 1 triple expansion explicitly
    auto d = coproduct_gen(1, 2, 1);
    auto lhs = milnor::expand_left(d, 2, 1);
    TensorElement expect(2, 3);
    expect.add_term({dual_gen(1), dual_unit(), dual_unit()}, 1);
    expect.add_term({dual_unit(), dual_gen(1), dual_unit()}, 1);
    expect.add_term({dual_unit(), dual_unit(), dual_gen(1)}, 1);
    CHECK(lhs == expect);
    CHECK(milnor::expand_right(d, 2, 1) == expect);
}

TEST_CASE("rendering")
{
    CHECK(milnor::render(coproduct_gen(1, 2, 3)) == "b1⊗1 + 1⊗b1");
    CHECK(milnor::render(coproduct_gen(2, 2, 6)) == "b2⊗1 + b1⊗b1^2 + 1⊗b2");
    CHECK(milnor::render(coproduct_gen(2, 3, 6)) == "b2⊗1 + b1⊗b1^3 + 1⊗b2");
    CHECK(milnor::render(dual_gen(1, 2)) == "b1^2");
    CHECK(milnor::render(TensorElement(2, 2)) == "0");
}
