#include <doctest.h>

#include <functional>
#include <random>

#include "adem/divided_powers.hpp"
#include "test_seed.hpp"

using namespace adem;
using dpow::DPElement;
using dpow::DPMonomial;
using dpow::Derivation;
using dpow::Heights;

namespace {

Heights ctx1(int p, int N)
{
    return Heights{p, 1, 0, {N}};
}

DPElement mono(const Heights& h, std::vector<long long> exps, int c = 1)
{
    return DPElement::monomial(h, DPMonomial{std::move(exps)}, c);
}

// all monomials within the (finite) height bounds
std::vector<DPMonomial> all_monomials(const Heights& h)
{
    std::vector<DPMonomial> out;
    DPMonomial m;
    m.exps.assign(h.vars(), 0);
    std::function<void(int)> rec = [&](int var) {
        if (var == h.vars()) {
            out.push_back(m);
            return;
        }
        auto b = h.bound(var);
        for (long long e = 0; e < *b; ++e) {
            m.exps[var] = e;
            rec(var + 1);
        }
        m.exps[var] = 0;
    };
    rec(0);
    return out;
}

}  // namespace

TEST_CASE("dp_mul binomial coefficients")
{
    auto h2 = ctx1(2, 2);
    CHECK(dpow::dp_mul(mono(h2, {1}), mono(h2, {1})).is_zero());  // C(2,1) = 2

    auto h3 = ctx1(3, 2);
    CHECK(dpow::dp_mul(mono(h3, {1}), mono(h3, {2})).is_zero());  // C(3,1) = 3

    auto h5 = ctx1(5, 1);
    auto r = dpow::dp_mul(mono(h5, {1}), mono(h5, {2}));
    CHECK(r == mono(h5, {3}, 3));  // C(3,1) = 3

    auto other = ctx1(5, 2);
    CHECK_THROWS_AS(dpow::dp_mul(mono(h5, {1}), mono(other, {1})), std::invalid_argument);
}

TEST_CASE("closure: products leave the height box only with vanishing coefficient")
{
    for (int p : {2, 3}) {
        for (int N1 = 1; N1 <= 2; ++N1) {
            for (int N2 = 1; N2 <= 2; ++N2) {
                Heights h{p, 2, 0, {N1, N2}};
                auto monos = all_monomials(h);
                for (const auto& a : monos)
                    for (const auto& b : monos) {
                        // dp_mul itself asserts the Kummer vanishing; it must not throw
                        auto prod = dpow::dp_mul(DPElement::monomial(h, a), DPElement::monomial(h, b));
                        for (const auto& t : prod.terms())
                            for (int i = 0; i < h.vars(); ++i)
                                REQUIRE(t.mon.exps[i] < *h.bound(i));
                    }
            }
        }
    }
}

TEST_CASE("dp_mul commutative and associative (even variables, exhaustive small)")
{
    for (int p : {2, 3}) {
        Heights h{p, 2, 0, {2, 1}};
        auto monos = all_monomials(h);
        for (const auto& a : monos)
            for (const auto& b : monos) {
                auto ea = DPElement::monomial(h, a), eb = DPElement::monomial(h, b);
                REQUIRE(dpow::dp_mul(ea, eb) == dpow::dp_mul(eb, ea));
            }
        std::mt19937_64 rng(g_test_seed + 30);
        std::uniform_int_distribution<size_t> pick(0, monos.size() - 1);
        for (int trial = 0; trial < 60; ++trial) {
            auto ea = DPElement::monomial(h, monos[pick(rng)]);
            auto eb = DPElement::monomial(h, monos[pick(rng)]);
            auto ec = DPElement::monomial(h, monos[pick(rng)]);
            REQUIRE(dpow::dp_mul(dpow::dp_mul(ea, eb), ec) == dpow::dp_mul(ea, dpow::dp_mul(eb, ec)));
        }
    }
}

TEST_CASE("super-commutativity with odd variables (p = 3)")
{
    Heights h{3, 1, 2, {1}};
    auto x = mono(h, {0, 1, 0});
    auto y = mono(h, {0, 0, 1});
    auto f = mono(h, {2, 0, 0});
    CHECK(dpow::dp_mul(x, x).is_zero());
    CHECK(dpow::dp_mul(x, y) == dpow::scale(-1, dpow::dp_mul(y, x)));
    CHECK(dpow::dp_mul(f, x) == dpow::dp_mul(x, f));

    // dimension count: 3^1 * 2^2
    CHECK(dpow::dimension(h) == 12);
    CHECK(dpow::dimension(Heights{3, 2, 1, {2, 1}}) == 27 * 2);
    CHECK_FALSE(dpow::dimension(Heights{3, 1, 0, {dpow::kInfiniteHeight}}).has_value());
    CHECK(all_monomials(Heights{2, 2, 1, {2, 2}}).size() == 4 * 4 * 2);
}

TEST_CASE("distinguished derivative")
{
    Heights h{3, 1, 0, {2}};
    for (long long k = 1; k < 9; ++k)
        CHECK(dpow::partial(0, mono(h, {k})) == mono(h, {k - 1}));
    CHECK(dpow::partial(0, DPElement::unit(h)).is_zero());

    Heights h2{2, 2, 0, {2, 1}};
    CHECK(dpow::partial(0, mono(h2, {2, 1})) == mono(h2, {1, 1}));

    // partials commute on the whole box
    for (int p : {2, 3}) {
        Heights hh{p, 2, 0, {2, 2}};
        for (const auto& m : all_monomials(hh)) {
            auto e = DPElement::monomial(hh, m);
            REQUIRE(dpow::partial(0, dpow::partial(1, e)) == dpow::partial(1, dpow::partial(0, e)));
        }
    }

    // mixed finite/infinite heights
    Heights hmix{2, 2, 0, {2, dpow::kInfiniteHeight}};
    auto big = mono(hmix, {1, 100});
    CHECK(dpow::partial(1, big) == mono(hmix, {1, 99}));
}

TEST_CASE("derivation application")
{
    Heights h{2, 1, 0, {2}};
    Derivation d = dpow::parse_derivation("u1^(1) d1", h);
    CHECK(dpow::apply(d, mono(h, {1})) == mono(h, {1}));
    CHECK(dpow::apply(d, DPElement::unit(h)).is_zero());

    Heights h3{3, 1, 0, {2}};
    Derivation dd = dpow::parse_derivation("d1", h3);
    CHECK(dpow::apply(dd, mono(h3, {3})) == mono(h3, {2}));
}

TEST_CASE("derivation bracket anchors")
{
    Heights h{2, 1, 0, {2}};
    auto d = dpow::parse_derivation("d1", h);
    auto ud = dpow::parse_derivation("u1^(1) d1", h);
    auto u2d = dpow::parse_derivation("u1^(2) d1", h);

    CHECK(dpow::render(dpow::bracket(d, ud)) == "d1");
    auto zero = dpow::bracket(d, d);
    for (const auto& c : zero.coeffs)
        CHECK(c.is_zero());
    CHECK(dpow::render(dpow::bracket(ud, u2d)) == "u1^(2) d1");
}

TEST_CASE("bracket matches operator composition")
{
    std::mt19937_64 rng(g_test_seed + 31);
    for (int p : {2, 3}) {
        Heights h{p, 2, p == 2 ? 0 : 1, {2, 1}};
        auto monos = all_monomials(h);
        std::uniform_int_distribution<size_t> pick(0, monos.size() - 1);
        std::uniform_int_distribution<int> coeff(1, p - 1);
        auto random_derivation = [&]() {
            while (true) {
                std::vector<DPElement> coeffs;
                for (int i = 0; i < h.vars(); ++i)
                    coeffs.push_back(DPElement::zero(h));
                // keep one parity class so the derivation is homogeneous
                int want = std::uniform_int_distribution<int>(0, 1)(rng);
                for (int t = 0; t < 3; ++t) {
                    int var = static_cast<int>(pick(rng) % h.vars());
                    const auto& m = monos[pick(rng)];
                    DPMonomial mm = m;
                    int par = (mm.parity(h) + (h.is_odd_var(var) ? 1 : 0)) & 1;
                    if (par != want)
                        continue;
                    coeffs[var].add_term(mm, coeff(rng));
                }
                try {
                    return dpow::make_derivation(std::move(coeffs));
                } catch (const std::invalid_argument&) {
                    continue;
                }
            }
        };
        for (int trial = 0; trial < 40; ++trial) {
            Derivation a = random_derivation();
            Derivation b = random_derivation();
            Derivation br = dpow::bracket(a, b);
            int sign = (a.parity && b.parity) ? 1 : -1;
            for (size_t i = 0; i < monos.size(); i += 3) {
                auto f = DPElement::monomial(h, monos[i]);
                auto lhs = dpow::apply(br, f);
                auto rhs = dpow::apply(a, dpow::apply(b, f));
                auto second = dpow::apply(b, dpow::apply(a, f));
                rhs = sign == 1 ? dpow::add(rhs, second) : dpow::sub(rhs, second);
                REQUIRE(lhs == rhs);
            }
        }
    }
}

TEST_CASE("Leibniz rule")
{
    std::mt19937_64 rng(g_test_seed + 32);
    for (int p : {2, 3}) {
        Heights h{p, 2, 0, {2, 2}};
        auto monos = all_monomials(h);
        std::uniform_int_distribution<size_t> pick(0, monos.size() - 1);
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<DPElement> coeffs{DPElement::monomial(h, monos[pick(rng)]),
                                          DPElement::monomial(h, monos[pick(rng)])};
            Derivation d = dpow::make_derivation(std::move(coeffs));
            auto f = DPElement::monomial(h, monos[pick(rng)]);
            auto g = DPElement::monomial(h, monos[pick(rng)]);
            auto lhs = dpow::apply(d, dpow::dp_mul(f, g));
            auto rhs = dpow::add(dpow::dp_mul(dpow::apply(d, f), g),
                                 dpow::dp_mul(f, dpow::apply(d, g)));
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("parsing and rendering")
{
    Heights h{2, 2, 1, {2, 1}};
    auto e = dpow::parse_dp_element("u1^(3) u2", h);
    CHECK(dpow::render(e) == "u1^(3) u2^(1)");
    CHECK(dpow::parse_dp_element("0", h).is_zero());
    CHECK(dpow::parse_dp_element("1", h) == DPElement::unit(h));
    CHECK_THROWS(dpow::parse_dp_element("u9", h));
    auto d = dpow::parse_derivation("u1^(1) d1 + u3 d3", h);
    CHECK(dpow::render(d) == "u1^(1) d1 + u3^(1) d3");
}
