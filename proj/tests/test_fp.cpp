#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <random>
#include <vector>

#include "adem/fp.hpp"
#include "test_seed.hpp"

using namespace adem;
using boost::multiprecision::cpp_int;

namespace {

// exact big-integer Pascal triangle, rows 0..n_max
std::vector<std::vector<cpp_int>> pascal(int n_max)
{
    std::vector<std::vector<cpp_int>> t(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        t[n].assign(n + 1, 1);
        for (int k = 1; k < n; ++k)
            t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
    }
    return t;
}

}  // namespace

TEST_CASE("field context rejects non-primes")
{
    CHECK_THROWS_AS(Fp(1), std::invalid_argument);
    CHECK_THROWS_AS(Fp(4), std::invalid_argument);
    CHECK_THROWS_AS(Fp(9), std::invalid_argument);
    CHECK_NOTHROW(Fp(2));
    CHECK_NOTHROW(Fp(97));
}

TEST_CASE("field arithmetic")
{
    Fp f(7);
    CHECK(f.add(5, 4) == 2);
    CHECK(f.sub(1, 5) == 3);
    CHECK(f.mul(3, 5) == 1);
    CHECK(f.neg(0) == 0);
    CHECK(f.neg(2) == 5);
    CHECK(f.reduce(-1) == 6);
    for (int a = 1; a < 7; ++a)
        CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK_THROWS_AS(f.inv(0), std::domain_error);
    CHECK(f.pow(3, 6) == 1);
}

TEST_CASE("binomial anchors")
{
    CHECK(binom_mod_p(0, 0, 2) == 1);
    CHECK(binom_mod_p(1, 2, 2) == 0);
    CHECK(binom_mod_p(3, 1, 3) == 0);
    CHECK(binom_mod_p(5, -1, 3) == 0);
    CHECK(binom_mod_p(-1, 0, 3) == 0);
}

TEST_CASE("Lucas agrees with the big-integer Pascal recurrence")
{
    auto t = pascal(200);
    for (int p : {2, 3, 5, 7}) {
        Fp f(p);
        for (int n = 0; n <= 200; ++n)
            for (int k = 0; k <= n; ++k) {
                int expected = static_cast<int>(t[n][k] % p);
                CAPTURE(p);
                CAPTURE(n);
                CAPTURE(k);
                REQUIRE(f.binom(n, k) == expected);
            }
    }
}

TEST_CASE("binomial symmetry")
{
    for (int p : {2, 3, 5}) {
        Fp f(p);
        for (int n = 0; n <= 64; ++n)
            for (int k = 0; k <= n; ++k)
                CHECK(f.binom(n, k) == f.binom(n, n - k));
    }
}

TEST_CASE("Vandermonde convolution on random triples")
{
    std::mt19937_64 rng(g_test_seed);
    std::uniform_int_distribution<int> dist(0, 40);
    for (int p : {2, 3, 5, 7}) {
        Fp f(p);
        for (int trial = 0; trial < 50; ++trial) {
            int m = dist(rng), n = dist(rng), k = dist(rng);
            int lhs = f.binom(m + n, k);
            int rhs = 0;
            for (int j = 0; j <= k; ++j)
                rhs = f.add(rhs, f.mul(f.binom(m, j), f.binom(n, k - j)));
            CHECK(lhs == rhs);
        }
    }
}
