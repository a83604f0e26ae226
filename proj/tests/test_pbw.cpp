#include <doctest.h>

#include <functional>
#include <random>

#include "adem/pbw.hpp"
#include "test_seed.hpp"

using namespace adem;
using pbw::DimProfile;
using pbw::Mode;

namespace {

DimProfile profile_of(int p, Mode mode, std::vector<long long> dims_by_degree)
{
    DimProfile prof;
    prof.p = p;
    prof.mode = mode;
    prof.dims = std::move(dims_by_degree);  // index 0 unused
    return prof;
}

// brute force: enumerate exponent vectors over the letters
long long brute_count(const DimProfile& prof, int k)
{
    struct Letter {
        int degree;
        long long cap;
    };
    std::vector<Letter> letters;
    for (int j = 1; j < k && j <= prof.k_max(); ++j) {
        long long cap = (j % 2) ? 1 : (prof.mode == Mode::Restricted ? prof.p - 1 : k);
        for (long long c = 0; c < prof.dims[j]; ++c)
            letters.push_back({j, cap});
    }
    long long count = 0;
    std::function<void(size_t, int)> rec = [&](size_t idx, int left) {
        if (idx == letters.size()) {
            if (left == 0)
                ++count;
            return;
        }
        for (long long e = 0; e <= letters[idx].cap && e * letters[idx].degree <= left; ++e)
            rec(idx + 1, left - static_cast<int>(e * letters[idx].degree));
    };
    rec(0, k);
    return count;
}

}  // namespace

TEST_CASE("monomial_count anchors from the degree table")
{
    // letters L1 (odd), L2 (even)
    auto prof = profile_of(2, Mode::Nonrestricted, {0, 1, 1});
    CHECK(pbw::monomial_count(prof, 3) == 1);  // L2 L1

    auto prof3 = profile_of(2, Mode::Nonrestricted, {0, 1, 1, 1});
    CHECK(pbw::monomial_count(prof3, 4) == 2);  // L2^2, L3 L1

    auto prof7 = profile_of(2, Mode::Nonrestricted, {0, 1, 1, 1, 0, 0, 1, 1});
    CHECK(pbw::monomial_count(prof7, 8) == 4);  // L6 L2, L2^4, L2^2 L3 L1, L7 L1

    auto empty = profile_of(2, Mode::Nonrestricted, {0});
    CHECK(pbw::monomial_count(empty, 1) == 0);
    CHECK_THROWS_AS(pbw::monomial_count(empty, 5), std::invalid_argument);
}

TEST_CASE("counting routes agree with brute force")
{
    std::mt19937_64 rng(g_test_seed + 40);
    std::uniform_int_distribution<int> dim(0, 3);
    for (int p : {2, 3}) {
        for (Mode mode : {Mode::Nonrestricted, Mode::Restricted}) {
            for (int trial = 0; trial < 50; ++trial) {
                std::vector<long long> dims{0};
                long long total = 0;
                for (int j = 1; j <= 8; ++j) {
                    long long d = dim(rng);
                    if (total + d > 6)
                        d = 0;
                    total += d;
                    dims.push_back(d);
                }
                auto prof = profile_of(p, mode, dims);
                for (int k = 1; k <= 9; ++k) {
                    CAPTURE(p);
                    CAPTURE(trial);
                    CAPTURE(k);
                    long long gf = pbw::monomial_count(prof, k);
                    REQUIRE(gf == pbw::monomial_count_dp(prof, k));
                    REQUIRE(gf == brute_count(prof, k));
                }
            }
        }
    }
}

TEST_CASE("profile inference, p = 2")
{
    steenrod::Algebra a2(2);
    std::vector<long long> dims;
    for (int k = 0; k <= 16; ++k)
        dims.push_back(a2.dim(k));

    auto prof = pbw::infer_profile(dims, 2, Mode::Nonrestricted, 16);
    CHECK_FALSE(prof.negative_at.has_value());
    std::vector<long long> row4(prof.dims.begin() + 1, prof.dims.begin() + 9);
    CHECK(row4 == std::vector<long long>{1, 1, 1, 0, 0, 1, 1, 0});
    std::vector<long long> to16(prof.dims.begin() + 1, prof.dims.end());
    CHECK(to16 == std::vector<long long>{1, 1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 1, 1, 0});

    auto rprof = pbw::infer_profile(dims, 2, Mode::Restricted, 16);
    std::vector<long long> rto8(rprof.dims.begin() + 1, rprof.dims.begin() + 9);
    CHECK(rto8 == std::vector<long long>{1, 1, 1, 1, 0, 1, 1, 1});

    // all-zero input gives the all-zero profile
    std::vector<long long> zero(10, 0);
    zero[0] = 1;
    auto zprof = pbw::infer_profile(zero, 2, Mode::Nonrestricted, 9);
    for (int k = 1; k <= 9; ++k)
        CHECK(zprof.dims[k] == 0);
}

TEST_CASE("negative dimension is reported, not thrown")
{
    // dims that force dim g_2 = -1: dim A_1 = 2 but dim A_2 = 0
    std::vector<long long> dims{1, 2, 0};
    auto prof = pbw::infer_profile(dims, 2, Mode::Nonrestricted, 2);
    REQUIRE(prof.negative_at.has_value());
    CHECK(*prof.negative_at == 2);
}

TEST_CASE("minimal weights")
{
    CHECK(pbw::minimal_weights(3, Mode::Nonrestricted, 52) ==
          std::vector<int>{1, 4, 5, 16, 17, 52});
    CHECK(pbw::minimal_weights(3, Mode::Restricted, 36) ==
          std::vector<int>{1, 4, 5, 12, 16, 17, 36});
    CHECK(pbw::minimal_weights(5, Mode::Nonrestricted, 9) == std::vector<int>{1, 8, 9});
    CHECK_THROWS_AS(pbw::minimal_weights(2, Mode::Nonrestricted, 8), std::domain_error);
}

TEST_CASE("obstruction reports")
{
    for (Mode mode : {Mode::Nonrestricted, Mode::Restricted}) {
        auto rep2 = pbw::run_obstruction(2, mode);
        CHECK(rep2.no_realisation());
        for (const auto& c : rep2.certificates) {
            CAPTURE(c.id);
            CHECK(c.pass);
        }

        auto rep3 = pbw::run_obstruction(3, mode);
        CHECK(rep3.no_realisation());
        for (const auto& c : rep3.certificates) {
            if (c.id == "nested_bracket") {
                // the claimed identity does not hold in the algebra; the
                // verdict must not rest on it
                CHECK_FALSE(c.pass);
                CHECK_FALSE(c.load_bearing);
            } else {
                CAPTURE(c.id);
                CHECK(c.pass);
            }
        }
    }

    auto rep3r = pbw::run_obstruction(3, Mode::Restricted);
    bool found_escape = false;
    for (const auto& c : rep3r.certificates)
        if (c.id == "restricted_pmap_escape") {
            found_escape = true;
            CHECK(c.pass);
            CHECK(c.load_bearing);
        }
    CHECK(found_escape);
}
