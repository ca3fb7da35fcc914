#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "koszulkit/series.hpp"
#include "oracles.hpp"

using namespace koszulkit;

namespace {

RationalSeries ym_series(long s) {
    // 1/((1 - t^2)(1 - (s+1) t + t^2))
    IntPoly d1{1, 0, -1}, d2{1, -(s + 1), 1};
    IntPoly den(5, 0);
    for (std::size_t i = 0; i < d1.size(); ++i)
        for (std::size_t k = 0; k < d2.size(); ++k) den[i + k] += d1[i] * d2[k];
    return RationalSeries{{1}, den};
}

}  // namespace

TEST_CASE("expand basics") {
    TruncatedSeries ones = expand({{1}, {1, -1}}, 5);
    CHECK(ones.coefficients == std::vector<mpz_class>{1, 1, 1, 1, 1, 1});

    TruncatedSeries ym = expand(ym_series(3), 8);
    std::vector<mpz_class> expected{1, 4, 16, 60, 225, 840, 3136, 11704, 43681};
    CHECK(ym.coefficients == expected);
    // cross-check against the naive convolution oracle
    auto oracle = oracles::series_oracle({1}, {1, -4, 0, 4, -1}, 8);
    for (std::uint32_t n = 0; n <= 8; ++n) CHECK(mpq_class(ym.at(n)) == oracle[n]);

    TruncatedSeries sd = expand({{1}, {1, -4, 3}}, 4);
    CHECK(sd.coefficients == std::vector<mpz_class>{1, 4, 13, 40, 121});
    // partial fractions: coefficient n is (3^{n+1} - 1)/2
    mpz_class pow3 = 3;
    for (std::uint32_t n = 0; n <= 4; ++n) {
        CHECK(sd.at(n) * 2 == pow3 - 1);
        pow3 *= 3;
    }

    CHECK_THROWS_AS(expand({{1}, {0, 1}}, 3), InputError);
    CHECK_THROWS_AS(expand({{1}, {2}}, 3), InputError);  // 1/2 not integral
}

TEST_CASE("pq_one_check") {
    TruncatedSeries ym = expand(ym_series(3), 8);
    CHECK(pq_one_check(ym, {1, -4, 0, 4, -1}));
    CHECK_FALSE(pq_one_check(ym, {1, -4, 0, 4, 1}));

    TruncatedSeries sd = expand({{1}, {1, -4, 3}}, 8);
    CHECK(pq_one_check(sd, {1, -4, 3}));

    TruncatedSeries ones = expand({{1}, {1, -1}}, 6);
    CHECK(pq_one_check(ones, {1, -1}));
}

TEST_CASE("mobius") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(12) == 0);
    CHECK(mobius(30) == -1);
    CHECK_THROWS_AS(mobius(0), InputError);
    auto mu = mobius_sieve(2000);
    for (std::uint64_t n = 1; n <= 2000; ++n) CHECK(mu[n] == mobius(n));
    // summatory identity sum_{d|n} mu(d) = [n == 1]
    for (std::uint64_t n = 1; n <= 300; ++n) {
        int acc = 0;
        for (std::uint64_t d = 1; d <= n; ++d)
            if (n % d == 0) acc += mu[d];
        CHECK(acc == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("lie dims from series: Yang-Mills s=3 matches the known first ten") {
    TruncatedSeries ym = expand(ym_series(3), 10);
    LieDims dims = lie_dims_from_series(ym);
    std::vector<mpz_class> expected{4, 6, 16, 45, 144, 440, 1440, 4680, 15600, 52344};
    CHECK(dims.values == expected);
}

TEST_CASE("lie dims: Heisenberg enveloping series") {
    // 1/((1-t)^2 (1-t^2)) -> two degree-1 generators, one degree-2
    TruncatedSeries heis = expand({{1}, {1, -2, 0, 2, -1}}, 8);
    CHECK(heis.coefficients == std::vector<mpz_class>{1, 2, 4, 6, 9, 12, 16, 20, 25});
    LieDims dims = lie_dims_from_series(heis);
    CHECK(dims.values == std::vector<mpz_class>{2, 1, 0, 0, 0, 0, 0, 0});
}

TEST_CASE("lie dims: free algebra on 2 generators gives Witt numbers") {
    TruncatedSeries fr = expand({{1}, {1, -2}}, 8);
    LieDims dims = lie_dims_from_series(fr);
    // necklace-counting oracle (1/j) sum mu(j/d) 2^d
    for (std::uint32_t j = 1; j <= 8; ++j) {
        mpz_class acc = 0;
        for (std::uint32_t d = 1; d <= j; ++d) {
            if (j % d) continue;
            mpz_class pw = 1;
            for (std::uint32_t i = 0; i < d; ++i) pw *= 2;
            acc += mobius(j / d) * pw;
        }
        CHECK(dims.at(j) == acc / j);
    }
    CHECK(dims.values == std::vector<mpz_class>{2, 1, 2, 3, 6, 9, 18, 30});
}

TEST_CASE("non-enveloping input is rejected") {
    // 1 + t: the would-be N_2 is negative
    TruncatedSeries dual_numbers(2, {1, 1, 0});
    CHECK_THROWS_AS(lie_dims_from_series(dual_numbers), InputError);
}

TEST_CASE("closed form matches series route and documents the j=2 gap") {
    LieDims closed = lie_dims_closed_form(3, 12);
    CHECK(closed.at(3) == 16);  // (52 - 4) / 3
    CHECK(closed.at(4) == 45);  // (194 - 14) / 4
    LieDims from_series = lie_dims_from_series(expand(ym_series(3), 12));
    CHECK(closed.values == from_series.values);
    CHECK(closed.at(2) == 6);  // the naive closed form would give 5

    for (std::uint32_t s = 1; s <= 5; ++s) {
        LieDims a = lie_dims_closed_form(s, 10);
        LieDims b = lie_dims_from_series(expand(ym_series(s), 10));
        for (std::uint32_t j = 3; j <= 10; ++j) CHECK(a.at(j) == b.at(j));
        CHECK(a.at(1) == b.at(1));
        CHECK(a.at(2) == b.at(2));
    }
}

TEST_CASE("growth ratio") {
    TruncatedSeries ym = expand(ym_series(3), 8);
    mpq_class r = growth_ratio(ym, 8);
    CHECK(r == mpq_class(43681, 11704));
    double err = std::abs(r.get_d() - (2.0 + std::sqrt(3.0)));
    CHECK(err < 1e-3);

    TruncatedSeries heis = expand({{1}, {1, -2, 0, 2, -1}}, 8);
    CHECK(growth_ratio(heis, 6) == mpq_class(16, 12));

    TruncatedSeries ones = expand({{1}, {1, -1}}, 5);
    for (std::uint32_t n = 1; n <= 5; ++n) CHECK(growth_ratio(ones, n) == 1);
    CHECK_THROWS_AS(growth_ratio(ones, 0), InputError);
}

TEST_CASE("PBW reconstruction reproduces the series") {
    for (long s : {1L, 3L}) {
        TruncatedSeries p = expand(ym_series(s), 10);
        LieDims dims = lie_dims_from_series(p);
        CHECK(reconstruct_from_lie_dims(dims, 10) == p);
    }
    TruncatedSeries fr = expand({{1}, {1, -3}}, 9);
    CHECK(reconstruct_from_lie_dims(lie_dims_from_series(fr), 9) == fr);
}
