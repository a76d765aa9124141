#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "joindim/series.hpp"

using namespace joindim;

TEST_CASE("binomial follows the vanishing convention", "[series]") {
    CHECK(binomial(7, 2) == 21);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 5) == 1);
    CHECK(binomial(5, -2) == 0);
    CHECK(binomial(-1, 0) == 0);
    CHECK(binomial(-3, 2) == 0);
    CHECK(binomial(52, 5) == 2598960);
}

TEST_CASE("binomial raises on 64-bit overflow", "[series]") {
    // binomial(66, 33) is the largest central value that still fits
    CHECK(binomial(66, 33) == 7219428434016265740LL);
    CHECK_THROWS_AS(binomial(67, 33), std::overflow_error);
    CHECK_THROWS_AS(binomial(70, 35), std::overflow_error);
}

TEST_CASE("geometric expands 1/(1-t)^order", "[series]") {
    CHECK(geometric(3, 5).coeff(5) == 21);
    CHECK(geometric(1, 4).coeffs() == std::vector<Int>{1, 1, 1, 1, 1});
    CHECK(geometric(2, 3).coeffs() == std::vector<Int>{1, 2, 3, 4});
    CHECK_THROWS_AS(geometric(0, 3), std::invalid_argument);
}

TEST_CASE("p_k truncates correctly", "[series]") {
    CHECK(p_k(2, 5).coeffs() == std::vector<Int>{1, 1, 1, 0, 0, 0});
    CHECK(p_k(0, 3).coeffs() == std::vector<Int>{1, 0, 0, 0});
    CHECK(p_k(5, 2).coeffs() == std::vector<Int>{1, 1, 1});
    CHECK_THROWS_AS(p_k(-1, 3), std::invalid_argument);
}

TEST_CASE("mul convolves truncated series", "[series]") {
    CHECK(mul(p_k(1, 3), p_k(1, 3)).coeffs() == std::vector<Int>{1, 2, 1, 0});
    // telescoping: 1/(1-t) * (1-t) = 1
    CHECK(mul(geometric(1, 4), one_minus_power(1, 4)).coeffs() ==
          std::vector<Int>{1, 0, 0, 0, 0});
    CHECK(mul(p_k(2, 5), geometric(2, 5)).coeff(5) == 15);
    CHECK_THROWS_AS(mul(p_k(1, 3), p_k(1, 4)), std::invalid_argument);
}

TEST_CASE("mul raises on coefficient overflow", "[series]") {
    const Int big = std::numeric_limits<Int>::max() / 2;
    const TruncatedSeries s{std::vector<Int>{big, big}};
    CHECK_THROWS_AS(mul(s, s), std::overflow_error);
}

TEST_CASE("coefficient access is bounds-checked", "[series]") {
    const TruncatedSeries s = p_k(1, 3);
    CHECK_THROWS_AS(s.coeff(4), std::out_of_range);
    CHECK_THROWS_AS(s.coeff(-1), std::out_of_range);
}

TEST_CASE("power multiplies repeatedly", "[series]") {
    CHECK(power(p_k(1, 4), 2).coeffs() == std::vector<Int>{1, 2, 1, 0, 0});
    CHECK(power(p_k(1, 3), 0).coeffs() == std::vector<Int>{1, 0, 0, 0});
    CHECK(power(geometric(1, 5), 3) == geometric(3, 5));
    CHECK_THROWS_AS(power(p_k(1, 3), -1), std::invalid_argument);
    CHECK_THROWS_AS(one_minus_power(0, 3), std::invalid_argument);
}

TEST_CASE("ci_quotient_series expands the Koszul quotient", "[series]") {
    CHECK(ci_quotient_series(3, {1, 1}, 2).coeff(2) == 3);
    CHECK(ci_quotient_series(2, {4}, 5).coeff(5) == 18);
    for (int k = 0; k <= 6; ++k) CHECK(ci_quotient_series(1, {}, 6).coeff(k) == k + 1);
    CHECK_THROWS_AS(ci_quotient_series(0, {1}, 3), std::invalid_argument);
    CHECK_THROWS_AS(ci_quotient_series(2, {0}, 3), std::invalid_argument);
}

TEST_CASE("inclusion_exclusion_coeff matches hand expansions", "[series]") {
    CHECK(inclusion_exclusion_coeff(2, 5, {4}) == 18);
    // empty product: plain binomial
    CHECK(inclusion_exclusion_coeff(3, 5, {}) == binomial(8, 3));
    CHECK(inclusion_exclusion_coeff(4, 7, {}) == binomial(11, 4));
    // coeff_5 of (1-t)^2/(1-t)^4 = 1/(1-t)^2 is 6
    CHECK(inclusion_exclusion_coeff(3, 5, {1, 1}) == 6);
}

TEST_CASE("series coefficient equals inclusion-exclusion over the documented box", "[series]") {
    // all degree multisets of length <= 4 with entries in [1, 6]
    std::vector<std::vector<int>> multisets{{}};
    std::vector<int> cur;
    const auto rec = [&](auto&& self, int lo) -> void {
        if (cur.size() == 4) return;
        for (int a = lo; a <= 6; ++a) {
            cur.push_back(a);
            multisets.push_back(cur);
            self(self, a);
            cur.pop_back();
        }
    };
    rec(rec, 1);

    for (int n = 1; n <= 6; ++n) {
        for (const auto& degs : multisets) {
            const TruncatedSeries s = ci_quotient_series(n, degs, 12);
            for (int e = 0; e <= 12; ++e)
                REQUIRE(s.coeff(e) == inclusion_exclusion_coeff(n, e, degs));
        }
    }
}

TEST_CASE("ci_quotient_series is nonnegative while #degs <= n", "[series]") {
    std::vector<std::vector<int>> multisets{{}};
    std::vector<int> cur;
    const auto rec = [&](auto&& self, int lo) -> void {
        if (cur.size() == 4) return;
        for (int a = lo; a <= 5; ++a) {
            cur.push_back(a);
            multisets.push_back(cur);
            self(self, a);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    for (int n = 1; n <= 5; ++n)
        for (const auto& degs : multisets) {
            if (static_cast<int>(degs.size()) > n) continue;
            const TruncatedSeries s = ci_quotient_series(n, degs, 10);
            for (Int c : s.coeffs()) REQUIRE(c >= 0);
        }
}

TEST_CASE("geometric times P_k products have weakly increasing coefficients", "[series]") {
    // P_inf^{l+1} * P_{k_1} ... P_{k_s} for l <= 4, s <= 3, k_i <= 6
    std::vector<std::vector<int>> ks{{}};
    std::vector<int> cur;
    const auto rec = [&](auto&& self, int lo) -> void {
        if (cur.size() == 3) return;
        for (int k = lo; k <= 6; ++k) {
            cur.push_back(k);
            ks.push_back(cur);
            self(self, k);
            cur.pop_back();
        }
    };
    rec(rec, 0);

    for (int l = 0; l <= 4; ++l)
        for (const auto& seq : ks) {
            TruncatedSeries s = geometric(l + 1, 12);
            for (int k : seq) s = mul(s, p_k(k, 12));
            for (int i = 1; i <= 12; ++i) REQUIRE(s.coeff(i) >= s.coeff(i - 1));
        }
}

namespace {

TruncatedSeries random_nonnegative_series(std::mt19937& rng, int trunc, Int max_coeff) {
    std::uniform_int_distribution<Int> dist(0, max_coeff);
    std::vector<Int> c(static_cast<std::size_t>(trunc) + 1);
    for (auto& v : c) v = dist(rng);
    return TruncatedSeries{std::move(c)};
}

}  // namespace

TEST_CASE("dominating factors dominate after multiplication", "[series][property]") {
    // coeff_k(g) >= coeff_k(h) for all k implies coeff_k(fg) >= coeff_k(fh)
    std::mt19937 rng(20240409);
    for (int iter = 0; iter < 200; ++iter) {
        const TruncatedSeries f = random_nonnegative_series(rng, 10, 50);
        const TruncatedSeries h = random_nonnegative_series(rng, 10, 50);
        const TruncatedSeries delta = random_nonnegative_series(rng, 10, 20);
        std::vector<Int> gc(h.coeffs());
        for (std::size_t i = 0; i < gc.size(); ++i) gc[i] += delta.coeffs()[i];
        const TruncatedSeries g{std::move(gc)};
        const TruncatedSeries fg = mul(f, g);
        const TruncatedSeries fh = mul(f, h);
        for (int k = 0; k <= 10; ++k) REQUIRE(fg.coeff(k) >= fh.coeff(k));
    }
}

TEST_CASE("mul is commutative and associative", "[series][property]") {
    std::mt19937 rng(987654);
    std::uniform_int_distribution<Int> dist(-30, 30);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<Int> ac(9), bc(9), cc(9);
        for (auto& v : ac) v = dist(rng);
        for (auto& v : bc) v = dist(rng);
        for (auto& v : cc) v = dist(rng);
        const TruncatedSeries a{std::move(ac)}, b{std::move(bc)}, c{std::move(cc)};
        REQUIRE(mul(a, b) == mul(b, a));
        REQUIRE(mul(mul(a, b), c) == mul(a, mul(b, c)));
    }
}
