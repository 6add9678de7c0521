#include <doctest.h>

#include <variant>

#include "fishburn/checked.hpp"
#include "fishburn/registry.hpp"
#include "fishburn/series.hpp"

using namespace fishburn;

namespace {

SparsePoly T(std::int64_t c, int eq, int et = 0, int er = 0) {
    return SparsePoly::term(c, eq, et, er);
}

}  // namespace

TEST_CASE("checked arithmetic") {
    CHECK(checked_add(2, 3) == 5);
    CHECK_THROWS_AS(checked_mul(INT64_MAX, 2), overflow_error);
    CHECK_THROWS_AS(checked_pow(2, 63), overflow_error);
    CHECK(checked_pow(2, 62) == (std::int64_t{1} << 62));
}

TEST_CASE("number sequences") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(4, 5) == 0);
    CHECK(binomial(-1, 0) == 0);
    CHECK(binomial(52, 5) == 2598960);

    CHECK(fib_ext(-5) == 0);
    CHECK(fib_ext(-2) == 1);
    CHECK(fib_ext(-1) == 0);
    CHECK(fib_ext(0) == 1);
    CHECK(fib_ext(1) == 1);
    CHECK(fib_ext(6) == 13);

    CHECK(pell(0) == 0);
    CHECK(pell(1) == 1);
    CHECK(pell(4) == 12);

    CHECK(catalan(0) == 1);
    CHECK(catalan(5) == 42);
    CHECK(catalan(10) == 16796);
}

TEST_CASE("q-binomials against a brute-force inversion count") {
    CHECK(qbinom(5, 0) == SparsePoly::constant(1));
    CHECK(qbinom(2, 1) == SparsePoly::constant(1) + T(1, 1));
    CHECK(qbinom(4, 2) == SparsePoly::constant(1) + T(1, 1) + T(2, 2) + T(1, 3) + T(1, 4));
    CHECK(qbinom(3, 5).is_zero());
    for (int m = 0; m <= 8; ++m)
        for (int k = 0; k <= m; ++k) {
            SparsePoly oracle;
            for (int mask = 0; mask < (1 << m); ++mask) {
                int ones = 0, invs = 0, seen_ones = 0;
                for (int i = 0; i < m; ++i) {
                    if ((mask >> i) & 1) {
                        ++ones;
                        ++seen_ones;
                    } else {
                        invs += seen_ones;
                    }
                }
                if (ones == k) oracle += T(1, invs);
            }
            CHECK(qbinom(m, k) == oracle);
        }
}

TEST_CASE("q-Pascal and the q-binomial theorem") {
    for (int n = 1; n <= 9; ++n)
        for (int m = 0; m <= n; ++m)
            CHECK(qbinom(n, m) == qbinom(n - 1, m).shifted(1, m, 0, 0) + qbinom(n - 1, m - 1));
    for (int n = 0; n <= 8; ++n) {
        XPoly lhs = xp_constant(1);
        for (int k = 0; k < n; ++k)
            lhs = xp_mul(lhs, XPoly{SparsePoly::constant(1), T(1, k)});
        XPoly rhs;
        for (int k = 0; k <= n; ++k)
            rhs = xp_add(rhs, xp_monomial(qbinom(n, k).shifted(1, static_cast<int>(binomial(k, 2)),
                                                               0, 0),
                                          k));
        CHECK(xp_equal(lhs, rhs));
    }
}

TEST_CASE("sparse polynomial arithmetic") {
    SparsePoly p = T(2, 1, 3) + T(1, 2, 2);
    CHECK(p.str() == "2*q*t^3 + q^2*t^2");
    CHECK((p - p).is_zero());
    CHECK(SparsePoly().str() == "0");
    CHECK(p.eval(1, 1, 1) == 3);
    CHECK(p.eval(2, 1, 5) == 8);
    CHECK(p.substituted(1, 1) == T(2, 1) + T(1, 2));
    CHECK((T(1, 1) * T(1, 0, 1)) == T(1, 1, 1));
    CHECK(T(1, 0, 1).pow(3) == T(1, 0, 3));
    CHECK((SparsePoly::var_t() + SparsePoly::constant(1)).pow(2) ==
          SparsePoly::constant(1) + T(2, 0, 1) + T(1, 0, 2));
    CHECK(p.coeff(1, 3) == 2);
    CHECK(p.coeff(0, 0) == 0);
}

TEST_CASE("fishburn number series") {
    const auto s = fishburn_series(8);
    CHECK(s == std::vector<std::int64_t>{1, 1, 2, 5, 15, 53, 217, 1014, 5335});
    CHECK(fishburn_series(0) == std::vector<std::int64_t>{1});
    const auto longer = fishburn_series(12);
    CHECK(longer[9] == 31240);
    CHECK(longer[10] == 201608);
    CHECK(longer[11] == 1422074);
    CHECK(longer[12] == 10886503);
}

TEST_CASE("rational series expansion") {
    // 1/(1-x)
    const RationalGF geom{xp_constant(1), XPoly{SparsePoly::constant(1), SparsePoly::constant(-1)}};
    const auto ones = expand_rational(geom, 5);
    for (int n = 0; n <= 5; ++n) CHECK(ones.at(n) == SparsePoly::constant(1));

    // t^2 x^2 / (1 - t x)
    const RationalGF g3{xp_monomial(T(1, 0, 2), 2),
                        XPoly{SparsePoly::constant(1), T(-1, 0, 1)}};
    const auto s3 = expand_rational(g3, 5);
    CHECK(s3.at(0).is_zero());
    CHECK(s3.at(1).is_zero());
    for (int n = 2; n <= 5; ++n) CHECK(s3.at(n) == T(1, 0, n));

    // (1 - tx)/(1 - tx - tx^2) at t = 1 gives shifted Fibonacci numbers
    const auto s1a = expand_rational(named_gf("F3124_1a"), 8);
    const std::vector<std::int64_t> expect{1, 0, 1, 1, 2, 3, 5, 8, 13};
    for (int n = 0; n <= 8; ++n)
        CHECK(s1a.at(n).substituted(1, 1).constant_value() == expect[static_cast<std::size_t>(n)]);

    // a denominator with a non-unit constant term is rejected
    const RationalGF bad{xp_constant(1), XPoly{SparsePoly::constant(2)}};
    CHECK_THROWS_AS(expand_rational(bad, 3), std::invalid_argument);
    // ... and a sign flip is normalized
    const RationalGF neg{xp_constant(-1), XPoly{SparsePoly::constant(-1), SparsePoly::constant(1)}};
    CHECK(expand_rational(neg, 2).at(2) == SparsePoly::constant(1));
}

TEST_CASE("series expansion satisfies the denominator recurrence") {
    for (const char* name : {"T_1423", "F1423_1", "F1423_2d", "T_3124", "F321_4123"}) {
        const auto gf = rgf_normalized(named_gf(name));
        const int order = 9;
        const auto s = expand_rational(gf, order);
        // den * series == num up to the truncation order
        for (int n = 0; n <= order; ++n) {
            SparsePoly acc;
            for (int j = 0; j <= n && j < static_cast<int>(gf.den.size()); ++j)
                acc += gf.den[static_cast<std::size_t>(j)] * s.at(n - j);
            SparsePoly expect;
            if (n < static_cast<int>(gf.num.size())) expect = gf.num[static_cast<std::size_t>(n)];
            CHECK(acc == expect);
        }
    }
}

TEST_CASE("INVERT transform") {
    CHECK(invert_transform({0, 1}, 5) == std::vector<std::int64_t>{1, 1, 1, 1, 1, 1});
    const std::vector<std::int64_t> f{1, 2, 5, 13, 36};
    const auto find = invert_transform_inverse(f, 4);
    CHECK(find[0] == 0);
    CHECK(invert_transform(find, 4) == f);
    const std::vector<std::int64_t> ind{0, 1, 1, 2, 6, 4};
    CHECK(invert_transform_inverse(invert_transform(ind, 5), 5) == ind);
    CHECK_THROWS_AS(invert_transform({1, 1}, 3), std::invalid_argument);
    CHECK_THROWS_AS(invert_transform_inverse({2, 1}, 3), std::invalid_argument);
}

TEST_CASE("rational function equality by cross-multiplication") {
    // An012_beta at k=2 collapses to 1/(1-x)
    const RationalGF lhs = named_gf("An012_beta", 2);
    const RationalGF geom{xp_constant(1), XPoly{SparsePoly::constant(1), SparsePoly::constant(-1)}};
    CHECK(rgf_equal(lhs, geom));
    CHECK_FALSE(rgf_equal(named_gf("F1423_2c"), named_gf("F1423_2b")));
    const auto sum = rgf_add(geom, geom);
    const RationalGF twice{xp_constant(2), XPoly{SparsePoly::constant(1), SparsePoly::constant(-1)}};
    CHECK(rgf_equal(sum, twice));
}

TEST_CASE("named_gf registry errors") {
    CHECK_THROWS_AS(named_gf("no_such_gf"), std::invalid_argument);
    CHECK_THROWS_AS(named_gf("Bn_beta", 0), std::invalid_argument);
    CHECK(named_gf_ids().size() == 15);
    // Bn_beta at k=1 counts exactly one word per length
    const auto s = expand_rational(named_gf("Bn_beta", 1), 6);
    for (int n = 0; n <= 6; ++n) CHECK(s.at(n) == SparsePoly::constant(1));
}

TEST_CASE("closed forms") {
    CHECK(cf_f123_qtr(2) == T(1, 1, 1) + T(1, 0, 2, 1));
    CHECK(cf_f123_qtr(3) == T(1, 3, 1) + T(1, 2, 1, 1) + T(1, 1, 2, 1) + T(1, 1, 2, 2));
    CHECK(cf_bn_beta_count(4, 3) == 11);
    CHECK(cf_t2143_total(1) == 1);
    CHECK(cf_t2143_t1(3) == T(1, 0, 3) + T(2, 0, 2) + T(1, 0, 1));
    CHECK(cf_binom13(2) == 2);
    CHECK(cf_binom13(4) == 12);
    CHECK(cf_quad(4) == 11);
    CHECK(cf_pell3(4) == 9);
    CHECK(cf_threepairs(1) == 1);
    CHECK(cf_threepairs(4) == 13);
    CHECK(cf_otherpairs(4) == 13);
    CHECK(cf_grassmann(4) == 12);
    CHECK(cf_catconv(5) == 51);
    CHECK(cf_fn_plus_2(4) == 7);
    CHECK_THROWS_AS(cf_f123_qtr(1), std::invalid_argument);
    CHECK_THROWS_AS(closed_form("no_such_form", 3), std::invalid_argument);
    const auto v = closed_form("Bn_beta_count", 4, 3);
    CHECK(std::get<std::int64_t>(v) == 11);
    const auto p = closed_form("T2143_t1", 1);
    CHECK(std::get<SparsePoly>(p) == T(1, 0, 1));
    CHECK(closed_form_ids().size() >= 30);
}

TEST_CASE("the (q,r) form is the t-collapse of the (q,t,r) form") {
    for (int n = 2; n <= 10; ++n) CHECK(cf_f123_qtr(n).substituted(1, 1) == cf_f123_qr(n));
}

TEST_CASE("the binary-word and ascent-sequence generating functions match their closed forms") {
    for (int k = 1; k <= 6; ++k) {
        const auto s = expand_rational(named_gf("Bn_beta", k), 20);
        for (int n = 0; n <= 20; ++n)
            CHECK(s.at(n).constant_value() == cf_bn_beta_count(n, k));
    }
    for (int k = 2; k <= 6; ++k) {
        const auto beta_gf = expand_rational(named_gf("An012_beta", k), 16);
        const auto bin_gf = expand_rational(named_gf("An012_binary", k), 16);
        CHECK(beta_gf.at(0).constant_value() == 1);
        CHECK(bin_gf.at(0).constant_value() == 1);
        for (int n = 1; n <= 16; ++n) {
            CHECK(beta_gf.at(n).constant_value() == cf_an012_beta_count(n, k));
            CHECK(bin_gf.at(n).constant_value() == cf_an012_binary_count(n, k));
        }
    }
}
