#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liemc/lie.hpp"
#include "liemc/sampling.hpp"
#include "oracles.hpp"

using namespace liemc;

namespace {

ContextPtr free2(int n) { return AlgebraContext::make({{"p", 0}, {"q", 0}}, n); }
ContextPtr free3(int n) { return AlgebraContext::make({{"p", 0}, {"q", 0}, {"r", 0}}, n); }

}  // namespace

TEST_CASE("graded commutator basics") {
    auto ctx = AlgebraContext::make({{"v", -1}, {"x1", 0}, {"x2", 0}}, 3);
    Element v = Element::generator(ctx, "v");
    Element x1 = Element::generator(ctx, "x1");
    Element x2 = Element::generator(ctx, "x2");

    CHECK(bracket(x1, x1).is_zero());  // even-degree self-bracket
    // odd degree: [v,v] = vv + vv
    Element vv = v * v;
    CHECK(bracket(v, v) == vv + vv);
    CHECK(bracket(x1, x2) == x1 * x2 - x2 * x1);
    // graded antisymmetry across degrees
    CHECK(bracket(v, x1) == -bracket(x1, v));
}

TEST_CASE("ad powers") {
    auto ctx = AlgebraContext::make({{"v", -1}, {"x", 0}}, 3);
    Element v = Element::generator(ctx, "v");
    Element x = Element::generator(ctx, "x");
    CHECK(ad_power(x, 0, v) == v);
    CHECK(ad_power(x, 1, v) == bracket(x, v));
    CHECK(ad_power(x, 3, v).is_zero());  // length 4 > N
}

TEST_CASE("primitivity certificate") {
    auto ctx = free2(3);
    Element p = Element::generator(ctx, "p");
    Element q = Element::generator(ctx, "q");
    CHECK(is_primitive(p));
    CHECK_FALSE(is_primitive(p * q));
    CHECK(is_primitive(bracket(p, q)));
    CHECK(is_primitive(Element::zero(ctx)));
    CHECK_FALSE(is_primitive(Element::unit(ctx)));
    // graded case: commutators of odd generators stay primitive
    auto gctx = AlgebraContext::make({{"v", -1}, {"w", -1}, {"e", 1}}, 3);
    Element v = Element::generator(gctx, "v");
    Element e = Element::generator(gctx, "e");
    CHECK(is_primitive(bracket(v, e)));
    CHECK(is_primitive(bracket(v, v)));
    CHECK(is_primitive(bracket(bracket(v, e), v)));
    CHECK_FALSE(is_primitive(v * e));
}

TEST_CASE("exp and log invert each other") {
    for (int n = 1; n <= 5; ++n) {
        auto ctx = free2(n);
        Element p = Element::generator(ctx, "p");
        CHECK(liemc::exp(Element::zero(ctx)) == Element::unit(ctx));
        CHECK(liemc::log(Element::unit(ctx)).is_zero());
        CHECK(liemc::log(liemc::exp(p)) == p);
        Sampler rng{uint64_t(n)};
        Element x = rng.degree_zero_lie_element(ctx);
        CHECK(liemc::log(liemc::exp(x)) == x);
        CHECK(liemc::exp(liemc::log(Element::unit(ctx) + x)) == Element::unit(ctx) + x);
    }
}

TEST_CASE("exp and log preconditions") {
    auto ctx = AlgebraContext::make({{"v", -1}, {"x", 0}}, 3);
    Element v = Element::generator(ctx, "v");
    Element x = Element::generator(ctx, "x");
    CHECK_THROWS_AS(liemc::exp(v), std::invalid_argument);                       // degree
    CHECK_THROWS_AS(liemc::exp(x + Element::unit(ctx)), std::invalid_argument);  // constant
    CHECK_THROWS_AS(liemc::log(x), std::invalid_argument);                       // constant != 1
    CHECK_THROWS_AS(bch(v, v), std::invalid_argument);
}

TEST_CASE("bch against the frozen low-order expansion") {
    auto ctx = free2(3);
    Element x = Element::generator(ctx, "p");
    Element y = Element::generator(ctx, "q");
    Element expected = x + y + Rational(1, 2) * bracket(x, y) +
                       Rational(1, 12) * bracket(x, bracket(x, y)) +
                       Rational(1, 12) * bracket(y, bracket(y, x));
    CHECK(bch(x, y) == expected);
    CHECK(oracles::dynkin_bch(x, y) == expected);
}

TEST_CASE("bch against the Dynkin oracle on random inputs") {
    for (int n = 2; n <= 4; ++n) {
        auto ctx = free2(n);
        Sampler rng{uint64_t(40 + n)};
        for (int t = 0; t < 6; ++t) {
            Element x = rng.degree_zero_lie_element(ctx, 2, 2);
            Element y = rng.degree_zero_lie_element(ctx, 2, 2);
            CHECK(bch(x, y) == oracles::dynkin_bch(x, y));
        }
    }
}

TEST_CASE("bch group laws") {
    auto ctx = free3(4);
    Sampler rng(2024);
    for (int t = 0; t < 10; ++t) {
        Element x = rng.degree_zero_lie_element(ctx);
        Element y = rng.degree_zero_lie_element(ctx);
        Element z = rng.degree_zero_lie_element(ctx);
        Rational r = rng.small_rational(), s = rng.small_rational();

        CHECK(bch(x, -x).is_zero());
        CHECK(bch(r * x, s * x) == (r + s) * x);
        CHECK(bch(x, bch(y, z)) == bch(bch(x, y), z));
        CHECK(-bch(y, x) == bch(-x, -y));
        CHECK(bch_multi({x, y, z}) == bch(x, bch(y, z)));
        CHECK(exp_ad(x, y) == bch_multi({x, y, -x}));
        CHECK(exp_ad(bch(x, y), z) == exp_ad(x, exp_ad(y, z)));
        CHECK(bch(exp_ad(x, y), exp_ad(x, z)) == exp_ad(x, bch(y, z)));
        CHECK(bch(r * bch(x, y), x) == bch(x, r * bch(y, x)));
        CHECK(bch(r * bch(y, x), -x) == bch(-x, r * bch(x, y)));
        CHECK(is_primitive(bch(x, y)));
    }
}

TEST_CASE("bch linearization of families agreeing to low order") {
    auto ctx = free3(4);
    Sampler rng(5150);
    auto gens = generators_of_degree(ctx, 0);
    for (int t = 0; t < 12; ++t) {
        for (int n = 1; n <= 2; ++n) {
            Element common = rng.lie_element(ctx, gens, n, 2);
            std::vector<Element> scaled;
            Element sum = Element::zero(ctx);
            int r = rng.pick(2, 3);
            for (int i = 0; i < r; ++i) {
                Element tail = rng.lie_element(ctx, gens, 4, 2, n + 1);
                Rational lambda = rng.small_rational();
                scaled.push_back(lambda * (common + tail));
                sum += lambda * (common + tail);
            }
            CHECK(bch_multi(scaled).truncate_length(n + 1) == sum.truncate_length(n + 1));
        }
    }
}

TEST_CASE("exp_ad examples") {
    auto ctx2 = free2(2);
    Element x = Element::generator(ctx2, "p");
    Element y = Element::generator(ctx2, "q");
    CHECK(exp_ad(Element::zero(ctx2), y) == y);
    CHECK(exp_ad(x, y) == y + bracket(x, y));  // series stops at the first bracket
}

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(3) == Rational(0));
    CHECK(bernoulli(4) == Rational(-1, 30));
    for (int n = 0; n <= 12; ++n) CHECK(bernoulli(n) == oracles::bernoulli_via_series(n));
    for (int n = 3; n <= 11; n += 2) CHECK(bernoulli(n) == Rational(0));
}

TEST_CASE("operator series match their defining identities") {
    const int n = 8;
    auto phi = OperatorSeries::phi(n).coefficients();
    auto todd = OperatorSeries::todd(n).coefficients();
    auto todd_minus = OperatorSeries::todd_minus(n).coefficients();
    auto todd_flip = OperatorSeries::todd_flip(n).coefficients();

    // phi = (e^t - 1)/t coefficient by coefficient
    CHECK(phi == oracles::expm1_over_t(n));
    // todd * phi = 1
    auto prod = oracles::series_mul(todd, phi);
    CHECK(prod[0] == Rational(1));
    for (int i = 1; i <= n; ++i) CHECK(prod[size_t(i)] == Rational(0));
    // todd_minus(t) = todd(-t) = todd(t) + t, todd_flip = -todd
    for (int i = 0; i <= n; ++i) {
        Rational expect = i == 1 ? todd[1] + Rational(1) : todd[size_t(i)];
        CHECK(todd_minus[size_t(i)] == expect);
        CHECK(todd_flip[size_t(i)] == -todd[size_t(i)]);
    }
}

TEST_CASE("series_apply") {
    auto ctx = AlgebraContext::make({{"v", -1}, {"x", 0}}, 2);
    Element v = Element::generator(ctx, "v");
    Element x = Element::generator(ctx, "x");
    auto todd = OperatorSeries::todd(2);
    auto phi = OperatorSeries::phi(2);

    CHECK(series_apply(todd, Element::zero(ctx), v) == v);  // constant term 1
    CHECK(series_apply(phi, x, v) == v + Rational(1, 2) * bracket(x, v));
    CHECK(series_apply(todd, x, v) == v - Rational(1, 2) * bracket(x, v));
    CHECK_THROWS_AS(series_apply(OperatorSeries::todd(1), x, v), std::invalid_argument);
    CHECK_THROWS_AS(series_apply(todd, v, v), std::invalid_argument);
}
