#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liemc/models.hpp"
#include "liemc/sampling.hpp"

using namespace liemc;

TEST_CASE("derivations follow the graded Leibniz rule") {
    auto ctx = AlgebraContext::make({{"v", -1}, {"x", 0}}, 4);
    Element v = Element::generator(ctx, "v");
    Element x = Element::generator(ctx, "x");
    // dv = -1/2 [v,v], dx = v (degree -1 image of a degree-0 generator)
    Derivation d(ctx, {Rational(-1, 2) * bracket(v, v), v});

    CHECK(d(Element::unit(ctx)).is_zero());
    CHECK(d(x) == v);
    CHECK(d(v) == Rational(-1, 2) * bracket(v, v));
    // |v| = -1: d(v x) = (dv) x - v (dx)
    CHECK(d(v * x) == d(v) * x - v * d(x));
    // |x| = 0: d(x v) = (dx) v + x (dv)
    CHECK(d(x * v) == d(x) * v + x * d(v));

    auto other = AlgebraContext::make({{"z", 0}}, 4);
    CHECK_THROWS_AS(d(Element::generator(other, "z")), std::invalid_argument);
    // image degree validation
    CHECK_THROWS_AS(Derivation(ctx, {x, v}), std::invalid_argument);
}

TEST_CASE("bracket-level Leibniz consistency") {
    CircuitModel m = circuit_model(3, 4);
    const Derivation& d = m.cdgl.d;
    Sampler rng(31);
    std::vector<int> all;
    for (int g = 0; g < m.cdgl.ctx->size(); ++g) all.push_back(g);
    for (int t = 0; t < 15; ++t) {
        Element u = rng.lie_element(m.cdgl.ctx, all, 2, 2);
        Element w = rng.lie_element(m.cdgl.ctx, all, 2, 2);
        for (int du = -2; du <= 2; ++du) {
            Element uh = u.degree_part(du);
            if (uh.is_zero()) continue;
            Element lhs = d(bracket(uh, w));
            Element rhs = bracket(d(uh), w) +
                          (du % 2 ? -Rational(1) : Rational(1)) * bracket(uh, d(w));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("derivation components partition the differential") {
    CircuitModel m = circuit_model(3, 4);
    const auto& ctx = m.cdgl.ctx;
    Derivation d1 = m.cdgl.d.component(1);

    CHECK(d1(m.x(1)) == m.v(2) - m.v(1));
    CHECK(d1(m.x(3)) == m.v(1) - m.v(3));
    CHECK(d1(m.v(1)).is_zero());  // dv has length 2

    for (int g = 0; g < ctx->size(); ++g) {
        Element total = Element::zero(ctx);
        for (int i = 1; i <= ctx->truncation(); ++i)
            total += m.cdgl.d.component(i).image(g);
        CHECK(total == m.cdgl.d.image(g));
    }
}

TEST_CASE("d squared reporting") {
    LsInterval iv = ls_interval(6);
    CHECK(check_d_squared(iv.cdgl).ok);

    // free Lie algebra with zero differential
    auto ctx = AlgebraContext::make({{"p", 0}, {"q", 0}}, 3);
    Derivation zero(ctx, {Element::zero(ctx), Element::zero(ctx)});
    CHECK(check_d_squared(Cdgl{ctx, zero}).ok);

    // deliberately corrupted interval: drop one term of dx
    std::vector<Element> images = iv.cdgl.d.images();
    Element dx = images[size_t(iv.x)];
    auto last = dx.terms().back();
    images[size_t(iv.x)] = dx - Element::from_terms(iv.cdgl.ctx, {{last.first, last.second}});
    auto bad = check_d_squared(Cdgl{iv.cdgl.ctx, Derivation(iv.cdgl.ctx, images)});
    CHECK_FALSE(bad.ok);
    bool named = false;
    for (const auto& e : bad.entries)
        if (!e.residual.is_zero()) named = true;
    CHECK(named);
}

TEST_CASE("maurer-cartan predicate") {
    CircuitModel m = circuit_model(3, 3);
    const Cdgl& L = m.cdgl;

    for (int i = 1; i <= 3; ++i) CHECK(is_mc(L, m.v(i)).ok);
    CHECK(is_mc(L, Element::zero(L.ctx)).ok);

    auto bad = is_mc(L, m.v(1) + m.v(2));
    CHECK_FALSE(bad.ok);
    Element expected = Rational(1, 2) * (bracket(m.v(1), m.v(2)) + bracket(m.v(2), m.v(1)));
    CHECK(bad.residual == expected);

    CHECK_THROWS_AS(is_mc(L, m.x(1)), std::invalid_argument);  // wrong degree
}

TEST_CASE("twisted differential") {
    CircuitModel m = circuit_model(3, 4);
    const Cdgl& L = m.cdgl;

    auto d0 = twisted_differential(L, Element::zero(L.ctx));
    for (int g = 0; g < L.ctx->size(); ++g) {
        Element gen = Element::generator(L.ctx, g);
        CHECK(d0(gen) == L.d(gen));
    }

    auto dv1 = twisted_differential(L, m.v(1));
    for (int g = 0; g < L.ctx->size(); ++g)
        CHECK(dv1(dv1(Element::generator(L.ctx, g))).is_zero());

    CHECK_THROWS_AS(twisted_differential(L, m.v(1) + m.v(2)), std::invalid_argument);
}

TEST_CASE("gauge action basics and closed parts") {
    CircuitModel m = circuit_model(3, 4);
    const Cdgl& L = m.cdgl;
    Sampler rng(777);
    auto gens0 = generators_of_degree(L.ctx, 0);

    for (int t = 0; t < 8; ++t) {
        Element x = rng.lie_element(L.ctx, gens0, 3, 3);
        Element y = rng.lie_element(L.ctx, gens0, 3, 3);
        Element a = gauge(L, rng.lie_element(L.ctx, gens0, 2, 2), m.v(1));

        CHECK(gauge(L, Element::zero(L.ctx), a) == a);
        CHECK(gauge(L, x, gauge(L, y, a)) == gauge(L, bch(x, y), a));
        CHECK(gauge(L, -x, gauge(L, x, a)) == a);
        CHECK(is_mc(L, gauge(L, x, a)).ok);

        Element ga = gauge(L, x, a);
        Derivation d1 = L.d.component(1), d2 = L.d.component(2);
        Element x1 = x.homogeneous_part(1), x2 = x.homogeneous_part(2);
        Element a1 = a.homogeneous_part(1), a2 = a.homogeneous_part(2);
        CHECK(ga.homogeneous_part(1) == a1 - L.d(x).homogeneous_part(1));
        CHECK(ga.homogeneous_part(2) == a2 + bracket(x1, a1) -
                                            Rational(1, 2) * bracket(x1, d1(x1)) - d2(x1) -
                                            d1(x2));
    }

    CHECK_THROWS_AS(gauge(L, m.v(1), m.v(1)), std::invalid_argument);  // x must be degree 0
    CHECK_THROWS_AS(gauge(L, m.x(1), m.x(1)), std::invalid_argument);  // a must be degree -1
}

TEST_CASE("conjugated differentials through a path") {
    LsInterval iv = ls_interval(5);
    const Cdgl& L = iv.cdgl;
    Element x = iv.x_elem();
    auto d_a = twisted_differential(L, iv.a_elem());
    auto d_b = twisted_differential(L, iv.b_elem());

    Sampler rng(404);
    std::vector<int> all{0, 1, 2};
    std::vector<Element> samples;
    for (int g = 0; g < 3; ++g) samples.push_back(Element::generator(L.ctx, g));
    for (int t = 0; t < 10; ++t) samples.push_back(rng.lie_element(L.ctx, all, 3, 2));
    for (const auto& w : samples) CHECK(d_a(exp_ad(x, w)) == exp_ad(x, d_b(w)));
}
