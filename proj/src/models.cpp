#include "liemc/models.hpp"

#include <stdexcept>
#include <string>

namespace liemc {

namespace {

Element minus_half_self_bracket(const Element& v) {
    return Rational(-1, 2) * bracket(v, v);
}

// dx = [x,b] + todd(ad_x)(b-a), the b-based closed form of the interval
// differential.
Element interval_dx(const Element& x, const Element& a, const Element& b) {
    const int n = x.context()->truncation();
    return bracket(x, b) + series_apply(OperatorSeries::todd(n), x, b - a);
}

}  // namespace

LsInterval ls_interval(int truncation) {
    auto ctx = AlgebraContext::make({{"a", -1}, {"b", -1}, {"x", 0}}, truncation);
    Element a = Element::generator(ctx, 0);
    Element b = Element::generator(ctx, 1);
    Element x = Element::generator(ctx, 2);
    std::vector<Element> images{minus_half_self_bracket(a), minus_half_self_bracket(b),
                                interval_dx(x, a, b)};
    return LsInterval{Cdgl{ctx, Derivation(ctx, std::move(images))}, 0, 1, 2};
}

Element CircuitModel::loop() const {
    std::vector<Element> xs;
    xs.reserve(size_t(k));
    for (int i = 1; i <= k; ++i) xs.push_back(x(i));
    return bch_multi(xs);
}

CircuitModel circuit_model(int k, int truncation) {
    if (k < 3) throw std::invalid_argument("circuit_model: k must be >= 3");
    std::vector<Generator> gens;
    gens.reserve(size_t(2 * k));
    for (int i = 1; i <= k; ++i) gens.push_back({"v" + std::to_string(i), -1});
    for (int i = 1; i <= k; ++i) gens.push_back({"x" + std::to_string(i), 0});
    auto ctx = AlgebraContext::make(std::move(gens), truncation);

    auto v = [&](int i) { return Element::generator(ctx, ((i - 1) % k + k) % k); };
    auto x = [&](int i) { return Element::generator(ctx, k + ((i - 1) % k + k) % k); };

    std::vector<Element> images;
    images.reserve(size_t(2 * k));
    for (int i = 1; i <= k; ++i) images.push_back(minus_half_self_bracket(v(i)));
    for (int i = 1; i <= k; ++i) images.push_back(interval_dx(x(i), v(i), v(i + 1)));

    std::vector<GroupMorphism::Image> sigma_im(size_t(2 * k)), tau_im(size_t(2 * k));
    for (int i = 1; i <= k; ++i) {
        int vi = i - 1, xi = k + i - 1;
        sigma_im[size_t(vi)] = {i % k, 1};              // v_i -> v_{i+1}
        sigma_im[size_t(xi)] = {k + i % k, 1};          // x_i -> x_{i+1}
        tau_im[size_t(vi)] = {(k - i + 1) % k, 1};      // v_i -> v_{k-i+2}
        tau_im[size_t(xi)] = {k + (k - i), -1};         // x_i -> -x_{k-i+1}
    }

    return CircuitModel{Cdgl{ctx, Derivation(ctx, std::move(images))}, k,
                        GroupMorphism(ctx, std::move(sigma_im)),
                        GroupMorphism(ctx, std::move(tau_im))};
}

Element TriangleModel::loop() const {
    return bch_multi({x(1), x(2), x(3)});
}

namespace {

struct TriangleParts {
    ContextPtr ctx;
    std::vector<Element> images;  // differentials of the circuit part
    std::vector<GroupMorphism::Image> sigma_im, tau_im;
};

TriangleParts triangle_base(const char* top_name, int truncation) {
    std::vector<Generator> gens;
    for (int i = 1; i <= 3; ++i) gens.push_back({"v" + std::to_string(i), -1});
    for (int i = 1; i <= 3; ++i) gens.push_back({"x" + std::to_string(i), 0});
    gens.push_back({top_name, 1});
    auto ctx = AlgebraContext::make(std::move(gens), truncation);

    auto v = [&](int i) { return Element::generator(ctx, ((i - 1) % 3 + 3) % 3); };
    auto x = [&](int i) { return Element::generator(ctx, 3 + ((i - 1) % 3 + 3) % 3); };

    TriangleParts parts;
    for (int i = 1; i <= 3; ++i) parts.images.push_back(minus_half_self_bracket(v(i)));
    for (int i = 1; i <= 3; ++i) parts.images.push_back(interval_dx(x(i), v(i), v(i + 1)));

    parts.sigma_im.resize(7);
    parts.tau_im.resize(7);
    for (int i = 1; i <= 3; ++i) {
        parts.sigma_im[size_t(i - 1)] = {i % 3, 1};
        parts.sigma_im[size_t(3 + i - 1)] = {3 + i % 3, 1};
        parts.tau_im[size_t(i - 1)] = {(3 - i + 1) % 3, 1};
        parts.tau_im[size_t(3 + i - 1)] = {3 + (3 - i), -1};
    }
    parts.sigma_im[6] = {6, 1};   // e -> e
    parts.tau_im[6] = {6, -1};    // e -> -e
    parts.ctx = std::move(ctx);
    return parts;
}

}  // namespace

TriangleModel triangle_model(int truncation) {
    TriangleParts parts = triangle_base("e", truncation);
    const auto& ctx = parts.ctx;
    Element v1 = Element::generator(ctx, 0);
    Element e = Element::generator(ctx, 6);
    Element loop = bch_multi({Element::generator(ctx, 3), Element::generator(ctx, 4),
                              Element::generator(ctx, 5)});
    // d_{v1}(e) = x1*x2*x3, so de = x1*x2*x3 - [v1,e].
    parts.images.push_back(loop - bracket(v1, e));
    TriangleModel m{Cdgl{ctx, Derivation(ctx, std::move(parts.images))},
                    GroupMorphism(ctx, std::move(parts.sigma_im)),
                    GroupMorphism(ctx, std::move(parts.tau_im)),
                    6,
                    std::nullopt,
                    std::nullopt};
    return m;
}

TriangleModel symmetric_triangle(const Element& omega, const Element& beta, int truncation) {
    CircuitModel circuit = circuit_model(3, truncation);
    Element om = recontext(omega, circuit.cdgl.ctx);
    Element be = recontext(beta, circuit.cdgl.ctx);

    auto mc = is_mc(circuit.cdgl, om);
    if (!mc.ok)
        throw std::invalid_argument("symmetric_triangle: omega is not Maurer-Cartan, residual " +
                                    mc.residual.str());
    if (circuit.sigma(om) != om)
        throw std::invalid_argument("symmetric_triangle: omega not sigma-invariant, residual " +
                                    (circuit.sigma(om) - om).str());
    if (circuit.tau(om) != om)
        throw std::invalid_argument("symmetric_triangle: omega not tau-invariant, residual " +
                                    (circuit.tau(om) - om).str());
    Element flow = gauge(circuit.cdgl, be, circuit.v(1));
    if (flow != om)
        throw std::invalid_argument("symmetric_triangle: beta is not a path from omega to v1, "
                                    "residual " + (flow - om).str());

    TriangleParts parts = triangle_base("e'", truncation);
    const auto& ctx = parts.ctx;
    Element om_t = embed(om, ctx);
    Element be_t = embed(be, ctx);
    Element ep = Element::generator(ctx, 6);
    Element x1 = Element::generator(ctx, 3);
    Element x2 = Element::generator(ctx, 4);
    Element x3 = Element::generator(ctx, 5);
    // de' = -[Omega, e'] + beta * x1 * x2 * x3 * (-beta)
    Element conjugated_loop = bch_multi({be_t, x1, x2, x3, -be_t});
    parts.images.push_back(conjugated_loop - bracket(om_t, ep));

    TriangleModel m{Cdgl{ctx, Derivation(ctx, std::move(parts.images))},
                    GroupMorphism(ctx, std::move(parts.sigma_im)),
                    GroupMorphism(ctx, std::move(parts.tau_im)),
                    6,
                    std::move(om_t),
                    std::move(be_t)};
    return m;
}

bool path_check(const Cdgl& L, const Element& p, const Element& A, const Element& B) {
    return gauge(L, p, B) == A;
}

}  // namespace liemc
