// Acceptance suite: one section per criterion, each printed as a pass/fail
// line. Every equality is exact (zero tolerance) modulo the stated
// truncation order.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "liemc/sampling.hpp"
#include "liemc/serialize.hpp"
#include "liemc/solver.hpp"
#include "liemc/verify.hpp"

using namespace liemc;

namespace {

int g_failures = 0;

class Criterion {
public:
    Criterion(int number, std::string title)
        : number_(number), title_(std::move(title)), start_(std::chrono::steady_clock::now()) {}

    void require(bool ok, const std::string& what) {
        if (!ok) {
            failed_.push_back(what);
        }
    }
    void require_zero(const Element& r, const std::string& what) {
        if (!r.is_zero()) failed_.push_back(what + " (residual " + r.str().substr(0, 80) + ")");
    }

    ~Criterion() {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start_)
                      .count();
        if (failed_.empty()) {
            std::printf("criterion %2d [pass] %s (%lld ms)\n", number_, title_.c_str(),
                        static_cast<long long>(ms));
        } else {
            ++g_failures;
            std::printf("criterion %2d [FAIL] %s (%lld ms)\n", number_, title_.c_str(),
                        static_cast<long long>(ms));
            for (const auto& f : failed_) std::printf("              - %s\n", f.c_str());
        }
        std::fflush(stdout);
    }

private:
    int number_;
    std::string title_;
    std::vector<std::string> failed_;
    std::chrono::steady_clock::time_point start_;
};

void criterion_1_bch_axioms() {
    Criterion c(1, "BCH axiom suite, 100 random degree-0 primitive triples at N=5");
    auto ctx = AlgebraContext::make({{"p", 0}, {"q", 0}, {"r", 0}}, 5);
    Sampler rng(1001);
    for (int t = 0; t < 100; ++t) {
        Element x = rng.degree_zero_lie_element(ctx, 3, 2);
        Element y = rng.degree_zero_lie_element(ctx, 3, 2);
        Element z = rng.degree_zero_lie_element(ctx, 3, 2);
        Rational r = rng.small_rational(), s = rng.small_rational();

        c.require(bch(x, bch(y, z)) == bch(bch(x, y), z), "associativity");
        c.require(bch(r * x, s * x) == (r + s) * x, "scalar line");
        c.require(bch(x, -x).is_zero(), "inverse");
        c.require(-bch(y, x) == bch(-x, -y), "anti-homomorphism");
        c.require(exp_ad(bch(x, y), z) == exp_ad(x, exp_ad(y, z)), "ad-exponential homomorphism");
        c.require(exp_ad(x, y) == bch_multi({x, y, -x}), "conjugation form");
        c.require(bch(exp_ad(x, y), exp_ad(x, z)) == exp_ad(x, bch(y, z)), "multiplicativity");
        c.require(bch(r * bch(x, y), x) == bch(x, r * bch(y, x)), "shuffle, left");
        c.require(bch(r * bch(y, x), -x) == bch(-x, r * bch(x, y)), "shuffle, right");
    }
}

void criterion_2_linearization() {
    Criterion c(2, "BCH linearization for families agreeing mod length > n, n = 1, 2");
    auto ctx = AlgebraContext::make({{"p", 0}, {"q", 0}, {"r", 0}}, 5);
    auto gens = generators_of_degree(ctx, 0);
    Sampler rng(1002);
    for (int t = 0; t < 40; ++t) {
        for (int n = 1; n <= 2; ++n) {
            Element common = rng.lie_element(ctx, gens, n, 2);
            int r = rng.pick(2, 3);
            std::vector<Element> scaled;
            Element sum = Element::zero(ctx);
            for (int i = 0; i < r; ++i) {
                Element tail = rng.lie_element(ctx, gens, 5, 2, n + 1);
                Rational lambda = rng.small_rational();
                scaled.push_back(lambda * (common + tail));
                sum += lambda * (common + tail);
            }
            c.require(bch_multi(scaled).truncate_length(n + 1) == sum.truncate_length(n + 1),
                      "class at length n+1 equals the linear combination");
        }
    }
}

void criterion_3_gauge_laws() {
    Criterion c(3, "gauge laws (composition, unit, closure, linear/quadratic parts) at N=4");
    CircuitModel m = circuit_model(3, 4);
    const Cdgl& L = m.cdgl;
    auto gens0 = generators_of_degree(L.ctx, 0);
    Sampler rng(1003);
    for (int t = 0; t < 25; ++t) {
        Element x = rng.lie_element(L.ctx, gens0, 3, 3);
        Element y = rng.lie_element(L.ctx, gens0, 3, 3);
        Element a = gauge(L, rng.lie_element(L.ctx, gens0, 2, 2), m.v(rng.pick(1, 3)));

        c.require(gauge(L, Element::zero(L.ctx), a) == a, "unit law");
        c.require(gauge(L, x, gauge(L, y, a)) == gauge(L, bch(x, y), a), "composition law");
        c.require(is_mc(L, gauge(L, x, a)).ok, "closure on Maurer-Cartan elements");

        Element ga = gauge(L, x, a);
        Derivation d1 = L.d.component(1), d2 = L.d.component(2);
        Element x1 = x.homogeneous_part(1), x2 = x.homogeneous_part(2);
        Element a1 = a.homogeneous_part(1), a2 = a.homogeneous_part(2);
        c.require(ga.homogeneous_part(1) == a1 - L.d(x).homogeneous_part(1), "linear part");
        c.require(ga.homogeneous_part(2) ==
                      a2 + bracket(x1, a1) - Rational(1, 2) * bracket(x1, d1(x1)) - d2(x1) - d1(x2),
                  "quadratic part");
    }
}

void criterion_4_interval() {
    Criterion c(4, "LS interval at N=6: d^2 = 0, the path relation, equal closed forms");
    LsInterval iv = ls_interval(6);
    const Cdgl& L = iv.cdgl;
    Element a = iv.a_elem(), b = iv.b_elem(), x = iv.x_elem();

    c.require(check_d_squared(L).ok, "d^2 = 0");
    c.require(path_check(L, x, a, b), "gauge(x, b) = a");
    Element dx = L.d.image(iv.x);
    Element via_a = bracket(x, a) + series_apply(OperatorSeries::todd_minus(6), x, b - a);
    Element split = series_apply(OperatorSeries::todd_flip(6), x, a) +
                    series_apply(OperatorSeries::todd_minus(6), x, b);
    c.require_zero(dx - via_a, "a-based and b-based closed forms agree");
    c.require_zero(dx - split, "split closed form agrees");
}

void criterion_5_conjugated_differentials() {
    Criterion c(5, "conjugated differentials d_a e^{ad_x} = e^{ad_x} d_b at N=5");
    LsInterval iv = ls_interval(5);
    const Cdgl& L = iv.cdgl;
    Element x = iv.x_elem();
    auto d_a = twisted_differential(L, iv.a_elem());
    auto d_b = twisted_differential(L, iv.b_elem());

    std::vector<Element> samples;
    for (int g = 0; g < L.ctx->size(); ++g) samples.push_back(Element::generator(L.ctx, g));
    Sampler rng(1005);
    std::vector<int> all{0, 1, 2};
    for (int t = 0; t < 20; ++t) samples.push_back(rng.lie_element(L.ctx, all, 3, 2));
    for (const auto& w : samples)
        c.require_zero(d_a(exp_ad(x, w)) - exp_ad(x, d_b(w)), "conjugation identity");
}

void criterion_6_circuits() {
    Criterion c(6, "circuit models k = 3, 4, 5 at N=4: d^2, equivariance, dihedral relations");
    for (int k : {3, 4, 5}) {
        CircuitModel m = circuit_model(k, 4);
        const Cdgl& L = m.cdgl;
        c.require(check_d_squared(L).ok, "d^2 = 0, k = " + std::to_string(k));
        for (int g = 0; g < L.ctx->size(); ++g) {
            Element gen = Element::generator(L.ctx, g);
            c.require_zero(m.sigma(L.d(gen)) - L.d(m.sigma(gen)),
                           "sigma equivariance, k = " + std::to_string(k));
            c.require_zero(m.tau(L.d(gen)) - L.d(m.tau(gen)),
                           "tau equivariance, k = " + std::to_string(k));
        }
        c.require(m.sigma.pow(k) == GroupMorphism::identity(L.ctx),
                  "sigma^k = id, k = " + std::to_string(k));
        c.require(m.tau.after(m.tau) == GroupMorphism::identity(L.ctx),
                  "tau^2 = id, k = " + std::to_string(k));
        c.require(m.sigma.after(m.tau) == m.tau.after(m.sigma.pow(k - 1)),
                  "sigma tau = tau sigma^{k-1}, k = " + std::to_string(k));
    }
}

void criterion_7_trivial_kernels() {
    Criterion c(7, "degree-0 primitive d_1-kernels vanish at lengths 2-4 for k = 3, 4");
    for (int k : {3, 4}) {
        CircuitModel m = circuit_model(k, 4);
        for (int len = 2; len <= 4; ++len)
            c.require(d1_cycles(m.cdgl, len, 0).empty(),
                      "kernel at length " + std::to_string(len) + ", k = " + std::to_string(k));
    }
}

void criterion_8_loop_and_invariance() {
    Criterion c(8, "loop coefficients round-trip; invariant images give invariant solutions");
    CircuitModel m = circuit_model(3, 4);
    const Cdgl& L = m.cdgl;
    Element loop = m.loop();
    for (const Rational& lambda : {Rational(0), Rational(1), Rational(-2), Rational(3, 2)})
        c.require(loop_coefficient(m, lambda * loop) == lambda,
                  "round-trip lambda = " + lambda.str());

    Derivation d1 = L.d.component(1);
    Sampler rng(1008);
    auto gens0 = generators_of_degree(L.ctx, 0);
    for (int t = 0; t < 10; ++t) {
        for (int len = 1; len <= 4; ++len) {
            Element u = rng.lie_element(L.ctx, gens0, len, 2, len);
            Element s = Element::zero(L.ctx);
            Element rot = u;
            for (int i = 0; i < m.k; ++i) {
                s += rot;
                rot = m.sigma(rot);
            }
            auto sol = solve_d1(L, d1(s), len, 0);
            c.require(sol.exact(), "solvable invariant image, length " + std::to_string(len));
            if (sol.exact())
                c.require(m.sigma(*sol.solution) == *sol.solution,
                          "sigma-invariant solution, length " + std::to_string(len));
        }
    }
}

void criterion_9_invariant_element() {
    Criterion c(9, "invariant Maurer-Cartan element for k = 3 and k = 4 at N=5");
    for (int k : {3, 4}) {
        CircuitModel m = circuit_model(k, 5);
        InvariantMcResult res = full_invariant_mc(m);
        for (const auto& chk : res.checks)
            c.require_zero(chk.residual, chk.name + ", k = " + std::to_string(k));
    }
}

void criterion_10_triangles() {
    Criterion c(10, "triangle at N=5 and symmetric triangle at N=4");
    TriangleModel tri = triangle_model(5);
    c.require(check_d_squared(tri.cdgl).ok, "d^2 = 0 on the based triangle at N=5");
    auto d_v1 = twisted_differential(tri.cdgl, tri.v(1));
    c.require_zero(d_v1(tri.loop()), "x1*x2*x3 is a d_{v1}-cycle at N=5");

    const int n = 4;
    CircuitModel circ = circuit_model(3, n);
    InvariantMcResult inv = full_invariant_mc(circ);
    TriangleModel sym = symmetric_triangle(inv.omega, inv.beta, n);
    const Cdgl& S = sym.cdgl;
    Element dep = S.d.image(sym.e);
    c.require(check_d_squared(S).ok, "d^2 = 0 on the symmetric triangle");
    c.require_zero(sym.sigma(dep) - dep, "sigma(de') = de'");
    c.require_zero(sym.tau(dep) + dep, "tau(de') = -de'");

    Element beta = inv.beta;
    Element cloop = circ.loop();
    Element sb = circ.sigma(beta);
    Rational lambda = loop_coefficient(circ, bch_multi({-beta, sb, -circ.x(1)}));
    c.require_zero(sb - bch_multi({beta, lambda * cloop, circ.x(1)}),
                   "sigma(beta) = beta * lambda(loop) * x1, lambda = " + lambda.str());
    Element tb = circ.tau(beta);
    Rational mu = loop_coefficient(circ, bch(-beta, tb));
    c.require_zero(tb - bch(beta, mu * cloop),
                   "tau(beta) = beta * mu(loop), mu = " + mu.str());

    TriangleModel based = triangle_model(n);
    Element phi_e = exp_ad(-*sym.beta, sym.e_elem());
    c.require_zero(S.d(phi_e) - (embed(based.loop(), S.ctx) - bracket(sym.v(1), phi_e)),
                   "chain map e -> e^{ad_{-beta}}(e')");
}

void criterion_11_determinism() {
    Criterion c(11, "determinism and bit-exact serialization");
    VerifyOptions opt;
    opt.seed = 7;
    opt.truncation = 3;
    opt.trials = 6;
    auto a = run_verify(opt);
    auto b = run_verify(opt);
    bool identical = a.size() == b.size();
    for (size_t i = 0; identical && i < a.size(); ++i)
        identical = a[i].name == b[i].name && a[i].pass == b[i].pass &&
                    a[i].residual == b[i].residual && a[i].anchor == b[i].anchor;
    c.require(identical, "repeated runs with one seed are identical");
    c.require(all_pass(a), "verification suites all pass");

    CircuitModel m = circuit_model(4, 4);
    Sampler rng(1011);
    std::vector<int> all;
    for (int g = 0; g < m.cdgl.ctx->size(); ++g) all.push_back(g);
    for (int t = 0; t < 30; ++t) {
        Element e = rng.lie_element(m.cdgl.ctx, all, 3, 4);
        Json j = element_to_json(e);
        Element back = element_from_json(j);
        c.require(back == e, "round-trip equality");
        c.require(element_to_json(back).dump() == j.dump(), "byte-identical re-serialization");
    }
}

}  // namespace

int main() {
    criterion_1_bch_axioms();
    criterion_2_linearization();
    criterion_3_gauge_laws();
    criterion_4_interval();
    criterion_5_conjugated_differentials();
    criterion_6_circuits();
    criterion_7_trivial_kernels();
    criterion_8_loop_and_invariance();
    criterion_9_invariant_element();
    criterion_10_triangles();
    criterion_11_determinism();

    if (g_failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return 1;
}
