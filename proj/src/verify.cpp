#include "liemc/verify.hpp"

#include <algorithm>

#include "liemc/sampling.hpp"
#include "liemc/serialize.hpp"
#include "liemc/solver.hpp"

namespace liemc {

namespace {

std::string clip(std::string s) {
    if (s.size() > 160) {
        s.resize(157);
        s += "...";
    }
    return s;
}

class Recorder {
public:
    explicit Recorder(std::vector<CheckResult>& out) : out_(out) {}

    // Exact-zero check; failures keep the first offending residual.
    void residual(const std::string& name, const std::string& anchor, const Element& r) {
        auto& entry = slot(name, anchor);
        if (!r.is_zero() && entry.pass) {
            entry.pass = false;
            entry.residual = clip(r.str());
        }
    }

    void flag(const std::string& name, const std::string& anchor, bool ok,
              const std::string& detail = "") {
        auto& entry = slot(name, anchor);
        if (!ok && entry.pass) {
            entry.pass = false;
            entry.residual = detail.empty() ? "failed" : clip(detail);
        }
    }

private:
    CheckResult& slot(const std::string& name, const std::string& anchor) {
        for (auto& r : out_)
            if (r.name == name) return r;
        out_.push_back({name, anchor, true, "0"});
        return out_.back();
    }

    std::vector<CheckResult>& out_;
};

void bch_group_laws(Recorder& rec, Sampler& rng, int truncation, int trials) {
    auto ctx = AlgebraContext::make({{"p", 0}, {"q", 0}, {"r", 0}}, truncation);
    for (int t = 0; t < trials; ++t) {
        Element x = rng.degree_zero_lie_element(ctx);
        Element y = rng.degree_zero_lie_element(ctx);
        Element z = rng.degree_zero_lie_element(ctx);
        Rational r = rng.small_rational();
        Rational s = rng.small_rational();

        rec.residual("bch.associativity", "x*(y*z) = (x*y)*z", bch(x, bch(y, z)) - bch(bch(x, y), z));
        rec.residual("bch.scalar_line", "(r x)*(s x) = (r+s) x",
                     bch(r * x, s * x) - (r + s) * x);
        rec.residual("bch.inverse", "x*(-x) = 0", bch(x, -x));
        rec.residual("bch.antihomomorphism", "-(y*x) = (-x)*(-y)", -bch(y, x) - bch(-x, -y));
        rec.residual("expad.homomorphism", "e^{ad_{x*y}} = e^{ad_x} e^{ad_y}",
                     exp_ad(bch(x, y), z) - exp_ad(x, exp_ad(y, z)));
        rec.residual("expad.conjugation", "e^{ad_x}(y) = x*y*(-x)",
                     exp_ad(x, y) - bch_multi({x, y, -x}));
        rec.residual("expad.multiplicative", "e^{ad_x}(y) * e^{ad_x}(z) = e^{ad_x}(y*z)",
                     bch(exp_ad(x, y), exp_ad(x, z)) - exp_ad(x, bch(y, z)));
        rec.residual("bch.shuffle_left", "r(x*y)*x = x*r(y*x)",
                     bch(r * bch(x, y), x) - bch(x, r * bch(y, x)));
        rec.residual("bch.shuffle_right", "r(y*x)*(-x) = (-x)*r(x*y)",
                     bch(r * bch(y, x), -x) - bch(-x, r * bch(x, y)));

        rec.flag("lie.primitivity_closure",
                 "bch, brackets and ad-series of Lie elements stay Lie",
                 is_primitive(bch(x, y)) && is_primitive(bracket(x, y)) &&
                     is_primitive(exp_ad(x, z)) &&
                     is_primitive(series_apply(OperatorSeries::todd(truncation), x, y)));
    }
}

void bch_linearization(Recorder& rec, Sampler& rng, int truncation, int trials) {
    auto ctx = AlgebraContext::make({{"p", 0}, {"q", 0}, {"r", 0}}, truncation);
    auto gens = generators_of_degree(ctx, 0);
    for (int t = 0; t < trials; ++t) {
        for (int n = 1; n <= 2 && n + 1 <= truncation; ++n) {
            int family = rng.pick(2, 3);
            Element common = rng.lie_element(ctx, gens, n, 2);
            Element linear_sum = Element::zero(ctx);
            std::vector<Element> scaled;
            for (int i = 0; i < family; ++i) {
                Element tail = (n + 1 <= truncation)
                                   ? rng.lie_element(ctx, gens, truncation, 2, n + 1)
                                   : Element::zero(ctx);
                Element wi = common + tail;
                Rational lambda = rng.small_rational();
                scaled.push_back(lambda * wi);
                linear_sum += lambda * wi;
            }
            Element prod = bch_multi(scaled);
            rec.residual("bch.linearization",
                         "BCH of a family agreeing mod length>n is their sum mod length>n+1",
                         prod.truncate_length(n + 1) - linear_sum.truncate_length(n + 1));
        }
    }
}

void gauge_laws(Recorder& rec, Sampler& rng, int truncation, int trials) {
    CircuitModel m = circuit_model(3, truncation);
    const Cdgl& L = m.cdgl;
    auto gens0 = generators_of_degree(L.ctx, 0);
    for (int t = 0; t < trials; ++t) {
        Element x = rng.lie_element(L.ctx, gens0, 3, 3);
        Element y = rng.lie_element(L.ctx, gens0, 3, 3);
        Element a = gauge(L, rng.lie_element(L.ctx, gens0, 2, 2), m.v(rng.pick(1, 3)));

        rec.residual("gauge.unit", "0 G a = a", gauge(L, Element::zero(L.ctx), a) - a);
        rec.residual("gauge.composition", "x G (y G a) = (x*y) G a",
                     gauge(L, x, gauge(L, y, a)) - gauge(L, bch(x, y), a));
        rec.residual("gauge.inverse", "(-x) G (x G a) = a", gauge(L, -x, gauge(L, x, a)) - a);
        rec.residual("gauge.mc_closure", "x G a is Maurer-Cartan",
                     is_mc(L, gauge(L, x, a)).residual);

        Derivation d1 = L.d.component(1);
        Derivation d2 = L.d.component(2);
        Element ga = gauge(L, x, a);
        Element x1 = x.homogeneous_part(1), x2 = x.homogeneous_part(2);
        Element a1 = a.homogeneous_part(1), a2 = a.homogeneous_part(2);
        rec.residual("gauge.linear_part", "(x G a)_1 = a_1 - (dx)_1",
                     ga.homogeneous_part(1) - (a1 - L.d(x).homogeneous_part(1)));
        Element quad = a2 + bracket(x1, a1) - Rational(1, 2) * bracket(x1, d1(x1)) - d2(x1) - d1(x2);
        rec.residual("gauge.quadratic_part",
                     "(x G a)_2 = a_2 + [x_1,a_1] - [x_1,d_1x_1]/2 - d_2x_1 - d_1x_2",
                     ga.homogeneous_part(2) - quad);
    }
}

void interval_suite(Recorder& rec, int truncation) {
    LsInterval iv = ls_interval(truncation);
    const Cdgl& L = iv.cdgl;
    Element a = iv.a_elem(), b = iv.b_elem(), x = iv.x_elem();
    const int n = truncation;

    rec.flag("interval.d_squared", "d^2 = 0 on the interval", check_d_squared(L).ok);
    rec.flag("interval.path", "x flows b to a: gauge(x, b) = a", path_check(L, x, a, b));

    Element dx = L.d.image(iv.x);
    Element dx_b = bracket(x, b) + series_apply(OperatorSeries::todd(n), x, b - a);
    Element dx_a = bracket(x, a) + series_apply(OperatorSeries::todd_minus(n), x, b - a);
    Element dx_split = series_apply(OperatorSeries::todd_flip(n), x, a) +
                       series_apply(OperatorSeries::todd_minus(n), x, b);
    rec.residual("interval.closed_forms", "the a-based and b-based forms of dx agree",
                 dx_b - dx_a);
    rec.residual("interval.closed_forms_split", "dx splits into its a- and b-series", dx_b - dx_split);
    rec.residual("interval.dx_definition", "the model stores the b-based form", dx - dx_b);
    rec.residual("interval.dx_linear", "(dx)_1 = b - a", dx.homogeneous_part(1) - (b - a));
    rec.residual("interval.dx_quadratic", "(dx)_2 = [x, a+b]/2",
                 dx.homogeneous_part(2) - Rational(1, 2) * bracket(x, a + b));

    // the swap a <-> b, x -> -x commutes with d
    GroupMorphism swap(L.ctx, {{iv.b, 1}, {iv.a, 1}, {iv.x, -1}});
    for (int g = 0; g < L.ctx->size(); ++g)
        rec.residual("interval.symmetry", "d commutes with the swap (a<->b, x->-x)",
                     swap(L.d.image(g)) - L.d(swap(Element::generator(L.ctx, g))));
}

void conjugated_differentials(Recorder& rec, Sampler& rng, int truncation, int trials) {
    LsInterval iv = ls_interval(truncation);
    const Cdgl& L = iv.cdgl;
    Element x = iv.x_elem();
    auto d_a = twisted_differential(L, iv.a_elem());
    auto d_b = twisted_differential(L, iv.b_elem());

    std::vector<Element> samples;
    for (int g = 0; g < L.ctx->size(); ++g) samples.push_back(Element::generator(L.ctx, g));
    std::vector<int> all{0, 1, 2};
    for (int t = 0; t < trials; ++t) samples.push_back(rng.lie_element(L.ctx, all, 3, 2));

    for (const auto& w : samples)
        rec.residual("interval.conjugated_differentials", "d_a e^{ad_x} = e^{ad_x} d_b",
                     d_a(exp_ad(x, w)) - exp_ad(x, d_b(w)));
}

void circuit_structure(Recorder& rec, const CircuitModel& m) {
    const Cdgl& L = m.cdgl;
    const int k = m.k;
    std::string kk = std::to_string(k);

    rec.flag("circuit.d_squared.k" + kk, "d^2 = 0 on the circuit", check_d_squared(L).ok);
    for (int g = 0; g < L.ctx->size(); ++g) {
        Element gen = Element::generator(L.ctx, g);
        rec.residual("circuit.sigma_equivariance.k" + kk, "sigma commutes with d",
                     m.sigma(L.d(gen)) - L.d(m.sigma(gen)));
        rec.residual("circuit.tau_equivariance.k" + kk, "tau commutes with d",
                     m.tau(L.d(gen)) - L.d(m.tau(gen)));
    }
    rec.flag("circuit.dihedral.k" + kk, "sigma^k = tau^2 = id and sigma tau = tau sigma^{k-1}",
             m.sigma.pow(k) == GroupMorphism::identity(L.ctx) &&
                 m.tau.after(m.tau) == GroupMorphism::identity(L.ctx) &&
                 m.sigma.after(m.tau) == m.tau.after(m.sigma.pow(k - 1)));

    Derivation d1 = L.d.component(1);
    rec.residual("circuit.d1_edge.k" + kk, "d_1 x_i = v_{i+1} - v_i",
                 d1(m.x(1)) - (m.v(2) - m.v(1)));
    Element sum = Element::zero(L.ctx);
    for (int i = 1; i <= k; ++i) sum += d1(m.x(i));
    rec.residual("circuit.d1_cycle_sum.k" + kk, "sum_i d_1 x_i = 0", sum);
    for (int i = 1; i <= k; ++i)
        rec.residual("circuit.d1_vertices.k" + kk, "d_1 v_i = 0", d1(m.v(i)));

    Element mc_bad = m.v(1) + m.v(2);
    rec.flag("circuit.mc_vertices.k" + kk, "each v_i is Maurer-Cartan, v_1 + v_2 is not",
             is_mc(L, m.v(1)).ok && is_mc(L, m.v(k)).ok && !is_mc(L, mc_bad).ok);
}

void homology_suite(Recorder& rec, Sampler& rng, const CircuitModel& m, int trials) {
    const Cdgl& L = m.cdgl;
    const int k = m.k;
    const int n = L.ctx->truncation();
    std::string kk = std::to_string(k);

    for (int len = 2; len <= std::min(4, n); ++len)
        rec.flag("homology.trivial_kernel.k" + kk + ".len" + std::to_string(len),
                 "no nonzero degree-0 Lie d_1-cycles of length >= 2",
                 d1_cycles(L, len, 0).empty());

    auto cyc1 = d1_cycles(L, 1, 0);
    Element loop_lin = Element::zero(L.ctx);
    for (int i = 1; i <= k; ++i) loop_lin += m.x(i);
    bool ok1 = cyc1.size() == 1;
    if (ok1) {
        Rational c = cyc1[0].coefficient(Word::single(m.x_index(1)));
        ok1 = !c.is_zero() && cyc1[0] == c * loop_lin;
    }
    rec.flag("homology.loop_kernel.k" + kk, "length-1 degree-0 cycles are the loop line", ok1);

    auto cycv = d1_cycles(L, 1, -1);
    rec.flag("homology.vertex_kernel.k" + kk, "length-1 degree-(-1) cycles are spanned by the v_i",
             int(cycv.size()) == k);

    // solver certificates
    Derivation d1 = L.d.component(1);
    auto r1 = solve_d1(L, m.v(2) - m.v(1), 1, 0);
    rec.flag("solver.edge_solution.k" + kk, "d_1 T = v_2 - v_1 solves to x_1 exactly",
             r1.exact() && *r1.solution == m.x(1));
    auto r0 = solve_d1(L, Element::zero(L.ctx), 1, 0);
    rec.flag("solver.zero_rhs.k" + kk, "zero right-hand side solves to zero",
             r0.exact() && r0.solution->is_zero());
    auto rbad = solve_d1(L, m.v(1), 1, 0);
    rec.flag("solver.obstruction.k" + kk, "v_1 is not a d_1-boundary",
             !rbad.exact() && !rbad.obstruction.is_zero());

    auto gens0 = generators_of_degree(L.ctx, 0);
    for (int t = 0; t < trials; ++t) {
        int len = rng.pick(1, std::min(4, n));
        Element u = rng.lie_element(L.ctx, gens0, len, 2, len).homogeneous_part(len);
        if (u.is_zero()) continue;
        Element rhs = d1(u);
        auto sol = solve_d1(L, rhs, len, 0);
        rec.flag("solver.exactness.k" + kk, "solve_d1 output reproduces its right-hand side",
                 sol.exact() && d1(*sol.solution) == rhs);
        rec.flag("solver.primitivity.k" + kk, "solve_d1 output is a Lie element",
                 sol.exact() && is_primitive(*sol.solution));

        // sigma-invariant image forces sigma-invariant output
        Element s = Element::zero(L.ctx);
        Element rot = u;
        for (int i = 0; i < k; ++i) {
            s += rot;
            rot = m.sigma(rot);
        }
        Element rhs_inv = d1(s);
        auto sol_inv = solve_d1(L, rhs_inv, len, 0);
        rec.flag("solver.sigma_invariance.k" + kk,
                 "sigma-invariant d_1-image gives a sigma-invariant solution",
                 sol_inv.exact() && m.sigma(*sol_inv.solution) == *sol_inv.solution);
    }
}

void loop_suite(Recorder& rec, const CircuitModel& m) {
    const Cdgl& L = m.cdgl;
    Element loop = m.loop();
    Element v1 = m.v(1);
    std::string kk = std::to_string(m.k);

    rec.residual("loop.stabilizer.k" + kk, "the loop class fixes v_1", gauge(L, loop, v1) - v1);
    for (const Rational& lambda :
         {Rational(0), Rational(1), Rational(-2), Rational(3, 2)}) {
        Element w = lambda * loop;
        bool ok = gauge(L, w, v1) == v1 && loop_coefficient(m, w) == lambda;
        rec.flag("loop.coefficient_roundtrip.k" + kk,
                 "loop_coefficient recovers lambda from lambda * loop", ok);
    }
    Element twice_back = bch(-loop, -loop);
    rec.flag("loop.bch_scaling.k" + kk, "(-loop)*(-loop) carries coefficient -2",
             twice_back == Rational(-2) * loop && loop_coefficient(m, twice_back) == Rational(-2));
}

void pipeline_suite(Recorder& rec, int k, int truncation) {
    CircuitModel m = circuit_model(k, truncation);
    InvariantMcResult res = full_invariant_mc(m);
    std::string kk = std::to_string(k);
    for (const auto& c : res.checks)
        rec.residual("pipeline." + c.name + ".k" + kk,
                     "invariant Maurer-Cartan pipeline certificate", c.residual);
}

void triangle_suite(Recorder& rec, int truncation) {
    TriangleModel tri = triangle_model(truncation);
    const Cdgl& L = tri.cdgl;
    rec.flag("triangle.d_squared", "d^2 = 0 on the triangle model", check_d_squared(L).ok);

    Element loop = tri.loop();
    auto d_v1 = twisted_differential(L, tri.v(1));
    rec.residual("triangle.loop_cycle", "x1*x2*x3 is a d_{v1}-cycle", d_v1(loop));
    Element de = L.d.image(tri.e);
    rec.residual("triangle.de_linear", "(de)_1 = x1 + x2 + x3",
                 de.homogeneous_part(1) - (tri.x(1) + tri.x(2) + tri.x(3)));
    rec.residual("triangle.de_based", "d_{v1}(e) = x1*x2*x3", d_v1(tri.e_elem()) - loop);

    // symmetric model from the invariant pipeline
    CircuitModel circ = circuit_model(3, truncation);
    InvariantMcResult inv = full_invariant_mc(circ);
    TriangleModel sym = symmetric_triangle(inv.omega, inv.beta, truncation);
    const Cdgl& S = sym.cdgl;
    rec.flag("symmetric.d_squared", "d^2 = 0 on the symmetric triangle", check_d_squared(S).ok);
    Element dep = S.d.image(sym.e);
    rec.residual("symmetric.sigma_de", "sigma(de') = de'", sym.sigma(dep) - dep);
    rec.residual("symmetric.tau_de", "tau(de') = -de'", sym.tau(dep) + dep);

    auto d_omega = twisted_differential(S, *sym.omega);
    Element conj_loop = bch_multi({*sym.beta, sym.x(1), sym.x(2), sym.x(3), -*sym.beta});
    rec.residual("symmetric.twisted_de", "d_Omega(e') = beta*x1*x2*x3*(-beta)",
                 d_omega(sym.e_elem()) - conj_loop);

    // loop relations for beta, extracted in the circuit model
    Element beta = inv.beta;
    Element cloop = circ.loop();
    Element sb = circ.sigma(beta);
    Rational lambda = loop_coefficient(circ, bch_multi({-beta, sb, -circ.x(1)}));
    rec.residual("symmetric.sigma_beta", "sigma(beta) = beta * lambda(loop) * x1",
                 sb - bch_multi({beta, lambda * cloop, circ.x(1)}));
    Element tb = circ.tau(beta);
    Rational mu = loop_coefficient(circ, bch(-beta, tb));
    rec.residual("symmetric.tau_beta", "tau(beta) = beta * mu(loop)",
                 tb - bch(beta, mu * cloop));

    // the based model maps isomorphically onto the symmetric one
    Element phi_e = exp_ad(-*sym.beta, sym.e_elem());
    Element expected = embed(loop, S.ctx) - bracket(sym.v(1), phi_e);
    rec.residual("symmetric.chain_map", "e -> e^{ad_{-beta}}(e') intertwines the differentials",
                 S.d(phi_e) - expected);
}

void negative_control(Recorder& rec, int truncation) {
    CircuitModel m = circuit_model(3, truncation);
    const Cdgl& L = m.cdgl;
    std::vector<Element> images = L.d.images();
    // drop one term of dx1
    Element dx1 = images[size_t(m.x_index(1))];
    const auto& last = dx1.terms().back();
    images[size_t(m.x_index(1))] =
        dx1 - Element::from_terms(L.ctx, {{last.first, last.second}});
    Cdgl corrupted{L.ctx, Derivation(L.ctx, std::move(images))};
    auto report = check_d_squared(corrupted);
    bool detected = !report.ok;
    std::string offender;
    for (const auto& e : report.entries)
        if (!e.residual.is_zero() && offender.empty())
            offender = L.ctx->generator(e.generator).name;
    rec.flag("control.corrupted_differential",
             "a corrupted differential is caught by the d^2 check, naming a generator",
             detected && !offender.empty());
}

void serialization_suite(Recorder& rec, Sampler& rng, int truncation, int trials) {
    CircuitModel m = circuit_model(3, truncation);
    std::vector<int> all;
    for (int g = 0; g < m.cdgl.ctx->size(); ++g) all.push_back(g);
    for (int t = 0; t < trials; ++t) {
        Element e = rng.lie_element(m.cdgl.ctx, all, 3, 4);
        Json j = element_to_json(e);
        Element back = element_from_json(j);
        rec.flag("serialize.roundtrip", "element JSON parses back to an equal element", back == e);
        rec.flag("serialize.stable", "re-serialization is byte-identical",
                 element_to_json(back).dump() == j.dump());
    }
}

}  // namespace

std::vector<CheckResult> run_verify(const VerifyOptions& options) {
    std::vector<CheckResult> results;
    Recorder rec(results);
    Sampler rng(options.seed);
    const int n = options.truncation;
    const int trials = options.trials;

    bch_group_laws(rec, rng, n, trials);
    bch_linearization(rec, rng, n, trials);
    gauge_laws(rec, rng, n, std::max(4, trials / 2));
    interval_suite(rec, n);
    conjugated_differentials(rec, rng, n, trials);
    for (int k : {3, 4}) {
        CircuitModel m = circuit_model(k, std::min(n, 4));
        circuit_structure(rec, m);
        homology_suite(rec, rng, m, std::max(4, trials / 2));
        loop_suite(rec, m);
    }
    pipeline_suite(rec, 3, std::min(n, 4));
    triangle_suite(rec, std::min(n, 4));
    negative_control(rec, std::min(n, 3));
    serialization_suite(rec, rng, n, trials);
    return results;
}

bool all_pass(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace liemc
