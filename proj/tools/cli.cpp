#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <iostream>
#include <sstream>

#include "liemc/serialize.hpp"
#include "liemc/verify.hpp"

namespace {

using namespace liemc;

constexpr int kExitOk = 0;
constexpr int kExitMathFail = 1;
constexpr int kExitUsage = 2;
constexpr int kLargeTruncationGate = 6;

struct Options {
    int k = 3;
    int truncation = 4;
    std::string format = "text";
    std::string output;
    uint64_t seed = 12345;
    bool allow_large = false;
};

int check_truncation(const Options& opt) {
    if (opt.truncation < 1 || opt.truncation > AlgebraContext::kMaxTruncation) {
        std::cerr << "error: --truncation must be in 1.." << AlgebraContext::kMaxTruncation
                  << "\n";
        return kExitUsage;
    }
    if (opt.truncation > kLargeTruncationGate && !opt.allow_large) {
        std::cerr << "error: basis sizes grow exponentially; pass --allow-large for "
                     "--truncation above "
                  << kLargeTruncationGate << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

int emit(const Options& opt, const std::string& text, const Json& json) {
    std::string payload = opt.format == "json" ? json.dump(2) + "\n" : text;
    if (opt.output.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(opt.output, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open output file '" << opt.output << "'\n";
            return kExitUsage;
        }
        out << payload;
    }
    return kExitOk;
}

Json config_json(const Options& opt, bool with_k, bool with_seed) {
    Json j{{"truncation", opt.truncation}, {"format", opt.format}};
    if (with_k) j["k"] = opt.k;
    if (with_seed) j["seed"] = opt.seed;
    return j;
}

Json results_json(const std::vector<CheckResult>& results) {
    Json arr = Json::array();
    for (const auto& r : results)
        arr.push_back({{"name", r.name},
                       {"anchor", r.anchor},
                       {"status", r.pass ? "pass" : "fail"},
                       {"residual", r.residual}});
    return arr;
}

void results_text(std::ostringstream& out, const std::vector<CheckResult>& results) {
    for (const auto& r : results) {
        out << (r.pass ? "[pass] " : "[FAIL] ") << r.name << " : " << r.anchor;
        if (!r.pass) out << "  residual = " << r.residual;
        out << "\n";
    }
}

void named_residuals(std::vector<CheckResult>& out, const std::vector<NamedResidual>& checks,
                     const std::string& anchor) {
    for (const auto& c : checks)
        out.push_back({c.name, anchor, c.ok(), c.residual.is_zero() ? "0" : c.residual.str()});
}

void model_text(std::ostringstream& out, const Cdgl& L) {
    out << "generators:\n";
    for (const auto& g : L.ctx->generators())
        out << "  " << g.name << "  degree " << g.degree << "\n";
    out << "truncation: " << L.ctx->truncation() << "\n";
    out << "differential:\n";
    for (int i = 0; i < L.ctx->size(); ++i)
        out << "  d(" << L.ctx->generator(i).name << ") = " << L.d.image(i).str() << "\n";
}

void morphism_text(std::ostringstream& out, const char* name, const GroupMorphism& m) {
    out << name << ":\n";
    const auto& ctx = m.context();
    for (int i = 0; i < ctx->size(); ++i) {
        auto im = m.image(i);
        out << "  " << name << "(" << ctx->generator(i).name << ") = "
            << (im.sign < 0 ? "-" : "") << ctx->generator(im.generator).name << "\n";
    }
}

int cmd_circuit(const Options& opt) {
    if (int rc = check_truncation(opt)) return rc;
    if (opt.k < 3) {
        std::cerr << "error: --k must be >= 3\n";
        return kExitUsage;
    }
    CircuitModel m = circuit_model(opt.k, opt.truncation);
    auto d2 = check_d_squared(m.cdgl);

    std::vector<CheckResult> results;
    results.push_back({"circuit.d_squared", "d^2 = 0 on every generator", d2.ok, d2.ok ? "0" : "nonzero"});

    std::ostringstream text;
    model_text(text, m.cdgl);
    Derivation d1 = m.cdgl.d.component(1);
    text << "d1 on edges:\n";
    for (int i = 1; i <= opt.k; ++i)
        text << "  d1(x" << i << ") = " << d1(m.x(i)).str() << "\n";
    morphism_text(text, "sigma", m.sigma);
    morphism_text(text, "tau", m.tau);
    results_text(text, results);

    Json json{{"command", "circuit"},
              {"config", config_json(opt, true, false)},
              {"model", circuit_to_json(m)},
              {"results", results_json(results)}};
    if (int rc = emit(opt, text.str(), json)) return rc;
    return d2.ok ? kExitOk : kExitMathFail;
}

int cmd_invariant_mc(const Options& opt) {
    if (int rc = check_truncation(opt)) return rc;
    if (opt.k < 3) {
        std::cerr << "error: --k must be >= 3\n";
        return kExitUsage;
    }
    CircuitModel m = circuit_model(opt.k, opt.truncation);
    std::optional<InvariantMcResult> res;
    try {
        res = full_invariant_mc(m);
    } catch (const std::exception& e) {
        std::cerr << "error: invariant pipeline failed: " << e.what() << "\n";
        return kExitMathFail;
    }

    std::vector<CheckResult> results;
    named_residuals(results, res->checks, "invariant Maurer-Cartan certificate");

    std::ostringstream text;
    text << "P     = " << res->P.str() << "\n";
    text << "w     = " << res->w.str() << "\n";
    text << "alpha = " << res->alpha.str() << "\n";
    text << "omega = " << res->omega.str() << "\n";
    results_text(text, results);

    Json json{{"command", "invariant-mc"},
              {"config", config_json(opt, true, false)},
              {"elements",
               Json{{"P", element_to_json(res->P)},
                    {"w", element_to_json(res->w)},
                    {"alpha", element_to_json(res->alpha)},
                    {"omega", element_to_json(res->omega)}}},
              {"results", results_json(results)},
              {"diagnostics", diagnostics_to_json(res->stages)}};
    if (int rc = emit(opt, text.str(), json)) return rc;
    return res->all_ok() ? kExitOk : kExitMathFail;
}

int cmd_triangle(const Options& opt) {
    if (int rc = check_truncation(opt)) return rc;
    TriangleModel tri = triangle_model(opt.truncation);
    const Cdgl& L = tri.cdgl;

    auto d2 = check_d_squared(L);
    auto d_v1 = twisted_differential(L, tri.v(1));
    Element loop_cycle = d_v1(tri.loop());
    Element de1 = L.d.image(tri.e).homogeneous_part(1) - (tri.x(1) + tri.x(2) + tri.x(3));

    std::vector<CheckResult> results;
    results.push_back({"triangle.d_squared", "d^2 = 0 including the top generator", d2.ok,
                       d2.ok ? "0" : "nonzero"});
    results.push_back({"triangle.loop_cycle", "x1*x2*x3 is a d_{v1}-cycle", loop_cycle.is_zero(),
                       loop_cycle.is_zero() ? "0" : loop_cycle.str()});
    results.push_back({"triangle.de_linear", "(de)_1 = x1 + x2 + x3", de1.is_zero(),
                       de1.is_zero() ? "0" : de1.str()});

    std::ostringstream text;
    model_text(text, L);
    results_text(text, results);

    Json json{{"command", "triangle"},
              {"config", config_json(opt, false, false)},
              {"model", triangle_to_json(tri)},
              {"results", results_json(results)}};
    if (int rc = emit(opt, text.str(), json)) return rc;
    bool ok = d2.ok && loop_cycle.is_zero() && de1.is_zero();
    return ok ? kExitOk : kExitMathFail;
}

int cmd_symmetric_triangle(const Options& opt) {
    if (int rc = check_truncation(opt)) return rc;
    CircuitModel circ = circuit_model(3, opt.truncation);
    std::optional<InvariantMcResult> inv;
    try {
        inv = full_invariant_mc(circ);
    } catch (const std::exception& e) {
        std::cerr << "error: invariant pipeline failed: " << e.what() << "\n";
        return kExitMathFail;
    }
    TriangleModel sym = symmetric_triangle(inv->omega, inv->beta, opt.truncation);
    const Cdgl& S = sym.cdgl;

    Element dep = S.d.image(sym.e);
    auto d2 = check_d_squared(S);
    Element sigma_de = sym.sigma(dep) - dep;
    Element tau_de = sym.tau(dep) + dep;

    Element beta = inv->beta;
    Element cloop = circ.loop();
    Element sb = circ.sigma(beta);
    Rational lambda = loop_coefficient(circ, bch_multi({-beta, sb, -circ.x(1)}));
    Element lambda_rel = sb - bch_multi({beta, lambda * cloop, circ.x(1)});
    Element tb = circ.tau(beta);
    Rational mu = loop_coefficient(circ, bch(-beta, tb));
    Element mu_rel = tb - bch(beta, mu * cloop);

    Element phi_e = exp_ad(-*sym.beta, sym.e_elem());
    Element chain = S.d(phi_e) -
                    (bch_multi({sym.x(1), sym.x(2), sym.x(3)}) - bracket(sym.v(1), phi_e));

    std::vector<CheckResult> results;
    auto push = [&](const std::string& name, const std::string& anchor, const Element& r) {
        results.push_back({name, anchor, r.is_zero(), r.is_zero() ? "0" : r.str()});
    };
    results.push_back({"symmetric.d_squared", "d^2 = 0 including e'", d2.ok, d2.ok ? "0" : "nonzero"});
    push("symmetric.sigma_de", "sigma(de') = de'", sigma_de);
    push("symmetric.tau_de", "tau(de') = -de'", tau_de);
    push("symmetric.sigma_beta", "sigma(beta) = beta * lambda(loop) * x1", lambda_rel);
    push("symmetric.tau_beta", "tau(beta) = beta * mu(loop)", mu_rel);
    push("symmetric.chain_map", "e -> e^{ad_{-beta}}(e') intertwines the differentials", chain);

    std::ostringstream text;
    model_text(text, S);
    text << "lambda = " << lambda.str() << "\n";
    text << "mu     = " << mu.str() << "\n";
    results_text(text, results);

    Json json{{"command", "symmetric-triangle"},
              {"config", config_json(opt, false, false)},
              {"model", triangle_to_json(sym)},
              {"lambda", lambda.str()},
              {"mu", mu.str()},
              {"results", results_json(results)},
              {"diagnostics", diagnostics_to_json(inv->stages)}};
    if (int rc = emit(opt, text.str(), json)) return rc;
    bool ok = d2.ok;
    for (const auto& r : results) ok = ok && r.pass;
    return ok ? kExitOk : kExitMathFail;
}

int cmd_verify(const Options& opt) {
    if (int rc = check_truncation(opt)) return rc;
    VerifyOptions vopt;
    vopt.seed = opt.seed;
    vopt.truncation = opt.truncation;
    auto results = run_verify(vopt);

    std::ostringstream text;
    results_text(text, results);
    text << (all_pass(results) ? "all checks passed\n" : "some checks FAILED\n");

    Json json{{"command", "verify"},
              {"config", config_json(opt, false, true)},
              {"results", results_json(results)}};
    if (int rc = emit(opt, text.str(), json)) return rc;
    return all_pass(results) ? kExitOk : kExitMathFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Maurer-Cartan calculus on truncated free graded Lie algebras"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* cmd, bool with_k, bool with_seed) {
        cmd->add_option("--truncation", opt.truncation, "bracket-length truncation order")
            ->capture_default_str();
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
        cmd->add_option("--output", opt.output, "write the report to a file instead of stdout");
        cmd->add_flag("--allow-large", opt.allow_large,
                      "permit truncation orders above " + std::to_string(kLargeTruncationGate));
        if (with_k) cmd->add_option("--k", opt.k, "number of circuit vertices")->capture_default_str();
        if (with_seed)
            cmd->add_option("--seed", opt.seed, "seed for the randomized suites")
                ->capture_default_str();
    };

    auto* c_circuit = app.add_subcommand("circuit", "build the circuit model and its dihedral action");
    add_common(c_circuit, true, false);
    auto* c_inv = app.add_subcommand("invariant-mc",
                                     "construct the dihedrally invariant Maurer-Cartan element");
    add_common(c_inv, true, false);
    auto* c_tri = app.add_subcommand("triangle", "build the based triangle model");
    add_common(c_tri, false, false);
    auto* c_sym = app.add_subcommand("symmetric-triangle",
                                     "build the symmetric triangle model from the invariant element");
    add_common(c_sym, false, false);
    auto* c_verify = app.add_subcommand("verify", "run every identity suite and report residuals");
    add_common(c_verify, false, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (c_circuit->parsed()) return cmd_circuit(opt);
        if (c_inv->parsed()) return cmd_invariant_mc(opt);
        if (c_tri->parsed()) return cmd_triangle(opt);
        if (c_sym->parsed()) return cmd_symmetric_triangle(opt);
        if (c_verify->parsed()) return cmd_verify(opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathFail;
    }
    return kExitUsage;
}
