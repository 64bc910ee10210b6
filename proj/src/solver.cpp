#include "liemc/solver.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace liemc {

std::vector<Word> word_basis(const ContextPtr& ctx, int length, int degree) {
    if (length < 0 || length > ctx->truncation())
        throw std::invalid_argument("word_basis: length outside truncation range");
    std::vector<Word> basis;
    std::vector<int> stack;
    // depth-first in symbol order yields canonical (lexicographic) order
    auto rec = [&](auto&& self, int cur_degree) -> void {
        if (int(stack.size()) == length) {
            if (cur_degree == degree) basis.push_back(Word::from_symbols(stack));
            return;
        }
        for (int s = 0; s < ctx->size(); ++s) {
            stack.push_back(s);
            self(self, cur_degree + ctx->degree(s));
            stack.pop_back();
        }
    };
    rec(rec, 0);
    return basis;
}

namespace {

std::unordered_map<uint64_t, int> index_map(const std::vector<Word>& basis) {
    std::unordered_map<uint64_t, int> map;
    map.reserve(basis.size());
    for (size_t i = 0; i < basis.size(); ++i) map.emplace(basis[i].raw(), int(i));
    return map;
}

Element element_from_coords(const ContextPtr& ctx, const std::vector<Word>& basis,
                            const std::vector<Rational>& coords) {
    std::vector<Element::Term> terms;
    for (size_t i = 0; i < basis.size(); ++i)
        if (!coords[i].is_zero()) terms.emplace_back(basis[i], coords[i]);
    return Element::from_terms(ctx, std::move(terms));
}

}  // namespace

SolveD1Result solve_d1(const Cdgl& L, const Element& rhs, int length, int degree) {
    const auto& ctx = L.ctx;
    require_compatible(rhs.context(), ctx);
    for (const auto& [w, c] : rhs.terms())
        if (w.length() != length || ctx->word_degree(w) != degree - 1)
            throw std::invalid_argument(
                "solve_d1: rhs not homogeneous of the stated length and degree");

    Derivation d1 = L.d.component(1);
    std::vector<Word> cols = word_basis(ctx, length, degree);
    std::vector<Word> rows = word_basis(ctx, length, degree - 1);
    auto row_of = index_map(rows);

    SparseMatrix A(int(rows.size()), int(cols.size()));
    for (size_t c = 0; c < cols.size(); ++c) {
        Element im = d1(Element::from_terms(ctx, {{cols[c], Rational(1)}}));
        for (const auto& [w, v] : im.terms()) A.add(row_of.at(w.raw()), int(c), v);
    }
    std::vector<Rational> b(rows.size(), Rational(0));
    for (const auto& [w, v] : rhs.terms()) b[size_t(row_of.at(w.raw()))] = v;

    LinearSolveResult lin = linear_solve(A, b);

    SolveD1Result out{std::nullopt, Element::zero(ctx),
                      StageDiagnostics{"solve_d1", length, A.rows(), A.cols(), lin.rank, 0}};
    if (!lin.solution) {
        out.obstruction = element_from_coords(ctx, rows, lin.residual);
        out.diag.residual_terms = out.obstruction.term_count();
        return out;
    }
    Element s = element_from_coords(ctx, cols, *lin.solution);
    if (length >= 2) {
        Element lie = dynkin_project(s, length);
        if (d1(lie) == rhs) s = std::move(lie);
    }
    out.solution = std::move(s);
    return out;
}

std::vector<Element> d1_cycles(const Cdgl& L, int length, int degree) {
    const auto& ctx = L.ctx;
    Derivation d1 = L.d.component(1);
    std::vector<Word> cols = word_basis(ctx, length, degree);
    if (cols.empty()) return {};
    std::vector<Word> im_rows = word_basis(ctx, length, degree - 1);
    auto im_row_of = index_map(im_rows);

    // Stack the d1 matrix on top of the primitivity constraints
    // (coefficients of the reduced coproduct on proper tensor splits).
    std::map<std::pair<uint64_t, uint64_t>, int> split_row;
    std::vector<std::tuple<int, int, Rational>> split_entries;
    for (size_t c = 0; c < cols.size(); ++c) {
        const Word& word = cols[c];
        struct Split {
            Word left, right;
            int right_degree;
            bool negative;
        };
        std::vector<Split> splits{{Word(), Word(), 0, false}};
        for (int i = 0; i < word.length(); ++i) {
            const int sym = word.symbol(i);
            const int dg = ctx->degree(sym);
            std::vector<Split> next;
            next.reserve(splits.size() * 2);
            for (const auto& s : splits) {
                bool neg = s.negative != ((s.right_degree * dg) % 2 != 0);
                next.push_back({s.left.concat(Word::single(sym)), s.right, s.right_degree, neg});
                next.push_back(
                    {s.left, s.right.concat(Word::single(sym)), s.right_degree + dg, s.negative});
            }
            splits = std::move(next);
        }
        for (const auto& s : splits) {
            if (s.left.empty() || s.right.empty()) continue;
            auto key = std::make_pair(s.left.raw(), s.right.raw());
            auto [it, fresh] = split_row.try_emplace(key, int(split_row.size()));
            split_entries.emplace_back(it->second, int(c), Rational(s.negative ? -1 : 1));
        }
    }

    SparseMatrix A(int(im_rows.size()) + int(split_row.size()), int(cols.size()));
    for (size_t c = 0; c < cols.size(); ++c) {
        Element im = d1(Element::from_terms(ctx, {{cols[c], Rational(1)}}));
        for (const auto& [w, v] : im.terms()) A.add(im_row_of.at(w.raw()), int(c), v);
    }
    for (const auto& [r, c, v] : split_entries) A.add(int(im_rows.size()) + r, c, v);

    std::vector<Element> basis;
    for (const auto& vec : nullspace(A)) basis.push_back(element_from_coords(ctx, cols, vec));
    return basis;
}

namespace {

// Solve gauge(T, base) = target through bracket length max_stage. Returns
// the composed correction T; each stage's correction t_n solves
// d1 t_n = (gauge(T, base) - target)_n.
struct StagedSolve {
    std::optional<Element> T;
    Element obstruction;
    std::vector<StageDiagnostics> stages;
};

StagedSolve staged_gauge_solve(const Cdgl& L, const Element& target, const Element& base,
                               int max_stage, const std::string& phase) {
    StagedSolve out{Element::zero(L.ctx), Element::zero(L.ctx), {}};
    for (int n = 1; n <= max_stage; ++n) {
        Element residual = gauge(L, *out.T, base) - target;
        Element rn = residual.homogeneous_part(n);
        if (rn.is_zero()) continue;
        SolveD1Result corr = solve_d1(L, rn, n, 0);
        corr.diag.phase = phase;
        out.stages.push_back(corr.diag);
        if (!corr.exact()) {
            out.obstruction = corr.obstruction;
            out.T.reset();
            return out;
        }
        out.T = bch(*corr.solution, *out.T);
    }
    return out;
}

}  // namespace

GaugePathResult gauge_path(const Cdgl& L, const Element& A, const Element& B) {
    {
        auto ca = is_mc(L, A);
        auto cb = is_mc(L, B);
        if (!ca.ok || !cb.ok)
            throw std::invalid_argument("gauge_path: endpoints must be Maurer-Cartan");
    }
    StagedSolve s = staged_gauge_solve(L, A, B, L.ctx->truncation(), "gauge_path");
    GaugePathResult out{std::nullopt, std::move(s.obstruction), std::move(s.stages)};
    if (!s.T) return out;
    if (gauge(L, *s.T, B) != A)
        throw std::logic_error("gauge_path: staged solve did not close");  // implementation bug
    out.path = std::move(*s.T);
    return out;
}

Rational loop_coefficient(const CircuitModel& model, const Element& w) {
    const Cdgl& L = model.cdgl;
    Element v1 = model.v(1);
    Element flow = gauge(L, w, v1);
    if (flow != v1)
        throw std::invalid_argument("loop_coefficient: w does not stabilize v1, residual " +
                                    (flow - v1).str());
    if (w.is_zero()) return Rational(0);

    Element w1 = w.homogeneous_part(1);
    Rational lambda = w1.coefficient(Word::single(model.x_index(1)));
    Element loop_lin = Element::zero(L.ctx);
    for (int i = 1; i <= model.k; ++i) loop_lin += model.x(i);
    if (w1 != lambda * loop_lin)
        throw std::logic_error("loop_coefficient: linear part is not a loop multiple");
    if (w != lambda * model.loop())
        throw std::logic_error("loop_coefficient: stabilizer is not a loop multiple");
    return lambda;
}

SigmaInvariantResult sigma_invariant_mc(const CircuitModel& model) {
    const Cdgl& L = model.cdgl;
    const int N = L.ctx->truncation();
    const int k = model.k;

    // P[1] = -( sum_{i=1}^{k-1} ((k-i)/k) x_i ) G v1
    Element start = Element::zero(L.ctx);
    for (int i = 1; i <= k - 1; ++i) start += Rational(k - i, k) * model.x(i);
    Element P = gauge(L, -start, model.v(1));

    SigmaInvariantResult out{P, {}};
    for (int n = 2; n <= N; ++n) {
        Element target = model.sigma(out.P);
        StagedSolve s = staged_gauge_solve(L, target, out.P, n, "sigma_stage_" + std::to_string(n));
        for (auto& d : s.stages) out.stages.push_back(d);
        if (!s.T)
            throw std::runtime_error("sigma_invariant_mc: stage " + std::to_string(n) +
                                     " unsolvable, obstruction " + s.obstruction.str());
        // T': keep lengths < n, replace length n by the weighted sigma
        // average sum_{i=0}^{k-2} ((k-1-i)/k) sigma^i(T_n), drop the rest.
        Element Tp = s.T->truncate_length(n - 1);
        Element Tn = s.T->homogeneous_part(n);
        Element rotated = Tn;
        for (int i = 0; i <= k - 2; ++i) {
            Tp += Rational(k - 1 - i, k) * rotated;
            rotated = model.sigma(rotated);
        }
        Element next = gauge(L, Tp, out.P);
        // stage stability and sigma-invariance through length n
        if (next.truncate_length(n - 1) != out.P.truncate_length(n - 1))
            throw std::logic_error("sigma_invariant_mc: stage " + std::to_string(n) +
                                   " broke lower components");
        if (model.sigma(next).truncate_length(n) != next.truncate_length(n))
            throw std::logic_error("sigma_invariant_mc: stage " + std::to_string(n) +
                                   " is not sigma-invariant through its length");
        out.P = std::move(next);
    }
    if (model.sigma(out.P) != out.P)
        throw std::logic_error("sigma_invariant_mc: result is not sigma-invariant");
    if (!is_mc(L, out.P).ok)
        throw std::logic_error("sigma_invariant_mc: result is not Maurer-Cartan");
    return out;
}

bool InvariantMcResult::all_ok() const {
    for (const auto& c : checks)
        if (!c.ok()) return false;
    return true;
}

InvariantMcResult full_invariant_mc(const CircuitModel& model) {
    const Cdgl& L = model.cdgl;
    const int k = model.k;

    SigmaInvariantResult sig = sigma_invariant_mc(model);
    Element P = sig.P;
    Element v1 = model.v(1);

    GaugePathResult path = gauge_path(L, v1, P);  // w with gauge(w, P) = v1
    if (!path.found())
        throw std::runtime_error("full_invariant_mc: no gauge path from v1 to P, obstruction " +
                                 path.obstruction.str());
    Element w = *path.path;

    Element alpha = bch(-model.tau(w), w);
    Element half_alpha = Rational(1, 2) * alpha;
    Element omega = gauge(L, half_alpha, P);
    Element beta = bch(half_alpha, -w);

    InvariantMcResult out{P, w, alpha, omega, beta, {}, {}};
    out.stages = std::move(sig.stages);
    for (auto& d : path.stages) out.stages.push_back(d);

    Element vbar = Element::zero(L.ctx);
    for (int i = 1; i <= k; ++i) vbar += model.v(i);
    vbar = Rational(1, k) * vbar;

    out.checks.push_back({"mc_residual_P", is_mc(L, P).residual});
    out.checks.push_back({"sigma_invariance_P", model.sigma(P) - P});
    out.checks.push_back({"linear_part_P", P.homogeneous_part(1) - vbar});
    out.checks.push_back({"path_w", gauge(L, w, P) - v1});
    out.checks.push_back({"tau_antisymmetry_alpha", model.tau(alpha) + alpha});
    out.checks.push_back({"gauge_alpha_P", gauge(L, alpha, P) - model.tau(P)});
    out.checks.push_back({"mc_residual_omega", is_mc(L, omega).residual});
    out.checks.push_back({"sigma_invariance_omega", model.sigma(omega) - omega});
    out.checks.push_back({"tau_invariance_omega", model.tau(omega) - omega});
    out.checks.push_back({"linear_part_omega", omega.homogeneous_part(1) - vbar});
    out.checks.push_back({"path_beta", gauge(L, beta, v1) - omega});
    return out;
}

}  // namespace liemc
