#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liemc/cdgl.hpp"
#include "liemc/linalg.hpp"
#include "liemc/models.hpp"

namespace liemc {

// All words of the given length and degree, in canonical order.
std::vector<Word> word_basis(const ContextPtr& ctx, int length, int degree);

struct StageDiagnostics {
    std::string phase;   // which pipeline step issued the solve
    int length = 0;      // bracket-length stage
    int rows = 0, cols = 0, rank = 0;
    int residual_terms = 0;  // term count of the obstruction (0 = exact)
};

struct SolveD1Result {
    std::optional<Element> solution;  // exact particular solution, Lie when possible
    Element obstruction;              // unreachable part of the rhs when unsolvable
    StageDiagnostics diag;

    bool exact() const { return solution.has_value(); }
};

// Solve d1 T = rhs over the word span of (degree, length), by exact
// elimination with deterministic pivoting in canonical word order. Free
// variables are set to zero, which at (degree 0, length 1) of a circuit
// zeroes the coefficient of the loop-class direction. Solutions of length
// >= 2 are projected back into the free Lie algebra via the bracketing map
// and re-verified exactly.
SolveD1Result solve_d1(const Cdgl& L, const Element& rhs, int length, int degree);

// Exact kernel basis of d1 restricted to the primitive elements of the
// given length and degree.
std::vector<Element> d1_cycles(const Cdgl& L, int length, int degree);

struct GaugePathResult {
    std::optional<Element> path;  // p with gauge(p, B) = A
    Element obstruction;
    std::vector<StageDiagnostics> stages;

    bool found() const { return path.has_value(); }
};

// Degree-by-degree solve for p with gauge(p, B) = A: at stage n the
// length-n residual of gauge(p, B) - A is fed to solve_d1 and the
// correction is composed in by the BCH product.
GaugePathResult gauge_path(const Cdgl& L, const Element& A, const Element& B);

// For w stabilizing v1 under the gauge action, the rational lambda with
// w = lambda * (x1 * x2 * ... * xk). The stabilizer condition is verified;
// a stabilizer with no matching lambda signals an implementation bug.
Rational loop_coefficient(const CircuitModel& model, const Element& w);

struct NamedResidual {
    std::string name;
    Element residual;
    bool ok() const { return residual.is_zero(); }
};

struct SigmaInvariantResult {
    Element P;
    std::vector<StageDiagnostics> stages;
};

// Inductive construction of a Maurer-Cartan element fixed by the rotation:
// start from P[1] = -(sum_{i<k} ((k-i)/k) x_i) G v1, then at each bracket
// length n solve T G P = sigma(P) through length n, replace the length-n
// component of T by its weighted sigma-average, and gauge. Postconditions
// (stage stability, sigma-invariance through length n, Maurer-Cartan) are
// verified at every stage and failures throw.
SigmaInvariantResult sigma_invariant_mc(const CircuitModel& model);

struct InvariantMcResult {
    Element P;      // sigma-invariant Maurer-Cartan element
    Element w;      // gauge(w, P) = v1
    Element alpha;  // (-tau w) * w, gauge(alpha, P) = tau P
    Element omega;  // (alpha/2) G P, invariant under sigma and tau
    Element beta;   // alpha/2 * (-w): path from omega to v1
    std::vector<StageDiagnostics> stages;
    std::vector<NamedResidual> checks;

    bool all_ok() const;
};

InvariantMcResult full_invariant_mc(const CircuitModel& model);

}  // namespace liemc
