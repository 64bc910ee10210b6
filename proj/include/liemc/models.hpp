#pragma once

#include <optional>

#include "liemc/cdgl.hpp"
#include "liemc/morphism.hpp"

namespace liemc {

// The Lawrence-Sullivan interval: generators a, b of degree -1 (both
// Maurer-Cartan), x of degree 0 flowing from a to b, with
//   dx = [x,b] + todd(ad_x)(b - a).
struct LsInterval {
    Cdgl cdgl;
    int a, b, x;  // generator indices

    Element a_elem() const { return Element::generator(cdgl.ctx, a); }
    Element b_elem() const { return Element::generator(cdgl.ctx, b); }
    Element x_elem() const { return Element::generator(cdgl.ctx, x); }
};

LsInterval ls_interval(int truncation);

// Model of the circuit graph on k vertices: a ring of LS intervals
// (v_i, v_{i+1}, x_i) with cyclic indices, carrying the dihedral action
//   sigma: v_i -> v_{i+1}, x_i -> x_{i+1}
//   tau:   v_i -> v_{k-i+2}, x_i -> -x_{k-i+1}.
struct CircuitModel {
    Cdgl cdgl;
    int k;
    GroupMorphism sigma, tau;

    // 1-based, cyclic in i.
    int v_index(int i) const { return ((i - 1) % k + k) % k; }
    int x_index(int i) const { return k + ((i - 1) % k + k) % k; }
    Element v(int i) const { return Element::generator(cdgl.ctx, v_index(i)); }
    Element x(int i) const { return Element::generator(cdgl.ctx, x_index(i)); }

    // The loop class x_1 * x_2 * ... * x_k (BCH product).
    Element loop() const;
};

CircuitModel circuit_model(int k, int truncation);

// Triangle models. The plain model is based at v1: the top generator e of
// degree 1 has d_{v1}(e) = x1 * x2 * x3, i.e. de = x1*x2*x3 - [v1,e].
// The symmetric model replaces v1 by a dihedrally invariant Maurer-Cartan
// element Omega with a path beta from Omega to v1, and carries the
// symmetric-group action with sigma(e') = e', tau(e') = -e'.
struct TriangleModel {
    Cdgl cdgl;
    GroupMorphism sigma, tau;
    int e;  // index of the top generator
    // Set on the symmetric model, expressed in the model's own context.
    std::optional<Element> omega, beta;

    int v_index(int i) const { return ((i - 1) % 3 + 3) % 3; }
    int x_index(int i) const { return 3 + ((i - 1) % 3 + 3) % 3; }
    Element v(int i) const { return Element::generator(cdgl.ctx, v_index(i)); }
    Element x(int i) const { return Element::generator(cdgl.ctx, x_index(i)); }
    Element e_elem() const { return Element::generator(cdgl.ctx, e); }
    Element loop() const;
};

TriangleModel triangle_model(int truncation);

// omega and beta are given in the k=3 circuit context; preconditions
// (omega Maurer-Cartan and dihedrally invariant, beta a path from omega
// to v1) are verified and violations reported with their residuals.
TriangleModel symmetric_triangle(const Element& omega, const Element& beta, int truncation);

// True iff p flows B to A in time 1: gauge(p, B) = A. "p is a path from A
// to B" in that sense; composing p: A -> B with q: B -> C is bch(p, q).
bool path_check(const Cdgl& L, const Element& p, const Element& A, const Element& B);

}  // namespace liemc
