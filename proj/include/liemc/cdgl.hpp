#pragma once

#include <vector>

#include "liemc/element.hpp"
#include "liemc/lie.hpp"

namespace liemc {

// A graded derivation of the truncated algebra, given by its values on
// generators and extended by the graded Leibniz rule
//   d(uw) = (du)w + (-1)^{s|u|} u(dw)
// where s is the degree shift (-1 for differentials).
class Derivation {
public:
    Derivation(ContextPtr ctx, std::vector<Element> images, int degree_shift = -1);

    const ContextPtr& context() const { return ctx_; }
    int degree_shift() const { return degree_shift_; }
    const Element& image(int gen) const;
    const std::vector<Element>& images() const { return images_; }

    Element operator()(const Element& w) const;

    // Bracket-length component: generator images replaced by their length-i
    // homogeneous parts. The components sum back to the derivation.
    Derivation component(int i) const;

private:
    ContextPtr ctx_;
    std::vector<Element> images_;
    int degree_shift_;
};

// A complete differential graded Lie algebra presented on its truncated
// enveloping algebra: context plus a degree -1 differential. d^2 = 0 is a
// checked property, not an assumed one.
struct Cdgl {
    ContextPtr ctx;
    Derivation d;
};

struct DSquaredReport {
    struct Entry {
        int generator;
        Element residual;  // d(d(g)) mod truncation
    };
    std::vector<Entry> entries;
    bool ok = true;
};

DSquaredReport check_d_squared(const Cdgl& L);

struct McCheck {
    bool ok;
    Element residual;  // da + 1/2 [a,a] mod truncation
};

// Maurer-Cartan test for a degree -1 element: da + 1/2 [a,a] = 0.
McCheck is_mc(const Cdgl& L, const Element& a);

// The twisted differential d_a : w -> [a,w] + dw, an operator value; the
// original differential stays available alongside it.
class TwistedDifferential {
public:
    TwistedDifferential(const Cdgl& L, Element a);
    Element operator()(const Element& w) const;
    const Element& reference_point() const { return a_; }

private:
    const Cdgl* L_;
    Element a_;
};

TwistedDifferential twisted_differential(const Cdgl& L, const Element& a);

// Gauge action of a degree-0 element on a Maurer-Cartan element:
//   x G a = e^{ad_x}(a) - sum_{i>=0} ad_x^i(dx)/(i+1)!
// summed through i = N; the bracket-length filtration kills later terms.
Element gauge(const Cdgl& L, const Element& x, const Element& a);

}  // namespace liemc
