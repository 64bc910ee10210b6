#pragma once

#include <span>

#include "liemc/element.hpp"
#include "liemc/series.hpp"

namespace liemc {

// Graded commutator [a,b] = ab - (-1)^{|a||b|} ba, extended bilinearly over
// the degree-homogeneous components of a and b, truncated.
Element bracket(const Element& a, const Element& b);

// The adjoint derivation ad_x = [x, -] as a callable, and its powers.
inline auto ad(const Element& x) {
    return [x](const Element& w) { return bracket(x, w); };
}
Element ad_power(const Element& x, int i, const Element& w);

// exp on degree-0 elements with no constant term; log on elements with
// constant term exactly 1. log(exp(x)) == x holds exactly mod truncation.
Element exp(const Element& x);
Element log(const Element& g);

// Baker-Campbell-Hausdorff product log(e^x e^y) on degree-0 elements with
// no constant term. Associative mod truncation; primitive for Lie inputs.
Element bch(const Element& x, const Element& y);
Element bch_multi(std::span<const Element> factors);
Element bch_multi(std::initializer_list<Element> factors);

// e^{ad_x}(w) = sum ad_x^i(w)/i!
Element exp_ad(const Element& x, const Element& w);

// sum_i c_i ad_x^i(w) for a truncated series f = sum c_i t^i. The series
// must cover the ambient truncation order.
Element series_apply(const OperatorSeries& f, const Element& x, const Element& w);

// Membership test for the free Lie subalgebra: true iff
// delta(w) = w x 1 + 1 x w for the coproduct on T(V) with primitive
// generators and Koszul signs (a x b)(c x d) = (-1)^{|b||c|}(ac x bd).
bool is_primitive(const Element& w);

// Left-nested bracketing map on words, g1...gn -> [[..[g1,g2],..],gn],
// extended linearly. On a Lie element of pure word length n it multiplies
// by n, so bracketing/n projects word-span solutions back into the free
// Lie algebra (Dynkin-Specht-Wever).
Element dynkin_bracketing(const Element& a);
Element dynkin_project(const Element& a, int length);

}  // namespace liemc
