#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "liemc/element.hpp"

namespace liemc {

// Deterministic sampler for property suites. Draws come straight from a
// mt19937_64 stream (never from distribution objects, whose output is
// implementation-defined), so runs with equal seeds are byte-identical
// across platforms.
class Sampler {
public:
    explicit Sampler(uint64_t seed) : rng_(seed) {}

    uint64_t next(uint64_t bound) { return rng_() % bound; }
    int pick(int lo, int hi) { return lo + int(next(uint64_t(hi - lo + 1))); }

    // numerator in [-3, 3] \ {0}, denominator in [1, 3]
    Rational small_rational();
    Rational small_rational_or_zero();

    // A random Lie element: a short sum of left-nested bracket monomials in
    // the listed generators, with small rational coefficients. Monomials are
    // degree-homogeneous, the sum need not be. Retries when cancellation
    // yields zero.
    Element lie_element(const ContextPtr& ctx, const std::vector<int>& generators,
                        int max_bracket_length, int max_terms, int min_bracket_length = 1);

    // Convenience: Lie element in the degree-0 generators of the context.
    Element degree_zero_lie_element(const ContextPtr& ctx, int max_bracket_length = 3,
                                    int max_terms = 3);

private:
    std::mt19937_64 rng_;
};

std::vector<int> generators_of_degree(const ContextPtr& ctx, int degree);

}  // namespace liemc
