#include "liemc/sampling.hpp"

#include <stdexcept>

#include "liemc/lie.hpp"

namespace liemc {

Rational Sampler::small_rational() {
    int num = pick(1, 3) * (next(2) ? -1 : 1);
    int den = pick(1, 3);
    return Rational(num, den);
}

Rational Sampler::small_rational_or_zero() {
    if (next(4) == 0) return Rational(0);
    return small_rational();
}

Element Sampler::lie_element(const ContextPtr& ctx, const std::vector<int>& generators,
                             int max_bracket_length, int max_terms, int min_bracket_length) {
    if (generators.empty()) throw std::invalid_argument("Sampler: no generators to draw from");
    const int max_len = std::min(max_bracket_length, ctx->truncation());
    if (min_bracket_length > max_len)
        throw std::invalid_argument("Sampler: empty bracket-length range");
    for (int attempt = 0; attempt < 16; ++attempt) {
        Element r = Element::zero(ctx);
        int terms = pick(1, max_terms);
        for (int t = 0; t < terms; ++t) {
            int len = pick(min_bracket_length, max_len);
            Element mono = Element::generator(ctx, generators[next(generators.size())]);
            for (int i = 1; i < len; ++i)
                mono = bracket(mono, Element::generator(ctx, generators[next(generators.size())]));
            r += small_rational() * mono;
        }
        if (!r.is_zero()) return r;
    }
    // all-cancelling draws are astronomically unlikely; fall back to a generator
    return Element::generator(ctx, generators[0]);
}

Element Sampler::degree_zero_lie_element(const ContextPtr& ctx, int max_bracket_length,
                                         int max_terms) {
    return lie_element(ctx, generators_of_degree(ctx, 0), max_bracket_length, max_terms);
}

std::vector<int> generators_of_degree(const ContextPtr& ctx, int degree) {
    std::vector<int> out;
    for (int i = 0; i < ctx->size(); ++i)
        if (ctx->degree(i) == degree) out.push_back(i);
    return out;
}

}  // namespace liemc
