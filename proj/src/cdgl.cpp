#include "liemc/cdgl.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace liemc {

Derivation::Derivation(ContextPtr ctx, std::vector<Element> images, int degree_shift)
    : ctx_(std::move(ctx)), images_(std::move(images)), degree_shift_(degree_shift) {
    if (int(images_.size()) != ctx_->size())
        throw std::invalid_argument("Derivation: one image per generator required");
    for (int i = 0; i < ctx_->size(); ++i) {
        const Element& im = images_[size_t(i)];
        require_compatible(im.context(), ctx_);
        if (!im.is_homogeneous_of_degree(ctx_->degree(i) + degree_shift_))
            throw std::invalid_argument("Derivation: image of '" + ctx_->generator(i).name +
                                        "' has wrong degree");
    }
}

const Element& Derivation::image(int gen) const {
    if (gen < 0 || gen >= ctx_->size())
        throw std::invalid_argument("Derivation: unknown generator");
    return images_[size_t(gen)];
}

Element Derivation::operator()(const Element& w) const {
    require_compatible(w.context(), ctx_);
    const int n = ctx_->truncation();
    std::unordered_map<uint64_t, Rational> acc;
    for (const auto& [word, coeff] : w.terms()) {
        // d(g1...gk) = sum_i (-1)^{s(|g1|+..+|g_{i-1}|)} g1..g_{i-1} d(g_i) g_{i+1}..gk
        int prefix_degree = 0;
        Word prefix;
        for (int i = 0; i < word.length(); ++i) {
            const int sym = word.symbol(i);
            const Element& im = images_[size_t(sym)];
            if (!im.is_zero()) {
                Word suffix;
                for (int j = i + 1; j < word.length(); ++j)
                    suffix = suffix.concat(Word::single(word.symbol(j)));
                bool neg = (degree_shift_ % 2 != 0) && (prefix_degree % 2 != 0);
                for (const auto& [iw, ic] : im.terms()) {
                    if (prefix.length() + iw.length() + suffix.length() > n) continue;
                    Word full = prefix.concat(iw).concat(suffix);
                    Rational c = coeff * ic;
                    acc[full.raw()] += neg ? -c : c;
                }
            }
            prefix_degree += ctx_->degree(sym);
            prefix = prefix.concat(Word::single(sym));
        }
    }
    std::vector<Element::Term> terms;
    terms.reserve(acc.size());
    for (auto& [raw, c] : acc)
        if (!c.is_zero()) terms.emplace_back(Word::from_raw(raw), std::move(c));
    return Element::from_terms(ctx_, std::move(terms));
}

Derivation Derivation::component(int i) const {
    if (i < 1) throw std::invalid_argument("Derivation::component: index must be >= 1");
    std::vector<Element> images;
    images.reserve(images_.size());
    for (const auto& im : images_) images.push_back(im.homogeneous_part(i));
    return Derivation(ctx_, std::move(images), degree_shift_);
}

DSquaredReport check_d_squared(const Cdgl& L) {
    DSquaredReport report;
    for (int g = 0; g < L.ctx->size(); ++g) {
        Element res = L.d(L.d.image(g));
        if (!res.is_zero()) report.ok = false;
        report.entries.push_back({g, std::move(res)});
    }
    return report;
}

McCheck is_mc(const Cdgl& L, const Element& a) {
    require_compatible(a.context(), L.ctx);
    if (!a.is_homogeneous_of_degree(-1))
        throw std::invalid_argument("is_mc: element is not of degree -1");
    Element res = L.d(a) + Rational(1, 2) * bracket(a, a);
    bool ok = res.is_zero();
    return {ok, std::move(res)};
}

TwistedDifferential::TwistedDifferential(const Cdgl& L, Element a) : L_(&L), a_(std::move(a)) {
    auto check = is_mc(L, a_);
    if (!check.ok)
        throw std::invalid_argument("twisted_differential: reference element is not Maurer-Cartan");
}

Element TwistedDifferential::operator()(const Element& w) const {
    return bracket(a_, w) + L_->d(w);
}

TwistedDifferential twisted_differential(const Cdgl& L, const Element& a) {
    return TwistedDifferential(L, a);
}

Element gauge(const Cdgl& L, const Element& x, const Element& a) {
    require_compatible(x.context(), L.ctx);
    require_compatible(a.context(), L.ctx);
    if (!x.constant_term().is_zero() || !x.is_homogeneous_of_degree(0))
        throw std::invalid_argument("gauge: acting element must be degree 0 with no constant term");
    if (!a.is_homogeneous_of_degree(-1))
        throw std::invalid_argument("gauge: target element must be of degree -1");
    const int n = L.ctx->truncation();

    Element r = exp_ad(x, a);
    // minus sum_i ad_x^i(dx)/(i+1)!
    Element term = L.d(x);
    Rational inv_fact(1);  // 1/(i+1)! running
    for (int i = 0; i <= n; ++i) {
        inv_fact /= Rational(i + 1);
        if (term.is_zero()) break;
        r -= inv_fact * term;
        term = bracket(x, term);
    }
    return r;
}

}  // namespace liemc
