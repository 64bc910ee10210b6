#include "liemc/lie.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace liemc {

namespace {

void require_group_like(const Element& x, const char* who) {
    if (!x.constant_term().is_zero())
        throw std::invalid_argument(std::string(who) + ": nonzero constant term");
    if (!x.is_homogeneous_of_degree(0))
        throw std::invalid_argument(std::string(who) + ": element is not of degree 0");
}

}  // namespace

Element bracket(const Element& a, const Element& b) {
    require_compatible(a.context(), b.context());
    const auto& ctx = a.context();
    const int n = ctx->truncation();

    std::unordered_map<uint64_t, Rational> acc;
    acc.reserve(a.terms().size() + b.terms().size());
    for (const auto& [wa, ca] : a.terms()) {
        const int da = ctx->word_degree(wa);
        const int room = n - wa.length();
        for (const auto& [wb, cb] : b.terms()) {
            if (wb.length() > room) break;
            const int db = ctx->word_degree(wb);
            Rational c = ca * cb;
            acc[wa.concat(wb).raw()] += c;
            if ((da * db) % 2 == 0)
                acc[wb.concat(wa).raw()] -= c;
            else
                acc[wb.concat(wa).raw()] += c;
        }
    }
    std::vector<std::pair<uint64_t, Rational>> buf;
    buf.reserve(acc.size());
    for (auto& [raw, c] : acc)
        if (!c.is_zero()) buf.emplace_back(raw, std::move(c));
    std::sort(buf.begin(), buf.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<Element::Term> terms;
    terms.reserve(buf.size());
    for (auto& [raw, c] : buf) terms.emplace_back(Word::from_raw(raw), std::move(c));
    return Element::from_terms(ctx, std::move(terms));
}

Element ad_power(const Element& x, int i, const Element& w) {
    if (i < 0) throw std::invalid_argument("ad_power: negative exponent");
    Element r = w;
    for (int j = 0; j < i && !r.is_zero(); ++j) r = bracket(x, r);
    return r;
}

Element exp(const Element& x) {
    require_group_like(x, "exp");
    const int n = x.context()->truncation();
    Element r = Element::unit(x.context());
    Element pow = Element::unit(x.context());
    Rational inv_fact(1);
    for (int i = 1; i <= n; ++i) {
        pow = pow * x;
        if (pow.is_zero()) break;
        inv_fact /= Rational(i);
        r += inv_fact * pow;
    }
    return r;
}

Element log(const Element& g) {
    if (g.constant_term() != Rational(1))
        throw std::invalid_argument("log: constant term must be exactly 1");
    const int n = g.context()->truncation();
    Element u = g - Element::unit(g.context());
    Element r = Element::zero(g.context());
    Element pow = Element::unit(g.context());
    for (int i = 1; i <= n; ++i) {
        pow = pow * u;
        if (pow.is_zero()) break;
        Rational c = Rational(i % 2 ? 1 : -1) / Rational(i);
        r += c * pow;
    }
    return r;
}

Element bch(const Element& x, const Element& y) {
    require_group_like(x, "bch");
    require_group_like(y, "bch");
    return log(exp(x) * exp(y));
}

Element bch_multi(std::span<const Element> factors) {
    if (factors.empty()) throw std::invalid_argument("bch_multi: empty factor list");
    Element p = exp(factors.front());
    for (size_t i = 1; i < factors.size(); ++i) {
        require_group_like(factors[i], "bch_multi");
        p = p * exp(factors[i]);
    }
    return log(p);
}

Element bch_multi(std::initializer_list<Element> factors) {
    return bch_multi(std::span<const Element>(factors.begin(), factors.size()));
}

Element exp_ad(const Element& x, const Element& w) {
    require_group_like(x, "exp_ad");
    const int n = x.context()->truncation();
    Element r = w;
    Element term = w;
    Rational inv_fact(1);
    for (int i = 1; i <= n; ++i) {
        term = bracket(x, term);
        if (term.is_zero()) break;
        inv_fact /= Rational(i);
        r += inv_fact * term;
    }
    return r;
}

Element series_apply(const OperatorSeries& f, const Element& x, const Element& w) {
    require_group_like(x, "series_apply");
    const int n = x.context()->truncation();
    if (f.order() < n) throw std::invalid_argument("series_apply: series shorter than truncation");
    Element r = f.at(0) * w;
    Element term = w;
    for (int i = 1; i <= n; ++i) {
        term = bracket(x, term);
        if (term.is_zero()) break;
        if (!f.at(i).is_zero()) r += f.at(i) * term;
    }
    return r;
}

bool is_primitive(const Element& w) {
    const auto& ctx = w.context();
    // Coproduct terms over the truncated tensor square, keyed by the packed
    // pair (left word, right word).
    std::map<std::pair<uint64_t, uint64_t>, Rational> acc;
    struct Split {
        Word left, right;
        int right_degree;
        bool negative;
    };
    for (const auto& [word, coeff] : w.terms()) {
        std::vector<Split> splits{{Word(), Word(), 0, false}};
        for (int i = 0; i < word.length(); ++i) {
            const int sym = word.symbol(i);
            const int dg = ctx->degree(sym);
            std::vector<Split> next;
            next.reserve(splits.size() * 2);
            for (const auto& s : splits) {
                // letter goes left: Koszul sign from moving it past the right part
                bool neg = s.negative != ((s.right_degree * dg) % 2 != 0);
                next.push_back({s.left.concat(Word::single(sym)), s.right, s.right_degree, neg});
                next.push_back({s.left, s.right.concat(Word::single(sym)), s.right_degree + dg, s.negative});
            }
            splits = std::move(next);
        }
        for (const auto& s : splits) {
            Rational c = s.negative ? -coeff : coeff;
            acc[{s.left.raw(), s.right.raw()}] += c;
        }
    }
    // subtract w x 1 + 1 x w
    for (const auto& [word, coeff] : w.terms()) {
        acc[{word.raw(), Word().raw()}] -= coeff;
        acc[{Word().raw(), word.raw()}] -= coeff;
    }
    for (const auto& [key, c] : acc)
        if (!c.is_zero()) return false;
    return true;
}

Element dynkin_bracketing(const Element& a) {
    const auto& ctx = a.context();
    Element r = Element::zero(ctx);
    for (const auto& [word, coeff] : a.terms()) {
        if (word.empty()) continue;  // the unit brackets to zero
        Element cur = Element::generator(ctx, word.symbol(0));
        for (int i = 1; i < word.length(); ++i)
            cur = bracket(cur, Element::generator(ctx, word.symbol(i)));
        r += coeff * cur;
    }
    return r;
}

Element dynkin_project(const Element& a, int length) {
    if (length < 1) throw std::invalid_argument("dynkin_project: length must be >= 1");
    return (Rational(1) / Rational(length)) * dynkin_bracketing(a);
}

}  // namespace liemc
