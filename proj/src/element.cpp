#include "liemc/element.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace liemc {

namespace {

void check_word(const ContextPtr& ctx, const Word& w) {
    if (w.length() > ctx->truncation())
        throw std::invalid_argument("Element: word exceeds truncation");
    for (int i = 0; i < w.length(); ++i)
        if (w.symbol(i) >= ctx->size())
            throw std::invalid_argument("Element: word references unknown generator");
}

}  // namespace

Element Element::unit(ContextPtr ctx) {
    Element e(std::move(ctx));
    e.terms_.emplace_back(Word(), Rational(1));
    return e;
}

Element Element::generator(ContextPtr ctx, int index) {
    if (index < 0 || index >= ctx->size())
        throw std::invalid_argument("Element: generator index out of range");
    Element e(std::move(ctx));
    e.terms_.emplace_back(Word::single(index), Rational(1));
    return e;
}

Element Element::generator(ContextPtr ctx, std::string_view name) {
    int i = ctx->require(name);
    return generator(std::move(ctx), i);
}

Element Element::from_terms(ContextPtr ctx, std::vector<Term> terms) {
    for (auto& [w, c] : terms) check_word(ctx, w);
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    Element e(std::move(ctx));
    e.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (!e.terms_.empty() && e.terms_.back().first == t.first) {
            e.terms_.back().second += t.second;
            if (e.terms_.back().second.is_zero()) e.terms_.pop_back();
        } else if (!t.second.is_zero()) {
            e.terms_.push_back(std::move(t));
        }
    }
    return e;
}

Rational Element::coefficient(const Word& w) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                               [](const Term& t, const Word& key) { return t.first < key; });
    if (it != terms_.end() && it->first == w) return it->second;
    return Rational(0);
}

int Element::min_length() const {
    if (terms_.empty()) return ctx_->truncation() + 1;
    return terms_.front().first.length();
}

std::optional<int> Element::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = ctx_->word_degree(terms_.front().first);
    for (const auto& [w, c] : terms_)
        if (ctx_->word_degree(w) != d) return std::nullopt;
    return d;
}

bool Element::is_homogeneous_of_degree(int d) const {
    for (const auto& [w, c] : terms_)
        if (ctx_->word_degree(w) != d) return false;
    return true;
}

Element Element::homogeneous_part(int length) const {
    Element r(ctx_);
    for (const auto& t : terms_)
        if (t.first.length() == length) r.terms_.push_back(t);
    return r;
}

Element Element::degree_part(int degree) const {
    Element r(ctx_);
    for (const auto& t : terms_)
        if (ctx_->word_degree(t.first) == degree) r.terms_.push_back(t);
    return r;
}

Element Element::truncate_length(int bound) const {
    Element r(ctx_);
    for (const auto& t : terms_) {
        if (t.first.length() > bound) break;  // terms are length-sorted
        r.terms_.push_back(t);
    }
    return r;
}

Element Element::operator-() const {
    Element r(ctx_);
    r.terms_.reserve(terms_.size());
    for (const auto& [w, c] : terms_) r.terms_.emplace_back(w, -c);
    return r;
}

Element operator+(const Element& a, const Element& b) {
    require_compatible(a.ctx_, b.ctx_);
    Element r(a.ctx_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() && ib != b.terms_.end()) {
        if (ia->first < ib->first) {
            r.terms_.push_back(*ia++);
        } else if (ib->first < ia->first) {
            r.terms_.push_back(*ib++);
        } else {
            Rational c = ia->second + ib->second;
            if (!c.is_zero()) r.terms_.emplace_back(ia->first, std::move(c));
            ++ia;
            ++ib;
        }
    }
    r.terms_.insert(r.terms_.end(), ia, a.terms_.end());
    r.terms_.insert(r.terms_.end(), ib, b.terms_.end());
    return r;
}

Element operator-(const Element& a, const Element& b) { return a + (-b); }

Element operator*(const Element& a, const Element& b) {
    require_compatible(a.ctx_, b.ctx_);
    const int n = a.ctx_->truncation();
    Element r(a.ctx_);
    if (a.terms_.empty() || b.terms_.empty()) return r;

    std::unordered_map<uint64_t, Rational> acc;
    acc.reserve(a.terms_.size() + b.terms_.size());
    for (const auto& [wa, ca] : a.terms_) {
        const int room = n - wa.length();
        for (const auto& [wb, cb] : b.terms_) {
            if (wb.length() > room) break;  // length-sorted
            Word w = wa.concat(wb);
            auto [it, fresh] = acc.try_emplace(w.raw(), Rational(0));
            it->second += ca * cb;
        }
    }
    std::vector<std::pair<uint64_t, Rational>> buf;
    buf.reserve(acc.size());
    for (auto& [raw, c] : acc)
        if (!c.is_zero()) buf.emplace_back(raw, std::move(c));
    std::sort(buf.begin(), buf.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    r.terms_.reserve(buf.size());
    for (auto& [raw, c] : buf) r.terms_.emplace_back(Word::from_raw(raw), std::move(c));
    return r;
}

Element operator*(const Rational& c, const Element& a) {
    Element r(a.ctx_);
    if (c.is_zero()) return r;
    r.terms_.reserve(a.terms_.size());
    for (const auto& [w, cc] : a.terms_) r.terms_.emplace_back(w, c * cc);
    return r;
}

bool Element::operator==(const Element& o) const {
    if (!compatible(ctx_, o.ctx_)) return false;
    return terms_ == o.terms_;
}

std::string Element::word_str(const Word& w) const {
    if (w.empty()) return "1";
    std::string s;
    for (int i = 0; i < w.length(); ++i) {
        if (i) s += "*";
        s += ctx_->generator(w.symbol(i)).name;
    }
    return s;
}

std::string Element::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    auto emit = [&](const Word& w, const Rational& c) {
        bool neg = c.sign() < 0;
        Rational mag = neg ? -c : c;
        if (s.empty()) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        std::string ws = word_str(w);
        if (mag == Rational(1) && !w.empty()) {
            s += ws;
        } else if (w.empty()) {
            s += mag.str();
        } else {
            s += mag.str() + " " + ws;
        }
    };
    size_t i = 0;
    while (i < terms_.size()) {
        size_t j = i;
        int len = terms_[i].first.length();
        while (j < terms_.size() && terms_[j].first.length() == len) ++j;
        for (size_t t = i; t < j; ++t)
            if (terms_[t].second.sign() > 0) emit(terms_[t].first, terms_[t].second);
        for (size_t t = i; t < j; ++t)
            if (terms_[t].second.sign() < 0) emit(terms_[t].first, terms_[t].second);
        i = j;
    }
    return s;
}

Element add(const Element& a, const Element& b) { return a + b; }
Element scale(const Rational& c, const Element& a) { return c * a; }
Element multiply(const Element& a, const Element& b) { return a * b; }
Element homogeneous_part(const Element& a, int length) { return a.homogeneous_part(length); }
Element degree_part(const Element& a, int degree) { return a.degree_part(degree); }

Element recontext(const Element& a, const ContextPtr& target) {
    if (a.context()->generators() != target->generators())
        throw std::invalid_argument("recontext: generator tables differ");
    std::vector<Element::Term> terms;
    for (const auto& t : a.terms())
        if (t.first.length() <= target->truncation()) terms.push_back(t);
    return Element::from_terms(target, std::move(terms));
}

Element embed(const Element& a, const ContextPtr& target) {
    const auto& src = a.context();
    // map generators by name, resolved lazily so unused source generators
    // need no counterpart in the target
    std::vector<int> map(size_t(src->size()), -1);
    auto resolve = [&](int i) {
        if (map[size_t(i)] < 0) {
            const Generator& g = src->generator(i);
            int j = target->require(g.name);
            if (target->degree(j) != g.degree)
                throw std::invalid_argument("embed: degree mismatch on '" + g.name + "'");
            map[size_t(i)] = j;
        }
        return map[size_t(i)];
    };
    std::vector<Element::Term> terms;
    for (const auto& [w, c] : a.terms()) {
        if (w.length() > target->truncation()) continue;
        Word im;
        for (int i = 0; i < w.length(); ++i) im = im.concat(Word::single(resolve(w.symbol(i))));
        terms.emplace_back(im, c);
    }
    return Element::from_terms(target, std::move(terms));
}

AlgebraHom::AlgebraHom(ContextPtr source, ContextPtr target, std::vector<Element> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (int(images_.size()) != source_->size())
        throw std::invalid_argument("AlgebraHom: one image per generator required");
    for (const auto& im : images_) require_compatible(im.context(), target_);
}

Element AlgebraHom::operator()(const Element& a) const {
    require_compatible(a.context(), source_);
    Element r = Element::zero(target_);
    for (const auto& [w, c] : a.terms()) {
        Element p = Element::unit(target_);
        for (int i = 0; i < w.length() && !p.is_zero(); ++i) p = p * images_[size_t(w.symbol(i))];
        r += c * p;
    }
    return r;
}

}  // namespace liemc
