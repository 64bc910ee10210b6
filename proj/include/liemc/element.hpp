#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liemc/context.hpp"
#include "liemc/rational.hpp"

namespace liemc {

// A finite rational linear combination of words of length <= N, i.e. an
// element of the truncated free unital associative algebra T(V)/T^{>N}(V).
// Terms are kept sorted in canonical order (length, then lexicographic by
// generator index) with no zero coefficients, so equality is a structural
// compare and serialization is reproducible. Elements are immutable values;
// every operation returns a fresh one.
class Element {
public:
    using Term = std::pair<Word, Rational>;

    explicit Element(ContextPtr ctx) : ctx_(std::move(ctx)) {}

    static Element zero(ContextPtr ctx) { return Element(std::move(ctx)); }
    static Element unit(ContextPtr ctx);
    static Element generator(ContextPtr ctx, int index);
    static Element generator(ContextPtr ctx, std::string_view name);
    // Sorts, combines duplicates, prunes zeros and over-long words.
    static Element from_terms(ContextPtr ctx, std::vector<Term> terms);

    const ContextPtr& context() const { return ctx_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return int(terms_.size()); }

    Rational coefficient(const Word& w) const;
    Rational constant_term() const { return coefficient(Word()); }

    // Smallest word length present; truncation+1 for the zero element.
    int min_length() const;

    // The common degree of all words, if the element is degree-homogeneous.
    // The zero element is homogeneous of every degree (returns nullopt).
    std::optional<int> homogeneous_degree() const;
    bool is_homogeneous_of_degree(int d) const;

    Element homogeneous_part(int length) const;
    Element degree_part(int degree) const;
    // Sum of homogeneous parts with length <= bound.
    Element truncate_length(int bound) const;

    Element operator-() const;
    friend Element operator+(const Element& a, const Element& b);
    friend Element operator-(const Element& a, const Element& b);
    // Concatenation product, truncated: words longer than N are discarded.
    friend Element operator*(const Element& a, const Element& b);
    friend Element operator*(const Rational& c, const Element& a);

    Element& operator+=(const Element& b) { return *this = *this + b; }
    Element& operator-=(const Element& b) { return *this = *this - b; }

    bool operator==(const Element& o) const;
    bool operator!=(const Element& o) const { return !(*this == o); }

    std::string word_str(const Word& w) const;
    // Human-readable rendering; within each length block, positive terms are
    // printed before negative ones ("v2 - v1" rather than "-v1 + v2").
    std::string str() const;

private:
    ContextPtr ctx_;
    std::vector<Term> terms_;
};

Element add(const Element& a, const Element& b);
Element scale(const Rational& c, const Element& a);
Element multiply(const Element& a, const Element& b);
Element homogeneous_part(const Element& a, int length);
Element degree_part(const Element& a, int degree);

// Same generator table, different truncation: the quotient map when the
// target truncation is lower. Tails the source cannot know about are the
// caller's responsibility when raising N.
Element recontext(const Element& a, const ContextPtr& target);

// Map into another context by generator name (degrees must match); words
// longer than the target truncation are discarded. Used to push elements of
// a circuit model into an extension such as the triangle.
Element embed(const Element& a, const ContextPtr& target);

// Algebra endomorphism determined by generator images: extended
// multiplicatively to words and linearly to elements.
class AlgebraHom {
public:
    AlgebraHom(ContextPtr source, ContextPtr target, std::vector<Element> images);
    Element operator()(const Element& a) const;

private:
    ContextPtr source_, target_;
    std::vector<Element> images_;
};

}  // namespace liemc
