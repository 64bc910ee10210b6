#pragma once

#include <vector>

#include "liemc/element.hpp"

namespace liemc {

// A signed permutation of the generators, extended multiplicatively to
// words (sign = product of signs) and linearly to elements. Degree
// preservation and bijectivity-up-to-sign are validated on construction;
// compatibility with a model's differential is a checked property of the
// model, not of this type.
class GroupMorphism {
public:
    struct Image {
        int generator;
        int sign;  // +1 or -1
    };

    GroupMorphism(ContextPtr ctx, std::vector<Image> images);

    static GroupMorphism identity(ContextPtr ctx);

    const ContextPtr& context() const { return ctx_; }
    Image image(int gen) const { return images_[size_t(gen)]; }

    Element operator()(const Element& a) const;

    // Composition (this after other): (f.after(g))(w) = f(g(w)).
    GroupMorphism after(const GroupMorphism& other) const;
    GroupMorphism inverse() const;
    GroupMorphism pow(int n) const;

    bool operator==(const GroupMorphism& o) const;

private:
    ContextPtr ctx_;
    std::vector<Image> images_;
};

}  // namespace liemc
