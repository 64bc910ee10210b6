#include "liemc/morphism.hpp"

#include <stdexcept>

namespace liemc {

GroupMorphism::GroupMorphism(ContextPtr ctx, std::vector<Image> images)
    : ctx_(std::move(ctx)), images_(std::move(images)) {
    if (int(images_.size()) != ctx_->size())
        throw std::invalid_argument("GroupMorphism: one image per generator required");
    std::vector<bool> hit(images_.size(), false);
    for (int i = 0; i < ctx_->size(); ++i) {
        const Image& im = images_[size_t(i)];
        if (im.generator < 0 || im.generator >= ctx_->size())
            throw std::invalid_argument("GroupMorphism: image generator out of range");
        if (im.sign != 1 && im.sign != -1)
            throw std::invalid_argument("GroupMorphism: sign must be +1 or -1");
        if (ctx_->degree(im.generator) != ctx_->degree(i))
            throw std::invalid_argument("GroupMorphism: degree not preserved on '" +
                                        ctx_->generator(i).name + "'");
        if (hit[size_t(im.generator)])
            throw std::invalid_argument("GroupMorphism: not a permutation of generators");
        hit[size_t(im.generator)] = true;
    }
}

GroupMorphism GroupMorphism::identity(ContextPtr ctx) {
    std::vector<Image> images;
    images.reserve(size_t(ctx->size()));
    for (int i = 0; i < ctx->size(); ++i) images.push_back({i, 1});
    return GroupMorphism(std::move(ctx), std::move(images));
}

Element GroupMorphism::operator()(const Element& a) const {
    require_compatible(a.context(), ctx_);
    std::vector<Element::Term> terms;
    terms.reserve(a.terms().size());
    for (const auto& [w, c] : a.terms()) {
        Word im;
        int sign = 1;
        for (int i = 0; i < w.length(); ++i) {
            const Image& gi = images_[size_t(w.symbol(i))];
            im = im.concat(Word::single(gi.generator));
            sign *= gi.sign;
        }
        terms.emplace_back(im, sign > 0 ? c : -c);
    }
    return Element::from_terms(ctx_, std::move(terms));
}

GroupMorphism GroupMorphism::after(const GroupMorphism& other) const {
    require_compatible(ctx_, other.ctx_);
    std::vector<Image> images;
    images.reserve(images_.size());
    for (int i = 0; i < ctx_->size(); ++i) {
        Image inner = other.images_[size_t(i)];
        Image outer = images_[size_t(inner.generator)];
        images.push_back({outer.generator, inner.sign * outer.sign});
    }
    return GroupMorphism(ctx_, std::move(images));
}

GroupMorphism GroupMorphism::inverse() const {
    std::vector<Image> images(images_.size());
    for (int i = 0; i < ctx_->size(); ++i) {
        const Image& im = images_[size_t(i)];
        images[size_t(im.generator)] = {i, im.sign};
    }
    return GroupMorphism(ctx_, std::move(images));
}

GroupMorphism GroupMorphism::pow(int n) const {
    GroupMorphism base = n >= 0 ? *this : inverse();
    int m = n >= 0 ? n : -n;
    GroupMorphism r = identity(ctx_);
    for (int i = 0; i < m; ++i) r = base.after(r);
    return r;
}

bool GroupMorphism::operator==(const GroupMorphism& o) const {
    if (!compatible(ctx_, o.ctx_)) return false;
    for (size_t i = 0; i < images_.size(); ++i)
        if (images_[i].generator != o.images_[i].generator || images_[i].sign != o.images_[i].sign)
            return false;
    return true;
}

}  // namespace liemc
