#include "liemc/serialize.hpp"

#include <stdexcept>

namespace liemc {

Json context_to_json(const ContextPtr& ctx) {
    Json gens = Json::array();
    for (const auto& g : ctx->generators()) gens.push_back({{"name", g.name}, {"degree", g.degree}});
    return Json{{"generators", std::move(gens)}, {"truncation", ctx->truncation()}};
}

ContextPtr context_from_json(const Json& j) {
    std::vector<Generator> gens;
    for (const auto& g : j.at("generators"))
        gens.push_back({g.at("name").get<std::string>(), g.at("degree").get<int>()});
    return AlgebraContext::make(std::move(gens), j.at("truncation").get<int>());
}

Json element_to_json(const Element& a) {
    Json out = context_to_json(a.context());
    Json terms = Json::array();
    for (const auto& [w, c] : a.terms()) {
        Json word = Json::array();
        for (int i = 0; i < w.length(); ++i)
            word.push_back(a.context()->generator(w.symbol(i)).name);
        terms.push_back({{"word", std::move(word)}, {"coeff", c.str()}});
    }
    out["terms"] = std::move(terms);
    return out;
}

Element element_from_json(const Json& j) {
    ContextPtr ctx = context_from_json(j);
    std::vector<Element::Term> terms;
    for (const auto& t : j.at("terms")) {
        std::vector<int> syms;
        for (const auto& name : t.at("word")) syms.push_back(ctx->require(name.get<std::string>()));
        terms.emplace_back(Word::from_symbols(syms),
                           Rational::parse(t.at("coeff").get<std::string>()));
    }
    return Element::from_terms(std::move(ctx), std::move(terms));
}

Json morphism_to_json(const GroupMorphism& m) {
    const auto& ctx = m.context();
    Json out = Json::array();
    for (int i = 0; i < ctx->size(); ++i) {
        auto im = m.image(i);
        out.push_back({{"generator", ctx->generator(i).name},
                       {"image", ctx->generator(im.generator).name},
                       {"sign", im.sign}});
    }
    return out;
}

GroupMorphism morphism_from_json(const Json& j, const ContextPtr& ctx) {
    std::vector<GroupMorphism::Image> images(size_t(ctx->size()), {0, 1});
    for (const auto& entry : j) {
        int g = ctx->require(entry.at("generator").get<std::string>());
        int im = ctx->require(entry.at("image").get<std::string>());
        images[size_t(g)] = {im, entry.at("sign").get<int>()};
    }
    return GroupMorphism(ctx, std::move(images));
}

Json cdgl_to_json(const Cdgl& L) {
    Json out = context_to_json(L.ctx);
    Json diff = Json::array();
    for (int i = 0; i < L.ctx->size(); ++i)
        diff.push_back({{"generator", L.ctx->generator(i).name},
                        {"image", element_to_json(L.d.image(i))}});
    out["differential"] = std::move(diff);
    return out;
}

Cdgl cdgl_from_json(const Json& j) {
    ContextPtr ctx = context_from_json(j);
    std::vector<Element> images(size_t(ctx->size()), Element::zero(ctx));
    for (const auto& entry : j.at("differential")) {
        int g = ctx->require(entry.at("generator").get<std::string>());
        Element im = element_from_json(entry.at("image"));
        images[size_t(g)] = embed(im, ctx);
    }
    return Cdgl{ctx, Derivation(ctx, std::move(images))};
}

Json circuit_to_json(const CircuitModel& m) {
    Json out = cdgl_to_json(m.cdgl);
    out["k"] = m.k;
    out["morphisms"] = Json{{"sigma", morphism_to_json(m.sigma)}, {"tau", morphism_to_json(m.tau)}};
    return out;
}

Json triangle_to_json(const TriangleModel& m) {
    Json out = cdgl_to_json(m.cdgl);
    out["morphisms"] = Json{{"sigma", morphism_to_json(m.sigma)}, {"tau", morphism_to_json(m.tau)}};
    if (m.omega) out["omega"] = element_to_json(*m.omega);
    if (m.beta) out["beta"] = element_to_json(*m.beta);
    return out;
}

Json diagnostics_to_json(const std::vector<StageDiagnostics>& stages) {
    Json out = Json::array();
    for (const auto& s : stages)
        out.push_back({{"phase", s.phase},
                       {"length", s.length},
                       {"rows", s.rows},
                       {"cols", s.cols},
                       {"rank", s.rank},
                       {"residual_terms", s.residual_terms}});
    return out;
}

}  // namespace liemc
