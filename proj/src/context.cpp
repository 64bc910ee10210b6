#include "liemc/context.hpp"

#include <stdexcept>
#include <unordered_set>

namespace liemc {

Word Word::from_symbols(std::span<const int> syms) {
    if (int(syms.size()) > kMaxLength)
        throw std::invalid_argument("Word: length exceeds representation limit");
    Word w;
    for (int s : syms) {
        if (s < 0 || s > kMaxSymbol) throw std::invalid_argument("Word: symbol out of range");
        w = w.concat(single(s));
    }
    return w;
}

ContextPtr AlgebraContext::make(std::vector<Generator> generators, int truncation) {
    if (truncation < 1 || truncation > kMaxTruncation)
        throw std::invalid_argument("AlgebraContext: truncation must be in 1.." +
                                    std::to_string(kMaxTruncation));
    if (generators.empty() || int(generators.size()) > kMaxGenerators)
        throw std::invalid_argument("AlgebraContext: generator count must be in 1.." +
                                    std::to_string(kMaxGenerators));
    std::unordered_set<std::string> names;
    for (const auto& g : generators) {
        if (g.name.empty()) throw std::invalid_argument("AlgebraContext: empty generator name");
        if (!names.insert(g.name).second)
            throw std::invalid_argument("AlgebraContext: duplicate generator '" + g.name + "'");
    }
    return ContextPtr(new AlgebraContext(std::move(generators), truncation));
}

std::optional<int> AlgebraContext::index_of(std::string_view name) const {
    for (int i = 0; i < size(); ++i)
        if (generators_[size_t(i)].name == name) return i;
    return std::nullopt;
}

int AlgebraContext::require(std::string_view name) const {
    if (auto i = index_of(name)) return *i;
    throw std::invalid_argument("AlgebraContext: unknown generator '" + std::string(name) + "'");
}

bool compatible(const ContextPtr& a, const ContextPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

void require_compatible(const ContextPtr& a, const ContextPtr& b) {
    if (!compatible(a, b)) throw std::invalid_argument("context mismatch");
}

}  // namespace liemc
