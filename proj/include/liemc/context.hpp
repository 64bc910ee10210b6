#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace liemc {

struct Generator {
    std::string name;
    int degree = 0;

    bool operator==(const Generator&) const = default;
};

// A word of the free associative algebra: an ordered sequence of generator
// indices, packed into one 64-bit value. Bits 63..60 hold the length, bits
// 59..0 hold up to twelve 5-bit symbols, first symbol in the highest slot.
// With that layout the numeric order on the packed value is exactly the
// canonical term order: by length, then lexicographic by generator index.
class Word {
public:
    static constexpr int kMaxLength = 12;
    static constexpr int kMaxSymbol = 31;

    Word() = default;  // the empty word (algebra unit)

    static Word single(int sym) {
        return Word((uint64_t{1} << 60) | (uint64_t(sym) << 55));
    }
    static Word from_symbols(std::span<const int> syms);

    int length() const { return int(bits_ >> 60); }
    bool empty() const { return bits_ == 0; }
    int symbol(int i) const { return int((bits_ >> (55 - 5 * i)) & 0x1f); }

    // Concatenation. The caller enforces the truncation bound.
    Word concat(const Word& o) const {
        const uint64_t mask = (uint64_t{1} << 60) - 1;
        uint64_t sym = (bits_ & mask) | ((o.bits_ & mask) >> (5 * length()));
        return Word((uint64_t(length() + o.length()) << 60) | sym);
    }

    friend auto operator<=>(const Word&, const Word&) = default;

    uint64_t raw() const { return bits_; }
    static Word from_raw(uint64_t bits) { return Word(bits); }

private:
    explicit Word(uint64_t bits) : bits_(bits) {}
    uint64_t bits_ = 0;
};

class AlgebraContext;
// Contexts are immutable after construction and shared by pointer.
using ContextPtr = std::shared_ptr<AlgebraContext>;

// Immutable: an ordered generator list plus the truncation order N. Every
// Element lives in exactly one context; mixing contexts is an error, never
// an implicit coercion.
class AlgebraContext {
public:
    static constexpr int kMaxGenerators = Word::kMaxSymbol + 1;
    static constexpr int kMaxTruncation = Word::kMaxLength;

    static ContextPtr make(std::vector<Generator> generators, int truncation);

    int truncation() const { return truncation_; }
    int size() const { return int(generators_.size()); }
    const Generator& generator(int i) const { return generators_[size_t(i)]; }
    const std::vector<Generator>& generators() const { return generators_; }
    int degree(int i) const { return generators_[size_t(i)].degree; }

    std::optional<int> index_of(std::string_view name) const;
    int require(std::string_view name) const;

    int word_degree(const Word& w) const {
        int d = 0;
        for (int i = 0; i < w.length(); ++i) d += degree(w.symbol(i));
        return d;
    }

    bool operator==(const AlgebraContext& o) const {
        return truncation_ == o.truncation_ && generators_ == o.generators_;
    }

private:
    AlgebraContext(std::vector<Generator> generators, int truncation)
        : generators_(std::move(generators)), truncation_(truncation) {}

    std::vector<Generator> generators_;
    int truncation_;
};

bool compatible(const ContextPtr& a, const ContextPtr& b);
void require_compatible(const ContextPtr& a, const ContextPtr& b);

}  // namespace liemc
