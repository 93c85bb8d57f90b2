#pragma once

#include <concepts>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "capelli/coefficient.hpp"

namespace capelli {

// Capabilities shared by every algebra engine. Elements carry their own ring
// context, so zero_like/one_like produce elements of the same ring instance.
template <class R>
concept Ring = std::copyable<R> && requires(const R& a, const R& b, const Coefficient& c) {
    { a + b } -> std::same_as<R>;
    { a - b } -> std::same_as<R>;
    { -a } -> std::same_as<R>;
    { a * b } -> std::same_as<R>;
    { a.scaled(c) } -> std::same_as<R>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.zero_like() } -> std::same_as<R>;
    { a.one_like() } -> std::same_as<R>;
    { a.term_count() } -> std::convertible_to<std::size_t>;
    { a.to_string() } -> std::convertible_to<std::string>;
};

template <class R>
concept ConjugateRing = Ring<R> && requires(const R& a) {
    { bar(a) } -> std::same_as<R>;
};

template <Ring R>
bool equal(const R& x, const R& y) {
    return (x - y).is_zero();
}

template <Ring R>
R commutator(const R& x, const R& y) {
    return x * y - y * x;
}

template <Ring R>
R constant_like(const R& proto, const Coefficient& c) {
    return proto.one_like().scaled(c);
}

// Sum of many elements by pairwise reduction; the result is canonical so the
// grouping does not affect it.
template <Ring R>
R tree_sum(std::vector<R> items, const R& proto) {
    if (items.empty()) return proto.zero_like();
    while (items.size() > 1) {
        std::vector<R> next;
        next.reserve((items.size() + 1) / 2);
        for (std::size_t k = 0; k + 1 < items.size(); k += 2)
            next.push_back(items[k] + items[k + 1]);
        if (items.size() % 2) next.push_back(std::move(items.back()));
        items = std::move(next);
    }
    return std::move(items.front());
}

template <class R>
concept Accumulating = Ring<R> && requires(const R& x, const Coefficient& c) {
    make_accumulator(x);
    make_accumulator(x).add(x, c);
    make_accumulator(x).add_product(x, x, c);
    { make_accumulator(x).finish() } -> std::same_as<R>;
};

// Fallback accumulator for rings without a dedicated one.
template <Ring R>
class ListAccumulator {
public:
    explicit ListAccumulator(const R& proto) : proto_(proto.zero_like()) {}
    void add(const R& x, const Coefficient& c = Coefficient(1)) {
        if (!x.is_zero()) items_.push_back(c.is_one() ? x : x.scaled(c));
    }
    void add_product(const R& a, const R& b, const Coefficient& c = Coefficient(1)) {
        if (!a.is_zero() && !b.is_zero()) add(a * b, c);
    }
    R finish() { return tree_sum(std::move(items_), proto_); }

private:
    R proto_;
    std::vector<R> items_;
};

template <Ring R>
auto accumulator_for(const R& proto) {
    if constexpr (Accumulating<R>) return make_accumulator(proto);
    else return ListAccumulator<R>(proto);
}

} // namespace capelli
