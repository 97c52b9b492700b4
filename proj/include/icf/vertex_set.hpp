#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace icf
{
    using Vertex = std::size_t;

    /**
     * Fixed-universe bitset over vertex indices 0..universe-1.
     *
     * All binary operations require both operands to share the same universe
     * size. Bits beyond the universe in the last word are kept clear, so word
     * level comparisons and popcounts are exact.
     */
    class VertexSet
    {
        public:
            using Word = std::uint64_t;
            static constexpr std::size_t word_bits = 64;

            VertexSet() = default;
            explicit VertexSet(std::size_t universe);
            VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
            VertexSet(std::size_t universe, std::span<const Vertex> members);

            static auto full(std::size_t universe) -> VertexSet;

            auto universe() const -> std::size_t { return _universe; }

            auto insert(Vertex v) -> void;
            auto erase(Vertex v) -> void;
            auto contains(Vertex v) const -> bool;

            auto count() const -> std::size_t;
            auto empty() const -> bool;

            /// Smallest member, or universe() when empty.
            auto first() const -> Vertex;
            /// Smallest member strictly greater than v, or universe() when none.
            auto next_after(Vertex v) const -> Vertex;

            /// Removes every member <= v.
            auto clear_up_to(Vertex v) -> void;

            auto operator&=(const VertexSet & other) -> VertexSet &;
            auto operator|=(const VertexSet & other) -> VertexSet &;
            auto operator-=(const VertexSet & other) -> VertexSet &;

            auto is_subset_of(const VertexSet & other) const -> bool;
            auto intersects(const VertexSet & other) const -> bool;

            /// Ascending member list.
            auto members() const -> std::vector<Vertex>;

            template <typename F>
            auto for_each(F && f) const -> void
            {
                for (std::size_t w = 0 ; w < _words.size() ; ++w) {
                    Word bits = _words[w];
                    while (bits) {
                        auto bit = static_cast<std::size_t>(std::countr_zero(bits));
                        f(w * word_bits + bit);
                        bits &= bits - 1;
                    }
                }
            }

            auto words() const -> std::span<const Word> { return _words; }

            auto operator==(const VertexSet & other) const -> bool = default;

        private:
            std::size_t _universe = 0;
            std::vector<Word> _words;

            auto check(Vertex v) const -> void;
            auto check_same_universe(const VertexSet & other) const -> void;
    };

    auto operator&(VertexSet a, const VertexSet & b) -> VertexSet;
    auto operator|(VertexSet a, const VertexSet & b) -> VertexSet;
    auto operator-(VertexSet a, const VertexSet & b) -> VertexSet;

    auto intersection_count(const VertexSet & a, const VertexSet & b) -> std::size_t;

    /// Lexicographic order on ascending member lists (a proper prefix sorts first).
    auto lexicographic_less(const VertexSet & a, const VertexSet & b) -> bool;

    struct VertexSetHash
    {
        auto operator()(const VertexSet & s) const noexcept -> std::size_t;
    };
}
