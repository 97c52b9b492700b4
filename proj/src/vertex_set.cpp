#include <icf/vertex_set.hpp>
#include <icf/errors.hpp>

#include <algorithm>
#include <bit>
#include <string>

namespace icf
{
    namespace
    {
        auto words_for(std::size_t universe) -> std::size_t
        {
            return (universe + VertexSet::word_bits - 1) / VertexSet::word_bits;
        }
    }

    VertexSet::VertexSet(std::size_t universe) :
        _universe(universe),
        _words(words_for(universe), 0)
    {
    }

    VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members) :
        VertexSet(universe)
    {
        for (auto v : members)
            insert(v);
    }

    VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) :
        VertexSet(universe)
    {
        for (auto v : members)
            insert(v);
    }

    auto VertexSet::full(std::size_t universe) -> VertexSet
    {
        VertexSet result(universe);
        std::fill(result._words.begin(), result._words.end(), ~Word{0});
        if (auto tail = universe % word_bits ; tail != 0)
            result._words.back() = (Word{1} << tail) - 1;
        return result;
    }

    auto VertexSet::check(Vertex v) const -> void
    {
        if (v >= _universe)
            throw InvalidVertex("vertex " + std::to_string(v) + " out of range for universe of size "
                    + std::to_string(_universe));
    }

    auto VertexSet::check_same_universe(const VertexSet & other) const -> void
    {
        if (other._universe != _universe)
            throw InvalidArgument("vertex sets over different universes ("
                    + std::to_string(_universe) + " vs " + std::to_string(other._universe) + ")");
    }

    auto VertexSet::insert(Vertex v) -> void
    {
        check(v);
        _words[v / word_bits] |= Word{1} << (v % word_bits);
    }

    auto VertexSet::erase(Vertex v) -> void
    {
        check(v);
        _words[v / word_bits] &= ~(Word{1} << (v % word_bits));
    }

    auto VertexSet::contains(Vertex v) const -> bool
    {
        if (v >= _universe)
            return false;
        return (_words[v / word_bits] >> (v % word_bits)) & 1;
    }

    auto VertexSet::count() const -> std::size_t
    {
        std::size_t result = 0;
        for (auto w : _words)
            result += static_cast<std::size_t>(std::popcount(w));
        return result;
    }

    auto VertexSet::empty() const -> bool
    {
        return std::all_of(_words.begin(), _words.end(), [] (Word w) { return w == 0; });
    }

    auto VertexSet::first() const -> Vertex
    {
        for (std::size_t w = 0 ; w < _words.size() ; ++w)
            if (_words[w])
                return w * word_bits + static_cast<std::size_t>(std::countr_zero(_words[w]));
        return _universe;
    }

    auto VertexSet::next_after(Vertex v) const -> Vertex
    {
        std::size_t start = v + 1;
        if (start >= _universe)
            return _universe;
        std::size_t w = start / word_bits;
        Word bits = _words[w] & (~Word{0} << (start % word_bits));
        while (true) {
            if (bits)
                return w * word_bits + static_cast<std::size_t>(std::countr_zero(bits));
            if (++w == _words.size())
                return _universe;
            bits = _words[w];
        }
    }

    auto VertexSet::clear_up_to(Vertex v) -> void
    {
        if (_words.empty())
            return;
        std::size_t last = std::min(v, _universe - 1);
        std::size_t w = last / word_bits;
        std::fill(_words.begin(), _words.begin() + static_cast<std::ptrdiff_t>(w), Word{0});
        auto bit = last % word_bits;
        if (bit == word_bits - 1)
            _words[w] = 0;
        else
            _words[w] &= ~Word{0} << (bit + 1);
    }

    auto VertexSet::operator&=(const VertexSet & other) -> VertexSet &
    {
        check_same_universe(other);
        for (std::size_t w = 0 ; w < _words.size() ; ++w)
            _words[w] &= other._words[w];
        return *this;
    }

    auto VertexSet::operator|=(const VertexSet & other) -> VertexSet &
    {
        check_same_universe(other);
        for (std::size_t w = 0 ; w < _words.size() ; ++w)
            _words[w] |= other._words[w];
        return *this;
    }

    auto VertexSet::operator-=(const VertexSet & other) -> VertexSet &
    {
        check_same_universe(other);
        for (std::size_t w = 0 ; w < _words.size() ; ++w)
            _words[w] &= ~other._words[w];
        return *this;
    }

    auto VertexSet::is_subset_of(const VertexSet & other) const -> bool
    {
        check_same_universe(other);
        for (std::size_t w = 0 ; w < _words.size() ; ++w)
            if (_words[w] & ~other._words[w])
                return false;
        return true;
    }

    auto VertexSet::intersects(const VertexSet & other) const -> bool
    {
        check_same_universe(other);
        for (std::size_t w = 0 ; w < _words.size() ; ++w)
            if (_words[w] & other._words[w])
                return true;
        return false;
    }

    auto VertexSet::members() const -> std::vector<Vertex>
    {
        std::vector<Vertex> result;
        result.reserve(count());
        for_each([&] (Vertex v) { result.push_back(v); });
        return result;
    }

    auto operator&(VertexSet a, const VertexSet & b) -> VertexSet
    {
        a &= b;
        return a;
    }

    auto operator|(VertexSet a, const VertexSet & b) -> VertexSet
    {
        a |= b;
        return a;
    }

    auto operator-(VertexSet a, const VertexSet & b) -> VertexSet
    {
        a -= b;
        return a;
    }

    auto intersection_count(const VertexSet & a, const VertexSet & b) -> std::size_t
    {
        if (a.universe() != b.universe())
            throw InvalidArgument("vertex sets over different universes");
        auto wa = a.words(), wb = b.words();
        std::size_t result = 0;
        for (std::size_t w = 0 ; w < wa.size() ; ++w)
            result += static_cast<std::size_t>(std::popcount(wa[w] & wb[w]));
        return result;
    }

    auto lexicographic_less(const VertexSet & a, const VertexSet & b) -> bool
    {
        Vertex x = a.first(), y = b.first();
        while (x != a.universe() && y != b.universe()) {
            if (x != y)
                return x < y;
            x = a.next_after(x);
            y = b.next_after(y);
        }
        return x == a.universe() && y != b.universe();
    }

    auto VertexSetHash::operator()(const VertexSet & s) const noexcept -> std::size_t
    {
        std::size_t h = std::hash<std::size_t>{}(s.universe());
        for (auto w : s.words())
            h ^= std::hash<VertexSet::Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
}
