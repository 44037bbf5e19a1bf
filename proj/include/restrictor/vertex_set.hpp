#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

namespace restrictor {

using Vertex = std::size_t;

inline constexpr Vertex no_vertex = static_cast<Vertex>(-1);

/**
 * A subset of {0, ..., universe - 1}, packed into 64-bit words. Every set
 * operation is word-parallel; the two operands of a binary operation must
 * share a universe.
 */
class VertexSet
{
public:
    class const_iterator
    {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex *;
        using reference = Vertex;

        const_iterator() = default;
        const_iterator(const VertexSet * set, Vertex at) : set_(set), at_(at) {}

        auto operator*() const -> Vertex { return at_; }
        auto operator++() -> const_iterator &
        {
            at_ = set_->next(at_);
            return *this;
        }
        auto operator++(int) -> const_iterator
        {
            auto copy = *this;
            ++*this;
            return copy;
        }
        auto operator==(const const_iterator & other) const -> bool { return at_ == other.at_; }

    private:
        const VertexSet * set_ = nullptr;
        Vertex at_ = no_vertex;
    };

    VertexSet() = default;

    explicit VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

    VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe)
    {
        for (auto v : members) insert(v);
    }

    template <typename Range>
    static auto from(std::size_t universe, const Range & members) -> VertexSet
    {
        VertexSet result(universe);
        for (auto v : members) result.insert(static_cast<Vertex>(v));
        return result;
    }

    static auto full(std::size_t universe) -> VertexSet
    {
        VertexSet result(universe);
        for (auto & w : result.words_) w = ~std::uint64_t{0};
        result.trim();
        return result;
    }

    auto universe() const -> std::size_t { return universe_; }

    auto count() const -> std::size_t
    {
        std::size_t total = 0;
        for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }

    auto empty() const -> bool
    {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    auto contains(Vertex v) const -> bool { return v < universe_ && ((words_[v / 64] >> (v % 64)) & 1U); }

    void insert(Vertex v)
    {
        check_member(v);
        words_[v / 64] |= std::uint64_t{1} << (v % 64);
    }

    void erase(Vertex v)
    {
        check_member(v);
        words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }

    void clear()
    {
        for (auto & w : words_) w = 0;
    }

    /// Smallest member, or no_vertex.
    auto first() const -> Vertex { return scan_from(0); }

    /// Smallest member greater than v, or no_vertex.
    auto next(Vertex v) const -> Vertex { return v + 1 >= universe_ ? no_vertex : scan_from(v + 1); }

    auto begin() const -> const_iterator { return {this, first()}; }
    auto end() const -> const_iterator { return {this, no_vertex}; }

    auto to_vector() const -> std::vector<Vertex>
    {
        std::vector<Vertex> out;
        out.reserve(count());
        for (auto v : *this) out.push_back(v);
        return out;
    }

    auto intersection_count(const VertexSet & other) const -> std::size_t
    {
        check_compatible(other);
        std::size_t total = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            total += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
        return total;
    }

    auto intersects(const VertexSet & other) const -> bool
    {
        check_compatible(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    auto is_subset_of(const VertexSet & other) const -> bool
    {
        check_compatible(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    auto operator&=(const VertexSet & other) -> VertexSet &
    {
        check_compatible(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }

    auto operator|=(const VertexSet & other) -> VertexSet &
    {
        check_compatible(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }

    auto operator-=(const VertexSet & other) -> VertexSet &
    {
        check_compatible(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
        return *this;
    }

    friend auto operator&(VertexSet a, const VertexSet & b) -> VertexSet { return a &= b; }
    friend auto operator|(VertexSet a, const VertexSet & b) -> VertexSet { return a |= b; }
    friend auto operator-(VertexSet a, const VertexSet & b) -> VertexSet { return a -= b; }

    friend auto operator==(const VertexSet & a, const VertexSet & b) -> bool
    {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }

    /// Lexicographic comparison of sorted member lists.
    friend auto lex_less(const VertexSet & a, const VertexSet & b) -> bool
    {
        auto x = a.begin(), y = b.begin();
        for (; x != a.end() && y != b.end(); ++x, ++y)
            if (*x != *y) return *x < *y;
        return x == a.end() && y != b.end();
    }

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;

    void trim()
    {
        if (universe_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
    }

    void check_member(Vertex v) const
    {
        if (v >= universe_)
            throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of size " +
                                    std::to_string(universe_));
    }

    void check_compatible(const VertexSet & other) const
    {
        if (other.universe_ != universe_) throw std::invalid_argument("vertex sets over different universes");
    }

    auto scan_from(Vertex from) const -> Vertex
    {
        std::size_t word = from / 64;
        if (word >= words_.size()) return no_vertex;
        std::uint64_t bits = words_[word] & (~std::uint64_t{0} << (from % 64));
        while (true) {
            if (bits) return word * 64 + static_cast<std::size_t>(std::countr_zero(bits));
            if (++word >= words_.size()) return no_vertex;
            bits = words_[word];
        }
    }
};

} // namespace restrictor
