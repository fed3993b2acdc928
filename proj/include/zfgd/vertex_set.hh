#ifndef ZFGD_VERTEX_SET_HH
#define ZFGD_VERTEX_SET_HH

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace zfgd
{
    /// Fixed-capacity bit vector over vertex indices. Three words cover the
    /// tripled vertex count of a B_L product built from a 62-vertex graph.
    class VertexSet
    {
        public:
            static constexpr int words = 3;
            static constexpr int capacity = 64 * words;

            constexpr VertexSet() = default;

            VertexSet(std::initializer_list<int> vs)
            {
                for (int v : vs)
                    set(v);
            }

            static auto range(int n) -> VertexSet
            {
                VertexSet r;
                for (int w = 0; w < words && n > 0; ++w, n -= 64)
                    r._bits[w] = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
                return r;
            }

            static auto from(const std::vector<int> & vs) -> VertexSet
            {
                VertexSet r;
                for (int v : vs)
                    r.set(v);
                return r;
            }

            auto test(int v) const -> bool { return (_bits[v >> 6] >> (v & 63)) & 1; }
            auto set(int v) -> void { _bits[v >> 6] |= std::uint64_t{1} << (v & 63); }
            auto reset(int v) -> void { _bits[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

            auto count() const -> int
            {
                int c = 0;
                for (auto w : _bits)
                    c += std::popcount(w);
                return c;
            }

            auto any() const -> bool { return (_bits[0] | _bits[1] | _bits[2]) != 0; }
            auto none() const -> bool { return ! any(); }

            /// Lowest member, or -1 when empty.
            auto first() const -> int
            {
                for (int w = 0; w < words; ++w)
                    if (_bits[w])
                        return 64 * w + std::countr_zero(_bits[w]);
                return -1;
            }

            /// Lowest member strictly above v, or -1.
            auto next(int v) const -> int
            {
                ++v;
                if (v >= capacity)
                    return -1;
                int w = v >> 6;
                std::uint64_t cur = _bits[w] & (~std::uint64_t{0} << (v & 63));
                while (true) {
                    if (cur)
                        return 64 * w + std::countr_zero(cur);
                    if (++w == words)
                        return -1;
                    cur = _bits[w];
                }
            }

            /// Highest member, or -1 when empty.
            auto last() const -> int
            {
                for (int w = words - 1; w >= 0; --w)
                    if (_bits[w])
                        return 64 * w + 63 - std::countl_zero(_bits[w]);
                return -1;
            }

            template <typename F>
            auto for_each(F && f) const -> void
            {
                for (int w = 0; w < words; ++w)
                    for (auto b = _bits[w]; b; b &= b - 1)
                        f(64 * w + std::countr_zero(b));
            }

            auto to_vector() const -> std::vector<int>
            {
                std::vector<int> r;
                for_each([&](int v) { r.push_back(v); });
                return r;
            }

            auto is_subset_of(const VertexSet & o) const -> bool
            {
                for (int w = 0; w < words; ++w)
                    if (_bits[w] & ~o._bits[w])
                        return false;
                return true;
            }

            auto intersects(const VertexSet & o) const -> bool
            {
                for (int w = 0; w < words; ++w)
                    if (_bits[w] & o._bits[w])
                        return true;
                return false;
            }

            auto operator|=(const VertexSet & o) -> VertexSet &
            {
                for (int w = 0; w < words; ++w)
                    _bits[w] |= o._bits[w];
                return *this;
            }

            auto operator&=(const VertexSet & o) -> VertexSet &
            {
                for (int w = 0; w < words; ++w)
                    _bits[w] &= o._bits[w];
                return *this;
            }

            /// Set difference.
            auto operator-=(const VertexSet & o) -> VertexSet &
            {
                for (int w = 0; w < words; ++w)
                    _bits[w] &= ~o._bits[w];
                return *this;
            }

            friend auto operator|(VertexSet a, const VertexSet & b) -> VertexSet { return a |= b; }
            friend auto operator&(VertexSet a, const VertexSet & b) -> VertexSet { return a &= b; }
            friend auto operator-(VertexSet a, const VertexSet & b) -> VertexSet { return a -= b; }

            friend auto operator==(const VertexSet &, const VertexSet &) -> bool = default;

            /// Ordering by sorted member lists, lexicographically.
            friend auto lex_less(const VertexSet & a, const VertexSet & b) -> bool
            {
                int x = a.first(), y = b.first();
                while (x != -1 && y != -1) {
                    if (x != y)
                        return x < y;
                    x = a.next(x);
                    y = b.next(y);
                }
                return x == -1 && y != -1;
            }

            auto hash() const -> std::size_t
            {
                std::uint64_t h = 0x9e3779b97f4a7c15ULL;
                for (auto w : _bits)
                    h = (h ^ w) * 0xff51afd7ed558ccdULL;
                return static_cast<std::size_t>(h ^ (h >> 33));
            }

        private:
            std::array<std::uint64_t, words> _bits{};
    };
}

template <>
struct std::hash<zfgd::VertexSet>
{
    auto operator()(const zfgd::VertexSet & s) const noexcept -> std::size_t { return s.hash(); }
};

#endif
