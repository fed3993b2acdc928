#include <zfgd/errors.hh>
#include <zfgd/random.hh>

namespace zfgd
{
    auto splitmix64(std::uint64_t & state) -> std::uint64_t
    {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    Rng::Rng(std::uint64_t seed)
    {
        for (auto & s : _s)
            s = splitmix64(seed);
    }

    Rng::Rng(std::uint64_t seed, std::uint64_t index) :
        Rng(seed ^ splitmix64(index))
    {
    }

    namespace
    {
        constexpr auto rotl(std::uint64_t x, int k) -> std::uint64_t { return (x << k) | (x >> (64 - k)); }
    }

    auto Rng::next() -> std::uint64_t
    {
        auto result = rotl(_s[1] * 5, 7) * 9;
        auto t = _s[1] << 17;
        _s[2] ^= _s[0];
        _s[3] ^= _s[1];
        _s[1] ^= _s[2];
        _s[0] ^= _s[3];
        _s[2] ^= t;
        _s[3] = rotl(_s[3], 45);
        return result;
    }

    auto Rng::uniform(std::int64_t lo, std::int64_t hi) -> std::int64_t
    {
        auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0)
            return static_cast<std::int64_t>(next());
        auto limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
        std::uint64_t x;
        do
            x = next();
        while (x >= limit);
        return lo + static_cast<std::int64_t>(x % span);
    }

    auto Rng::bernoulli(double p) -> bool
    {
        return double(next() >> 11) * 0x1.0p-53 < p;
    }

    auto random_graph(Rng & rng, int n, double p) -> Graph
    {
        Graph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.bernoulli(p))
                    g.add_edge(i, j);
        return g;
    }

    auto random_bipartite(Rng & rng, int n, int a, double p) -> Graph
    {
        if (a < 1 || a >= n)
            throw InputError("random_bipartite needs two nonempty parts");
        Graph g(n);
        for (int i = 0; i < a; ++i)
            for (int j = a; j < n; ++j)
                if (rng.bernoulli(p))
                    g.add_edge(i, j);
        for (int v = 0; v < n; ++v)
            if (g.degree(v) == 0) {
                int u = v < a ? int(rng.uniform(a, n - 1)) : int(rng.uniform(0, a - 1));
                g.add_edge(u, v);
            }
        return g;
    }
}
