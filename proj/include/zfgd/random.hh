#ifndef ZFGD_RANDOM_HH
#define ZFGD_RANDOM_HH

#include <zfgd/graph.hh>

#include <cstdint>

namespace zfgd
{
    /// xoshiro256** seeded through splitmix64, with rejection-sampled bounded
    /// draws, so a seed yields the same stream on every platform.
    class Rng
    {
        public:
            explicit Rng(std::uint64_t seed);
            /// Independent stream for (seed, index), e.g. one per sampling trial.
            Rng(std::uint64_t seed, std::uint64_t index);

            auto next() -> std::uint64_t;
            /// Uniform on [lo, hi].
            auto uniform(std::int64_t lo, std::int64_t hi) -> std::int64_t;
            auto bernoulli(double p) -> bool;

        private:
            std::uint64_t _s[4];
    };

    auto splitmix64(std::uint64_t & state) -> std::uint64_t;

    /// G(n, p).
    auto random_graph(Rng & rng, int n, double p) -> Graph;

    /// Random bipartite graph on parts of size a and n - a with no isolated
    /// vertex; needs 1 <= a < n. Edges drawn with probability p, then every
    /// isolated vertex gets one random edge across.
    auto random_bipartite(Rng & rng, int n, int a, double p) -> Graph;
}

#endif
