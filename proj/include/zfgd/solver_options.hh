#ifndef ZFGD_SOLVER_OPTIONS_HH
#define ZFGD_SOLVER_OPTIONS_HH

namespace zfgd
{
    struct SolverOptions
    {
        /// Exact solvers refuse graphs with more vertices than this.
        int max_n = 20;
        /// Return the lexicographically smallest optimal certificate.
        bool deterministic = true;
        /// Grundy search: exact memoised recursion over (used, footprint)
        /// instead of branch-and-bound.
        bool transposition_table = false;
    };
}

#endif
