#ifndef LOPCC_EVALUATION_HPP
#define LOPCC_EVALUATION_HPP

#include <vector>

#include "lopcc/instance.hpp"

namespace lopcc {

/// Relative tolerance for all alpha/objective equivalence checks.
inline constexpr double kEpsEval = 1e-9;

/// A permutation together with its cached per-position alpha values and
/// objective. The alphas satisfy, for every position i (0-based),
///
///   alpha[i] = d[pi_i] + sum_{j>i} C[pi_i][pi_j] * alpha[j]
///
/// and f = sum_i alpha[i]. Adjacent swaps maintain the cache incrementally:
/// only the two swapped positions plus the prefix before them are touched,
/// which is what makes walk-based local search cheaper than re-evaluating
/// the whole permutation after every candidate move.
///
/// Single-owner mutable; share across threads only by copy.
class AlphaState {
public:
    AlphaState(const Instance& inst, Permutation perm);

    const Permutation& perm() const { return perm_; }
    double objective() const { return f_; }
    double alpha(int pos) const { return alpha_[pos]; }
    const std::vector<double>& alphas() const { return alpha_; }
    int size() const { return perm_.size(); }

    /// Swaps positions j and j+1 (0-based) and restores the alpha/f cache
    /// exactly: with u, v the vertices at j, j+1,
    ///   alpha'_u = alpha_u - C[u][v] * alpha_v
    ///   alpha'_v = alpha_v + C[v][u] * alpha'_u
    /// and the resulting deltas are cascaded through positions j-1 .. 0.
    void swap_adjacent(const Instance& inst, int j);

    /// Full-recompute twin of swap_adjacent, used as the naive baseline when
    /// measuring the incremental engine.
    void swap_adjacent_naive(const Instance& inst, int j);

    /// Moves the vertex at position i to position j (vertices between shift
    /// by one), realized as |i-j| adjacent swaps.
    void insert(const Instance& inst, int i, int j);

    /// Recomputes alpha and f from scratch via the backward recurrence.
    void refresh(const Instance& inst);

    /// Largest relative error of the cached alphas and f against a full
    /// recomputation; used by tests and debug audits.
    double audit(const Instance& inst) const;

    /// Incremental updates between automatic refreshes. The default bounds
    /// floating-point drift to well under kEpsEval.
    void set_refresh_interval(long interval) { refresh_interval_ = interval; }

private:
    Permutation perm_;
    std::vector<double> alpha_;
    std::vector<double> delta_;  // cascade scratch, position-indexed
    double f_ = 0.0;
    long updates_since_refresh_ = 0;
    long refresh_interval_ = 10000;
};

/// Computes alpha by the backward recurrence i = n-1 .. 0 in O(n^2).
AlphaState evaluate(const Instance& inst, Permutation perm);

/// Objective value alone, without building a state.
double objective_value(const Instance& inst, const Permutation& perm);

}  // namespace lopcc

#endif
