#include "lopcc/evaluation.hpp"

#include <cmath>
#include <stdexcept>

namespace lopcc {

namespace {

void compute_alphas(const Instance& inst, const Permutation& perm,
                    std::vector<double>& alpha, double& f) {
    const int n = perm.size();
    alpha.resize(n);
    f = 0.0;
    for (int i = n - 1; i >= 0; --i) {
        const int u = perm[i];
        const double* row = inst.cost_row(u);
        double a = inst.weight(u);
        for (int j = i + 1; j < n; ++j) a += row[perm[j]] * alpha[j];
        alpha[i] = a;
        f += a;
    }
}

}  // namespace

AlphaState::AlphaState(const Instance& inst, Permutation perm)
    : perm_(std::move(perm)) {
    if (perm_.size() != inst.size())
        throw std::invalid_argument("permutation length does not match instance");
    delta_.assign(perm_.size(), 0.0);
    compute_alphas(inst, perm_, alpha_, f_);
}

void AlphaState::refresh(const Instance& inst) {
    compute_alphas(inst, perm_, alpha_, f_);
    updates_since_refresh_ = 0;
}

void AlphaState::swap_adjacent(const Instance& inst, int j) {
    const int n = perm_.size();
    if (j < 0 || j + 1 >= n) throw std::out_of_range("swap position out of range");

    const int u = perm_[j];
    const int v = perm_[j + 1];

    const double new_u = alpha_[j] - inst.cost(u, v) * alpha_[j + 1];
    const double new_v = alpha_[j + 1] + inst.cost(v, u) * new_u;
    const double delta_u = new_u - alpha_[j];
    const double delta_v = new_v - alpha_[j + 1];

    perm_.swap_positions(j, j + 1);
    alpha_[j] = new_v;      // v now sits at position j
    alpha_[j + 1] = new_u;  // u at position j+1
    delta_[j] = delta_v;
    delta_[j + 1] = delta_u;
    double delta_sum = delta_u + delta_v;

    // Every earlier position sees changed downstream alphas; recompute the
    // deltas exactly, innermost first.
    for (int i = j - 1; i >= 0; --i) {
        const double* row = inst.cost_row(perm_[i]);
        double di = 0.0;
        for (int k = i + 1; k <= j + 1; ++k) di += row[perm_[k]] * delta_[k];
        alpha_[i] += di;
        delta_[i] = di;
        delta_sum += di;
    }
    f_ += delta_sum;

    if (++updates_since_refresh_ >= refresh_interval_) refresh(inst);
}

void AlphaState::swap_adjacent_naive(const Instance& inst, int j) {
    const int n = perm_.size();
    if (j < 0 || j + 1 >= n) throw std::out_of_range("swap position out of range");
    perm_.swap_positions(j, j + 1);
    compute_alphas(inst, perm_, alpha_, f_);
}

void AlphaState::insert(const Instance& inst, int i, int j) {
    const int n = perm_.size();
    if (i < 0 || i >= n || j < 0 || j >= n)
        throw std::out_of_range("insert position out of range");
    for (; i < j; ++i) swap_adjacent(inst, i);
    for (; i > j; --i) swap_adjacent(inst, i - 1);
}

double AlphaState::audit(const Instance& inst) const {
    std::vector<double> fresh;
    double fresh_f;
    compute_alphas(inst, perm_, fresh, fresh_f);
    double worst = 0.0;
    for (int i = 0; i < perm_.size(); ++i) {
        const double scale = std::max(1.0, std::fabs(fresh[i]));
        worst = std::max(worst, std::fabs(alpha_[i] - fresh[i]) / scale);
    }
    const double fscale = std::max(1.0, std::fabs(fresh_f));
    worst = std::max(worst, std::fabs(f_ - fresh_f) / fscale);
    return worst;
}

AlphaState evaluate(const Instance& inst, Permutation perm) {
    return AlphaState(inst, std::move(perm));
}

double objective_value(const Instance& inst, const Permutation& perm) {
    std::vector<double> alpha;
    double f;
    compute_alphas(inst, perm, alpha, f);
    return f;
}

}  // namespace lopcc
