#ifndef PDATTACK_ATTACK_HPP
#define PDATTACK_ATTACK_HPP

#include <cstdint>
#include <optional>

#include "pdattack/classifier.hpp"
#include "pdattack/dataset.hpp"
#include "pdattack/proxops.hpp"

namespace pdattack {

enum class AttackMethod { Pdgd, Pdpgd };

struct AttackConfig {
    NormKind norm{NormTag::L2, 1};
    std::size_t iterations = 500;
    double primal_lr = 0.1;
    double dual_lr = 0.1;
    double dual_init = 0.1;          // initial penalty ratio
    double init_scale = 0.5;         // uniform init half-width
    std::size_t restarts = 1;
    double primal_decay_floor = 0.01;  // exponential decay target fraction
    double dual_decay_floor = 0.1;     // linear decay target fraction
    double ema_decay = 0.9;
    std::size_t finetune_iterations = 500;
    std::uint64_t seed = 0;
};

/// The lambda-player's state: a point on the 2-simplex plus the smoothed
/// penalty ratio that feeds the primal update.
struct DualState {
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double log_lambda = 0.0;  // log(lambda2 / lambda1)
    double ema_value = 0.0;   // EMA of lambda1 / lambda2
    double ema_decay = 0.9;
};

DualState make_dual_state(double initial_ratio, double ema_decay);

/// One multiplicative ascent step on lambda2 in the log domain followed by
/// Euclidean projection back onto the simplex. `constraint_violated` means
/// the input is still classified correctly, in which case the penalty
/// lambda2 grows; otherwise it decays and norm minimisation takes over.
DualState dual_update(const DualState& state, bool constraint_violated, double lr);

/// Penalty weight for the prox / norm term: EMA-smoothed lambda1/lambda2.
double effective_lambda(const DualState& state);

struct PerturbationState {
    Tensor r;
    std::optional<Tensor> r_best;
    double best_norm = 0.0;  // +inf until a feasible perturbation is found
    Tensor adam_m;
    Tensor adam_v;
    std::size_t step_count = 0;
};

PerturbationState make_perturbation_state(const Tensor& r0);

/// Bias-corrected Adam update of state.r along `grad` (beta1 = 0.9,
/// beta2 = 0.999, eps = 1e-8).
PerturbationState adam_step(const PerturbationState& state, const Tensor& grad,
                            double lr);

enum class ScheduleMode { ExponentialToFloor, LinearToFloor };

/// Learning rate at step k of T, decaying from `initial` to
/// floor_fraction * initial.
double schedule_lr(double initial, std::size_t k, std::size_t total,
                   ScheduleMode mode, double floor_fraction);

/// I.i.d. uniform values in [-scale, scale], deterministic per seed.
Tensor random_init(const std::vector<std::size_t>& shape, double scale,
                   std::uint64_t seed);

struct AttackOutcome {
    bool success = false;
    std::optional<Tensor> perturbation;
    double norm = 0.0;
    std::size_t iterations_used = 0;
    int restart_index_of_best = -1;
};

/// One optimisation run of the primal-dual gradient attack (differentiable
/// norms only, i.e. l2). No restarts, no finetuning.
AttackOutcome pdgd_attack(const Classifier& model, const LabeledExample& ex,
                          const AttackConfig& cfg);

/// One optimisation run of the primal-dual proximal gradient attack; supports
/// every NormKind.
AttackOutcome pdpgd_attack(const Classifier& model, const LabeledExample& ex,
                           const AttackConfig& cfg);

/// Full attack protocol: cfg.restarts independent runs from distinct
/// sub-seeds, then a finetuning run of cfg.finetune_iterations initialised
/// from the best perturbation found (or, if none, from the final iterate of
/// the restart with the lowest final loss). The reported norm never exceeds
/// the best pre-finetune norm.
AttackOutcome attack_with_restarts(const Classifier& model,
                                   const LabeledExample& ex,
                                   const AttackConfig& cfg,
                                   AttackMethod method);

}  // namespace pdattack

#endif  // PDATTACK_ATTACK_HPP
