#ifndef PDATTACK_PROXOPS_HPP
#define PDATTACK_PROXOPS_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "pdattack/tensor.hpp"

namespace pdattack {

/// Magnitudes at or below this count as zero when evaluating sparsity norms.
inline constexpr double kEffectiveZero = 1e-12;

enum class NormTag { Linf, L2, L1, L0, GroupL0, LpHalf, LpTwoThirds };

struct NormKind {
    NormTag tag = NormTag::L2;
    std::size_t group_size = 1;  // GroupL0 only (e.g. 3 for RGB)
};

std::string to_string(const NormKind& kind);
NormKind norm_kind_from_string(const std::string& s);

/// Assignment of each coordinate to one of `num_groups` groups; groups are
/// disjoint and cover all coordinates by construction.
struct GroupPartition {
    std::size_t num_groups = 0;
    std::vector<std::size_t> group_of;

    static GroupPartition contiguous(std::size_t length, std::size_t group_size);
    void validate(std::size_t length) const;
    std::vector<std::vector<std::size_t>> members() const;
};

/// Norm (or quasinorm) value. L0 and group-L0 ignore magnitudes at or below
/// kEffectiveZero; Lp uses the quasinorm (sum |v|^p)^(1/p).
double norm_value(const NormKind& kind, const Tensor& v);

/// Perturbation-space box projection: returns r' with x + r' clamped into
/// [0,1] coordinatewise.
Tensor project_box(const Tensor& x, const Tensor& r);

/// Euclidean projection onto {(a,b) : a,b >= 0, a+b = 1}.
std::array<double, 2> project_simplex2(const std::array<double, 2>& v);

/// Euclidean projection onto the l1 ball, sort-and-threshold, O(n log n).
Tensor project_l1_ball(const Tensor& v, double radius);

Tensor project_l2_ball(const Tensor& v, double radius);
Tensor project_linf_ball(const Tensor& v, double radius);

// Proximal operators, all solving
//   argmin_u f(u) + ||u - v||^2 / (2 lambda)
// for the respective norm f. Thresholding ties go to zero.

Tensor prox_l1(const Tensor& v, double lambda);
Tensor prox_l2(const Tensor& v, double lambda);
/// Computed exactly through the Moreau decomposition with project_l1_ball.
Tensor prox_linf(const Tensor& v, double lambda);
Tensor prox_l0(const Tensor& v, double lambda);
Tensor prox_group_l0(const Tensor& v, double lambda, const GroupPartition& part);
Tensor prox_lp(const Tensor& v, double lambda, double p);
/// Shrinks each group's max-magnitude coordinate with the scalar lp prox;
/// zeroes the whole group when that coordinate is thresholded away, leaves
/// the rest of the group unchanged otherwise.
Tensor prox_group_lp(const Tensor& v, double lambda, double p,
                     const GroupPartition& part);

/// Scalar lp prox, closed form: argmin_u lambda |u|^p + (u - v)^2 / 2 via the
/// cubic (p = 1/2) or quartic (p = 2/3) stationarity equation.
double prox_lp_scalar(double v, double lambda, double p);

// Diagonal-metric variants used by the proximal Adam update: coordinate i is
// penalised with step[i], i.e. argmin_u f(u) + sum_i (u_i - v_i)^2 / (2 step_i)
// scaled so that f carries weight `lambda`.

Tensor prox_l1_weighted(const Tensor& v, double lambda, const Tensor& step);
Tensor prox_l0_weighted(const Tensor& v, double lambda, const Tensor& step);
Tensor prox_lp_weighted(const Tensor& v, double lambda, double p, const Tensor& step);
Tensor prox_group_l0_weighted(const Tensor& v, double lambda, const Tensor& step,
                              const GroupPartition& part);
Tensor prox_group_lp_weighted(const Tensor& v, double lambda, double p,
                              const Tensor& step, const GroupPartition& part);

/// Real roots of x^3 + p x + q = 0.
std::vector<double> solve_depressed_cubic(double p, double q);
/// Real roots of x^4 + q x + r = 0.
std::vector<double> solve_depressed_quartic(double q, double r);

}  // namespace pdattack

#endif  // PDATTACK_PROXOPS_HPP
