// Numerical verification of the direct-sum identities, the reduction
// constructions and the entanglement-monotone laws. Every check returns a
// CheckReport; none of them throws on a failed identity.
#pragma once

#include "sumcap/quantities.hpp"

#include <map>
#include <string>
#include <vector>

namespace sumcap {

/// How lhs and rhs are compared.
enum class Sidedness {
  TwoSided,       // |lhs - rhs| <= tol
  LhsAtMostRhs,   // lhs <= rhs + tol
  LhsAtLeastRhs,  // lhs >= rhs - tol
  Finding,        // lhs/rhs describe a finding; `passed` is internal consistency
};
std::string to_string(Sidedness s);

struct CheckReport {
  std::string check_name;
  std::vector<std::string> inputs;
  double lhs = 0.0;
  double rhs = 0.0;
  double tolerance = 0.0;
  Sidedness sidedness = Sidedness::TwoSided;
  bool passed = false;
  OptimizerOptions options;
  std::map<std::string, double> details;
  std::string note;
  double wall_time = 0.0;  // seconds
};

/// Comparison of lhs and rhs under `s` (Finding compares two-sidedly).
bool within(double lhs, double rhs, double tol, Sidedness s);

namespace tolerance {
inline constexpr double kAlgebraic = 1e-10;
inline constexpr double kSmallDim = 1e-3;   // optimizer vs closed form, dim <= 4
inline constexpr double kMediumDim = 5e-3;  // optimizer vs closed form, dim <= 16
inline constexpr double kFeasibility = 1e-6;
}  // namespace tolerance

// --- direct sums --------------------------------------------------------------

CheckReport check_direct_sum_smin(const Channel& t1, const Channel& t2, const RenyiOrder& alpha,
                                  const OptimizerOptions& opts = {},
                                  double tol = tolerance::kSmallDim);
CheckReport check_direct_sum_coherent(const Channel& t1, const Channel& t2,
                                      const OptimizerOptions& opts = {},
                                      double tol = tolerance::kMediumDim);
/// lhs: I of the sum channel; rhs: log2 sum 2^{I_i}. details["weight_form"]
/// holds the block-weight objective at the optimal weights.
CheckReport check_direct_sum_mutual(const Channel& t1, const Channel& t2,
                                    const OptimizerOptions& opts = {},
                                    double tol = tolerance::kSmallDim);
CheckReport check_direct_sum_holevo(const Channel& t1, const Channel& t2,
                                    const OptimizerOptions& opts = {},
                                    double tol = tolerance::kMediumDim);

enum class Quantity { MinOutputEntropy, Coherent, Mutual, Holevo };
std::string to_string(Quantity q);
Quantity quantity_from_string(const std::string& name);

/// One-sided check: inputs supported on a single block (or block-weighted
/// mixtures of part witnesses) are feasible for the sum channel, so its value
/// is at least as good as the formula built from the part values.
CheckReport check_direct_sum_feasibility(const Channel& t1, const Channel& t2, Quantity q,
                                         const RenyiOrder& alpha = RenyiOrder(1.0),
                                         const OptimizerOptions& opts = {},
                                         double tol = tolerance::kFeasibility);

// --- reduction constructions --------------------------------------------------

/// Choi of (T1 + T2) x (T3 + T4) against the four sector Choi matrices placed
/// by explicit index arithmetic. Optimizer-free.
CheckReport check_tensor_distributes(const Channel& t1, const Channel& t2, const Channel& t3,
                                     const Channel& t4, double tol = tolerance::kAlgebraic);

struct EqualizedPair {
  Channel t1_padded;
  Channel t2_padded;
  CheckReport report;
};
/// Pads each channel's output with the other's optimal output state so both
/// reach S_min(T1) + S_min(T2).
EqualizedPair equalize_smin(const Channel& t1, const Channel& t2, const RenyiOrder& alpha,
                            const OptimizerOptions& opts = {},
                            double tol = tolerance::kSmallDim);

/// chi((T1 + T2)^{x2}) against log2[2^{2 chi1} + 2^{2 chi2} + 2^{chi1 + chi2 + 1}].
/// details["sector_form"] uses numeric chi(T1 x T1), chi(T2 x T2), chi(T1 x T2).
CheckReport check_chi_expansion(const Channel& t1, const Channel& t2,
                                const OptimizerOptions& opts = {},
                                double tol = tolerance::kMediumDim);

/// Embeds rho (on d_in(T1) * d_in(T2)) into the sector (block 1 of copy 1,
/// block 2 of copy 2) of the input of (T1 + T2)^{x2} and compares H of the big
/// channel there with H_{T1 x T2}(rho). Also checks
/// H_{T1 x T2}(rho) >= H_{T1}(rho_1) + H_{T2}(rho_2) - tol.
CheckReport check_superadditivity_embedding(const Channel& t1, const Channel& t2,
                                            const DensityMatrix& rho,
                                            const OptimizerOptions& opts = {},
                                            double tol = tolerance::kSmallDim);

/// Index of the sector embedding used above: big input index of |i> (x) |j>.
int sector_index(int d1, int d2, int i, int j);

// --- entanglement monotones -----------------------------------------------------

/// sum_i lambda_i rho_i placed on (+A_i) x (+B_i). Each rho_i needs dims {a_i, b_i}.
DensityMatrix block_embedding(const std::vector<DensityMatrix>& states, const ProbDist& weights);

/// E_F of the block embedding against sum_i lambda_i E_F(rho_i).
CheckReport check_monotone_affinity(const std::vector<DensityMatrix>& states,
                                    const ProbDist& weights, const OptimizerOptions& opts = {},
                                    double tol = tolerance::kSmallDim);

/// For rho = (rho1 + rho2)/2: E_F(rho x rho) against 2 E_F(rho) and against
/// (1/4) sum_ij E_F(rho_i x rho_j).
CheckReport check_weak_to_strong_monotone(const DensityMatrix& rho1, const DensityMatrix& rho2,
                                          const OptimizerOptions& opts = {},
                                          double tol = tolerance::kSmallDim);

/// rho x sigma regrouped from A B A' B' to (A A')(B B').
DensityMatrix bipartite_tensor(const DensityMatrix& rho, const DensityMatrix& sigma);

// --- Werner-Holevo and HSW -------------------------------------------------------

/// S_p of (Phi x Phi)(Omega) for the 3-dim Werner-Holevo channel and the
/// maximally entangled Omega (lhs) against 2 S_min,p(Phi) = 2 (rhs).
/// details["violation"] is 1 when lhs < rhs - tol. `passed` reports that the
/// spectral value matches the exact spectrum and, when `confirm` is set, that
/// the generic optimizer on Phi x Phi reaches at most the lhs.
CheckReport wh_counterexample(double p, const OptimizerOptions& opts = {}, bool confirm = true,
                              double tol = 1e-9);
/// -(1/(p-1)) log2(3^{-p} + 8 * 12^{-p}); the exact two-copy value.
double wh_two_copy_exact(double p);

/// lhs = log2 d_out - S_min(T), rhs = chi(T). Always lhs >= rhs; with
/// `expect_equality` (unital qubit channels) two-sided.
CheckReport check_hsw_gap(const Channel& t, bool expect_equality,
                          const OptimizerOptions& opts = {}, double tol = tolerance::kSmallDim);

}  // namespace sumcap
