// Information quantities of channels: minimal output Rényi entropy,
// coherent information, mutual information, HSW capacity, the convex
// closure of the output entropy and entanglement of formation.
//
// The non-concave quantities are computed by multi-start local search and
// carry the direction of their guarantee in QuantityResult::bound_kind.
#pragma once

#include "sumcap/channels.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace sumcap {

struct OptimizerOptions {
  int restarts = 32;
  int max_iterations = 10000;
  double objective_tolerance = 1e-9;
  std::uint64_t seed = 0;
  /// Number of pure states in HSW ensembles (default d_in^2).
  std::optional<int> ensemble_size;
  /// Number of pure states in convex-roof decompositions (default rank^2).
  std::optional<int> decomposition_size;

  /// Throws std::invalid_argument if restarts < 1 or a tolerance is <= 0.
  void validate() const;
};

enum class BoundKind { ExactClosedForm, UpperBound, LowerBound };
std::string to_string(BoundKind kind);

/// Probability-weighted family of states of a common dimension.
class Ensemble {
 public:
  Ensemble(ProbDist probs, std::vector<DensityMatrix> states);

  const ProbDist& probs() const { return probs_; }
  const std::vector<DensityMatrix>& states() const { return states_; }
  std::size_t size() const { return states_.size(); }
  DensityMatrix average() const;

 private:
  ProbDist probs_;
  std::vector<DensityMatrix> states_;
};

using Witness = std::variant<Ensemble, DensityMatrix, PureState>;

struct QuantityResult {
  double value = 0.0;  // bits
  Witness witness = DensityMatrix::maximally_mixed(1);
  BoundKind bound_kind = BoundKind::UpperBound;
  int restarts_used = 0;
  int best_restart_index = 0;
  bool converged = false;
  /// Objective evaluated at the witness. Equals `value` except when a
  /// closed form tightens the optimizer result (two-qubit E_F).
  double witness_value = 0.0;
};

// --- objective evaluations at a fixed point ---------------------------------

double output_renyi(const Channel& t, const PureState& psi, const RenyiOrder& alpha);
/// S(T(rho)) - S(T_c(rho)); equals S(T(rho)) - S((T (x) id)(Psi)).
double coherent_objective(const Channel& t, const DensityMatrix& rho);
/// S(rho) + S(T(rho)) - S(T_c(rho)).
double mutual_objective(const Channel& t, const DensityMatrix& rho);
/// S(sum_k p_k T(rho_k)) - sum_k p_k S(T(rho_k)).
double holevo_quantity(const Channel& t, const Ensemble& e);
/// sum_k p_k S(T(rho_k)).
double average_output_entropy(const Channel& t, const Ensemble& e);

// --- optimized quantities ----------------------------------------------------

/// Minimum over pure inputs of S_alpha(T(psi)); upper bound, witness PureState.
QuantityResult min_output_renyi(const Channel& t, const RenyiOrder& alpha,
                                const OptimizerOptions& opts = {});
/// Lower bound, witness DensityMatrix.
QuantityResult coherent_information(const Channel& t, const OptimizerOptions& opts = {});
/// Concave objective; witness DensityMatrix.
QuantityResult mutual_information(const Channel& t, const OptimizerOptions& opts = {});
/// HSW capacity over pure-state ensembles; lower bound, witness Ensemble.
QuantityResult holevo_capacity(const Channel& t, const OptimizerOptions& opts = {});
/// S(T(rho)) - H_T(rho); lower bound, witness the decomposition of rho.
QuantityResult constrained_holevo(const Channel& t, const DensityMatrix& rho,
                                  const OptimizerOptions& opts = {});
/// H_T(rho): minimal average output entropy over pure decompositions of rho.
/// Upper bound, witness Ensemble averaging to rho.
QuantityResult convex_closure_output_entropy(const Channel& t, const DensityMatrix& rho,
                                             const OptimizerOptions& opts = {});
/// Entanglement of formation of a bipartite state with dims {dA, dB}.
/// Two-qubit states also use the concurrence formula and report the smaller
/// value as exact.
QuantityResult eof(const DensityMatrix& rho, const OptimizerOptions& opts = {});

/// Wootters concurrence of a two-qubit state.
double concurrence(const DensityMatrix& rho);
/// h((1 + sqrt(1 - C^2)) / 2).
double eof_from_concurrence(double c);

struct BlockWeights {
  ProbDist weights;  // 2^{c_i} / sum_j 2^{c_j}
  double value = 0;  // log2 sum_i 2^{c_i}
};
/// Maximizer of S(lambda) + sum_i lambda_i c_i over distributions.
BlockWeights optimal_block_weights(std::span<const double> c);
/// S(lambda) + sum_i lambda_i c_i.
double block_weight_objective(const ProbDist& lambda, std::span<const double> c);

/// log2 d_out - S_min(T) - chi(T). Non-negative up to optimizer error.
double hsw_smin_gap(const Channel& t, const OptimizerOptions& opts = {});

}  // namespace sumcap
