// Quantum channels in Kraus form, their Choi matrices and the constructors
// used by the direct-sum and tensor-product constructions.
#pragma once

#include "sumcap/matcore.hpp"

#include <span>
#include <string>
#include <vector>

namespace sumcap {

/// Tolerance on || sum_i K_i^dag K_i - I ||_max.
inline constexpr double kCptpTolerance = 1e-8;

/// Completely positive trace-preserving map rho -> sum_i K_i rho K_i^dag.
/// Immutable after construction.
class Channel {
 public:
  /// Throws std::invalid_argument when the list is empty, shapes disagree
  /// or trace preservation fails at kCptpTolerance.
  explicit Channel(std::vector<ComplexMatrix> kraus, std::string label = "");

  int d_in() const { return d_in_; }
  int d_out() const { return d_out_; }
  int kraus_count() const { return static_cast<int>(kraus_.size()); }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }
  const std::string& label() const { return label_; }
  Channel relabeled(std::string label) const;

  /// T(X) for any d_in x d_in operator X.
  ComplexMatrix apply(const ComplexMatrix& x) const;
  DensityMatrix apply(const DensityMatrix& rho) const;
  /// T(psi psi^dag) for an unnormalized vector.
  ComplexMatrix apply_pure(const ComplexVector& psi) const;
  /// Heisenberg-picture map T*(Y) = sum_i K_i^dag Y K_i.
  ComplexMatrix adjoint(const ComplexMatrix& y) const;
  /// T*(Y) psi without forming T*(Y).
  ComplexVector adjoint_times(const ComplexMatrix& y, const ComplexVector& psi) const;

 private:
  std::vector<ComplexMatrix> kraus_;
  ComplexMatrix stacked_;  // Kraus operators stacked vertically
  int d_in_ = 0;
  int d_out_ = 0;
  std::string label_;
};

/// || sum_i K_i^dag K_i - I ||_max for a Kraus list of common shape.
double trace_preservation_error(std::span<const ComplexMatrix> kraus);

/// (T (x) id) applied to sum_ij |i><j| (x) |i><j|. Output factor first, so
/// entry ((a, i), (b, j)) = <a| T(|i><j|) |b>.
class ChoiMatrix {
 public:
  /// Validates positivity (>= -1e-8) and tr_out C = I_{d_in} within 1e-8.
  ChoiMatrix(ComplexMatrix mat, int d_in, int d_out);

  const ComplexMatrix& mat() const { return mat_; }
  int d_in() const { return d_in_; }
  int d_out() const { return d_out_; }

 private:
  ComplexMatrix mat_;
  int d_in_;
  int d_out_;
};

ChoiMatrix choi(const Channel& t);
/// Spectral Kraus decomposition; eigenvalues below 1e-10 are dropped.
Channel kraus_from_choi(const ChoiMatrix& c, std::string label = "");

Channel tensor(const Channel& t1, const Channel& t2);
/// Block-diagonal channel; each block's Kraus operators are zero-padded
/// into their own block, so cross-block coherences are erased.
Channel direct_sum(std::span<const Channel> channels);
Channel direct_sum(const Channel& t1, const Channel& t2);
/// rho -> T(rho) (x) sigma.
Channel pad_output(const Channel& t, const DensityMatrix& sigma);
/// Environment output of the Stinespring isometry V = sum_i K_i (x) |i>.
Channel complementary(const Channel& t);

/// Throws for rectangular channels.
bool is_unital(const Channel& t);

// ---------------------------------------------------------------------------

Channel identity_channel(int d);
/// T(rho) = lambda rho + (1 - lambda) tr(rho) I / d, lambda in [-1/(d^2-1), 1].
Channel depolarizing(int d, double lambda);
/// Complete dephasing in the computational basis.
Channel dephasing(int d);
Channel unitary_channel(const ComplexMatrix& u);
/// rho -> tr(rho) sigma; d_in defaults to the dimension of sigma.
Channel constant_channel(const DensityMatrix& sigma, int d_in = 0);

enum class Traced { A, B };
/// Partial trace over the `traced` factor of C^dA (x) C^dB.
Channel partial_trace_channel(int d_a, int d_b, Traced traced = Traced::B);
/// rho -> (tr(rho) I - rho^T) / (d - 1).
Channel werner_holevo(int d);
Channel mixed_unitary(const ProbDist& p, std::span<const ComplexMatrix> unitaries);
/// Stinespring dilation by a Haar isometry C^d_in -> C^d_out (x) C^env_dim.
Channel random_channel(int d_in, int d_out, int env_dim, std::uint64_t seed);

}  // namespace sumcap
