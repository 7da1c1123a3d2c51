// Pure states of n-qudit registers and the small dense matrices built from them.
//
// Index convention: party 0 is the most significant digit of the flat
// amplitude index, so the two-party basis label |i j> (1-based, as in the
// usual qutrit notation) lives at flat index (i-1)*d + (j-1).

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "groverian/tolerances.hpp"

namespace groverian {

using Cx = std::complex<double>;

/// Thrown when an input is well formed but outside an operation's domain
/// (for example the real-amplitude closed form fed a complex state).
class IneligibleInput : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dense row-major d x d complex matrix.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  SquareMatrix(std::size_t dim, std::vector<Cx> row_major);

  static SquareMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  Cx& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const Cx& operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }
  std::span<const Cx> data() const { return data_; }

  SquareMatrix adjoint() const;
  SquareMatrix transpose() const;
  SquareMatrix conjugate() const;
  Cx trace() const;
  double frobenius_norm_squared() const;

  // Largest |m_ij - conj(m_ji)|.
  double hermitian_defect() const;
  // Largest entry of |m^dagger m - 1|.
  double unitary_defect() const;

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);

 private:
  std::size_t dim_ = 0;
  std::vector<Cx> data_;
};

enum class NormalizationMode {
  strict,     // reject inputs whose norm is off by more than Tolerances::strict_input
  normalize,  // rescale any nonzero input to unit norm
};

namespace detail {
// Passkey for internal constructors that already guarantee the invariants.
struct Trusted {
  explicit Trusted() = default;
};
}  // namespace detail

/// Normalized amplitude vector of an n-qudit register, length d^n.
class PureState {
 public:
  PureState(detail::Trusted, std::size_t parties, std::size_t dim, std::vector<Cx> amps)
      : parties_(parties), dim_(dim), amps_(std::move(amps)) {}

  std::size_t parties() const { return parties_; }
  std::size_t local_dim() const { return dim_; }
  std::size_t size() const { return amps_.size(); }
  std::span<const Cx> amps() const { return amps_; }
  const Cx& operator[](std::size_t index) const { return amps_[index]; }
  double norm_squared() const;

  bool has_real_amplitudes(const Tolerances& tol = kDefaultTolerances) const;

 private:
  std::size_t parties_;
  std::size_t dim_;
  std::vector<Cx> amps_;
};

/// d^n, throwing on overflow.
std::size_t register_size(std::size_t parties, std::size_t dim);

PureState make_state(std::size_t parties, std::size_t dim, std::vector<Cx> amps,
                     NormalizationMode mode = NormalizationMode::strict,
                     const Tolerances& tol = kDefaultTolerances);

PureState uniform_state(std::size_t parties, std::size_t dim);
PureState basis_state(std::size_t parties, std::size_t dim, std::size_t index);

/// <a|b>, conjugate-linear in `a`.
Cx inner(const PureState& a, const PureState& b);

/// Applies `u` to the index of `party` (0-based) and leaves the rest alone.
PureState apply_local_unitary(const PureState& state, std::size_t party, const SquareMatrix& u,
                              const Tolerances& tol = kDefaultTolerances);

/// Coefficient matrix a_ij of a two-party state.
class CoeffMatrix {
 public:
  /// Validates unit Frobenius norm.
  static CoeffMatrix from_entries(SquareMatrix entries, const Tolerances& tol = kDefaultTolerances);

  std::size_t dim() const { return entries_.dim(); }
  const SquareMatrix& entries() const { return entries_; }
  const Cx& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

 private:
  explicit CoeffMatrix(SquareMatrix entries) : entries_(std::move(entries)) {}
  SquareMatrix entries_;
};

CoeffMatrix coeff_matrix(const PureState& state);

/// Hermitian, unit-trace reduced state of one party.
class DensityMatrix {
 public:
  /// Validates hermiticity and unit trace.
  static DensityMatrix from_entries(SquareMatrix entries, const Tolerances& tol = kDefaultTolerances);

  std::size_t dim() const { return entries_.dim(); }
  const SquareMatrix& entries() const { return entries_; }
  const Cx& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

 private:
  explicit DensityMatrix(SquareMatrix entries) : entries_(std::move(entries)) {}
  SquareMatrix entries_;
};

enum class Subsystem { first, second };

/// Partial trace of |psi><psi| keeping `keep`: A A^dagger for the first
/// party, A^T A^* for the second.
DensityMatrix reduced_density(const PureState& state, Subsystem keep);

/// Per-party unit vectors whose tensor product is a candidate product state.
class ProductVector {
 public:
  /// Validates that every part is a unit vector of the same length.
  explicit ProductVector(std::vector<std::vector<Cx>> parts,
                         const Tolerances& tol = kDefaultTolerances);
  /// Rescales each nonzero part to unit length.
  static ProductVector normalized(std::vector<std::vector<Cx>> parts,
                                  const Tolerances& tol = kDefaultTolerances);

  std::size_t parties() const { return parts_.size(); }
  std::size_t local_dim() const { return parts_.front().size(); }
  std::span<const Cx> part(std::size_t party) const { return parts_[party]; }

  PureState tensor() const;

 private:
  ProductVector(detail::Trusted, std::vector<std::vector<Cx>> parts) : parts_(std::move(parts)) {}
  std::vector<std::vector<Cx>> parts_;
};

/// <e|psi> for the product state e.
Cx overlap(const ProductVector& product, const PureState& state);

/// Angle parametrization of a single qutrit up to global phase:
///   e^{i chi} sin(theta) cos(gamma) |1> + e^{i chi'} sin(theta) sin(gamma) |2> + cos(theta) |3>
struct QutritAngles {
  double theta = 0.0;      // [0, pi/2]
  double gamma = 0.0;      // [0, pi/2]
  double chi = 0.0;        // [0, 2 pi)
  double chi_prime = 0.0;  // [0, 2 pi)
};

QutritAngles angles_from_product_vector(std::span<const Cx> part,
                                        const Tolerances& tol = kDefaultTolerances);
std::array<Cx, 3> vector_from_angles(const QutritAngles& angles);

/// Smallest max_k |a_k - e^{i phi} b_k| over global phases phi.
double distance_up_to_phase(std::span<const Cx> a, std::span<const Cx> b);

}  // namespace groverian
