#include "groverian/qudit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace groverian {

namespace {

double sum_norm_squared(std::span<const Cx> v) {
  double acc = 0.0;
  for (const Cx& x : v) acc += std::norm(x);
  return acc;
}

bool all_finite(std::span<const Cx> v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Cx& x) { return std::isfinite(x.real()) && std::isfinite(x.imag()); });
}

double wrap_phase(double phi) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double wrapped = std::fmod(phi, two_pi);
  if (wrapped < 0.0) wrapped += two_pi;
  if (wrapped >= two_pi) wrapped = 0.0;
  return wrapped;
}

}  // namespace

SquareMatrix::SquareMatrix(std::size_t dim, std::vector<Cx> row_major)
    : dim_(dim), data_(std::move(row_major)) {
  if (data_.size() != dim * dim) {
    throw std::invalid_argument("SquareMatrix: expected " + std::to_string(dim * dim) +
                                " entries, got " + std::to_string(data_.size()));
  }
}

SquareMatrix SquareMatrix::identity(std::size_t dim) {
  SquareMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

SquareMatrix SquareMatrix::adjoint() const {
  SquareMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

SquareMatrix SquareMatrix::transpose() const {
  SquareMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

SquareMatrix SquareMatrix::conjugate() const {
  SquareMatrix out(dim_);
  std::transform(data_.begin(), data_.end(), out.data_.begin(),
                 [](const Cx& x) { return std::conj(x); });
  return out;
}

Cx SquareMatrix::trace() const {
  Cx acc = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) acc += (*this)(i, i);
  return acc;
}

double SquareMatrix::frobenius_norm_squared() const { return sum_norm_squared(data_); }

double SquareMatrix::hermitian_defect() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return worst;
}

double SquareMatrix::unitary_defect() const {
  const SquareMatrix gram = adjoint() * (*this);
  double worst = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      worst = std::max(worst, std::abs(gram(i, j) - (i == j ? 1.0 : 0.0)));
  return worst;
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("SquareMatrix: dimension mismatch in product");
  const std::size_t n = a.dim();
  SquareMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Cx aik = a(i, k);
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

double PureState::norm_squared() const { return sum_norm_squared(amps_); }

bool PureState::has_real_amplitudes(const Tolerances& tol) const {
  return std::all_of(amps_.begin(), amps_.end(),
                     [&](const Cx& x) { return std::abs(x.imag()) <= tol.real_amplitude; });
}

std::size_t register_size(std::size_t parties, std::size_t dim) {
  if (parties < 1) throw std::invalid_argument("register needs at least one party");
  if (dim < 2) throw std::invalid_argument("local dimension must be at least 2");
  std::size_t size = 1;
  for (std::size_t p = 0; p < parties; ++p) {
    if (size > std::numeric_limits<std::size_t>::max() / dim)
      throw std::invalid_argument("register size d^n overflows");
    size *= dim;
  }
  return size;
}

PureState make_state(std::size_t parties, std::size_t dim, std::vector<Cx> amps,
                     NormalizationMode mode, const Tolerances& tol) {
  const std::size_t expected = register_size(parties, dim);
  if (amps.size() != expected) {
    throw std::invalid_argument("expected " + std::to_string(expected) + " amplitudes for n=" +
                                std::to_string(parties) + ", d=" + std::to_string(dim) + ", got " +
                                std::to_string(amps.size()));
  }
  if (!all_finite(amps)) throw std::invalid_argument("amplitudes must be finite");
  const double norm2 = sum_norm_squared(amps);
  if (std::sqrt(norm2) <= tol.min_norm) throw std::invalid_argument("zero state vector");
  if (mode == NormalizationMode::strict) {
    if (std::abs(norm2 - 1.0) > tol.strict_input) {
      throw std::invalid_argument("state is not normalized (norm^2 = " + std::to_string(norm2) +
                                  "); pass normalize mode to rescale");
    }
  }
  // Strict inputs within tolerance are still rescaled so the unit-norm
  // invariant holds to rounding.
  const double scale = 1.0 / std::sqrt(norm2);
  for (Cx& x : amps) x *= scale;
  return PureState(detail::Trusted{}, parties, dim, std::move(amps));
}

PureState uniform_state(std::size_t parties, std::size_t dim) {
  const std::size_t size = register_size(parties, dim);
  const double amp = 1.0 / std::sqrt(static_cast<double>(size));
  return PureState(detail::Trusted{}, parties, dim, std::vector<Cx>(size, Cx{amp, 0.0}));
}

PureState basis_state(std::size_t parties, std::size_t dim, std::size_t index) {
  const std::size_t size = register_size(parties, dim);
  if (index >= size) throw std::out_of_range("basis index out of range");
  std::vector<Cx> amps(size);
  amps[index] = 1.0;
  return PureState(detail::Trusted{}, parties, dim, std::move(amps));
}

Cx inner(const PureState& a, const PureState& b) {
  if (a.parties() != b.parties() || a.local_dim() != b.local_dim())
    throw std::invalid_argument("inner: states live in different registers");
  Cx acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

PureState apply_local_unitary(const PureState& state, std::size_t party, const SquareMatrix& u,
                              const Tolerances& tol) {
  const std::size_t d = state.local_dim();
  if (party >= state.parties()) throw std::out_of_range("apply_local_unitary: party out of range");
  if (u.dim() != d) throw std::invalid_argument("apply_local_unitary: matrix size != local dimension");
  if (u.unitary_defect() > tol.unitary) throw std::invalid_argument("apply_local_unitary: matrix is not unitary");

  // Flat index = (outer * d + k) * stride + inner, with k the addressed digit.
  std::size_t stride = 1;
  for (std::size_t p = party + 1; p < state.parties(); ++p) stride *= d;
  const std::size_t block = stride * d;

  std::vector<Cx> out(state.size());
  for (std::size_t base = 0; base < state.size(); base += block) {
    for (std::size_t inner_idx = 0; inner_idx < stride; ++inner_idx) {
      for (std::size_t row = 0; row < d; ++row) {
        Cx acc = 0.0;
        for (std::size_t col = 0; col < d; ++col) acc += u(row, col) * state[base + col * stride + inner_idx];
        out[base + row * stride + inner_idx] = acc;
      }
    }
  }
  return PureState(detail::Trusted{}, state.parties(), d, std::move(out));
}

CoeffMatrix CoeffMatrix::from_entries(SquareMatrix entries, const Tolerances& tol) {
  if (!all_finite(entries.data())) throw std::invalid_argument("coefficient matrix has non-finite entries");
  if (std::abs(entries.frobenius_norm_squared() - 1.0) > tol.normalization)
    throw std::invalid_argument("coefficient matrix must have unit Frobenius norm");
  return CoeffMatrix(std::move(entries));
}

CoeffMatrix coeff_matrix(const PureState& state) {
  if (state.parties() != 2) throw std::invalid_argument("coeff_matrix: state must have exactly two parties");
  const std::size_t d = state.local_dim();
  return CoeffMatrix::from_entries(
      SquareMatrix(d, std::vector<Cx>(state.amps().begin(), state.amps().end())));
}

DensityMatrix DensityMatrix::from_entries(SquareMatrix entries, const Tolerances& tol) {
  if (entries.hermitian_defect() > tol.normalization)
    throw std::invalid_argument("density matrix is not Hermitian");
  if (std::abs(entries.trace() - 1.0) > tol.density_trace)
    throw std::invalid_argument("density matrix must have unit trace");
  return DensityMatrix(std::move(entries));
}

DensityMatrix reduced_density(const PureState& state, Subsystem keep) {
  const CoeffMatrix coeffs = coeff_matrix(state);
  const SquareMatrix& a = coeffs.entries();
  SquareMatrix rho = keep == Subsystem::first ? a * a.adjoint() : a.transpose() * a.conjugate();
  // Exact hermiticity; the product only guarantees it to rounding.
  for (std::size_t i = 0; i < rho.dim(); ++i) {
    rho(i, i) = rho(i, i).real();
    for (std::size_t j = i + 1; j < rho.dim(); ++j) {
      const Cx avg = 0.5 * (rho(i, j) + std::conj(rho(j, i)));
      rho(i, j) = avg;
      rho(j, i) = std::conj(avg);
    }
  }
  return DensityMatrix::from_entries(std::move(rho));
}

ProductVector::ProductVector(std::vector<std::vector<Cx>> parts, const Tolerances& tol)
    : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("product vector needs at least one part");
  const std::size_t d = parts_.front().size();
  if (d < 2) throw std::invalid_argument("product vector parts must have length >= 2");
  for (const auto& part : parts_) {
    if (part.size() != d) throw std::invalid_argument("product vector parts differ in length");
    if (!all_finite(part)) throw std::invalid_argument("product vector has non-finite entries");
    if (std::abs(sum_norm_squared(part) - 1.0) > tol.normalization)
      throw std::invalid_argument("product vector part is not a unit vector");
  }
}

ProductVector ProductVector::normalized(std::vector<std::vector<Cx>> parts, const Tolerances& tol) {
  for (auto& part : parts) {
    const double norm = std::sqrt(sum_norm_squared(part));
    if (!(norm > tol.min_norm)) throw std::invalid_argument("product vector part is zero");
    for (Cx& x : part) x /= norm;
  }
  return ProductVector(std::move(parts), tol);
}

PureState ProductVector::tensor() const {
  std::vector<Cx> amps{Cx{1.0, 0.0}};
  for (const auto& part : parts_) {
    std::vector<Cx> next;
    next.reserve(amps.size() * part.size());
    for (const Cx& a : amps)
      for (const Cx& b : part) next.push_back(a * b);
    amps = std::move(next);
  }
  return PureState(detail::Trusted{}, parties(), local_dim(), std::move(amps));
}

Cx overlap(const ProductVector& product, const PureState& state) {
  if (product.parties() != state.parties() || product.local_dim() != state.local_dim())
    throw std::invalid_argument("overlap: product vector does not match the register");
  const std::size_t d = state.local_dim();
  const std::size_t n = state.parties();
  Cx acc = 0.0;
  std::vector<std::size_t> digits(n, 0);
  for (std::size_t flat = 0; flat < state.size(); ++flat) {
    Cx weight = 1.0;
    for (std::size_t p = 0; p < n; ++p) weight *= std::conj(product.part(p)[digits[p]]);
    acc += weight * state[flat];
    for (std::size_t p = n; p-- > 0;) {
      if (++digits[p] < d) break;
      digits[p] = 0;
    }
  }
  return acc;
}

QutritAngles angles_from_product_vector(std::span<const Cx> part, const Tolerances& tol) {
  if (part.size() != 3) throw std::invalid_argument("qutrit angles need a 3-component vector");
  if (std::abs(sum_norm_squared(part) - 1.0) > tol.normalization)
    throw std::invalid_argument("qutrit angles need a unit vector");

  const double m1 = std::abs(part[0]);
  const double m2 = std::abs(part[1]);
  const double m3 = std::abs(part[2]);
  QutritAngles out;
  out.theta = std::acos(std::clamp(m3, 0.0, 1.0));
  if (std::sin(out.theta) < tol.degenerate_angle) return out;

  out.gamma = std::atan2(m2, m1);
  // The third component carries the reference phase, so cos(theta) is real.
  const double reference = std::arg(part[2]);
  if (m1 > tol.degenerate_angle) out.chi = wrap_phase(std::arg(part[0]) - reference);
  if (m2 > tol.degenerate_angle) out.chi_prime = wrap_phase(std::arg(part[1]) - reference);
  return out;
}

std::array<Cx, 3> vector_from_angles(const QutritAngles& a) {
  const double st = std::sin(a.theta);
  return {std::polar(st * std::cos(a.gamma), a.chi), std::polar(st * std::sin(a.gamma), a.chi_prime),
          Cx{std::cos(a.theta), 0.0}};
}

double distance_up_to_phase(std::span<const Cx> a, std::span<const Cx> b) {
  if (a.size() != b.size()) throw std::invalid_argument("distance_up_to_phase: length mismatch");
  Cx align = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) align += std::conj(b[i]) * a[i];
  const Cx phase = std::abs(align) > 0.0 ? align / std::abs(align) : Cx{1.0, 0.0};
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - phase * b[i]));
  return worst;
}

}  // namespace groverian
