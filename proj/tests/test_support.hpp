#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "groverian/qudit.hpp"

namespace groverian::testing {

inline std::vector<Cx> gaussian_vector(std::size_t n, std::mt19937_64& rng, bool complex = true) {
  std::normal_distribution<double> normal;
  std::vector<Cx> v(n);
  for (Cx& x : v) {
    const double re = normal(rng);
    const double im = complex ? normal(rng) : 0.0;
    x = Cx{re, im};
  }
  return v;
}

inline std::vector<Cx> unit_vector(std::size_t n, std::mt19937_64& rng, bool complex = true) {
  auto v = gaussian_vector(n, rng, complex);
  double norm = 0.0;
  for (const Cx& x : v) norm += std::norm(x);
  norm = std::sqrt(norm);
  for (Cx& x : v) x /= norm;
  return v;
}

inline PureState random_pure_state(std::size_t parties, std::size_t dim, std::mt19937_64& rng, bool complex = true) {
  return make_state(parties, dim, gaussian_vector(register_size(parties, dim), rng, complex),
                    NormalizationMode::normalize);
}

inline ProductVector random_product(std::size_t parties, std::size_t dim, std::mt19937_64& rng,
                                    bool complex = true) {
  std::vector<std::vector<Cx>> parts;
  for (std::size_t p = 0; p < parties; ++p) parts.push_back(unit_vector(dim, rng, complex));
  return ProductVector::normalized(std::move(parts));
}

// Haar-ish unitary: modified Gram-Schmidt on a complex Gaussian matrix.
inline SquareMatrix random_unitary(std::size_t dim, std::mt19937_64& rng) {
  std::vector<std::vector<Cx>> cols;
  for (std::size_t c = 0; c < dim; ++c) {
    auto v = gaussian_vector(dim, rng);
    for (const auto& prev : cols) {
      Cx proj = 0.0;
      for (std::size_t i = 0; i < dim; ++i) proj += std::conj(prev[i]) * v[i];
      for (std::size_t i = 0; i < dim; ++i) v[i] -= proj * prev[i];
    }
    double norm = 0.0;
    for (const Cx& x : v) norm += std::norm(x);
    norm = std::sqrt(norm);
    for (Cx& x : v) x /= norm;
    cols.push_back(std::move(v));
  }
  SquareMatrix u(dim);
  for (std::size_t c = 0; c < dim; ++c)
    for (std::size_t r = 0; r < dim; ++r) u(r, c) = cols[c][r];
  return u;
}

inline PureState two_qutrit(std::initializer_list<std::pair<std::size_t, Cx>> terms) {
  std::vector<Cx> amps(9);
  for (const auto& [index, amp] : terms) amps[index] = amp;
  return make_state(2, 3, std::move(amps));
}

// |ij> with 1-based labels.
constexpr std::size_t ket(std::size_t i, std::size_t j) { return (i - 1) * 3 + (j - 1); }

}  // namespace groverian::testing
