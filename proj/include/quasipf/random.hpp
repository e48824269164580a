#pragma once

#include <cstdint>
#include <random>

#include "quasipf/matrix.hpp"
#include "quasipf/moments.hpp"

namespace qpf {

/// Seeded generator for reproducible instances. Rationals have numerators
/// in [-9, 9] and denominators in [1, 9].
class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}

  Rational rational();
  Rational positive_rational();

  RingElem element(const RingSpec& spec);
  /// Element with a^T = -a: 0 for rationals, pure imaginary quaternions,
  /// skew-symmetric blocks.
  RingElem skew_element(const RingSpec& spec);
  /// Element with a^T = a: any rational, real quaternions, symmetric blocks.
  RingElem symmetric_element(const RingSpec& spec);

  Matrix<RingElem> matrix(const RingSpec& spec, int rows, int cols);
  /// Upper triangle drawn freely, lower triangle by a_ji = -a_ij^T, diagonal
  /// from the skew subspace.
  Matrix<RingElem> skew_matrix(const RingSpec& spec, int n);
  /// Rational skew matrix with zero diagonal.
  Matrix<Rational> skew_rational(int n);

  /// K distinct positive nodes, nonzero symmetric weights and a positive
  /// snapshot.
  MomentState moment_state(const RingSpec& spec, int nodes);

  std::mt19937_64& engine() { return rng_; }

 private:
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  std::mt19937_64 rng_;
};

}  // namespace qpf
