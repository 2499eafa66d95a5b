#pragma once

#include <vector>

#include "vml/gaussian_rational.hpp"

namespace vml {

/// Weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  int total() const noexcept;
  int length() const noexcept { return static_cast<int>(parts.size()); }
  bool is_generic() const noexcept;  // all parts equal to 1

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// Dimensions of the stratum of Sym^d indexed by a partition, and of the
/// part of the rank-n moduli space lying over it. Each of the d hyperplane
/// choices in a tower datum is a point of P^{n-1}, so the fiber dimension
/// is (n-1)d on every stratum.
struct StratumInfo {
  Partition partition;
  int num_points = 0;  // a = number of parts
  int base_dim = 0;    // complex dimension of the stratum, = a
  int fiber_dim = 0;
  int total_dim = 0;
  int codim = 0;       // d - a, inside Sym^d
};

/// All partitions of d in lexicographic order; throws InvalidDegree for d <= 0.
std::vector<Partition> enumerate_partitions(int d);

/// Throws PartitionMismatch if p does not partition d, InvalidArgument if n < 1.
StratumInfo stratum_info(const Partition& p, int n, int d);

/// Betti numbers b_0..b_{2d} of Sym^d of a genus-g surface: the coefficient
/// of x^d in (1 + x t)^{2g} / ((1 - x)(1 - x t^2)), expanded exactly.
std::vector<BigInt> sym_betti(int g, int d);

}  // namespace vml
