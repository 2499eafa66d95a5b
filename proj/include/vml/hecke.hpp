#pragma once

#include <cstddef>
#include <vector>

#include "vml/divisor.hpp"
#include "vml/gaussian_rational.hpp"
#include "vml/poly_matrix.hpp"

namespace vml {

/// Divisor on the affine chart with exact points.
using ExactDivisor = BasicDivisor<GaussianRational>;

/// Hyperplane {w : c . w = 0} in C^n, stored by its covector c scaled so
/// that the first nonzero entry is 1.
class Hyperplane {
 public:
  explicit Hyperplane(std::vector<GaussianRational> covector);
  /// {w : w_k = 0}.
  static Hyperplane coordinate(std::size_t n, std::size_t k);

  const std::vector<GaussianRational>& covector() const noexcept { return c_; }
  std::size_t dimension() const noexcept { return c_.size(); }
  bool contains(const std::vector<GaussianRational>& w) const;

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;

 private:
  std::vector<GaussianRational> c_;
};

/// One elementary modification at `point`; the hyperplane is written in the
/// fiber frame returned by fiber_coordinates for the lattice being modified.
struct HeckeStep {
  GaussianRational point;
  Hyperplane hyperplane;
};

/// All modifications at one point, in order. The first hyperplane lives in
/// the fiber of the trivial bundle (the point is fresh, so the frame is the
/// standard one); each later hyperplane lives in the fiber of the bundle
/// produced by the previous step.
struct TowerGroup {
  GaussianRational point;
  std::vector<Hyperplane> hyperplanes;
};

struct TowerDatum {
  std::vector<TowerGroup> groups;

  int degree() const noexcept;
  /// Throws DuplicatePoint, InvalidArgument (empty group, wrong rank).
  void validate(std::size_t n) const;
  std::vector<GaussianRational> points() const;
};

/// Basis of the fiber L/(z-x)L of the lattice L spanned by M.
///
/// `sections` is a basis of L (columns); coordinates w refer to the sections
/// sum_j w_j * sections[:, j]. `values` holds the sections evaluated at x,
/// i.e. the fiber map to the trivial bundle. Away from modified points this
/// map is invertible and the frame is normalized so that `values` is the
/// identity (the fibers are identified with C^n). At a modified point the
/// frame is the column Hermite basis and `kernel` spans the directions that
/// die in the trivial fiber.
struct FiberFrame {
  PolyMatrix sections;
  ConstMatrix values;
  std::size_t rank = 0;
  bool modified = false;
  std::vector<std::vector<GaussianRational>> kernel;
};

FiberFrame fiber_coordinates(const PolyMatrix& lattice, const GaussianRational& x);

/// New lattice {F w : w(x) in H} with F the fiber frame at the step point,
/// realized as F * P * diag(z - x, 1, ..., 1) and returned in column
/// Hermite form. P is a constant change of basis taking {w_1 = 0} to H.
PolyMatrix elementary_modification(const PolyMatrix& lattice, const HeckeStep& step);

/// Folds elementary_modification over the datum, starting from O^n.
PolyMatrix build_tower(std::size_t n, const TowerDatum& datum);

/// det(lattice) scaled to be monic.
Polynomial normalized_determinant(const PolyMatrix& lattice);

/// Divisor of det(lattice) supported on `expected_points`, found by exact
/// repeated division by (z - x). Throws SupportMismatch if det has roots
/// elsewhere.
ExactDivisor phi_divisor(const PolyMatrix& lattice,
                         const std::vector<GaussianRational>& expected_points);

/// Exponents of (z - x) in the Smith invariant factors, ascending.
std::vector<int> local_type(const PolyMatrix& lattice, const GaussianRational& x);

/// diag(prod_i (z - x_i)^{m_i}, 1, ..., 1): the lattice O^n inside
/// O(D) + O^{n-1}, a section of the divisor map.
PolyMatrix theta_section(std::size_t n, const ExactDivisor& divisor);

}  // namespace vml
