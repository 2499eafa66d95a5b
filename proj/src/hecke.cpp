#include "vml/hecke.hpp"

#include <algorithm>
#include <string>

#include "vml/error.hpp"

namespace vml {

Hyperplane::Hyperplane(std::vector<GaussianRational> covector) : c_(std::move(covector)) {
  const auto first = std::find_if(c_.begin(), c_.end(),
                                  [](const GaussianRational& x) { return !x.is_zero(); });
  if (first == c_.end()) throw Error(ErrorCode::DegenerateHyperplane, "covector is zero");
  const GaussianRational inv = first->inverse();
  for (auto& x : c_) x *= inv;
}

Hyperplane Hyperplane::coordinate(std::size_t n, std::size_t k) {
  std::vector<GaussianRational> c(n);
  c.at(k) = 1;
  return Hyperplane(std::move(c));
}

bool Hyperplane::contains(const std::vector<GaussianRational>& w) const {
  if (w.size() != c_.size()) return false;
  GaussianRational acc;
  for (std::size_t k = 0; k < c_.size(); ++k) acc += c_[k] * w[k];
  return acc.is_zero();
}

int TowerDatum::degree() const noexcept {
  int d = 0;
  for (const auto& g : groups) d += static_cast<int>(g.hyperplanes.size());
  return d;
}

std::vector<GaussianRational> TowerDatum::points() const {
  std::vector<GaussianRational> pts;
  pts.reserve(groups.size());
  for (const auto& g : groups) pts.push_back(g.point);
  return pts;
}

void TowerDatum::validate(std::size_t n) const {
  for (std::size_t a = 0; a < groups.size(); ++a) {
    if (groups[a].hyperplanes.empty())
      throw Error(ErrorCode::InvalidArgument,
                  "group at " + groups[a].point.to_string() + " has no hyperplanes");
    for (const auto& h : groups[a].hyperplanes)
      if (h.dimension() != n)
        throw Error(ErrorCode::InvalidArgument,
                    "hyperplane of dimension " + std::to_string(h.dimension()) +
                        " in rank " + std::to_string(n) + " tower");
    for (std::size_t b = a + 1; b < groups.size(); ++b)
      if (groups[a].point == groups[b].point)
        throw Error(ErrorCode::DuplicatePoint,
                    "point " + groups[a].point.to_string() + " appears in two groups");
  }
}

FiberFrame fiber_coordinates(const PolyMatrix& lattice, const GaussianRational& x) {
  FiberFrame frame;
  const PolyMatrix hermite = lattice.column_hermite_form();
  const ConstMatrix at_x = hermite.evaluate(x);
  frame.rank = at_x.rank();
  if (frame.rank == lattice.size()) {
    frame.sections = hermite * PolyMatrix::from_constant(at_x.inverse());
    frame.values = ConstMatrix::identity(lattice.size());
    frame.modified = false;
  } else {
    frame.sections = hermite;
    frame.values = at_x;
    frame.modified = true;
    frame.kernel = at_x.kernel();
  }
  return frame;
}

PolyMatrix elementary_modification(const PolyMatrix& lattice, const HeckeStep& step) {
  const std::size_t n = lattice.size();
  const auto& c = step.hyperplane.covector();
  if (c.size() != n)
    throw Error(ErrorCode::InvalidArgument, "hyperplane rank does not match lattice rank");

  // Columns of P: e_k with c_k = 1 the first nonzero entry (c . e_k != 0),
  // then e_j - c_j e_k for j != k, which span ker c.
  const std::size_t k = static_cast<std::size_t>(
      std::find_if(c.begin(), c.end(), [](const GaussianRational& v) { return !v.is_zero(); }) -
      c.begin());
  ConstMatrix p(n);
  p(k, 0) = 1;
  std::size_t col = 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == k) continue;
    p(j, col) = 1;
    p(k, col) = -c[j];
    ++col;
  }
  std::vector<Polynomial> twist(n, Polynomial(1));
  twist[0] = Polynomial::linear(step.point);

  const FiberFrame frame = fiber_coordinates(lattice, step.point);
  const PolyMatrix modified =
      frame.sections * PolyMatrix::from_constant(p) * PolyMatrix::diagonal(twist);
  return modified.column_hermite_form();
}

PolyMatrix build_tower(std::size_t n, const TowerDatum& datum) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "rank must be positive");
  datum.validate(n);
  PolyMatrix m = PolyMatrix::identity(n);
  for (const auto& group : datum.groups)
    for (const auto& h : group.hyperplanes) m = elementary_modification(m, {group.point, h});
  return m;
}

Polynomial normalized_determinant(const PolyMatrix& lattice) {
  const Polynomial det = lattice.determinant();
  if (det.is_zero()) throw Error(ErrorCode::InvalidArgument, "lattice has zero determinant");
  return det.monic();
}

ExactDivisor phi_divisor(const PolyMatrix& lattice,
                         const std::vector<GaussianRational>& expected_points) {
  Polynomial rest = normalized_determinant(lattice);
  ExactDivisor divisor;
  for (const auto& x : expected_points) {
    if (divisor.multiplicity_at(x) > 0) continue;
    const int m = rest.valuation_at(x);
    if (m == 0) continue;
    Polynomial factor = 1;
    for (int k = 0; k < m; ++k) factor *= Polynomial::linear(x);
    rest = rest.exact_div(factor);
    divisor.add(x, m);
  }
  if (!rest.is_constant()) {
    throw Error(ErrorCode::SupportMismatch,
                "determinant factor " + rest.to_string() + " has roots outside the expected points");
  }
  return divisor;
}

std::vector<int> local_type(const PolyMatrix& lattice, const GaussianRational& x) {
  std::vector<int> exps;
  for (const auto& f : lattice.invariant_factors()) {
    if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "lattice is not of full rank");
    exps.push_back(f.valuation_at(x));
  }
  std::sort(exps.begin(), exps.end());
  return exps;
}

PolyMatrix theta_section(std::size_t n, const ExactDivisor& divisor) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "rank must be positive");
  Polynomial top = 1;
  for (const auto& e : divisor.entries())
    for (int k = 0; k < e.multiplicity; ++k) top *= Polynomial::linear(e.position);
  std::vector<Polynomial> diag(n, Polynomial(1));
  diag[0] = std::move(top);
  return PolyMatrix::diagonal(diag);
}

}  // namespace vml
