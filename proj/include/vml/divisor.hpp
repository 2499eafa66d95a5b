#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "vml/error.hpp"

namespace vml {

/// Effective divisor sum_i m_i * x_i: distinct points with positive
/// multiplicities. Adding a point that is already present merges the
/// multiplicities, so the distinctness invariant always holds.
template <class Point>
class BasicDivisor {
 public:
  struct Entry {
    Point position;
    int multiplicity;

    friend bool operator==(const Entry&, const Entry&) = default;
  };

  BasicDivisor() = default;

  explicit BasicDivisor(const std::vector<Entry>& entries) {
    for (const auto& e : entries) add(e.position, e.multiplicity);
  }

  void add(const Point& position, int multiplicity = 1) {
    if (multiplicity < 1) {
      throw Error(ErrorCode::InvalidDivisor,
                  "multiplicity must be positive, got " +
                      std::to_string(multiplicity));
    }
    for (auto& e : entries_) {
      if (e.position == position) {
        e.multiplicity += multiplicity;
        return;
      }
    }
    entries_.push_back({position, multiplicity});
  }

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  int degree() const noexcept {
    int d = 0;
    for (const auto& e : entries_) d += e.multiplicity;
    return d;
  }

  int multiplicity_at(const Point& position) const noexcept {
    for (const auto& e : entries_)
      if (e.position == position) return e.multiplicity;
    return 0;
  }

  /// Multiplicities as a weakly decreasing list (the partition type).
  std::vector<int> multiplicity_type() const {
    std::vector<int> parts;
    parts.reserve(entries_.size());
    for (const auto& e : entries_) parts.push_back(e.multiplicity);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return parts;
  }

  BasicDivisor& operator+=(const BasicDivisor& other) {
    for (const auto& e : other.entries_) add(e.position, e.multiplicity);
    return *this;
  }

  friend BasicDivisor operator+(BasicDivisor lhs, const BasicDivisor& rhs) {
    lhs += rhs;
    return lhs;
  }

  // Multiset equality; entry order is irrelevant.
  friend bool operator==(const BasicDivisor& a, const BasicDivisor& b) {
    if (a.entries_.size() != b.entries_.size()) return false;
    for (const auto& e : a.entries_)
      if (b.multiplicity_at(e.position) != e.multiplicity) return false;
    return true;
  }

 private:
  std::vector<Entry> entries_;
};

/// Divisor on the flat torus, positions in the ambient complex plane.
using EffectiveDivisor = BasicDivisor<std::complex<double>>;

}  // namespace vml
