#include "vml/strata.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "vml/error.hpp"

namespace vml {

int Partition::total() const noexcept { return std::accumulate(parts.begin(), parts.end(), 0); }

bool Partition::is_generic() const noexcept {
  return std::all_of(parts.begin(), parts.end(), [](int p) { return p == 1; });
}

namespace {

void extend(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back({prefix});
    return;
  }
  // Smallest next part first gives lexicographic order.
  for (int part = 1; part <= std::min(remaining, max_part); ++part) {
    prefix.push_back(part);
    extend(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int d) {
  if (d <= 0) throw Error(ErrorCode::InvalidDegree, "degree must be positive, got " + std::to_string(d));
  std::vector<Partition> out;
  std::vector<int> prefix;
  extend(d, d, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

StratumInfo stratum_info(const Partition& p, int n, int d) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "rank must be positive");
  if (d < 1) throw Error(ErrorCode::InvalidDegree, "degree must be positive");
  const bool decreasing = std::is_sorted(p.parts.begin(), p.parts.end(), std::greater<>());
  const bool positive = std::all_of(p.parts.begin(), p.parts.end(), [](int x) { return x > 0; });
  if (p.parts.empty() || !decreasing || !positive || p.total() != d) {
    throw Error(ErrorCode::PartitionMismatch, "parts do not form a partition of " + std::to_string(d));
  }
  StratumInfo info;
  info.partition = p;
  info.num_points = p.length();
  info.base_dim = info.num_points;
  info.fiber_dim = (n - 1) * d;
  info.total_dim = info.base_dim + info.fiber_dim;
  info.codim = d - info.num_points;
  return info;
}

std::vector<BigInt> sym_betti(int g, int d) {
  if (g < 0) throw Error(ErrorCode::InvalidArgument, "genus must be non-negative");
  if (d < 1) throw Error(ErrorCode::InvalidDegree, "degree must be positive");
  // Series in x truncated at x^d; each coefficient is a polynomial in t of
  // degree <= 2d.
  using Series = std::vector<std::vector<BigInt>>;  // [power of x][power of t]
  const std::size_t nx = static_cast<std::size_t>(d) + 1;
  const std::size_t nt = 2 * static_cast<std::size_t>(d) + 1;
  auto zero = [&] { return Series(nx, std::vector<BigInt>(nt)); };
  auto multiply = [&](const Series& a, const Series& b) {
    Series c = zero();
    for (std::size_t i = 0; i < nx; ++i)
      for (std::size_t j = 0; i + j < nx; ++j)
        for (std::size_t s = 0; s < nt; ++s) {
          if (a[i][s] == 0) continue;
          for (std::size_t u = 0; s + u < nt; ++u)
            if (b[j][u] != 0) c[i + j][s + u] += a[i][s] * b[j][u];
        }
    return c;
  };

  Series numerator = zero();  // (1 + x t)^{2g}
  numerator[0][0] = 1;
  Series one_plus_xt = zero();
  one_plus_xt[0][0] = 1;
  if (nx > 1) one_plus_xt[1][1] = 1;
  for (int k = 0; k < 2 * g; ++k) numerator = multiply(numerator, one_plus_xt);

  Series geometric_x = zero();  // 1 / (1 - x)
  Series geometric_xt2 = zero();  // 1 / (1 - x t^2)
  for (std::size_t i = 0; i < nx; ++i) {
    geometric_x[i][0] = 1;
    if (2 * i < nt) geometric_xt2[i][2 * i] = 1;
  }
  const Series product = multiply(multiply(numerator, geometric_x), geometric_xt2);
  return product[static_cast<std::size_t>(d)];
}

}  // namespace vml
