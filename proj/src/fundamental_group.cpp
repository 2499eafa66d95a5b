#include "vml/fundamental_group.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "vml/error.hpp"
#include "vml/hecke.hpp"
#include "vml/integer_snf.hpp"

namespace vml {

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int letter : w) {
    if (!out.empty() && out.back() == -letter) out.pop_back();
    else out.push_back(letter);
  }
  return out;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& letter : out) letter = -letter;
  return out;
}

Word commutator(int a, int b) { return {a, b, -a, -b}; }

GroupPresentation GroupPresentation::make(int num_generators, std::vector<Word> relators) {
  GroupPresentation p;
  p.num_generators = num_generators;
  for (auto& r : relators) {
    Word reduced = free_reduce(r);
    if (!reduced.empty()) p.relators.push_back(std::move(reduced));
  }
  p.validate();
  return p;
}

void GroupPresentation::validate() const {
  if (num_generators < 0) throw Error(ErrorCode::InvalidArgument, "negative generator count");
  for (const auto& r : relators) {
    for (int letter : r)
      if (letter == 0 || std::abs(letter) > num_generators)
        throw Error(ErrorCode::InvalidArgument, "letter " + std::to_string(letter) + " out of range");
    if (free_reduce(r) != r) throw Error(ErrorCode::InvalidArgument, "relator is not freely reduced");
  }
}

namespace {

bool cyclic_match(const Word& a, const Word& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t s = 0; s < a.size(); ++s)
    if (std::equal(a.begin(), a.end() - long(s), b.begin() + long(s)) &&
        std::equal(a.end() - long(s), a.end(), b.begin()))
      return true;
  return a.empty();
}

}  // namespace

bool GroupPresentation::has_all_commutators() const {
  for (int i = 1; i <= num_generators; ++i)
    for (int j = i + 1; j <= num_generators; ++j) {
      const Word c = commutator(i, j);
      const Word ci = inverse(c);
      const bool found = std::any_of(relators.begin(), relators.end(), [&](const Word& r) {
        return cyclic_match(c, r) || cyclic_match(ci, r);
      });
      if (!found) return false;
    }
  return true;
}

AbelianInvariants abelianization(const GroupPresentation& p) {
  p.validate();
  IntMatrix m(p.relators.size(), static_cast<std::size_t>(p.num_generators));
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (int letter : p.relators[r])
      m(r, static_cast<std::size_t>(std::abs(letter) - 1)) += letter > 0 ? 1 : -1;
  const auto diag = smith_diagonal(std::move(m));
  AbelianInvariants out;
  out.free_rank = p.num_generators - static_cast<int>(diag.size());
  for (const auto& d : diag)
    if (d > 1) out.torsion.push_back(d);
  return out;
}

GroupPresentation surface_group(int g) {
  if (g < 0) throw Error(ErrorCode::InvalidArgument, "genus must be non-negative");
  Word relator;
  for (int k = 0; k < g; ++k) {
    const Word c = commutator(2 * k + 1, 2 * k + 2);
    relator.insert(relator.end(), c.begin(), c.end());
  }
  return GroupPresentation::make(2 * g, {relator});
}

GroupPresentation sym_product_pi1(int g, int d) {
  if (d < 1) throw Error(ErrorCode::InvalidDegree, "degree must be positive");
  GroupPresentation p = surface_group(g);
  if (d == 1) return p;
  for (int i = 1; i <= p.num_generators; ++i)
    for (int j = i + 1; j <= p.num_generators; ++j) p.relators.push_back(commutator(i, j));
  return p;
}

bool projective_product_simply_connected(int projective_dim, int copies) noexcept {
  return projective_dim >= 0 && copies >= 0;
}

Pi1Result pi1_from_fibration(const FibrationDescriptor& f) {
  if (!f.fiber_simply_connected || !f.has_section) {
    std::string missing;
    if (!f.fiber_simply_connected) missing += " simply connected fiber";
    if (!f.has_section) missing += std::string(missing.empty() ? "" : " and") + " section";
    throw Error(ErrorCode::InsufficientHypotheses, "missing" + missing);
  }
  Pi1Result out;
  out.group = f.base;
  out.certificate.surjectivity =
      "section " + (f.section_description.empty() ? std::string("given") : f.section_description) +
      ": Phi o theta = Id, so Phi_* is onto";
  out.certificate.injectivity =
      "fiber " + (f.fiber_description.empty() ? std::string("given") : f.fiber_description) +
      " is simply connected: the homotopy exact sequence makes Phi_* injective";
  out.certificate.fiber = f.fiber_description;
  return out;
}

namespace {

// Phi o theta = Id on a fixed divisor with a repeated point.
bool section_identity_holds(int n, int d) {
  ExactDivisor sample;
  for (int k = 0; k < d; ++k) sample.add(GaussianRational(k / 2), 1);
  std::vector<GaussianRational> support;
  for (const auto& e : sample.entries()) support.push_back(e.position);
  return phi_divisor(theta_section(static_cast<std::size_t>(n), sample), support) == sample;
}

}  // namespace

ModuliPi1 moduli_pi1_details(int g, int n, int d) {
  if (g < 0) throw Error(ErrorCode::InvalidArgument, "genus must be non-negative");
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "rank must be positive");
  if (d < 1) throw Error(ErrorCode::InvalidDegree, "degree must be positive");
  ModuliPi1 out;
  const GroupPresentation base = sym_product_pi1(g, d);
  if (n == 1) {
    // The rank-one moduli space is Sym^d itself.
    out.presentation = base;
    out.route = "abelian";
  } else {
    FibrationDescriptor f;
    f.base = base;
    f.fiber_description = "(P^" + std::to_string(n - 1) + ")^" + std::to_string(d);
    f.fiber_simply_connected = projective_product_simply_connected(n - 1, d);
    f.section_description = "theta: D -> diag(s_D, 1, ..., 1)";
    f.has_section = section_identity_holds(n, d);
    auto result = pi1_from_fibration(f);
    out.presentation = std::move(result.group);
    out.certificate = std::move(result.certificate);
    out.route = "fibration";
  }
  out.invariants = abelianization(out.presentation);
  return out;
}

AbelianInvariants moduli_pi1(int g, int n, int d) { return moduli_pi1_details(g, n, d).invariants; }

std::complex<double> Character::operator()(const std::vector<int>& element,
                                           const std::vector<int>& factors) const {
  double phase = 0.0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    const long long k = factors[i];
    const long long prod = (static_cast<long long>(exponents[i]) * element[i]) % k;
    phase += double((prod + k) % k) / double(k);
  }
  return std::polar(1.0, 2.0 * std::numbers::pi * phase);
}

std::vector<Character> character_table_abelian(const std::vector<int>& factors) {
  for (int k : factors)
    if (k < 2) throw Error(ErrorCode::InvalidArgument, "cyclic factors must be >= 2");
  std::vector<Character> table;
  std::vector<int> j(factors.size(), 0);
  while (true) {
    table.push_back({j, 1});
    std::size_t pos = 0;
    while (pos < j.size() && ++j[pos] == factors[pos]) j[pos++] = 0;
    if (pos == j.size()) break;
  }
  return table;
}

NogoReport nogo_check(int g, int n, int d) {
  if (d <= 1) {
    throw Error(ErrorCode::OutOfScopeDegree,
                "the multiparticle statement needs d > 1, got d = " + std::to_string(d));
  }
  const ModuliPi1 pi1 = moduli_pi1_details(g, n, d);
  NogoReport report;
  report.pi1 = pi1.invariants;
  report.certificate = pi1.certificate;
  report.pi1_abelian = pi1.presentation.has_all_commutators();
  if (!report.pi1_abelian) {
    throw Error(ErrorCode::InvalidArgument, "presentation is not visibly abelian");
  }
  // Irreducible unitary representations of an abelian group are characters.
  report.max_irreducible_rank = 1;
  for (const auto& t : pi1.invariants.torsion) {
    for (const auto& c : character_table_abelian({static_cast<int>(t)}))
      report.max_irreducible_rank = std::max(report.max_irreducible_rank, c.dimension);
  }
  // Hom(Z^r x finite, U(1)) is a disjoint union of r-tori.
  report.rep_variety_dim = pi1.invariants.free_rank;
  return report;
}

}  // namespace vml
