#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "vml/gaussian_rational.hpp"

namespace vml {

/// Word in the free group: +k is generator k-1, -k its inverse.
using Word = std::vector<int>;

Word free_reduce(const Word& w);
Word inverse(const Word& w);
Word commutator(int a, int b);  // a b a^-1 b^-1, 1-based letters

struct GroupPresentation {
  int num_generators = 0;
  std::vector<Word> relators;

  /// Freely reduces every relator and drops the empty ones.
  static GroupPresentation make(int num_generators, std::vector<Word> relators);
  /// Throws InvalidArgument on out-of-range letters or unreduced relators.
  void validate() const;
  /// True if [x_i, x_j] is a relator (up to cyclic rotation and inversion)
  /// for every pair i < j.
  bool has_all_commutators() const;

  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;
};

struct AbelianInvariants {
  int free_rank = 0;
  std::vector<BigInt> torsion;  // each >= 2, each dividing the next

  bool is_trivial() const noexcept { return free_rank == 0 && torsion.empty(); }
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Smith normal form of the relator exponent-sum matrix.
AbelianInvariants abelianization(const GroupPresentation& p);

/// <a_1, b_1, ..., a_g, b_g | [a_1,b_1] ... [a_g,b_g]>.
GroupPresentation surface_group(int g);

/// d = 1: the surface group. d >= 2: the surface relator plus every
/// commutator of generators, i.e. H_1 of the surface (Dold-Thom).
GroupPresentation sym_product_pi1(int g, int d);

/// Trusted topology: complex projective space P^k is simply connected for
/// every k >= 0, and so is any finite product of such spaces.
bool projective_product_simply_connected(int projective_dim, int copies) noexcept;

struct FibrationDescriptor {
  GroupPresentation base;
  bool fiber_simply_connected = false;
  bool has_section = false;
  std::string fiber_description;
  std::string section_description;
};

/// Record of the two hypotheses behind pi_1(total) = pi_1(base).
struct FibrationCertificate {
  std::string surjectivity;  // from the section
  std::string injectivity;   // from the homotopy exact sequence
  std::string fiber;
};

struct Pi1Result {
  GroupPresentation group;
  FibrationCertificate certificate;
};

/// Refuses (InsufficientHypotheses) unless the fiber is simply connected
/// and a section exists; then returns the base presentation.
Pi1Result pi1_from_fibration(const FibrationDescriptor& f);

struct ModuliPi1 {
  GroupPresentation presentation;
  AbelianInvariants invariants;
  std::string route;  // "abelian" (n = 1) or "fibration"
  std::optional<FibrationCertificate> certificate;
};

/// pi_1 of the rank-n, degree-d local vortex moduli space over a genus-g
/// surface. For n > 1 the section hypothesis is checked on a sample
/// divisor by composing the divisor map with theta_section.
ModuliPi1 moduli_pi1_details(int g, int n, int d);
AbelianInvariants moduli_pi1(int g, int n, int d);

/// Character of prod Z_{k_i}: g -> exp(2 pi i sum_i j_i g_i / k_i).
struct Character {
  std::vector<int> exponents;
  int dimension = 1;

  std::complex<double> operator()(const std::vector<int>& element,
                                  const std::vector<int>& factors) const;
};

/// All |G| characters of the finite abelian group prod Z_{k_i}.
std::vector<Character> character_table_abelian(const std::vector<int>& cyclic_factors);

struct NogoReport {
  bool pi1_abelian = false;
  int max_irreducible_rank = 0;
  int rep_variety_dim = 0;
  AbelianInvariants pi1;
  std::optional<FibrationCertificate> certificate;
};

/// Throws OutOfScopeDegree for d <= 1.
NogoReport nogo_check(int g, int n, int d);

}  // namespace vml
