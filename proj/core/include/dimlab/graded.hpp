#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dimlab/filtration.hpp"
#include "dimlab/group_ring.hpp"
#include "dimlab/series.hpp"

namespace dimlab {

// One homogeneous piece N_i / N_{i+1} of the graded Lie ring of an N-series.
// Cosets are named by their least element index.
struct LieDegree {
  std::size_t degree;
  Subgroup term;
  Subgroup next;
  std::vector<Element> representatives;  // sorted coset representatives
  std::vector<Element> generators;       // representatives generating the quotient
  std::vector<std::uint64_t> invariants;
};

struct BracketConstant {
  std::size_t i = 0, j = 0;
  Element a = 0, b = 0;  // generator representatives in degrees i and j
  Element value = 0;     // representative in degree i + j
  friend bool operator==(const BracketConstant&, const BracketConstant&) = default;
};

class GradedLieRing {
 public:
  const NSeries& series() const noexcept { return series_; }
  std::size_t num_degrees() const noexcept { return degrees_.size(); }
  // 1-based.
  const LieDegree& degree(std::size_t i) const;
  const std::vector<BracketConstant>& structure_constants() const noexcept { return constants_; }

  // Coset representative of x in N_k / N_{k+1}; x must lie in N_k.
  Element canonical(std::size_t k, Element x) const;
  // [a, b] for a in N_i, b in N_j, as a representative in degree i + j.
  Element bracket(std::size_t i, Element a, std::size_t j, Element b) const;

  // Group elements whose classes form a basis of (N_i/N_{i+1}) (x) F; empty
  // for Q since the quotients are finite.
  std::vector<Element> tensor_basis(std::size_t i, RingSpec field) const;

 private:
  friend GradedLieRing graded_lie(const NSeries&, std::optional<std::uint64_t>);
  GradedLieRing(NSeries series) : series_(std::move(series)) {}

  NSeries series_;
  std::vector<LieDegree> degrees_;
  std::vector<std::vector<Element>> coset_of_;  // per degree, element -> representative
  std::vector<BracketConstant> constants_;
};

// With `representative_seed`, structure constants are computed from random
// members of each coset instead of the least ones; the result must not change.
GradedLieRing graded_lie(const NSeries& n, std::optional<std::uint64_t> representative_seed = std::nullopt);

struct IdentityCheck {
  bool ok = true;
  std::size_t checked = 0;
  std::string witness;
};

IdentityCheck check_antisymmetry(const GradedLieRing& l);
IdentityCheck check_jacobi(const GradedLieRing& l);

// Graded algebra Delta_i / Delta_{i+1} over a field. Coordinates are exact
// rationals (residues in [0, p) for F_p) in a canonical basis per degree.
class GradedAlgebra {
 public:
  struct Impl;

  const FiltrationBasis& filtration() const noexcept;
  RingSpec field() const noexcept { return filtration().ring; }
  // Degrees whose quotient is known: i < known_degrees(), or every degree
  // when complete().
  std::size_t known_degrees() const noexcept;
  // Delta vanished or stabilized within range, so all later pieces are 0.
  bool complete() const noexcept;
  std::size_t dimension(std::size_t i) const;
  std::vector<std::size_t> dimensions() const;

  // Class of x in degree i, or nullopt when x is not in Delta_i.
  std::optional<std::vector<Rational>> coordinates(std::size_t i, const GroupRingVector& x) const;
  GroupRingVector basis_element(std::size_t i, std::size_t a) const;
  // Product of basis elements a (degree i) and b (degree j) in degree i+j.
  std::vector<Rational> multiply(std::size_t i, std::size_t a, std::size_t j, std::size_t b) const;

  const Impl& impl() const noexcept { return *impl_; }

 private:
  friend GradedAlgebra graded_algebra(const FiltrationBasis&);
  explicit GradedAlgebra(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

// Throws RingMismatch for Z.
GradedAlgebra graded_algebra(const FiltrationBasis& f);

IdentityCheck check_associativity(const GradedAlgebra& a);

struct ThetaDegree {
  std::size_t degree = 0;
  std::vector<Element> domain;                  // tensor basis of L_i (x) F
  std::vector<std::vector<Rational>> columns;   // class of (x - 1) in A_i
  std::size_t rank = 0;
  bool injective() const noexcept { return rank == domain.size(); }
};

struct ThetaMap {
  std::vector<ThetaDegree> degrees;  // index i - 1
  IdentityCheck lie_morphism;        // theta[x,y] = [theta x, theta y]
  bool injective() const;
  std::vector<std::size_t> ranks() const;
};

// {n} -> {n - 1}. Requires every n in L's i-th term to satisfy n - 1 in
// Delta_i (MismatchedGrading otherwise).
ThetaMap theta(const GradedLieRing& l, const GradedAlgebra& a);

struct XiEntry {
  std::size_t degree = 0;
  Element element = 0;
  std::size_t target_degree = 0;
  bool lands_in_series = false;  // n^p in the (ip)-th term
  bool matches = false;          // theta(xi(n)) = theta(n)^p
};

struct XiReport {
  std::vector<XiEntry> entries;
  std::size_t skipped = 0;  // target degree beyond the known range
  bool ok() const;
};

XiReport xi_check(const GradedLieRing& l, const GradedAlgebra& a);

// Whether delta(x) - 1(x)x - x(x)1 lies in filtration degree i + 1 of the
// tensor square, i.e. x is primitive in degree i. Requires i + 1 to be known.
bool is_primitive(const GradedAlgebra& a, std::size_t i, const GroupRingVector& x);

struct PrimitivityReport {
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::string witness;
  bool ok() const noexcept { return witness.empty(); }
};

PrimitivityReport primitivity_check(const GradedAlgebra& a, const ThetaMap& theta_map);

// Dimensions of the subalgebra generated by theta images, per known degree.
struct GenerationReport {
  std::vector<std::size_t> generated;
  std::vector<std::size_t> expected;
  bool ok() const noexcept { return generated == expected; }
};

GenerationReport generation_check(const GradedAlgebra& a, const ThetaMap& theta_map);

struct HilbertReport {
  std::vector<Integer> lhs;  // prod_i (1 + t^i + ... + t^((p-1)i))^{d_i}
  std::vector<Integer> rhs;  // dim A_n
  std::vector<std::size_t> lie_ranks;
  bool truncated = false;  // comparison limited to the known range
  bool total_matches_order = true;
  bool ok() const;
};

// `lazard` is the graded Lie ring of a Lazard series at p = char(A).
HilbertReport hilbert_check(const GradedLieRing& lazard, const GradedAlgebra& a);

}  // namespace dimlab
