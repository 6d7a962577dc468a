#include <gtest/gtest.h>

#include "dimlab/catalog.hpp"
#include "dimlab/error.hpp"
#include "dimlab/graded.hpp"
#include "oracle.hpp"

using namespace dimlab;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::Internal;
}

struct Graded {
  FiniteGroup group;
  NSeries lcs;
  NSeries lazard;
  GradedLieRing lie;
  FiltrationBasis filtration;
  GradedAlgebra algebra;
};

Graded setup(const char* name, std::uint32_t p, std::size_t max_degree = 10) {
  const FiniteGroup g = get_group(name);
  const NSeries lcs = lower_central_nseries(g);
  const NSeries laz = lazard_series(lcs, p);
  FiltrationBasis f = delta_filtration(lcs, RingSpec::prime_field(p), max_degree);
  GradedAlgebra a = graded_algebra(f);
  return {g, lcs, laz, graded_lie(laz), std::move(f), std::move(a)};
}

}  // namespace

TEST(GradedLie, AbelianTwoTermSeriesHasZeroBracket) {
  for (const char* name : {"C4", "C2xC4", "C3xC3"}) {
    const GradedLieRing l = graded_lie(lower_central_nseries(get_group(name)));
    for (const auto& c : l.structure_constants()) EXPECT_EQ(c.value, kIdentity) << name;
  }
}

TEST(GradedLie, DihedralBracket) {
  const FiniteGroup g = get_group("D8");
  const GradedLieRing l = graded_lie(lower_central_nseries(g));
  // One degree per stored term; the last quotient is zero.
  ASSERT_EQ(l.num_degrees(), 3u);
  EXPECT_EQ(l.degree(1).invariants, (std::vector<std::uint64_t>{2, 2}));
  EXPECT_EQ(l.degree(2).invariants, (std::vector<std::uint64_t>{2}));
  EXPECT_TRUE(l.degree(3).invariants.empty());
  // Oracle: [r, s] = r^-1 s^-1 r s = r^2 for r = (1 2 3 4), s = (2 4).
  const oracle::PermView view(g, 4);
  const oracle::Perm r = oracle::parse_cycles("(1 2 3 4)", 4), s = oracle::parse_cycles("(2 4)", 4);
  EXPECT_EQ(oracle::comm(r, s), oracle::mul(r, r));
  const Element er = view.of(r), es = view.of(s), er2 = view.of(oracle::mul(r, r));
  EXPECT_EQ(l.bracket(1, er, 1, es), l.canonical(2, er2));
  EXPECT_NE(l.bracket(1, er, 1, es), kIdentity);
  EXPECT_EQ(l.bracket(1, er, 1, er), kIdentity);
}

TEST(GradedLie, HeisenbergBracketGeneratesDegreeTwo) {
  const FiniteGroup g = get_group("Heis27");
  const GradedLieRing l = graded_lie(lower_central_nseries(g));
  ASSERT_EQ(l.num_degrees(), 3u);
  const auto& gens = l.degree(1).generators;
  ASSERT_EQ(gens.size(), 2u);
  const Element z = l.bracket(1, gens[0], 1, gens[1]);
  EXPECT_NE(z, kIdentity);
  EXPECT_EQ(oracle::members(closure(g, {z})), oracle::members(l.degree(2).term));
}

TEST(GradedLie, RepresentativeIndependence) {
  for (const char* name : {"D8", "Q8", "Heis27", "Heis27e9", "D16", "S4"}) {
    const NSeries n = lower_central_nseries(get_group(name));
    const auto base = graded_lie(n).structure_constants();
    for (std::uint64_t seed : {1u, 2u, 3u, 99u}) EXPECT_EQ(graded_lie(n, seed).structure_constants(), base) << name;
    const NSeries l2 = lazard_series(n, 2);
    EXPECT_EQ(graded_lie(l2, 5).structure_constants(), graded_lie(l2).structure_constants()) << name;
  }
}

TEST(GradedLie, AntisymmetryAndJacobi) {
  for (const char* name : {"D8", "Q8", "Heis27", "C2xD8", "SD16", "S4", "A4"}) {
    for (std::uint64_t p : {2u, 3u}) {
      const GradedLieRing l = graded_lie(lazard_series(lower_central_nseries(get_group(name)), p));
      EXPECT_TRUE(check_antisymmetry(l).ok) << name;
      const auto j = check_jacobi(l);
      EXPECT_TRUE(j.ok) << name << " " << j.witness;
    }
  }
}

TEST(GradedLie, TensorBasisRanks) {
  const GradedLieRing l = graded_lie(lower_central_nseries(get_group("C2xC4")));
  EXPECT_EQ(l.tensor_basis(1, RingSpec::prime_field(2)).size(), 2u);
  EXPECT_EQ(l.tensor_basis(1, RingSpec::prime_field(3)).size(), 0u);
  EXPECT_TRUE(l.tensor_basis(1, RingSpec::rationals()).empty());
}

TEST(GradedAlgebra, TrivialGroupIsFieldInDegreeZero) {
  const auto f = delta_filtration(lower_central_nseries(get_group("trivial")), RingSpec::prime_field(2), 4);
  const GradedAlgebra a = graded_algebra(f);
  EXPECT_TRUE(a.complete());
  EXPECT_EQ(a.dimension(0), 1u);
  EXPECT_EQ(a.dimension(3), 0u);
}

TEST(GradedAlgebra, DihedralDimensions) {
  const Graded s = setup("D8", 2);
  EXPECT_EQ(s.algebra.dimensions(), (std::vector<std::size_t>{1, 2, 2, 2, 1}));
  EXPECT_TRUE(s.algebra.complete());
}

TEST(GradedAlgebra, RejectsIntegers) {
  const auto f = delta_filtration(lower_central_nseries(get_group("C2")), RingSpec::integers(), 3);
  EXPECT_EQ(code_of([&] { graded_algebra(f); }), Errc::RingMismatch);
}

TEST(GradedAlgebra, DegreeZeroUnitActsAsIdentity) {
  const Graded s = setup("Q8", 2);
  for (std::size_t i = 0; i <= 4; ++i)
    for (std::size_t a = 0; a < s.algebra.dimension(i); ++a) {
      std::vector<Rational> unit(s.algebra.dimension(i), 0);
      unit[a] = 1;
      EXPECT_EQ(s.algebra.multiply(0, 0, i, a), unit);
      EXPECT_EQ(s.algebra.multiply(i, a, 0, 0), unit);
    }
}

TEST(GradedAlgebra, CoordinatesRoundTrip) {
  const Graded s = setup("Heis27", 3);
  for (std::size_t i = 0; i <= 8; ++i)
    for (std::size_t a = 0; a < s.algebra.dimension(i); ++a) {
      std::vector<Rational> unit(s.algebra.dimension(i), 0);
      unit[a] = 1;
      EXPECT_EQ(s.algebra.coordinates(i, s.algebra.basis_element(i, a)), unit);
    }
  // (x - 1) for x outside D_2 is not in Delta_2.
  const Element x = s.group.generators()[0];
  EXPECT_FALSE(s.algebra.coordinates(2, GroupRingVector::augmented(s.group, RingSpec::prime_field(3), x)).has_value());
}

TEST(GradedAlgebra, Associativity) {
  for (auto [name, p] : {std::pair{"D8", 2u}, {"Q8", 2u}, {"Heis27", 3u}, {"C4", 2u}}) {
    const Graded s = setup(name, p);
    const auto r = check_associativity(s.algebra);
    EXPECT_TRUE(r.ok) << name << " " << r.witness;
    EXPECT_GT(r.checked, 0u);
  }
}

TEST(Theta, ZeroLieRingIsVacuouslyInjective) {
  const Graded s = setup("S3", 3);
  const ThetaMap t = theta(s.lie, s.algebra);
  EXPECT_TRUE(t.injective());
  for (auto r : t.ranks()) EXPECT_EQ(r, 0u);
}

TEST(Theta, DihedralRanks) {
  const Graded s = setup("D8", 2);
  const ThetaMap t = theta(s.lie, s.algebra);
  EXPECT_EQ(t.ranks(), (std::vector<std::size_t>{2, 1, 0}));
  EXPECT_TRUE(t.injective());
  EXPECT_TRUE(t.lie_morphism.ok);
}

TEST(Theta, HeisenbergLieMorphism) {
  const Graded s = setup("Heis27", 3);
  const ThetaMap t = theta(s.lie, s.algebra);
  EXPECT_TRUE(t.lie_morphism.ok) << t.lie_morphism.witness;
  EXPECT_GT(t.lie_morphism.checked, 0u);
  EXPECT_EQ(t.ranks(), (std::vector<std::size_t>{2, 1, 0}));
  // Direct check: theta(z) = theta(x) theta(y) - theta(y) theta(x) in degree 2.
  const auto& gens = s.lie.degree(1).generators;
  const RingSpec f3 = RingSpec::prime_field(3);
  const Element z = s.group.commutator(gens[0], gens[1]);
  const auto x1 = GroupRingVector::augmented(s.group, f3, gens[0]);
  const auto y1 = GroupRingVector::augmented(s.group, f3, gens[1]);
  EXPECT_EQ(s.algebra.coordinates(2, GroupRingVector::augmented(s.group, f3, z)),
            s.algebra.coordinates(2, x1 * y1 - y1 * x1));
}

TEST(Theta, MismatchedGrading) {
  // Every term of the isolator series is G, but r - 1 is not in Delta_2 over F_2.
  const FiniteGroup g = get_group("D8");
  const GradedLieRing l = graded_lie(isolator_series(lower_central_nseries(g)));
  const GradedAlgebra a = graded_algebra(delta_filtration(lower_central_nseries(g), RingSpec::prime_field(2), 4));
  EXPECT_EQ(code_of([&] { theta(l, a); }), Errc::MismatchedGrading);
}

TEST(Xi, CyclicAndDihedral) {
  for (const char* name : {"C4", "D8"}) {
    const Graded s = setup(name, 2);
    const XiReport r = xi_check(s.lie, s.algebra);
    EXPECT_TRUE(r.ok()) << name;
    EXPECT_FALSE(r.entries.empty());
    for (const auto& e : r.entries) {
      EXPECT_TRUE(e.lands_in_series);
      EXPECT_TRUE(e.matches);
    }
  }
  // Oracle for C4: (g - 1)^2 = g^2 - 1 over F_2, and the class is nonzero in degree 2.
  const Graded c4 = setup("C4", 2);
  const Element g = c4.group.generators()[0];
  const RingSpec f2 = RingSpec::prime_field(2);
  const auto sq = GroupRingVector::augmented(c4.group, f2, g).pow(2);
  EXPECT_EQ(sq, GroupRingVector::augmented(c4.group, f2, c4.group.pow(g, 2)));
  const auto coords = c4.algebra.coordinates(2, sq);
  ASSERT_TRUE(coords.has_value());
  EXPECT_EQ(*coords, (std::vector<Rational>{1}));
}

TEST(Xi, ExponentPGroupHasZeroPowers) {
  const Graded s = setup("C3xC3", 3);
  const XiReport r = xi_check(s.lie, s.algebra);
  EXPECT_TRUE(r.ok());
  for (const auto& e : r.entries) EXPECT_TRUE(e.matches);
}

TEST(Primitivity, ThetaImagesArePrimitive) {
  for (auto [name, p] : {std::pair{"C4", 2u}, {"D8", 2u}, {"Q8", 2u}, {"Heis27", 3u}}) {
    const Graded s = setup(name, p);
    const auto r = primitivity_check(s.algebra, theta(s.lie, s.algebra));
    EXPECT_TRUE(r.ok()) << name << " " << r.witness;
    EXPECT_GT(r.checked, 0u);
  }
}

TEST(Primitivity, ProductOfGeneratorsIsNot) {
  const Graded s = setup("D8", 2);
  const RingSpec f2 = RingSpec::prime_field(2);
  const auto& gens = s.group.generators();
  const auto x = GroupRingVector::augmented(s.group, f2, gens[0]);
  const auto y = GroupRingVector::augmented(s.group, f2, gens[1]);
  EXPECT_TRUE(is_primitive(s.algebra, 1, x));
  EXPECT_TRUE(is_primitive(s.algebra, 1, y));
  // delta(xy) - 1(x)xy - xy(x)1 = x(x)y + y(x)x + higher terms.
  EXPECT_FALSE(is_primitive(s.algebra, 2, x * y));
  // The commutator class is primitive.
  EXPECT_TRUE(is_primitive(s.algebra, 2, x * y - y * x));
}

TEST(Generation, ThetaImagesGenerate) {
  for (auto [name, p] : {std::pair{"D8", 2u}, {"Heis27", 3u}, {"S3", 3u}, {"S3", 2u}}) {
    const Graded s = setup(name, p);
    const auto r = generation_check(s.algebra, theta(s.lie, s.algebra));
    EXPECT_TRUE(r.ok()) << name;
  }
}

TEST(Hilbert, DerivedProducts) {
  const Graded d8 = setup("D8", 2);
  const auto r = hilbert_check(d8.lie, d8.algebra);
  EXPECT_TRUE(r.ok());
  EXPECT_FALSE(r.truncated);
  EXPECT_EQ(r.lie_ranks, (std::vector<std::size_t>{2, 1, 0}));
  const auto want = oracle::restricted_pbw({2, 1}, 2);
  ASSERT_GE(r.lhs.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) EXPECT_EQ(r.lhs[i], want[i]);

  const Graded heis = setup("Heis27", 3);
  const auto h = hilbert_check(heis.lie, heis.algebra);
  EXPECT_TRUE(h.ok());
  EXPECT_TRUE(h.total_matches_order);
  const auto hw = oracle::restricted_pbw({2, 1}, 3);
  EXPECT_EQ(hw, (std::vector<long>{1, 2, 4, 4, 5, 4, 4, 2, 1}));
  for (std::size_t i = 0; i < hw.size(); ++i) EXPECT_EQ(h.rhs[i], hw[i]);
}

TEST(Hilbert, SymmetricGroupCollapse) {
  const Graded s = setup("S3", 3);
  const auto r = hilbert_check(s.lie, s.algebra);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(s.algebra.dimensions(), (std::vector<std::size_t>{1}));
  for (auto d : r.lie_ranks) EXPECT_EQ(d, 0u);
}

TEST(Hilbert, TruncatedWhenDegreeTooSmall) {
  const Graded s = setup("Heis27", 3, 4);
  const auto r = hilbert_check(s.lie, s.algebra);
  EXPECT_TRUE(r.truncated);
  EXPECT_TRUE(r.ok());
}
