#include <random>
#include <set>

#include <gtest/gtest.h>

#include "dimlab/catalog.hpp"
#include "dimlab/error.hpp"
#include "dimlab/series.hpp"
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

const std::vector<std::string>& p_group_names() {
  static const std::vector<std::string> names{"C2", "C3", "C4", "C8", "C2xC2", "C2xC4", "C3xC3", "D8",
                                              "D16", "Q8", "Q16", "SD16", "M16", "Heis27", "Heis27e9",
                                              "C2xD8"};
  return names;
}

// Element-wise reference evaluation of the Lazard product for small groups.
// Exponents p^j are reduced mod |G|; 64 values of j cover a full period of
// p^j mod |G| for the catalog orders.
std::set<Element> lazard_oracle(const NSeries& n, std::uint64_t p, std::size_t i) {
  const FiniteGroup& g = n.group();
  std::set<Element> gens;
  for (std::size_t k = 1; k <= n.length() + 1; ++k) {
    std::uint64_t q = 1, q_mod = 1 % g.order();
    for (int j = 0; j < 64; ++j) {
      if (k * q >= i)
        for (Element x : n.term(k).elements()) gens.insert(g.pow(x, static_cast<long long>(q_mod)));
      q = std::min<std::uint64_t>(q * p, 1u << 20);
      q_mod = q_mod * p % g.order();
    }
  }
  std::vector<Element> seed(gens.begin(), gens.end());
  return oracle::members(closure(g, seed));
}

}  // namespace

TEST(NSeries, TwoTermSeriesValidIffAbelian) {
  for (const auto& e : catalog_entries()) {
    const FiniteGroup g = get_group(e.name);
    std::vector<Subgroup> terms{Subgroup::whole(g), Subgroup::trivial(g)};
    if (e.abelian)
      EXPECT_NO_THROW(nseries_from_terms(g, terms)) << e.name;
    else
      EXPECT_EQ(code_of([&] { nseries_from_terms(g, terms); }), Errc::AxiomViolation) << e.name;
  }
}

TEST(NSeries, AxiomViolationNamesPair) {
  const FiniteGroup g = get_group("D8");
  try {
    nseries_from_terms(g, {Subgroup::whole(g), Subgroup::trivial(g)});
    FAIL();
  } catch (const AxiomViolationError& e) {
    EXPECT_EQ(e.i(), 1u);
    EXPECT_EQ(e.j(), 1u);
  }
}

TEST(NSeries, LowerCentralSeriesOfDihedralIsValid) {
  const FiniteGroup g = get_group("D8");
  const NSeries n = nseries_from_terms(g, lower_central_series(g));
  EXPECT_EQ(n.length(), 3u);
  EXPECT_EQ(n.term(2).order(), 2u);
  EXPECT_TRUE(n.term(3).is_trivial());
  EXPECT_TRUE(n.term(40).is_trivial());
  EXPECT_FALSE(n.stabilized());
  EXPECT_EQ(n, lower_central_nseries(g));
}

TEST(NSeries, NonNormalTermRejected) {
  const FiniteGroup g = get_group("S3");
  Element t = 0;
  for (Element x = 1; x < g.order(); ++x)
    if (g.label(x) == "(1,2)") t = x;
  ASSERT_NE(t, 0u);
  const Errc c = code_of([&] { nseries_from_terms(g, {Subgroup::whole(g), closure(g, {t}), Subgroup::trivial(g)}); });
  EXPECT_TRUE(c == Errc::NotNormal || c == Errc::NotDescending);
}

TEST(NSeries, NotDescendingRejected) {
  const FiniteGroup g = get_group("C4");
  const Subgroup sq = closure(g, {g.pow(1, 2)});
  EXPECT_EQ(code_of([&] { nseries_from_terms(g, {Subgroup::whole(g), Subgroup::trivial(g), sq}); }),
            Errc::NotDescending);
  EXPECT_EQ(code_of([&] { nseries_from_terms(g, {sq}); }), Errc::NotDescending);
}

TEST(NSeries, TrivialTermAppended) {
  const FiniteGroup g = get_group("C4");
  const NSeries n = nseries_from_terms(g, {Subgroup::whole(g)});
  EXPECT_EQ(n.length(), 2u);
  EXPECT_TRUE(n.term(2).is_trivial());
}

TEST(NSeries, StableTailForNonNilpotentGroup) {
  const FiniteGroup g = get_group("S3");
  const NSeries n = lower_central_nseries(g);
  EXPECT_TRUE(n.stabilized());
  EXPECT_EQ(n.term(2).order(), 3u);
  EXPECT_EQ(n.term(30).order(), 3u);
  // Without the stable tail, [G, N_2] = N_2 is not contained in the trivial N_3.
  EXPECT_THROW(nseries_from_terms(g, {Subgroup::whole(g), n.term(2)}, SeriesTail::Trivial), Error);
}

TEST(CheckSeriesPrefix, ReportsFirstViolation) {
  const FiniteGroup g = get_group("D8");
  const Subgroup center = lower_central_series(g)[1];
  EXPECT_FALSE(check_series_prefix(g, {Subgroup::whole(g), center}).has_value());
  const auto v = check_series_prefix(g, {Subgroup::whole(g), center, Subgroup::whole(g)});
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->kind, PrefixViolation::Kind::NotDescending);
  EXPECT_EQ(v->i, 3u);
  const auto a = check_series_prefix(g, {Subgroup::whole(g), Subgroup::trivial(g)});
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(a->kind, PrefixViolation::Kind::Axiom);
}

TEST(IsPRestricted, ElementaryAbelianLcs) {
  EXPECT_TRUE(is_p_restricted(lower_central_nseries(get_group("C2xC2")), 2));
  EXPECT_TRUE(is_p_restricted(lower_central_nseries(get_group("C3xC3")), 3));
  EXPECT_TRUE(is_p_restricted(lower_central_nseries(get_group("Heis27")), 3));
}

TEST(IsPRestricted, CyclicFourIsNot) {
  // Direct check: g in N_1 but g^2 != 1 = N_2.
  const FiniteGroup g = get_group("C4");
  const NSeries n = lower_central_nseries(g);
  bool restricted = true;
  for (Element x : n.term(1).elements())
    if (!n.term(2).contains(g.pow(x, 2))) restricted = false;
  EXPECT_FALSE(restricted);
  EXPECT_FALSE(is_p_restricted(n, 2));
}

TEST(IsZeroRestricted, OnlyTrivialGroupForLcs) {
  EXPECT_TRUE(is_zero_restricted(lower_central_nseries(get_group("trivial"))));
  EXPECT_FALSE(is_zero_restricted(lower_central_nseries(get_group("C2"))));
  EXPECT_TRUE(is_zero_restricted(isolator_series(lower_central_nseries(get_group("D8")))));
}

TEST(LazardSeries, DihedralHandEvaluation) {
  const FiniteGroup g = get_group("D8");
  const NSeries l = lazard_series(lower_central_nseries(g), 2);
  ASSERT_EQ(l.length(), 3u);
  EXPECT_TRUE(l.term(1).is_whole());
  EXPECT_EQ(l.term(2), lower_central_series(g)[1]);
  EXPECT_TRUE(l.term(3).is_trivial());
}

TEST(LazardSeries, SymmetricGroupAtThree) {
  const FiniteGroup g = get_group("S3");
  const NSeries l = lazard_series(lower_central_nseries(g), 3);
  for (std::size_t i = 1; i <= 10; ++i) EXPECT_TRUE(l.term(i).is_whole()) << i;
}

TEST(LazardSeries, CyclicFourIsJenningsSeries) {
  const FiniteGroup g = get_group("C4");
  const NSeries l = lazard_series(lower_central_nseries(g), 2);
  EXPECT_EQ(l.term(2).order(), 2u);
  EXPECT_EQ(l.term(3).order(), 1u);
  EXPECT_TRUE(is_p_restricted(l, 2));
}

TEST(LazardSeries, MatchesElementwiseOracle) {
  for (const auto& name : p_group_names()) {
    const FiniteGroup g = get_group(name);
    const NSeries n = lower_central_nseries(g);
    for (std::uint64_t p : {2u, 3u}) {
      const NSeries l = lazard_series(n, p);
      for (std::size_t i = 1; i <= 10; ++i)
        EXPECT_EQ(oracle::members(l.term(i)), lazard_oracle(n, p, i)) << name << " p=" << p << " i=" << i;
    }
  }
}

TEST(LazardSeries, PropertiesOnCatalog) {
  for (const auto& e : catalog_entries()) {
    const FiniteGroup g = get_group(e.name);
    const NSeries n = lower_central_nseries(g);
    const NSeries iso = isolator_series(n);
    for (std::uint64_t p : {2u, 3u, 5u}) {
      const NSeries l = lazard_series(n, p);
      EXPECT_TRUE(is_p_restricted(l, p)) << e.name;
      EXPECT_EQ(lazard_series(l, p), l) << e.name << " p=" << p;
      for (std::size_t i = 1; i <= 12; ++i) {
        EXPECT_TRUE(n.term(i).is_subset_of(l.term(i))) << e.name << " " << i;
        EXPECT_TRUE(l.term(i).is_subset_of(iso.term(i))) << e.name << " " << i;
      }
    }
  }
}

TEST(LazardSeries, MonotoneInSeries) {
  // Jennings series of D8 contains lcs termwise; so must their Lazard series.
  const FiniteGroup g = get_group("D8");
  const NSeries n = lower_central_nseries(g);
  const NSeries bigger = lazard_series(n, 2);
  const NSeries a = lazard_series(n, 2), b = lazard_series(bigger, 2);
  for (std::size_t i = 1; i <= 8; ++i) EXPECT_TRUE(a.term(i).is_subset_of(b.term(i)));
  std::mt19937_64 rng(7);
  for (const auto& name : p_group_names()) {
    const FiniteGroup h = get_group(name);
    const auto small = random_lazard_type_series(h, rng);
    ASSERT_TRUE(small.has_value());
    const NSeries big = isolator_series(*small);
    const NSeries la = lazard_series(*small, 2), lb = lazard_series(big, 2);
    for (std::size_t i = 1; i <= 8; ++i) EXPECT_TRUE(la.term(i).is_subset_of(lb.term(i))) << name;
  }
}

TEST(IsolatorSeries, FiniteGroupsGiveWholeGroup) {
  for (const char* name : {"C4", "D8", "S3", "Heis27"}) {
    const NSeries iso = isolator_series(lower_central_nseries(get_group(name)));
    for (std::size_t i = 1; i <= 6; ++i) EXPECT_TRUE(iso.term(i).is_whole()) << name;
  }
  const NSeries c4 = isolator_series(lower_central_nseries(get_group("C4")));
  EXPECT_TRUE(c4.stabilized());
  const NSeries t = isolator_series(lower_central_nseries(get_group("trivial")));
  EXPECT_TRUE(t.term(1).is_trivial());
  EXPECT_TRUE(t.term(5).is_trivial());
}

TEST(RandomLazardTypeSeries, ProducesValidSeries) {
  std::mt19937_64 rng(11);
  for (const auto& e : catalog_entries()) {
    const FiniteGroup g = get_group(e.name);
    for (int t = 0; t < 5; ++t) {
      const auto n = random_lazard_type_series(g, rng);
      ASSERT_TRUE(n.has_value()) << e.name;
      EXPECT_NO_THROW(nseries_from_terms(g, n->terms(), n->stabilized() ? SeriesTail::Stable : SeriesTail::Trivial));
      EXPECT_FALSE(check_series_prefix(g, n->terms()).has_value());
    }
  }
}

TEST(RandomLazardTypeSeries, DeterministicForSeed) {
  const FiniteGroup g = get_group("C2xD8");
  std::mt19937_64 a(5), b(5);
  for (int t = 0; t < 4; ++t) EXPECT_EQ(random_lazard_type_series(g, a), random_lazard_type_series(g, b));
}
