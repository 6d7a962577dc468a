#include <functional>

#include <gtest/gtest.h>

#include "dimlab/catalog.hpp"
#include "dimlab/error.hpp"
#include "dimlab/filtration.hpp"
#include "dimlab/group_ring.hpp"
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

// Row space over F_p kept in echelon form, with plain ints.
struct ModSpan {
  int p;
  std::size_t dim;
  std::vector<std::vector<int>> rows;

  std::vector<int> reduce(std::vector<int> v) const {
    for (const auto& r : rows) {
      std::size_t c = 0;
      while (r[c] == 0) ++c;
      if (v[c] == 0) continue;
      const int f = v[c];
      for (std::size_t k = 0; k < dim; ++k) v[k] = ((v[k] - f * r[k]) % p + p) % p;
    }
    return v;
  }
  void insert(std::vector<int> v) {
    v = reduce(std::move(v));
    std::size_t c = 0;
    while (c < dim && v[c] == 0) ++c;
    if (c == dim) return;
    int inv = 1;
    while (inv * v[c] % p != 1) ++inv;
    for (auto& x : v) x = x * inv % p;
    rows.push_back(v);
  }
  bool contains(const std::vector<int>& v) const {
    for (int x : reduce(v))
      if (x) return false;
    return true;
  }
};

// Delta_i over F_p from its definition: the span of products of (g - 1)
// factors with weights summing to at least i, closed under right
// multiplication by group elements.
ModSpan delta_oracle(const NSeries& n, int p, std::size_t i) {
  const FiniteGroup& g = n.group();
  const std::size_t order = g.order();
  std::vector<std::size_t> weight(order, 1);
  for (std::size_t k = 2; k <= i; ++k)
    for (Element x : n.term(k).elements()) weight[x] = k;
  ModSpan span{p, order, {}};
  if (i == 0) {
    for (std::size_t a = 0; a < order; ++a) {
      std::vector<int> v(order, 0);
      v[a] = 1;
      span.insert(v);
    }
    return span;
  }
  std::vector<int> one(order, 0);
  one[kIdentity] = 1;
  std::function<void(const std::vector<int>&, std::size_t)> grow = [&](const std::vector<int>& prod, std::size_t w) {
    if (w >= i) {
      for (Element h = 0; h < order; ++h) {
        std::vector<int> v(order, 0);
        for (Element a = 0; a < order; ++a) v[g.mul(a, h)] = (v[g.mul(a, h)] + prod[a]) % p;
        span.insert(v);
      }
      return;
    }
    for (Element x = 1; x < order; ++x) {
      std::vector<int> next(order, 0);
      for (Element a = 0; a < order; ++a) {
        if (!prod[a]) continue;
        next[g.mul(a, x)] = (next[g.mul(a, x)] + prod[a]) % p;
        next[a] = (next[a] - prod[a] + p) % p;
      }
      grow(next, w + weight[x]);
    }
  };
  grow(one, 0);
  return span;
}

std::vector<int> as_ints(const std::vector<Rational>& row, int p) {
  std::vector<int> out;
  for (const auto& x : row) {
    Integer r = x.get_num() % p;
    if (r < 0) r += p;
    out.push_back(static_cast<int>(r.get_si()));
  }
  return out;
}

std::vector<std::size_t> dims(const FiltrationBasis& f) {
  std::vector<std::size_t> out;
  for (const auto& piece : graded_quotient_dims(f)) out.push_back(piece.dimension);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace

TEST(WeightSpan, Values) {
  const FiniteGroup d8 = get_group("D8");
  const NSeries n = lower_central_nseries(d8);
  EXPECT_EQ(weight_span(n, RingSpec::prime_field(2), 1).rank(), 7u);
  EXPECT_EQ(weight_span(n, RingSpec::prime_field(2), 2).rank(), 1u);
  EXPECT_EQ(weight_span(n, RingSpec::prime_field(2), 3).rank(), 0u);
  EXPECT_EQ(weight_span(n, RingSpec::integers(), 2).rank(), 1u);
  EXPECT_THROW(weight_span(n, RingSpec::rationals(), 0), Error);
}

TEST(DeltaFiltration, TrivialGroup) {
  const NSeries n = lower_central_nseries(get_group("trivial"));
  for (RingSpec ring : {RingSpec::rationals(), RingSpec::integers(), RingSpec::prime_field(2)}) {
    const FiltrationBasis f = delta_filtration(n, ring, 4);
    EXPECT_EQ(f.delta(0).rank(), 1u);
    for (std::size_t i = 1; i <= 4; ++i) EXPECT_EQ(f.delta(i).rank(), 0u);
    EXPECT_EQ(f.vanishes_at(), 1u);
    EXPECT_EQ(f.stabilized_at, 1u);
    EXPECT_EQ(delta_bruteforce(n, ring, 4).degrees, f.degrees);
  }
}

TEST(DeltaFiltration, MatchesDefinitionOverPrimeFields) {
  for (const char* name : {"C4", "C2xC2", "D8", "Q8", "S3", "C6"}) {
    const FiniteGroup g = get_group(name);
    for (int p : {2, 3}) {
      const NSeries lcs = lower_central_nseries(g);
      for (const NSeries& n : {lcs, lazard_series(lcs, p)}) {
        const FiltrationBasis f = delta_filtration(n, RingSpec::prime_field(p), 4);
        for (std::size_t i = 0; i <= 4; ++i) {
          const ModSpan want = delta_oracle(n, p, i);
          ASSERT_EQ(f.delta(i).rank(), want.rows.size()) << name << " p=" << p << " i=" << i;
          for (const auto& row : f.delta(i).canonical_rows())
            EXPECT_TRUE(want.contains(as_ints(row, p))) << name << " p=" << p << " i=" << i;
        }
      }
    }
  }
}

TEST(DeltaFiltration, AgreesWithBruteForce) {
  for (const char* name : {"C2", "C4", "C2xC2", "D8", "Q8", "S3", "C3xC3"}) {
    const NSeries n = lower_central_nseries(get_group(name));
    for (RingSpec ring : {RingSpec::rationals(), RingSpec::integers(), RingSpec::prime_field(2), RingSpec::prime_field(3)})
      EXPECT_EQ(delta_filtration(n, ring, 4).degrees, delta_bruteforce(n, ring, 4).degrees) << name << " " << ring.to_string();
  }
}

TEST(DeltaFiltration, LowerCentralSeriesGivesAugmentationPowers) {
  for (const char* name : {"C4", "D8", "S3", "C2xC2", "Q8"}) {
    const FiniteGroup g = get_group(name);
    const NSeries n = lower_central_nseries(g);
    for (RingSpec ring : {RingSpec::rationals(), RingSpec::integers(), RingSpec::prime_field(2), RingSpec::prime_field(3)}) {
      const FiltrationBasis f = delta_filtration(n, ring, 5);
      for (std::size_t i = 0; i <= 5; ++i) EXPECT_EQ(f.delta(i), ideal_power(g, ring, i)) << name << " " << i;
    }
  }
}

TEST(DeltaFiltration, CyclicTwoOverIntegers) {
  // I^i = 2^{i-1} I for C2 over Z: spanned by 2^{i-1}(g - 1).
  const FiniteGroup g = get_group("C2");
  const FiltrationBasis f = delta_filtration(lower_central_nseries(g), RingSpec::integers(), 6);
  for (std::size_t i = 1; i <= 6; ++i) {
    const auto& l = std::get<IntegerLattice>(f.delta(i).storage());
    ASSERT_EQ(l.rank(), 1u);
    Integer c = 1;
    for (std::size_t k = 1; k < i; ++k) c *= 2;
    EXPECT_EQ(l.rows()[0], (IntVector{c, -c})) << i;
  }
  EXPECT_FALSE(f.stabilized_at.has_value());
  const auto pieces = graded_quotient_dims(f);
  EXPECT_EQ(pieces[0].invariants, (std::vector<Integer>{0}));
  for (std::size_t i = 1; i < pieces.size(); ++i) EXPECT_EQ(pieces[i].invariants, (std::vector<Integer>{2}));
}

TEST(DeltaFiltration, Invariants) {
  for (const char* name : {"D8", "S3", "Heis27", "C2xC4"}) {
    const NSeries n = lower_central_nseries(get_group(name));
    for (RingSpec ring : {RingSpec::integers(), RingSpec::prime_field(2), RingSpec::prime_field(3)}) {
      const FiltrationBasis f = delta_filtration(n, ring, 5);
      for (std::size_t i = 0; i < 5; ++i) EXPECT_TRUE(f.delta(i).contains(f.delta(i + 1))) << name;
      for (std::size_t i = 1; i <= 5; ++i)
        for (const auto& row : f.delta(i).canonical_rows()) {
          Rational sum = 0;
          for (const auto& x : row) sum += x;
          if (ring.is_field() && ring.p != 0) sum = Rational(Integer(sum.get_num()) % ring.p);
          EXPECT_EQ(sum, 0) << name;
        }
      // Delta_i * Delta_j within Delta_{i+j}, on basis products.
      const FiniteGroup& g = f.group;
      for (std::size_t i = 1; i <= 2; ++i)
        for (std::size_t j = 1; i + j <= 5; ++j)
          for (const auto& a : f.delta(i).canonical_rows())
            for (const auto& b : f.delta(j).canonical_rows()) {
              IntVector prod(g.order(), 0);
              for (Element x = 0; x < g.order(); ++x)
                for (Element y = 0; y < g.order(); ++y) prod[g.mul(x, y)] += a[x].get_num() * b[y].get_num();
              EXPECT_TRUE(f.delta(i + j).contains(prod)) << name;
            }
    }
  }
}

TEST(DeltaFiltration, RationalFiltrationIsAugmentationIdeal) {
  for (const auto& e : catalog_entries()) {
    const FiniteGroup g = get_group(e.name);
    if (g.order() > 16) continue;
    const FiltrationBasis f = delta_filtration(lower_central_nseries(g), RingSpec::rationals(), 6);
    for (std::size_t i = 1; i <= 6; ++i) EXPECT_EQ(f.delta(i).rank(), g.order() - 1) << e.name;
  }
}

TEST(GradedQuotientDims, DerivedTables) {
  const auto d8 = delta_filtration(lower_central_nseries(get_group("D8")), RingSpec::prime_field(2), 8);
  EXPECT_EQ(dims(d8), (std::vector<std::size_t>{1, 2, 2, 2, 1}));
  EXPECT_EQ(d8.vanishes_at(), 5u);
  const auto heis = delta_filtration(lower_central_nseries(get_group("Heis27")), RingSpec::prime_field(3), 10);
  EXPECT_EQ(dims(heis), (std::vector<std::size_t>{1, 2, 4, 4, 5, 4, 4, 2, 1}));
  const auto s3 = delta_filtration(lower_central_nseries(get_group("S3")), RingSpec::prime_field(3), 6);
  EXPECT_EQ(dims(s3), (std::vector<std::size_t>{1}));
  EXPECT_EQ(s3.stabilized_at, 1u);
}

TEST(GradedQuotientDims, MatchRestrictedProductOfJenningsRanks) {
  for (auto [name, p] : {std::pair{"D8", 2}, {"Q8", 2}, {"C4", 2}, {"C8", 2}, {"C2xC4", 2}, {"Heis27", 3}, {"C3xC3", 3},
                         {"Heis27e9", 3}, {"D16", 2}}) {
    const FiniteGroup g = get_group(name);
    const NSeries l = lazard_series(lower_central_nseries(g), p);
    std::vector<int> ranks;
    for (std::size_t i = 1; i < l.length(); ++i) {
      // F_p-rank of the elementary abelian quotient L_i / L_{i+1}.
      std::size_t q = l.term(i).order() / l.term(i + 1).order();
      int r = 0;
      while (q > 1) q /= p, ++r;
      ranks.push_back(r);
    }
    const auto want = oracle::restricted_pbw(ranks, p);
    const auto f = delta_filtration(lower_central_nseries(g), RingSpec::prime_field(p), want.size() + 1);
    const auto got = dims(f);
    ASSERT_EQ(got.size(), want.size()) << name;
    long total = 0;
    for (std::size_t i = 0; i < got.size(); ++i) {
      EXPECT_EQ(static_cast<long>(got[i]), want[i]) << name << " degree " << i;
      total += want[i];
    }
    EXPECT_EQ(total, static_cast<long>(g.order())) << name;
  }
}

TEST(DimensionSubgroup, DegreeOneIsWholeGroup) {
  for (const char* name : {"D8", "S3", "C4"})
    for (RingSpec ring : {RingSpec::rationals(), RingSpec::integers(), RingSpec::prime_field(2)}) {
      const auto f = delta_filtration(lower_central_nseries(get_group(name)), ring, 3);
      EXPECT_TRUE(dimension_subgroup(f, 1).is_whole());
      EXPECT_TRUE(dimension_subgroup(f, 0).is_whole());
    }
}

TEST(DimensionSubgroup, QuaternionOverF2) {
  const FiniteGroup g = get_group("Q8");
  const auto d = dimension_subgroups(delta_filtration(lower_central_nseries(g), RingSpec::prime_field(2), 8));
  ASSERT_EQ(d.size(), 8u);
  EXPECT_TRUE(d[0].is_whole());
  EXPECT_EQ(d[1], center(g));
  for (std::size_t i = 2; i < 8; ++i) EXPECT_TRUE(d[i].is_trivial());
}

TEST(DimensionSubgroup, ContainsSeriesTerms) {
  for (const char* name : {"D8", "S3", "Heis27", "A4"}) {
    const NSeries n = lower_central_nseries(get_group(name));
    for (RingSpec ring : {RingSpec::rationals(), RingSpec::integers(), RingSpec::prime_field(2), RingSpec::prime_field(3)}) {
      const auto f = delta_filtration(n, ring, 4);
      for (std::size_t i = 1; i <= 4; ++i) EXPECT_TRUE(n.term(i).is_subset_of(dimension_subgroup(f, i))) << name;
    }
  }
}

TEST(DeltaFiltration, DegreeErrors) {
  const NSeries n = lower_central_nseries(get_group("C2"));
  EXPECT_EQ(code_of([&] { delta_filtration(n, RingSpec::rationals(), 0); }), Errc::DegreeOutOfRange);
  const auto f = delta_filtration(n, RingSpec::rationals(), 2);
  EXPECT_EQ(code_of([&] { f.delta(3); }), Errc::DegreeOutOfRange);
}

TEST(DeltaBruteforce, CostGuard) {
  Permutation cycle(33);
  for (std::size_t i = 0; i < 33; ++i) cycle[i] = static_cast<std::uint32_t>((i + 1) % 33);
  const FiniteGroup g = FiniteGroup::from_permutation_generators(33, std::vector<Permutation>{cycle});
  const NSeries n = lower_central_nseries(g);
  EXPECT_EQ(code_of([&] { delta_bruteforce(n, RingSpec::prime_field(3), 2); }), Errc::CostGuard);
  EXPECT_EQ(delta_bruteforce(n, RingSpec::prime_field(3), 2, true).degrees,
            delta_filtration(n, RingSpec::prime_field(3), 2).degrees);
}

TEST(DeltaBruteforce, DegreeOneIsAugmentationIdeal) {
  const FiniteGroup g = get_group("A4");
  const auto f = delta_bruteforce(lower_central_nseries(g), RingSpec::integers(), 1);
  EXPECT_EQ(f.delta(1), ideal_power(g, RingSpec::integers(), 1));
  EXPECT_EQ(ideal_power(g, RingSpec::integers(), 0).rank(), g.order());
}
