#include <set>
#include <thread>

#include <gtest/gtest.h>

#include "dimlab/catalog.hpp"
#include "dimlab/error.hpp"
#include "oracle.hpp"

using namespace dimlab;

TEST(Catalog, ContainsRequiredNames) {
  std::set<std::string> names;
  for (const auto& e : catalog_entries()) names.insert(e.name);
  for (const char* n : {"trivial", "C2", "C3", "C4", "C6", "C8", "C12", "C2xC2", "C2xC4", "C3xC3", "D8", "D16",
                        "Q8", "Q16", "SD16", "M16", "Heis27", "Heis27e9", "C2xD8", "S3", "S4", "A4"})
    EXPECT_TRUE(names.count(n)) << n;
}

TEST(Catalog, OrdersAndTagsMatchConstruction) {
  for (const auto& e : catalog_entries()) {
    const FiniteGroup g = get_group(e.name);
    EXPECT_EQ(g.order(), e.expected_order) << e.name;
    EXPECT_EQ(g.name(), e.name);
    EXPECT_EQ(is_abelian(g), e.abelian) << e.name;
    EXPECT_EQ(is_nilpotent(g), e.nilpotent) << e.name;
    const auto primes = prime_divisors(g.order());
    if (e.p) {
      ASSERT_EQ(primes.size(), 1u) << e.name;
      EXPECT_EQ(primes[0], *e.p) << e.name;
    } else {
      EXPECT_NE(primes.size(), 1u) << e.name;
    }
    if (e.nilpotent)
      EXPECT_TRUE(lower_central_series(g).back().is_trivial()) << e.name;
    else
      EXPECT_FALSE(lower_central_series(g).back().is_trivial()) << e.name;
  }
}

TEST(Catalog, TrivialGroup) { EXPECT_EQ(get_group("trivial").order(), 1u); }

TEST(Catalog, QuaternionHasOneInvolution) {
  const FiniteGroup g = get_group("Q8");
  int involutions = 0;
  for (Element a = 0; a < g.order(); ++a)
    if (element_order(g, a) == 2) ++involutions;
  EXPECT_EQ(involutions, 1);
}

TEST(Catalog, HeisenbergExponentAndCenter) {
  const FiniteGroup g = get_group("Heis27");
  for (Element a = 1; a < g.order(); ++a) EXPECT_EQ(element_order(g, a), 3u);
  EXPECT_EQ(center(g).order(), 3u);
  EXPECT_FALSE(is_abelian(g));
  const FiniteGroup e9 = get_group("Heis27e9");
  std::uint64_t top = 0;
  for (Element a = 0; a < e9.order(); ++a) top = std::max(top, element_order(e9, a));
  EXPECT_EQ(top, 9u);
  EXPECT_EQ(center(e9).order(), 3u);
}

TEST(Catalog, DihedralGeneratorsAreRotationAndReflection) {
  const FiniteGroup g = get_group("D8");
  const oracle::PermView view(g, 4);
  ASSERT_EQ(g.generators().size(), 2u);
  EXPECT_EQ(view.perms[g.generators()[0]], oracle::parse_cycles("(1 2 3 4)", 4));
  EXPECT_EQ(view.perms[g.generators()[1]], oracle::parse_cycles("(2 4)", 4));
}

TEST(Catalog, SharedInstances) {
  EXPECT_TRUE(get_group("D16").same_as(get_group("D16")));
  std::vector<std::thread> threads;
  std::vector<FiniteGroup> got(4);
  for (int t = 0; t < 4; ++t) threads.emplace_back([&, t] { got[t] = get_group("S4"); });
  for (auto& t : threads) t.join();
  for (const auto& g : got) EXPECT_TRUE(g.same_as(got[0]));
}

TEST(Catalog, UnknownNameSuggestsCloseMatches) {
  try {
    get_group("Q9");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnknownName);
    EXPECT_NE(std::string(e.what()).find("Q8"), std::string::npos);
  }
  const auto s = suggest_names("heis27");
  EXPECT_NE(std::find(s.begin(), s.end(), "Heis27"), s.end());
  EXPECT_TRUE(suggest_names("zzzzzzzz").empty());
}

TEST(Catalog, TagsString) {
  for (const auto& e : catalog_entries()) {
    if (e.name == "C4") EXPECT_EQ(e.tags(), "abelian p-group(2) nilpotent");
    if (e.name == "S3") EXPECT_EQ(e.tags(), "non-nilpotent");
  }
}
