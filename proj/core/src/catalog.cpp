#include "dimlab/catalog.hpp"

#include "dimlab/error.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>

namespace dimlab {
namespace {

using Builder = std::function<FiniteGroup(const std::string&)>;

Permutation cycle(std::size_t degree, std::initializer_list<std::size_t> points) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0);
  const std::vector<std::size_t> pts(points);
  for (std::size_t k = 0; k < pts.size(); ++k) p[pts[k]] = static_cast<Element>(pts[(k + 1) % pts.size()]);
  return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = b[a[x]];
  return out;
}

FiniteGroup from_perms(std::size_t degree, const std::vector<Permutation>& gens, const std::string& name) {
  return FiniteGroup::from_permutation_generators(degree, gens, kDefaultOrderCap, name);
}

FiniteGroup cyclic(std::size_t n, const std::string& name) {
  Permutation r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<Element>((i + 1) % n);
  return from_perms(n, {r}, name);
}

// Right regular representation of <a, b | a^n = 1, b^m = a^t, b a b^-1 = a^r>,
// element a^i b^j at point i + n j.
FiniteGroup metacyclic(std::size_t n, std::size_t r, std::size_t t, std::size_t m, const std::string& name) {
  auto point = [n](std::size_t i, std::size_t j) { return static_cast<Element>(i % n + n * j); };
  auto rpow = [&](std::size_t j) {
    std::size_t v = 1;
    for (std::size_t k = 0; k < j; ++k) v = v * r % n;
    return v;
  };
  // (a^i b^j)(a^k b^l) = a^(i + k r^j) b^(j + l), reducing b^m = a^t.
  auto times = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    std::size_t e = i + k * rpow(j);
    std::size_t f = j + l;
    if (f >= m) {
      f -= m;
      e += t;
    }
    return point(e, f);
  };
  Permutation a(n * m), b(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      a[point(i, j)] = times(i, j, 1, 0);
      b[point(i, j)] = times(i, j, 0, 1);
    }
  return from_perms(n * m, {a, b}, name);
}

// Upper unitriangular 3x3 matrices over F_3 as triples (a, b, c) with
// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab'), right regular representation.
FiniteGroup heisenberg27(const std::string& name) {
  auto point = [](std::size_t a, std::size_t b, std::size_t c) { return static_cast<Element>(a % 3 + 3 * (b % 3) + 9 * (c % 3)); };
  Permutation x(27), y(27);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t c = 0; c < 3; ++c) {
        x[point(a, b, c)] = point(a + 1, b, c);
        y[point(a, b, c)] = point(a, b + 1, c + a);
      }
  return from_perms(27, {x, y}, name);
}

struct Registry {
  std::vector<CatalogEntry> entries;
  std::map<std::string, Builder, std::less<>> builders;
  std::map<std::string, FiniteGroup, std::less<>> built;
  std::mutex mutex;

  void add(CatalogEntry e, Builder b) {
    builders.emplace(e.name, std::move(b));
    entries.push_back(std::move(e));
  }
};

CatalogEntry entry(std::string name, std::size_t order, std::string construction, bool abelian, bool nilpotent,
                   std::optional<std::uint64_t> p) {
  return {std::move(name), order, std::move(construction), abelian, nilpotent, p};
}

void populate(Registry& r) {
    r.add(entry("trivial", 1, "no generators", true, true, std::nullopt),
          [](const std::string& n) { return from_perms(1, {}, n); });
    const std::pair<std::size_t, std::optional<std::uint64_t>> cycles[] = {
        {2, 2}, {3, 3}, {4, 2}, {6, std::nullopt}, {8, 2}, {12, std::nullopt}};
    for (const auto& [k, p] : cycles)
      r.add(entry("C" + std::to_string(k), k, "(0 1 ... " + std::to_string(k - 1) + ")", true, true, p),
            [k](const std::string& n) { return cyclic(k, n); });
    r.add(entry("C2xC2", 4, "(0 1), (2 3)", true, true, 2),
          [](const std::string& n) { return from_perms(4, {cycle(4, {0, 1}), cycle(4, {2, 3})}, n); });
    r.add(entry("C2xC4", 8, "(0 1), (2 3 4 5)", true, true, 2),
          [](const std::string& n) { return from_perms(6, {cycle(6, {0, 1}), cycle(6, {2, 3, 4, 5})}, n); });
    r.add(entry("C3xC3", 9, "(0 1 2), (3 4 5)", true, true, 3),
          [](const std::string& n) { return from_perms(6, {cycle(6, {0, 1, 2}), cycle(6, {3, 4, 5})}, n); });
    r.add(entry("D8", 8, "r = (0 1 2 3), s = (1 3)", false, true, 2),
          [](const std::string& n) { return from_perms(4, {cycle(4, {0, 1, 2, 3}), cycle(4, {1, 3})}, n); });
    r.add(entry("D16", 16, "r = (0 1 ... 7), s = x -> -x mod 8", false, true, 2), [](const std::string& n) {
      Permutation s(8);
      for (std::size_t i = 0; i < 8; ++i) s[i] = static_cast<Element>((8 - i) % 8);
      return from_perms(8, {cycle(8, {0, 1, 2, 3, 4, 5, 6, 7}), s}, n);
    });
    r.add(entry("Q8", 8, "a, b with a^4 = 1, b^2 = a^2, b a b^-1 = a^-1 (regular)", false, true, 2),
          [](const std::string& n) { return metacyclic(4, 3, 2, 2, n); });
    r.add(entry("Q16", 16, "a, b with a^8 = 1, b^2 = a^4, b a b^-1 = a^-1 (regular)", false, true, 2),
          [](const std::string& n) { return metacyclic(8, 7, 4, 2, n); });
    r.add(entry("SD16", 16, "a, b with a^8 = b^2 = 1, b a b^-1 = a^3 (regular)", false, true, 2),
          [](const std::string& n) { return metacyclic(8, 3, 0, 2, n); });
    r.add(entry("M16", 16, "a, b with a^8 = b^2 = 1, b a b^-1 = a^5 (regular)", false, true, 2),
          [](const std::string& n) { return metacyclic(8, 5, 0, 2, n); });
    r.add(entry("Heis27", 27, "x, y unitriangular over F_3, exponent 3 (regular)", false, true, 3),
          [](const std::string& n) { return heisenberg27(n); });
    r.add(entry("Heis27e9", 27, "a, b with a^9 = b^3 = 1, b a b^-1 = a^4 (regular)", false, true, 3),
          [](const std::string& n) { return metacyclic(9, 4, 0, 3, n); });
    r.add(entry("C2xD8", 16, "r = (0 1 2 3), s = (1 3), (4 5)", false, true, 2), [](const std::string& n) {
      return from_perms(6, {cycle(6, {0, 1, 2, 3}), cycle(6, {1, 3}), cycle(6, {4, 5})}, n);
    });
    r.add(entry("S3", 6, "(0 1), (0 1 2)", false, false, std::nullopt),
          [](const std::string& n) { return from_perms(3, {cycle(3, {0, 1}), cycle(3, {0, 1, 2})}, n); });
    r.add(entry("S4", 24, "(0 1), (0 1 2 3)", false, false, std::nullopt),
          [](const std::string& n) { return from_perms(4, {cycle(4, {0, 1}), cycle(4, {0, 1, 2, 3})}, n); });
    r.add(entry("A4", 12, "(0 1 2), (0 1)(2 3)", false, false, std::nullopt), [](const std::string& n) {
      return from_perms(4, {cycle(4, {0, 1, 2}), compose(cycle(4, {0, 1}), cycle(4, {2, 3}))}, n);
    });
}

Registry& registry() {
  static Registry reg;
  static std::once_flag once;
  std::call_once(once, [] { populate(reg); });
  return reg;
}

std::optional<std::uint64_t> prime_power_base(std::uint64_t order) {
  const auto primes = prime_divisors(order);
  if (primes.size() == 1) return primes.front();
  return std::nullopt;
}

void verify_entry(const CatalogEntry& e, const FiniteGroup& g) {
  auto mismatch = [&](const std::string& what) {
    fail(Errc::Internal, "catalog entry " + e.name + ": " + what);
  };
  if (g.order() != e.expected_order) mismatch("order " + std::to_string(g.order()));
  if (is_abelian(g) != e.abelian) mismatch("abelian tag");
  if (is_nilpotent(g) != e.nilpotent) mismatch("nilpotent tag");
  if (prime_power_base(g.order()) != e.p) mismatch("p-group tag");
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::size_t edit_distance(const std::string& a, const std::string& b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  std::iota(prev.begin(), prev.end(), 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j)
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

}  // namespace

std::string CatalogEntry::tags() const {
  std::string out;
  auto add = [&](const std::string& t) { out += (out.empty() ? "" : " ") + t; };
  if (abelian) add("abelian");
  if (p) add("p-group(" + std::to_string(*p) + ")");
  add(nilpotent ? "nilpotent" : "non-nilpotent");
  return out;
}

const std::vector<CatalogEntry>& catalog_entries() { return registry().entries; }

FiniteGroup get_group(std::string_view name) {
  Registry& r = registry();
  std::lock_guard lock(r.mutex);
  if (auto it = r.built.find(name); it != r.built.end()) return it->second;
  auto b = r.builders.find(name);
  if (b == r.builders.end()) {
    std::string msg = "unknown group '" + std::string(name) + "'";
    const auto close = suggest_names(name);
    if (!close.empty()) {
      msg += "; did you mean";
      for (std::size_t k = 0; k < close.size(); ++k) msg += (k ? ", " : " ") + close[k];
      msg += "?";
    }
    fail(Errc::UnknownName, msg);
  }
  FiniteGroup g = b->second(b->first);
  const auto& entries = r.entries;
  verify_entry(*std::find_if(entries.begin(), entries.end(), [&](const CatalogEntry& e) { return e.name == name; }),
               g);
  r.built.emplace(b->first, g);
  return g;
}

std::vector<std::string> suggest_names(std::string_view name) {
  const std::string key = lower(name);
  std::vector<std::pair<std::size_t, std::string>> scored;
  for (const auto& e : catalog_entries()) {
    const std::string cand = lower(e.name);
    const std::size_t d = edit_distance(key, cand);
    if (d <= 2 || (!key.empty() && cand.starts_with(key))) scored.emplace_back(d, e.name);
  }
  std::stable_sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::string> out;
  for (auto& s : scored) out.push_back(std::move(s.second));
  return out;
}

}  // namespace dimlab
