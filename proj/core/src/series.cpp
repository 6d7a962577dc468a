#include "dimlab/series.hpp"

#include <algorithm>
#include <map>

#include "dimlab/error.hpp"

namespace dimlab {

const Subgroup& NSeries::term(std::size_t k) const {
  if (k == 0) fail(Errc::InvalidArgument, "series terms are 1-based");
  return k <= terms_.size() ? terms_[k - 1] : terms_.back();
}

namespace {

// term(k) with clamping for a raw list.
const Subgroup& clamped(const std::vector<Subgroup>& terms, std::size_t k) {
  return k <= terms.size() ? terms[k - 1] : terms.back();
}

Subgroup product_of(const FiniteGroup& group, const std::vector<const Subgroup*>& parts) {
  std::vector<Element> all;
  for (const Subgroup* part : parts) {
    const auto els = part->elements();
    all.insert(all.end(), els.begin(), els.end());
  }
  return closure(group, all);
}

}  // namespace

NSeries nseries_from_terms(const FiniteGroup& group, std::vector<Subgroup> terms, SeriesTail tail) {
  if (terms.empty()) fail(Errc::InvalidArgument, "an N-series needs at least one term");
  for (std::size_t i = 0; i < terms.size(); ++i)
    if (!terms[i].parent().same_as(group))
      fail(Errc::ParentMismatch, "term " + std::to_string(i + 1) + " belongs to a different group");
  if (!terms.front().is_whole()) fail(Errc::NotDescending, "first term must be the whole group");
  for (std::size_t i = 1; i < terms.size(); ++i)
    if (!terms[i].is_subset_of(terms[i - 1]))
      fail(Errc::NotDescending, "term " + std::to_string(i + 1) + " is not contained in term " + std::to_string(i));
  if (tail == SeriesTail::Trivial && !terms.back().is_trivial()) terms.push_back(Subgroup::trivial(group));
  while (terms.size() >= 2 && terms[terms.size() - 1] == terms[terms.size() - 2]) terms.pop_back();

  for (std::size_t i = 0; i < terms.size(); ++i)
    if (!is_normal(terms[i])) fail(Errc::NotNormal, "term " + std::to_string(i + 1) + " is not normal");

  const std::size_t c = terms.size();
  for (std::size_t i = 1; i <= c; ++i)
    for (std::size_t j = i; j <= c; ++j) {
      const Subgroup comm = commutator_subgroup(terms[i - 1], terms[j - 1]);
      if (!comm.is_subset_of(clamped(terms, i + j)))
        throw AxiomViolationError(i, j,
                                  "[N_" + std::to_string(i) + ", N_" + std::to_string(j) + "] is not contained in N_" +
                                      std::to_string(i + j));
    }
  return NSeries(group, std::move(terms));
}

std::optional<PrefixViolation> check_series_prefix(const FiniteGroup& group, const std::vector<Subgroup>& terms) {
  using Kind = PrefixViolation::Kind;
  if (terms.empty()) return std::nullopt;
  if (!terms.front().is_whole()) return PrefixViolation{Kind::NotDescending, 1, 0};
  for (std::size_t i = 1; i < terms.size(); ++i)
    if (!terms[i].parent().same_as(group) || !terms[i].is_subset_of(terms[i - 1]))
      return PrefixViolation{Kind::NotDescending, i + 1, 0};
  for (std::size_t i = 0; i < terms.size(); ++i)
    if (!is_normal(terms[i])) return PrefixViolation{Kind::NotNormal, i + 1, 0};
  for (std::size_t i = 1; i <= terms.size(); ++i)
    for (std::size_t j = i; i + j <= terms.size(); ++j)
      if (!commutator_subgroup(terms[i - 1], terms[j - 1]).is_subset_of(terms[i + j - 1]))
        return PrefixViolation{Kind::Axiom, i, j};
  return std::nullopt;
}

NSeries lower_central_nseries(const FiniteGroup& group) {
  auto lcs = lower_central_series(group, group.order() + 1);
  return nseries_from_terms(group, std::move(lcs), SeriesTail::Stable);
}

bool is_p_restricted(const NSeries& n, std::uint64_t p) {
  const FiniteGroup& g = n.group();
  for (std::size_t i = 1; i <= n.length(); ++i) {
    const Subgroup& target = n.term(i * p);
    for (Element x : n.term(i).elements())
      if (!target.contains(g.pow(x, static_cast<long long>(p % g.order())))) return false;
  }
  return true;
}

bool is_zero_restricted(const NSeries& n) {
  return std::all_of(n.terms().begin(), n.terms().end(), [](const Subgroup& s) { return s.is_whole(); });
}

NSeries lazard_series(const NSeries& n, std::uint64_t p) {
  if (!is_prime(p)) fail(Errc::InvalidArgument, std::to_string(p) + " is not prime");
  const FiniteGroup& g = n.group();
  const std::size_t order = g.order();

  // The maps x -> x^(p^j) are eventually periodic in j; from the first
  // repeated map on, every powered subgroup N_k^(p^j) is constant in j
  // (the sequence is both descending and periodic there).
  std::vector<std::vector<Element>> maps;
  std::vector<Element> f(order);
  for (Element x = 0; x < order; ++x) f[x] = x;
  std::size_t stable_j = 0;
  for (;;) {
    auto seen = std::find(maps.begin(), maps.end(), f);
    if (seen != maps.end()) {
      stable_j = static_cast<std::size_t>(seen - maps.begin());
      break;
    }
    maps.push_back(f);
    for (auto& y : f) y = g.pow(y, static_cast<long long>(p % order));
  }

  const std::size_t c = n.length();
  // powered[k-1][j] = N_k^(p^j) for j <= stable_j.
  std::vector<std::vector<Subgroup>> powered(c);
  for (std::size_t k = 1; k <= c; ++k)
    for (std::size_t j = 0; j <= stable_j; ++j) {
      std::vector<Element> images;
      for (Element x : n.term(k).elements()) images.push_back(maps[j][x]);
      powered[k - 1].push_back(closure(g, images));
    }

  std::uint64_t p_stable = 1;
  for (std::size_t j = 0; j < stable_j; ++j) p_stable *= p;
  const std::uint64_t last_degree = c * p_stable + 1;

  std::vector<Subgroup> terms;
  std::map<std::vector<std::size_t>, Subgroup> memo;
  for (std::uint64_t i = 1; i <= last_degree; ++i) {
    // Factor for k < c: least j with k p^j >= i, clamped to stable_j. All
    // k >= c contribute N_c (take j = 0 with k >= i).
    std::vector<std::size_t> key;
    for (std::size_t k = 1; k < c; ++k) {
      std::size_t j = 0;
      std::uint64_t w = k;
      while (w < i && j < stable_j) {
        w *= p;
        ++j;
      }
      key.push_back(j);
    }
    auto it = memo.find(key);
    if (it == memo.end()) {
      std::vector<const Subgroup*> parts{&n.term(c)};
      for (std::size_t k = 1; k < c; ++k) parts.push_back(&powered[k - 1][key[k - 1]]);
      it = memo.emplace(key, product_of(g, parts)).first;
    }
    terms.push_back(it->second);
    if (terms.back().is_trivial()) break;
  }
  return nseries_from_terms(g, std::move(terms), SeriesTail::Stable);
}

NSeries isolator_series(const NSeries& n) {
  std::vector<Subgroup> terms;
  for (const auto& t : n.terms()) terms.push_back(isolator(t));
  return nseries_from_terms(n.group(), std::move(terms), SeriesTail::Stable);
}

std::optional<NSeries> random_lazard_type_series(const FiniteGroup& group, std::mt19937_64& rng, int attempts) {
  const NSeries lcs = lower_central_nseries(group);
  auto primes = prime_divisors(group.order());
  if (primes.empty()) primes = {2};
  const std::size_t c = lcs.length();
  const bool nilpotent = !lcs.stabilized();

  for (int attempt = 0; attempt < attempts; ++attempt) {
    const std::uint64_t p = primes[std::uniform_int_distribution<std::size_t>(0, primes.size() - 1)(rng)];
    const std::uint64_t stretch = std::uniform_int_distribution<std::uint64_t>(1, 8)(rng);
    const std::size_t max_j = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
    // Weight of gamma_k, nondecreasing bumps on top of stretch * k.
    std::vector<std::uint64_t> weight(c + 1, 0);
    std::uint64_t bump = 0;
    for (std::size_t k = 1; k <= c; ++k) {
      if (k > 1) bump += std::uniform_int_distribution<std::uint64_t>(0, 1)(rng);
      weight[k] = stretch * k + bump;
    }
    std::vector<std::vector<Subgroup>> powered(c);
    for (std::size_t k = 1; k <= c; ++k) {
      std::uint64_t e = 1;
      for (std::size_t j = 0; j <= max_j; ++j, e *= p) powered[k - 1].push_back(power_subgroup(lcs.term(k), e));
    }

    std::vector<Subgroup> terms;
    for (std::uint64_t i = 1; i <= 64; ++i) {
      std::vector<const Subgroup*> parts;
      if (!nilpotent) parts.push_back(&lcs.term(c));
      std::uint64_t e = 1;
      for (std::size_t j = 0; j <= max_j; ++j, e *= p)
        for (std::size_t k = 1; k <= c; ++k)
          if (weight[k] * e >= i) parts.push_back(&powered[k - 1][j]);
      terms.push_back(parts.empty() ? Subgroup::trivial(group) : product_of(group, parts));
      if (terms.back().is_trivial()) break;
    }
    try {
      return nseries_from_terms(group, std::move(terms), nilpotent ? SeriesTail::Trivial : SeriesTail::Stable);
    } catch (const Error&) {
      continue;
    }
  }
  return std::nullopt;
}

}  // namespace dimlab
