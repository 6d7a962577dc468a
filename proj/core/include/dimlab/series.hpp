#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "dimlab/group.hpp"

namespace dimlab {

// How terms beyond the supplied list are interpreted.
enum class SeriesTail {
  Trivial,  // a trivial subgroup is appended if the last term is not trivial
  Stable,   // the last term repeats forever
};

// A validated N-series G = N_1 >= N_2 >= ... with [N_i, N_j] <= N_{i+j}.
// term(k) for k past the stored list returns the last stored term, which is
// the trivial subgroup unless the series is `stabilized()`.
class NSeries {
 public:
  const FiniteGroup& group() const noexcept { return group_; }
  const std::vector<Subgroup>& terms() const noexcept { return terms_; }
  std::size_t length() const noexcept { return terms_.size(); }
  bool stabilized() const noexcept { return !terms_.back().is_trivial(); }

  // 1-based.
  const Subgroup& term(std::size_t k) const;

  friend bool operator==(const NSeries& a, const NSeries& b) {
    return a.group_.same_as(b.group_) && a.terms_ == b.terms_;
  }

 private:
  friend NSeries nseries_from_terms(const FiniteGroup&, std::vector<Subgroup>, SeriesTail);
  NSeries(FiniteGroup group, std::vector<Subgroup> terms) : group_(std::move(group)), terms_(std::move(terms)) {}

  FiniteGroup group_;
  std::vector<Subgroup> terms_;
};

// Validates and normalizes: trailing repeats are collapsed. Throws
// NotDescending, NotNormal or AxiomViolationError(i, j).
NSeries nseries_from_terms(const FiniteGroup& group, std::vector<Subgroup> terms,
                           SeriesTail tail = SeriesTail::Trivial);

// First violated requirement among descending/normal/axiom for a finite
// prefix whose continuation is unknown: only pairs with i + j <= size are
// checked against the axiom. Returns nullopt when the prefix is consistent.
struct PrefixViolation {
  enum class Kind { NotDescending, NotNormal, Axiom } kind;
  std::size_t i = 0;
  std::size_t j = 0;
};
std::optional<PrefixViolation> check_series_prefix(const FiniteGroup& group, const std::vector<Subgroup>& terms);

NSeries lower_central_nseries(const FiniteGroup& group);

// x in N_i implies x^p in N_{ip}.
bool is_p_restricted(const NSeries& n, std::uint64_t p);

// For finite groups: every N_i equals G.
bool is_zero_restricted(const NSeries& n);

// L_i = prod_{k p^j >= i} N_k^(p^j).
NSeries lazard_series(const NSeries& n, std::uint64_t p);

NSeries isolator_series(const NSeries& n);

// A randomized N-series assembled from powered lower-central terms and
// validated; candidates that fail validation are discarded. Returns nullopt
// if no valid candidate was found within `attempts`.
std::optional<NSeries> random_lazard_type_series(const FiniteGroup& group, std::mt19937_64& rng,
                                                 int attempts = 32);

}  // namespace dimlab
