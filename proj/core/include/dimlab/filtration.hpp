#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dimlab/group.hpp"
#include "dimlab/linalg.hpp"
#include "dimlab/series.hpp"

namespace dimlab {

inline constexpr std::size_t kDefaultMaxDegree = 8;
inline constexpr std::size_t kBruteForceOrderGuard = 32;

// Delta_0 = R[G] >= Delta_1 = I(R[G]) >= Delta_2 >= ... up to max_degree.
struct FiltrationBasis {
  FiniteGroup group;
  RingSpec ring;
  NSeries series;
  std::vector<Submodule> degrees;  // degrees[i] is Delta_i
  std::size_t max_degree = 0;
  // Least j >= 1 from which Delta is witnessed to be constant: either
  // Delta_j = 0, or Delta_j = ... = Delta_{j+c} where c is the stored series
  // length (enough to force all later terms equal).
  std::optional<std::size_t> stabilized_at;

  const Submodule& delta(std::size_t i) const;
  // Least i with Delta_i = 0, if within range.
  std::optional<std::size_t> vanishes_at() const;
};

// Span of {g - 1 : g in N_k}.
Submodule weight_span(const NSeries& n, RingSpec ring, std::size_t k);

// Delta_i = W_i + sum_{k<i} W_k * Delta_{i-k} with W_k = weight_span(k).
FiltrationBasis delta_filtration(const NSeries& n, RingSpec ring, std::size_t max_degree = kDefaultMaxDegree);

// Direct evaluation of the defining spanning set, used as an independent
// oracle for delta_filtration. Throws CostGuard above the order guard unless
// `allow_expensive` is set.
FiltrationBasis delta_bruteforce(const NSeries& n, RingSpec ring, std::size_t max_degree,
                                 bool allow_expensive = false);

// {g : g - 1 in Delta_i}, for 0 <= i <= max_degree.
Subgroup dimension_subgroup(const FiltrationBasis& f, std::size_t i);
// D_1 .. D_max_degree.
std::vector<Subgroup> dimension_subgroups(const FiltrationBasis& f);

// I(R[G])^i, with I^0 = R[G].
Submodule ideal_power(const FiniteGroup& group, RingSpec ring, std::size_t i);

struct QuotientPiece {
  std::size_t degree = 0;
  std::size_t dimension = 0;        // field coefficients
  std::vector<Integer> invariants;  // Z coefficients: invariant factors, 0 = free summand
};

// Delta_i / Delta_{i+1} for i = 0 .. max_degree - 1.
std::vector<QuotientPiece> graded_quotient_dims(const FiltrationBasis& f);

}  // namespace dimlab
