#pragma once

// Row-level group ring arithmetic shared by the filtration and graded
// modules. Rows are coefficient vectors indexed by element.

#include <utility>
#include <variant>
#include <vector>

#include "dimlab/group.hpp"
#include "dimlab/linalg.hpp"

namespace dimlab::detail {

template <class Space>
using RowOf = typename Space::Row;

template <class Ops>
std::vector<typename Ops::value_type> unit_row(const Ops& ops, std::size_t n, Element g) {
  std::vector<typename Ops::value_type> row(n, ops.zero());
  row[g] = ops.one();
  return row;
}

// g - 1
template <class Ops>
std::vector<typename Ops::value_type> augmented_row(const Ops& ops, std::size_t n, Element g) {
  auto row = unit_row(ops, n, g);
  row[kIdentity] = ops.sub(row[kIdentity], ops.one());
  return row;
}

// (g - 1) * y
template <class Ops, class Row>
Row left_augmented_product(const Ops& ops, const FiniteGroup& group, Element g, const Row& y) {
  Row out(y.size(), ops.zero());
  for (Element h = 0; h < y.size(); ++h)
    if (!ops.is_zero(y[h])) out[group.mul(g, h)] = y[h];
  for (Element h = 0; h < y.size(); ++h)
    if (!ops.is_zero(y[h])) out[h] = ops.sub(out[h], y[h]);
  return out;
}

// y * (g - 1)
template <class Ops, class Row>
Row right_augmented_product(const Ops& ops, const FiniteGroup& group, const Row& y, Element g) {
  Row out(y.size(), ops.zero());
  for (Element h = 0; h < y.size(); ++h)
    if (!ops.is_zero(y[h])) out[group.mul(h, g)] = y[h];
  for (Element h = 0; h < y.size(); ++h)
    if (!ops.is_zero(y[h])) out[h] = ops.sub(out[h], y[h]);
  return out;
}

// Full product in R[G].
template <class Ops, class Row>
Row product(const Ops& ops, const FiniteGroup& group, const Row& a, const Row& b) {
  Row out(a.size(), ops.zero());
  for (Element x = 0; x < a.size(); ++x) {
    if (ops.is_zero(a[x])) continue;
    for (Element y = 0; y < b.size(); ++y)
      if (!ops.is_zero(b[y])) out[group.mul(x, y)] = ops.add(out[group.mul(x, y)], ops.mul(a[x], b[y]));
  }
  return out;
}

template <class Ops, class Row>
bool is_zero_row(const Ops& ops, const Row& r) {
  for (const auto& x : r)
    if (!ops.is_zero(x)) return false;
  return true;
}

}  // namespace dimlab::detail
