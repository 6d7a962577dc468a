#pragma once

// Brute-force reference computations on raw permutations and polynomials,
// kept independent of the library's own algorithms.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dimlab/group.hpp"

namespace oracle {

using Perm = std::vector<int>;

inline Perm identity(int degree) {
  Perm p(degree);
  for (int i = 0; i < degree; ++i) p[i] = i;
  return p;
}

// Right action: (a * b)(x) = b(a(x)).
inline Perm mul(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = b[a[x]];
  return out;
}

inline Perm inv(const Perm& a) {
  Perm out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[a[x]] = static_cast<int>(x);
  return out;
}

inline Perm pow(const Perm& a, long n) {
  Perm out = identity(static_cast<int>(a.size()));
  const Perm base = n < 0 ? inv(a) : a;
  for (long k = 0; k < (n < 0 ? -n : n); ++k) out = mul(out, base);
  return out;
}

inline Perm comm(const Perm& a, const Perm& b) { return mul(mul(inv(a), inv(b)), mul(a, b)); }

// "(1 2 3)(4 5)", 1-based; "()" is the identity.
inline Perm parse_cycles(const std::string& text, int degree) {
  Perm p = identity(degree);
  std::vector<int> cyc;
  std::string num;
  for (char c : text) {
    if (c >= '0' && c <= '9') {
      num += c;
      continue;
    }
    if (!num.empty()) {
      cyc.push_back(std::stoi(num) - 1);
      num.clear();
    }
    if (c == ')') {
      for (std::size_t k = 0; k < cyc.size(); ++k) p[cyc[k]] = cyc[(k + 1) % cyc.size()];
      cyc.clear();
    }
  }
  return p;
}

inline std::set<Perm> closure(const std::vector<Perm>& gens, int degree) {
  std::set<Perm> out{identity(degree)};
  std::vector<Perm> frontier{identity(degree)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Perm y = mul(x, g);
        if (out.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return out;
}

// Element index <-> permutation for a group built from permutations.
struct PermView {
  int degree = 0;
  std::vector<Perm> perms;
  std::map<Perm, dimlab::Element> index;

  PermView(const dimlab::FiniteGroup& g, int degree_) : degree(degree_) {
    for (dimlab::Element a = 0; a < g.order(); ++a) {
      perms.push_back(parse_cycles(g.label(a), degree));
      index[perms.back()] = a;
    }
  }

  dimlab::Element of(const Perm& p) const { return index.at(p); }

  std::set<dimlab::Element> indices(const std::set<Perm>& s) const {
    std::set<dimlab::Element> out;
    for (const auto& p : s) out.insert(of(p));
    return out;
  }
};

inline std::set<dimlab::Element> members(const dimlab::Subgroup& s) {
  const auto e = s.elements();
  return {e.begin(), e.end()};
}

// Coefficients of prod_i (1 + t^i + ... + t^((p-1)i))^{d_i}, d_i = dims[i-1].
inline std::vector<long> restricted_pbw(const std::vector<int>& dims, int p) {
  std::vector<long> poly{1};
  for (std::size_t i = 1; i <= dims.size(); ++i)
    for (int r = 0; r < dims[i - 1]; ++r) {
      std::vector<long> next(poly.size() + (p - 1) * i, 0);
      for (std::size_t n = 0; n < poly.size(); ++n)
        for (int e = 0; e < p; ++e) next[n + e * i] += poly[n];
      poly = next;
    }
  return poly;
}

}  // namespace oracle
