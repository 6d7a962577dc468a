#include "dimlab/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "dimlab/group.hpp"

namespace dimlab {

RingSpec RingSpec::prime_field(std::uint64_t p) {
  if (!is_prime(p) || p > (1ULL << 31))
    fail(Errc::InvalidArgument, "field characteristic " + std::to_string(p) + " is not a supported prime");
  return {Kind::PrimeField, static_cast<std::uint32_t>(p)};
}

RingSpec RingSpec::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  if (text == "z" || text == "Z") return integers();
  if (text.starts_with("fp:")) {
    const std::string digits(text.substr(3));
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) || digits.size() > 10)
      fail(Errc::InvalidArgument, "bad ring '" + std::string(text) + "'; expected q, z or fp:<prime>");
    return prime_field(std::stoull(digits));
  }
  fail(Errc::InvalidArgument, "bad ring '" + std::string(text) + "'; expected q, z or fp:<prime>");
}

std::string RingSpec::to_string() const {
  switch (kind) {
    case Kind::Rationals: return "q";
    case Kind::Integers: return "z";
    case Kind::PrimeField: return "fp:" + std::to_string(p);
  }
  return "?";
}

PrimeFieldOps::value_type PrimeFieldOps::inv(value_type a) const {
  if (a == 0) fail(Errc::Internal, "inverse of zero in F_" + std::to_string(p));
  // Fermat: a^(p-2).
  std::uint64_t result = 1, base = a, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<value_type>(result);
}

// --- IntegerLattice ---------------------------------------------------------

void IntegerLattice::check_dim(std::size_t n) const {
  if (n != dim_)
    fail(Errc::DimensionMismatch,
         "vector of length " + std::to_string(n) + " against lattice dimension " + std::to_string(dim_));
}

void IntegerLattice::normalize_above(std::size_t row_index) {
  // Reduce row `row_index` at every later pivot so its entries above pivots
  // lie in [0, pivot).
  Row& row = rows_[row_index];
  Integer q;
  for (std::size_t j = row_index + 1; j < rows_.size(); ++j) {
    const std::size_t c = pivots_[j];
    if (row[c] == 0) continue;
    mpz_fdiv_q(q.get_mpz_t(), row[c].get_mpz_t(), rows_[j][c].get_mpz_t());
    if (q == 0) continue;
    for (std::size_t k = c; k < dim_; ++k)
      if (rows_[j][k] != 0) row[k] -= q * rows_[j][k];
  }
}

bool IntegerLattice::insert(Row v) {
  check_dim(v.size());
  bool changed = false;
  std::size_t r = 0;
  Integer q, g, s, t;
  for (std::size_t c = 0; c < dim_; ++c) {
    if (v[c] == 0) continue;
    while (r < rows_.size() && pivots_[r] < c) ++r;
    if (r < rows_.size() && pivots_[r] == c) {
      Row& row = rows_[r];
      if (mpz_divisible_p(v[c].get_mpz_t(), row[c].get_mpz_t())) {
        mpz_divexact(q.get_mpz_t(), v[c].get_mpz_t(), row[c].get_mpz_t());
        for (std::size_t k = c; k < dim_; ++k)
          if (row[k] != 0) v[k] -= q * row[k];
      } else {
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), row[c].get_mpz_t(), v[c].get_mpz_t());
        const Integer a = row[c] / g;
        const Integer b = v[c] / g;
        Row new_row(dim_), new_v(dim_);
        for (std::size_t k = c; k < dim_; ++k) {
          new_row[k] = s * row[k] + t * v[k];
          new_v[k] = a * v[k] - b * row[k];
        }
        row = std::move(new_row);
        v = std::move(new_v);
        changed = true;
      }
    } else {
      if (v[c] < 0)
        for (auto& x : v) x = -x;
      rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(r), std::move(v));
      pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(r), c);
      changed = true;
      break;
    }
  }
  if (changed)
    for (std::size_t i = rows_.size(); i-- > 0;) normalize_above(i);
  return changed;
}

std::optional<IntVector> IntegerLattice::coordinates(const Row& input) const {
  check_dim(input.size());
  Row v = input;
  IntVector coeffs(rows_.size());
  std::size_t r = 0;
  Integer q;
  for (std::size_t c = 0; c < dim_; ++c) {
    if (v[c] == 0) continue;
    while (r < rows_.size() && pivots_[r] < c) ++r;
    if (r == rows_.size() || pivots_[r] != c) return std::nullopt;
    const Row& row = rows_[r];
    if (!mpz_divisible_p(v[c].get_mpz_t(), row[c].get_mpz_t())) return std::nullopt;
    mpz_divexact(q.get_mpz_t(), v[c].get_mpz_t(), row[c].get_mpz_t());
    coeffs[r] = q;
    for (std::size_t k = c; k < dim_; ++k)
      if (row[k] != 0) v[k] -= q * row[k];
  }
  return coeffs;
}

bool IntegerLattice::contains(const Row& v) const { return coordinates(v).has_value(); }

bool IntegerLattice::contains(const IntegerLattice& other) const {
  return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const Row& r) { return contains(r); });
}

// --- Submodule --------------------------------------------------------------

namespace {

Submodule::Storage make_storage(const RingSpec& ring, std::size_t dim) {
  switch (ring.kind) {
    case RingSpec::Kind::PrimeField: return PrimeFieldEchelon(PrimeFieldOps{ring.p}, dim);
    case RingSpec::Kind::Rationals: return RationalEchelon(RationalOps{}, dim);
    case RingSpec::Kind::Integers: return IntegerLattice(dim);
  }
  fail(Errc::Internal, "unknown ring kind");
}

}  // namespace

Submodule::Submodule(RingSpec ring, std::size_t dim) : ring_(ring), storage_(make_storage(ring, dim)) {}

Submodule Submodule::full(RingSpec ring, std::size_t dim) {
  Submodule s(ring, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    IntVector e(dim, 0);
    e[i] = 1;
    s.insert(e);
  }
  return s;
}

std::size_t Submodule::dim() const {
  return std::visit([](const auto& s) { return s.dim(); }, storage_);
}

std::size_t Submodule::rank() const {
  return std::visit([](const auto& s) { return s.rank(); }, storage_);
}

bool Submodule::insert(const IntVector& v) {
  return std::visit([&](auto& s) { return s.insert(s.to_row(v)); }, storage_);
}

bool Submodule::contains(const IntVector& v) const {
  return std::visit([&](const auto& s) { return s.contains(s.to_row(v)); }, storage_);
}

bool Submodule::contains(const Submodule& other) const {
  if (!(ring_ == other.ring_)) fail(Errc::RingMismatch, ring_.to_string() + " vs " + other.ring_.to_string());
  return std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        return s.contains(std::get<T>(other.storage_));
      },
      storage_);
}

std::vector<std::vector<Rational>> Submodule::canonical_rows() const {
  return std::visit(
      [](const auto& s) {
        std::vector<std::vector<Rational>> out;
        for (const auto& row : s.rows()) {
          std::vector<Rational> r;
          r.reserve(row.size());
          for (const auto& x : row) {
            if constexpr (std::is_same_v<std::decay_t<decltype(s)>, IntegerLattice>)
              r.emplace_back(x);
            else
              r.push_back(s.ops().to_rational(x));
          }
          out.push_back(std::move(r));
        }
        return out;
      },
      storage_);
}

std::string Submodule::dump() const {
  std::ostringstream os;
  os << "# ring " << ring_.to_string() << " dim " << dim() << " rank " << rank() << '\n';
  for (const auto& row : canonical_rows()) {
    for (std::size_t k = 0; k < row.size(); ++k) os << (k ? " " : "") << row[k].get_str();
    os << '\n';
  }
  return os.str();
}

Submodule echelonize(RingSpec ring, const IntMatrix& vectors, std::size_t dim) {
  if (!ring.is_field()) fail(Errc::RingMismatch, "echelonize requires a field, got " + ring.to_string());
  Submodule s(ring, dim);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

IntegerLattice hermite_form(const IntMatrix& vectors, std::size_t dim) {
  IntegerLattice lattice(dim);
  for (const auto& v : vectors) lattice.insert(v);
  return lattice;
}

bool lattice_member(const IntegerLattice& lattice, const IntVector& v) { return lattice.contains(v); }

// --- Smith normal form ------------------------------------------------------

std::vector<Integer> smith_invariants(const IntMatrix& matrix) {
  const std::size_t m = matrix.size();
  if (m == 0) return {};
  const std::size_t n = matrix[0].size();
  for (const auto& row : matrix)
    if (row.size() != n) fail(Errc::DimensionMismatch, "ragged matrix");
  IntMatrix a = matrix;
  const std::size_t steps = std::min(m, n);
  Integer q;

  auto find_pivot = [&](std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (a[i][j] != 0 && (!found || abs(a[i][j]) < abs(a[pi][pj]))) {
          pi = i;
          pj = j;
          found = true;
        }
    return found;
  };
  auto move_to = [&](std::size_t t, std::size_t pi, std::size_t pj) {
    if (pi != t) std::swap(a[pi], a[t]);
    if (pj != t)
      for (std::size_t i = 0; i < m; ++i) std::swap(a[i][pj], a[i][t]);
  };

  std::size_t t = 0;
  for (; t < steps; ++t) {
    std::size_t pi = t, pj = t;
    if (!find_pivot(t, pi, pj)) break;
    move_to(t, pi, pj);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) {
        // Bring the smallest remainder in row/column t into the pivot.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (a[i][t] != 0 && abs(a[i][t]) < abs(a[bi][bj])) bi = i, bj = t;
        for (std::size_t j = t + 1; j < n; ++j)
          if (a[t][j] != 0 && abs(a[t][j]) < abs(a[bi][bj])) bi = t, bj = j;
        move_to(t, bi, bj);
        continue;
      }
      // Enforce divisibility of the trailing block by the pivot.
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
            for (std::size_t k = t; k < n; ++k) a[t][k] += a[i][k];
            divisible = false;
            break;
          }
      if (divisible) break;
    }
  }
  std::vector<Integer> diag(steps, 0);
  for (std::size_t i = 0; i < t; ++i) diag[i] = abs(a[i][i]);
  return diag;
}

std::vector<Integer> quotient_invariants(const IntMatrix& relations, std::size_t ngens) {
  std::vector<Integer> diag = relations.empty() ? std::vector<Integer>{} : smith_invariants(relations);
  diag.resize(ngens, 0);
  std::vector<Integer> out;
  for (const auto& d : diag)
    if (d != 1) out.push_back(d);
  std::stable_partition(out.begin(), out.end(), [](const Integer& d) { return d != 0; });
  return out;
}

}  // namespace dimlab
