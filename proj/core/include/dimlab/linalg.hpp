#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "dimlab/error.hpp"

namespace dimlab {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;

// Coefficient ring: Q, Z or F_p.
struct RingSpec {
  enum class Kind { Rationals, Integers, PrimeField };

  Kind kind = Kind::Integers;
  std::uint32_t p = 0;

  static RingSpec rationals() { return {Kind::Rationals, 0}; }
  static RingSpec integers() { return {Kind::Integers, 0}; }
  static RingSpec prime_field(std::uint64_t p);

  // "q", "z" or "fp:<prime>".
  static RingSpec parse(std::string_view text);
  std::string to_string() const;

  bool is_field() const noexcept { return kind != Kind::Integers; }
  std::uint32_t characteristic() const noexcept { return kind == Kind::PrimeField ? p : 0; }

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

struct PrimeFieldOps {
  using value_type = std::uint32_t;

  std::uint32_t p = 2;

  value_type zero() const noexcept { return 0; }
  value_type one() const noexcept { return 1; }
  value_type from_integer(const Integer& x) const {
    Integer r = x % p;
    if (r < 0) r += p;
    return static_cast<value_type>(r.get_ui());
  }
  value_type from_int(long x) const {
    long r = x % static_cast<long>(p);
    return static_cast<value_type>(r < 0 ? r + p : r);
  }
  value_type add(value_type a, value_type b) const noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= p ? s - p : s);
  }
  value_type sub(value_type a, value_type b) const noexcept { return a >= b ? a - b : a + p - b; }
  value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p - a; }
  value_type mul(value_type a, value_type b) const noexcept {
    return static_cast<value_type>(std::uint64_t{a} * b % p);
  }
  value_type inv(value_type a) const;
  bool is_zero(value_type a) const noexcept { return a == 0; }
  Rational to_rational(value_type a) const { return Rational(static_cast<unsigned long>(a)); }
};

struct RationalOps {
  using value_type = Rational;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_integer(const Integer& x) const { return Rational(x); }
  value_type from_int(long x) const { return Rational(x); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const {
    if (a == 0) fail(Errc::Internal, "inverse of zero");
    return 1 / a;
  }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  Rational to_rational(const value_type& a) const { return a; }
};

struct IntegerOps {
  using value_type = Integer;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_integer(const Integer& x) const { return x; }
  value_type from_int(long x) const { return Integer(x); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  Rational to_rational(const value_type& a) const { return Rational(a); }
};

// Reduced row-echelon basis of a subspace of F^dim. The representation is
// canonical, so equality of spans is equality of row lists.
template <class Ops>
class Echelon {
 public:
  using value_type = typename Ops::value_type;
  using Row = std::vector<value_type>;

  Echelon(Ops ops, std::size_t dim) : ops_(std::move(ops)), dim_(dim) {}

  const Ops& ops() const noexcept { return ops_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<Row>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  // Normal form of v modulo the span: zero in every pivot column.
  Row reduce(Row v) const {
    check_dim(v.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t c = pivots_[r];
      if (ops_.is_zero(v[c])) continue;
      const value_type f = v[c];
      const Row& row = rows_[r];
      for (std::size_t k = c; k < dim_; ++k)
        if (!ops_.is_zero(row[k])) v[k] = ops_.sub(v[k], ops_.mul(f, row[k]));
    }
    return v;
  }

  bool contains(const Row& v) const {
    Row red = reduce(v);
    for (const auto& x : red)
      if (!ops_.is_zero(x)) return false;
    return true;
  }

  bool contains(const Echelon& other) const {
    for (const auto& row : other.rows_)
      if (!contains(row)) return false;
    return true;
  }

  // Adds v to the span; returns true when the rank grew.
  bool insert(Row v) {
    v = reduce(std::move(v));
    std::size_t c = 0;
    while (c < dim_ && ops_.is_zero(v[c])) ++c;
    if (c == dim_) return false;
    const value_type scale = ops_.inv(v[c]);
    for (std::size_t k = c; k < dim_; ++k)
      if (!ops_.is_zero(v[k])) v[k] = ops_.mul(v[k], scale);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      Row& row = rows_[r];
      if (ops_.is_zero(row[c])) continue;
      const value_type f = row[c];
      for (std::size_t k = c; k < dim_; ++k)
        if (!ops_.is_zero(v[k])) row[k] = ops_.sub(row[k], ops_.mul(f, v[k]));
    }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < c) ++pos;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), c);
    return true;
  }

  Row to_row(const IntVector& v) const {
    Row out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(ops_.from_integer(x));
    return out;
  }

  friend bool operator==(const Echelon& a, const Echelon& b) {
    return a.dim_ == b.dim_ && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
  }

 private:
  void check_dim(std::size_t n) const {
    if (n != dim_)
      fail(Errc::DimensionMismatch,
           "vector of length " + std::to_string(n) + " against dimension " + std::to_string(dim_));
  }

  Ops ops_;
  std::size_t dim_;
  std::vector<Row> rows_;
  std::vector<std::size_t> pivots_;
};

using PrimeFieldEchelon = Echelon<PrimeFieldOps>;
using RationalEchelon = Echelon<RationalOps>;

// Sublattice of Z^dim kept in row Hermite normal form: rows sorted by pivot
// column, positive pivots, entries above each pivot reduced into [0, pivot).
class IntegerLattice {
 public:
  using value_type = Integer;
  using Row = IntVector;

  explicit IntegerLattice(std::size_t dim = 0) : dim_(dim) {}

  IntegerOps ops() const noexcept { return {}; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<Row>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool insert(Row v);
  bool contains(const Row& v) const;
  bool contains(const IntegerLattice& other) const;
  // Coefficients of v in the HNF rows, or nullopt when v is not a member.
  std::optional<IntVector> coordinates(const Row& v) const;

  Row to_row(const IntVector& v) const { return v; }

  friend bool operator==(const IntegerLattice&, const IntegerLattice&) = default;

 private:
  void check_dim(std::size_t n) const;
  void normalize_above(std::size_t row_index);

  std::size_t dim_;
  std::vector<Row> rows_;
  std::vector<std::size_t> pivots_;
};

// A canonical R-submodule of R^dim for R in {Q, Z, F_p}.
class Submodule {
 public:
  using Storage = std::variant<PrimeFieldEchelon, RationalEchelon, IntegerLattice>;

  Submodule(RingSpec ring, std::size_t dim);
  static Submodule full(RingSpec ring, std::size_t dim);

  const RingSpec& ring() const noexcept { return ring_; }
  std::size_t dim() const;
  std::size_t rank() const;

  bool insert(const IntVector& v);
  bool contains(const IntVector& v) const;
  bool contains(const Submodule& other) const;

  // Canonical rows with exact rational entries (integers for Z and F_p).
  std::vector<std::vector<Rational>> canonical_rows() const;
  std::string dump() const;

  const Storage& storage() const noexcept { return storage_; }
  Storage& storage() noexcept { return storage_; }

  friend bool operator==(const Submodule& a, const Submodule& b) {
    return a.ring_ == b.ring_ && a.storage_ == b.storage_;
  }

 private:
  RingSpec ring_;
  Storage storage_;
};

// Canonical echelon basis of the span of `vectors` over a field. Throws
// RingMismatch for Z.
Submodule echelonize(RingSpec ring, const IntMatrix& vectors, std::size_t dim);

IntegerLattice hermite_form(const IntMatrix& vectors, std::size_t dim);

bool lattice_member(const IntegerLattice& lattice, const IntVector& v);

// Diagonal of the Smith normal form: min(rows, cols) entries d1 | d2 | ...,
// zeros last.
std::vector<Integer> smith_invariants(const IntMatrix& matrix);

// Invariant factors of Z^ngens / rowspan(relations), 1s dropped, 0 for each
// free summand.
std::vector<Integer> quotient_invariants(const IntMatrix& relations, std::size_t ngens);

}  // namespace dimlab
