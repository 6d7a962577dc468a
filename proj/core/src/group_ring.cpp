#include "dimlab/group_ring.hpp"

#include <algorithm>

#include "dimlab/error.hpp"

namespace dimlab {

GroupRingVector::GroupRingVector(FiniteGroup group, RingSpec ring)
    : group_(std::move(group)), ring_(ring), coeffs_(group_.order(), 0) {}

GroupRingVector GroupRingVector::element(const FiniteGroup& group, RingSpec ring, Element g) {
  GroupRingVector v(group, ring);
  v.coeffs_.at(g) = 1;
  return v;
}

GroupRingVector GroupRingVector::augmented(const FiniteGroup& group, RingSpec ring, Element g) {
  GroupRingVector v = element(group, ring, g);
  v.coeffs_[kIdentity] -= 1;
  v.normalize();
  return v;
}

Rational GroupRingVector::augmentation() const {
  Rational sum = 0;
  for (const auto& c : coeffs_) sum += c;
  if (ring_.kind == RingSpec::Kind::PrimeField) {
    Integer r = sum.get_num() % ring_.p;
    if (r < 0) r += ring_.p;
    return Rational(r);
  }
  return sum;
}

bool GroupRingVector::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

IntVector GroupRingVector::to_integer_vector() const {
  IntVector out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    if (c.get_den() != 1) fail(Errc::RingMismatch, "coefficient " + c.get_str() + " is not integral");
    out.push_back(c.get_num());
  }
  return out;
}

void GroupRingVector::normalize() {
  switch (ring_.kind) {
    case RingSpec::Kind::Rationals: return;
    case RingSpec::Kind::Integers:
      for (const auto& c : coeffs_)
        if (c.get_den() != 1) fail(Errc::RingMismatch, "non-integral coefficient over Z");
      return;
    case RingSpec::Kind::PrimeField: {
      const PrimeFieldOps ops{ring_.p};
      for (auto& c : coeffs_) {
        // a/b -> a * b^-1 mod p
        const auto num = ops.from_integer(c.get_num());
        const auto den = ops.from_integer(c.get_den());
        c = Rational(static_cast<unsigned long>(ops.mul(num, ops.inv(den))));
      }
      return;
    }
  }
}

void GroupRingVector::require_compatible(const GroupRingVector& other) const {
  if (!group_.same_as(other.group_)) fail(Errc::ParentMismatch, "group ring elements over different groups");
  if (!(ring_ == other.ring_)) fail(Errc::RingMismatch, ring_.to_string() + " vs " + other.ring_.to_string());
}

GroupRingVector& GroupRingVector::operator+=(const GroupRingVector& other) {
  require_compatible(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

GroupRingVector& GroupRingVector::operator-=(const GroupRingVector& other) {
  require_compatible(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

GroupRingVector& GroupRingVector::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  normalize();
  return *this;
}

GroupRingVector operator*(const GroupRingVector& a, const GroupRingVector& b) {
  a.require_compatible(b);
  GroupRingVector out(a.group_, a.ring_);
  const FiniteGroup& g = a.group_;
  for (Element x = 0; x < g.order(); ++x) {
    if (sgn(a.coeffs_[x]) == 0) continue;
    for (Element y = 0; y < g.order(); ++y)
      if (sgn(b.coeffs_[y]) != 0) out.coeffs_[g.mul(x, y)] += a.coeffs_[x] * b.coeffs_[y];
  }
  out.normalize();
  return out;
}

GroupRingVector GroupRingVector::pow(unsigned n) const {
  GroupRingVector result = one(group_, ring_);
  for (unsigned k = 0; k < n; ++k) result = result * *this;
  return result;
}

bool commutator_identity_holds(const FiniteGroup& group, RingSpec ring, Element g, Element h) {
  using V = GroupRingVector;
  const V lhs = V::augmented(group, ring, group.commutator(g, h));
  const V a = V::augmented(group, ring, g);
  const V b = V::augmented(group, ring, h);
  const V rhs = V::element(group, ring, group.mul(group.inv(g), group.inv(h))) * (a * b - b * a);
  return lhs == rhs;
}

bool frobenius_identity_holds(const FiniteGroup& group, std::uint32_t p, Element g) {
  const RingSpec ring = RingSpec::prime_field(p);
  const auto lhs = GroupRingVector::augmented(group, ring, group.pow(g, p));
  const auto rhs = GroupRingVector::augmented(group, ring, g).pow(p);
  return lhs == rhs;
}

bool binomial_identity_holds(const FiniteGroup& group, Element g, unsigned m) {
  if (m == 0) fail(Errc::InvalidArgument, "m must be positive");
  const RingSpec q = RingSpec::rationals();
  const auto x = GroupRingVector::augmented(group, q, g);
  auto rhs = GroupRingVector::augmented(group, q, group.pow(g, m)) * Rational(1, m);
  Integer binom = m;  // C(m, 1)
  GroupRingVector power = x;
  for (unsigned k = 2; k <= m; ++k) {
    binom = binom * (m - k + 1) / k;
    power = power * x;
    Rational coefficient(binom, Integer(m));
    coefficient.canonicalize();
    rhs -= power * coefficient;
  }
  return x == rhs;
}

}  // namespace dimlab
