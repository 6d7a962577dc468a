#pragma once

#include <vector>

#include "dimlab/group.hpp"
#include "dimlab/linalg.hpp"

namespace dimlab {

// An element of R[G] with exact coefficients indexed by element index.
// Coefficients are kept reduced for the ring: residues in [0, p) for F_p,
// integers for Z.
class GroupRingVector {
 public:
  GroupRingVector(FiniteGroup group, RingSpec ring);

  static GroupRingVector element(const FiniteGroup& group, RingSpec ring, Element g);
  static GroupRingVector one(const FiniteGroup& group, RingSpec ring) { return element(group, ring, kIdentity); }
  // g - 1
  static GroupRingVector augmented(const FiniteGroup& group, RingSpec ring, Element g);

  const FiniteGroup& group() const noexcept { return group_; }
  const RingSpec& ring() const noexcept { return ring_; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  const Rational& coeff(Element g) const { return coeffs_.at(g); }

  Rational augmentation() const;
  bool is_zero() const;
  IntVector to_integer_vector() const;

  GroupRingVector& operator+=(const GroupRingVector& other);
  GroupRingVector& operator-=(const GroupRingVector& other);
  GroupRingVector& operator*=(const Rational& scalar);

  friend GroupRingVector operator+(GroupRingVector a, const GroupRingVector& b) { return a += b; }
  friend GroupRingVector operator-(GroupRingVector a, const GroupRingVector& b) { return a -= b; }
  friend GroupRingVector operator*(GroupRingVector a, const Rational& s) { return a *= s; }
  friend GroupRingVector operator*(const Rational& s, GroupRingVector a) { return a *= s; }
  friend GroupRingVector operator*(const GroupRingVector& a, const GroupRingVector& b);

  GroupRingVector pow(unsigned n) const;

  friend bool operator==(const GroupRingVector& a, const GroupRingVector& b) {
    return a.group_.same_as(b.group_) && a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize();
  void require_compatible(const GroupRingVector& other) const;

  FiniteGroup group_;
  RingSpec ring_;
  std::vector<Rational> coeffs_;
};

// [g,h] - 1 = g^-1 h^-1 ((g-1)(h-1) - (h-1)(g-1))
bool commutator_identity_holds(const FiniteGroup& group, RingSpec ring, Element g, Element h);

// g^p - 1 = (g-1)^p over F_p
bool frobenius_identity_holds(const FiniteGroup& group, std::uint32_t p, Element g);

// g - 1 = (1/m)(g^m - 1) - (1/m) sum_{k=2}^m C(m,k) (g-1)^k over Q
bool binomial_identity_holds(const FiniteGroup& group, Element g, unsigned m);

}  // namespace dimlab
