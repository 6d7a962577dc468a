#include "dimlab/graded.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <random>
#include <type_traits>
#include <variant>

#include "space_ops.hpp"

namespace dimlab {
namespace {

constexpr Element kUnassigned = std::numeric_limits<Element>::max();

std::string element_text(const FiniteGroup& g, std::size_t degree, Element x) {
  return "degree " + std::to_string(degree) + " element " + g.label(x);
}

}  // namespace

// ---------------------------------------------------------------------------
// Lie ring

const LieDegree& GradedLieRing::degree(std::size_t i) const {
  if (i == 0 || i > degrees_.size())
    fail(Errc::DegreeOutOfRange,
         "Lie degree " + std::to_string(i) + " outside 1.." + std::to_string(degrees_.size()));
  return degrees_[i - 1];
}

Element GradedLieRing::canonical(std::size_t k, Element x) const {
  if (k == 0) fail(Errc::DegreeOutOfRange, "Lie degrees start at 1");
  if (!series_.term(k).contains(x))
    fail(Errc::InvalidArgument, series_.group().label(x) + " is not in term " + std::to_string(k));
  if (k > degrees_.size()) return kIdentity;
  return coset_of_[k - 1][x];
}

Element GradedLieRing::bracket(std::size_t i, Element a, std::size_t j, Element b) const {
  const FiniteGroup& g = series_.group();
  if (i == 0 || j == 0) fail(Errc::DegreeOutOfRange, "Lie degrees start at 1");
  if (!series_.term(i).contains(a) || !series_.term(j).contains(b))
    fail(Errc::InvalidArgument, "bracket arguments not in their degrees");
  return canonical(i + j, g.commutator(a, b));
}

std::vector<Element> GradedLieRing::tensor_basis(std::size_t i, RingSpec field) const {
  if (!field.is_field()) fail(Errc::RingMismatch, "tensor basis needs a field");
  if (field.kind == RingSpec::Kind::Rationals || i > degrees_.size()) return {};
  const LieDegree& d = degree(i);
  const FiniteGroup& g = series_.group();
  const Subgroup parts[] = {d.next, power_subgroup(d.term, field.p)};
  Subgroup span = subgroup_product(parts);
  std::vector<Element> out;
  for (Element r : d.representatives) {
    if (span.contains(r)) continue;
    out.push_back(r);
    auto seed = span.elements();
    seed.push_back(r);
    span = closure(g, seed);
  }
  return out;
}

GradedLieRing graded_lie(const NSeries& n, std::optional<std::uint64_t> representative_seed) {
  GradedLieRing l(n);
  const FiniteGroup& g = n.group();
  for (std::size_t k = 1; k <= n.length(); ++k) {
    LieDegree d{k, n.term(k), n.term(k + 1), {}, {}, {}};
    std::vector<Element> coset(g.order(), kUnassigned);
    const auto next = d.next.elements();
    // Elements come in increasing order, so the first unassigned member of a
    // coset is its least element.
    for (Element x : d.term.elements()) {
      if (coset[x] != kUnassigned) continue;
      d.representatives.push_back(x);
      for (Element m : next) coset[g.mul(x, m)] = x;
    }
    Subgroup span = d.next;
    for (Element r : d.representatives) {
      if (span.contains(r)) continue;
      d.generators.push_back(r);
      auto seed = span.elements();
      seed.push_back(r);
      span = closure(g, seed);
    }
    d.invariants = abelian_invariants(d.term, d.next);
    l.degrees_.push_back(std::move(d));
    l.coset_of_.push_back(std::move(coset));
  }

  std::optional<std::mt19937_64> rng;
  if (representative_seed) rng.emplace(*representative_seed);
  auto pick = [&](std::size_t k, Element a) {
    if (!rng) return a;
    const auto next = l.degrees_[k - 1].next.elements();
    return g.mul(a, next[(*rng)() % next.size()]);
  };
  const std::size_t top = l.degrees_.size();
  for (std::size_t i = 1; i <= top; ++i)
    for (std::size_t j = 1; i + j <= top; ++j)
      for (Element a : l.degrees_[i - 1].generators)
        for (Element b : l.degrees_[j - 1].generators)
          l.constants_.push_back({i, j, a, b, l.bracket(i, pick(i, a), j, pick(j, b))});
  return l;
}

IdentityCheck check_antisymmetry(const GradedLieRing& l) {
  IdentityCheck out;
  const FiniteGroup& g = l.series().group();
  const std::size_t top = l.num_degrees();
  for (std::size_t i = 1; i <= top; ++i)
    for (std::size_t j = 1; i + j <= top; ++j)
      for (Element a : l.degree(i).generators)
        for (Element b : l.degree(j).generators) {
          ++out.checked;
          const Element sum = g.mul(l.bracket(i, a, j, b), l.bracket(j, b, i, a));
          if (l.canonical(i + j, sum) != kIdentity || l.bracket(i, a, i, a) != kIdentity) {
            out.ok = false;
            out.witness = "[" + g.label(a) + ", " + g.label(b) + "]";
            return out;
          }
        }
  return out;
}

IdentityCheck check_jacobi(const GradedLieRing& l) {
  IdentityCheck out;
  const FiniteGroup& g = l.series().group();
  const std::size_t top = l.num_degrees();
  for (std::size_t i = 1; i <= top; ++i)
    for (std::size_t j = 1; i + j < top; ++j)
      for (std::size_t k = 1; i + j + k <= top; ++k)
        for (Element a : l.degree(i).generators)
          for (Element b : l.degree(j).generators)
            for (Element c : l.degree(k).generators) {
              ++out.checked;
              const Element t1 = l.bracket(i + j, l.bracket(i, a, j, b), k, c);
              const Element t2 = l.bracket(j + k, l.bracket(j, b, k, c), i, a);
              const Element t3 = l.bracket(k + i, l.bracket(k, c, i, a), j, b);
              if (l.canonical(i + j + k, g.mul(g.mul(t1, t2), t3)) != kIdentity) {
                out.ok = false;
                out.witness = g.label(a) + ", " + g.label(b) + ", " + g.label(c);
                return out;
              }
            }
  return out;
}

// ---------------------------------------------------------------------------
// Graded algebra

namespace {

template <class Ops>
typename Ops::value_type value_from(const Ops& ops, const Rational& q) {
  if constexpr (std::is_same_v<Ops, RationalOps>) {
    return q;
  } else {
    return ops.mul(ops.from_integer(q.get_num()), ops.inv(ops.from_integer(q.get_den())));
  }
}

template <class Ops>
struct AlgebraCore {
  using Value = typename Ops::value_type;
  using Row = std::vector<Value>;

  // Basis of R[G] adapted to the filtration, with degree labels, and the
  // inverse change of basis (coordinates of x are inverse * x).
  struct Adapted {
    std::vector<std::size_t> labels;
    std::vector<Row> inverse;
  };

  Ops ops;
  FiniteGroup group;
  RingSpec field;
  std::size_t n = 0;
  std::vector<Echelon<Ops>> delta;
  std::vector<Echelon<Ops>> complement;  // degrees 0 .. known - 1
  bool complete = false;
  mutable std::optional<Adapted> adapted;

  std::size_t known() const { return complement.size(); }

  void require_known(std::size_t i) const {
    if (i >= known() && !complete)
      fail(Errc::DegreeOutOfRange, "degree " + std::to_string(i) + " beyond the computed range");
  }

  const Echelon<Ops>& delta_at(std::size_t i) const {
    if (i < delta.size()) return delta[i];
    if (complete) return delta.back();
    fail(Errc::DegreeOutOfRange, "Delta_" + std::to_string(i) + " not computed");
  }

  Row row_of(const GroupRingVector& x) const {
    if (!x.group().same_as(group) || x.ring() != field)
      fail(Errc::RingMismatch, "element of a different group ring");
    Row out;
    out.reserve(n);
    for (const auto& c : x.coeffs()) out.push_back(value_from(ops, c));
    return out;
  }

  GroupRingVector vector_of(const Row& r) const {
    GroupRingVector out(group, field);
    for (Element g = 0; g < n; ++g)
      if (!ops.is_zero(r[g])) out += GroupRingVector::element(group, field, g) * ops.to_rational(r[g]);
    return out;
  }

  Row augmented(Element g) const { return detail::augmented_row(ops, n, g); }
  Row mul(const Row& a, const Row& b) const { return detail::product(ops, group, a, b); }

  std::optional<Row> coords(std::size_t i, const Row& x) const {
    require_known(i);
    if (i >= known()) {
      if (!delta_at(i).contains(x)) return std::nullopt;
      return Row{};
    }
    if (!delta[i].contains(x)) return std::nullopt;
    const Row r = delta[i + 1].reduce(x);
    Row out;
    for (std::size_t c : complement[i].pivots()) out.push_back(r[c]);
    return out;
  }

  std::size_t dimension(std::size_t i) const {
    require_known(i);
    return i < known() ? complement[i].rank() : 0;
  }

  const Row& basis(std::size_t i, std::size_t a) const {
    if (i >= known() || a >= complement[i].rank())
      fail(Errc::DegreeOutOfRange, "no basis element " + std::to_string(a) + " in degree " + std::to_string(i));
    return complement[i].rows()[a];
  }

  Row multiply(std::size_t i, std::size_t a, std::size_t j, std::size_t b) const {
    const auto c = coords(i + j, mul(basis(i, a), basis(j, b)));
    if (!c) fail(Errc::Internal, "product left the filtration");
    return *c;
  }

  const Adapted& adapted_basis() const {
    if (adapted) return *adapted;
    const std::size_t far = std::numeric_limits<std::size_t>::max() / 4;
    Adapted out;
    std::vector<Row> rows;
    for (std::size_t i = 0; i < known(); ++i)
      for (const auto& r : complement[i].rows()) {
        rows.push_back(r);
        out.labels.push_back(i);
      }
    for (const auto& r : delta_at(known()).rows()) {
      rows.push_back(r);
      out.labels.push_back(complete ? far : known());
    }
    if (rows.size() != n) fail(Errc::Internal, "adapted basis has wrong size");
    // Gauss-Jordan on [M | I]; coordinates are (M^T)^-1 = (M^-1)^T.
    std::vector<Row> inv(n, Row(n, ops.zero()));
    for (std::size_t r = 0; r < n; ++r) inv[r][r] = ops.one();
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t piv = c;
      while (piv < n && ops.is_zero(rows[piv][c])) ++piv;
      if (piv == n) fail(Errc::Internal, "adapted basis is singular");
      std::swap(rows[piv], rows[c]);
      std::swap(inv[piv], inv[c]);
      const Value s = ops.inv(rows[c][c]);
      for (std::size_t k = 0; k < n; ++k) {
        rows[c][k] = ops.mul(rows[c][k], s);
        inv[c][k] = ops.mul(inv[c][k], s);
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (r == c || ops.is_zero(rows[r][c])) continue;
        const Value f = rows[r][c];
        for (std::size_t k = 0; k < n; ++k) {
          if (!ops.is_zero(rows[c][k])) rows[r][k] = ops.sub(rows[r][k], ops.mul(f, rows[c][k]));
          if (!ops.is_zero(inv[c][k])) inv[r][k] = ops.sub(inv[r][k], ops.mul(f, inv[c][k]));
        }
      }
    }
    out.inverse.assign(n, Row(n, ops.zero()));
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t g = 0; g < n; ++g) out.inverse[u][g] = inv[g][u];
    adapted = std::move(out);
    return *adapted;
  }

  // Coefficients of y = delta(x) - 1(x)x - x(x)1 in the adapted basis of the
  // tensor square must vanish on pairs of total degree <= i.
  bool primitive(std::size_t i, const Row& x) const {
    if (i + 1 > known() && !complete)
      fail(Errc::DegreeOutOfRange, "primitivity in degree " + std::to_string(i) + " needs degree " +
                                       std::to_string(i + 1));
    const Adapted& b = adapted_basis();
    std::vector<Value> dot(n, ops.zero());  // inverse * x
    for (std::size_t u = 0; u < n; ++u)
      for (Element g = 0; g < n; ++g)
        if (!ops.is_zero(x[g])) dot[u] = ops.add(dot[u], ops.mul(b.inverse[u][g], x[g]));
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v) {
        if (b.labels[u] + b.labels[v] > i) continue;
        Value c = ops.zero();
        // delta(x) = sum_g x_g g(x)g
        for (Element g = 0; g < n; ++g)
          if (!ops.is_zero(x[g])) c = ops.add(c, ops.mul(x[g], ops.mul(b.inverse[u][g], b.inverse[v][g])));
        c = ops.sub(c, ops.mul(b.inverse[u][kIdentity], dot[v]));
        c = ops.sub(c, ops.mul(dot[u], b.inverse[v][kIdentity]));
        if (!ops.is_zero(c)) return false;
      }
    return true;
  }

  std::vector<Rational> rational(const Row& r) const {
    std::vector<Rational> out;
    out.reserve(r.size());
    for (const auto& x : r) out.push_back(ops.to_rational(x));
    return out;
  }
};

template <class Ops>
AlgebraCore<Ops> build_core(const FiltrationBasis& f, Ops ops) {
  AlgebraCore<Ops> core;
  core.ops = ops;
  core.group = f.group;
  core.field = f.ring;
  core.n = f.group.order();
  for (const auto& d : f.degrees) core.delta.push_back(std::get<Echelon<Ops>>(d.storage()));
  std::size_t known = f.max_degree;
  if (f.stabilized_at) {
    known = *f.stabilized_at;
    core.complete = true;
  }
  for (std::size_t i = 0; i < known; ++i) {
    Echelon<Ops> c(ops, core.n);
    for (const auto& row : core.delta[i].rows()) c.insert(core.delta[i + 1].reduce(row));
    core.complement.push_back(std::move(c));
  }
  return core;
}

}  // namespace

struct GradedAlgebra::Impl {
  using Core = std::variant<AlgebraCore<PrimeFieldOps>, AlgebraCore<RationalOps>>;
  Impl(FiltrationBasis f, Core c) : filtration(std::move(f)), core(std::move(c)) {}

  FiltrationBasis filtration;
  Core core;
  mutable std::mutex mutex;  // guards the lazily built adapted basis
};

GradedAlgebra graded_algebra(const FiltrationBasis& f) {
  if (!f.ring.is_field()) fail(Errc::RingMismatch, "graded algebra needs field coefficients");
  GradedAlgebra::Impl::Core core = f.ring.kind == RingSpec::Kind::PrimeField
                                       ? GradedAlgebra::Impl::Core(build_core(f, PrimeFieldOps{f.ring.p}))
                                       : GradedAlgebra::Impl::Core(build_core(f, RationalOps{}));
  return GradedAlgebra(std::make_shared<const GradedAlgebra::Impl>(f, std::move(core)));
}

const FiltrationBasis& GradedAlgebra::filtration() const noexcept { return impl_->filtration; }

std::size_t GradedAlgebra::known_degrees() const noexcept {
  return std::visit([](const auto& c) { return c.known(); }, impl_->core);
}

bool GradedAlgebra::complete() const noexcept {
  return std::visit([](const auto& c) { return c.complete; }, impl_->core);
}

std::size_t GradedAlgebra::dimension(std::size_t i) const {
  return std::visit([&](const auto& c) { return c.dimension(i); }, impl_->core);
}

std::vector<std::size_t> GradedAlgebra::dimensions() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < known_degrees(); ++i) out.push_back(dimension(i));
  return out;
}

std::optional<std::vector<Rational>> GradedAlgebra::coordinates(std::size_t i, const GroupRingVector& x) const {
  return std::visit(
      [&](const auto& c) -> std::optional<std::vector<Rational>> {
        auto r = c.coords(i, c.row_of(x));
        if (!r) return std::nullopt;
        return c.rational(*r);
      },
      impl_->core);
}

GroupRingVector GradedAlgebra::basis_element(std::size_t i, std::size_t a) const {
  return std::visit([&](const auto& c) { return c.vector_of(c.basis(i, a)); }, impl_->core);
}

std::vector<Rational> GradedAlgebra::multiply(std::size_t i, std::size_t a, std::size_t j, std::size_t b) const {
  return std::visit([&](const auto& c) { return c.rational(c.multiply(i, a, j, b)); }, impl_->core);
}

namespace {

template <class Ops>
IdentityCheck associativity(const AlgebraCore<Ops>& core) {
  using Row = typename AlgebraCore<Ops>::Row;
  const auto& ops = core.ops;
  IdentityCheck out;
  const std::size_t top = core.known();
  auto combine = [&](std::size_t i, const Row& coeffs, auto&& times) {
    Row acc;
    for (std::size_t t = 0; t < coeffs.size(); ++t) {
      if (ops.is_zero(coeffs[t])) continue;
      Row term = times(t);
      if (acc.empty()) acc.assign(term.size(), ops.zero());
      for (std::size_t k = 0; k < term.size(); ++k) acc[k] = ops.add(acc[k], ops.mul(coeffs[t], term[k]));
    }
    (void)i;
    return acc;
  };
  for (std::size_t i = 1; i < top; ++i)
    for (std::size_t j = 1; i + j < top; ++j)
      for (std::size_t k = 1; i + j + k < top; ++k)
        for (std::size_t a = 0; a < core.dimension(i); ++a)
          for (std::size_t b = 0; b < core.dimension(j); ++b)
            for (std::size_t c = 0; c < core.dimension(k); ++c) {
              ++out.checked;
              const Row ab = core.multiply(i, a, j, b);
              const Row bc = core.multiply(j, b, k, c);
              Row left = combine(i + j, ab, [&](std::size_t t) { return core.multiply(i + j, t, k, c); });
              Row right = combine(j + k, bc, [&](std::size_t t) { return core.multiply(i, a, j + k, t); });
              const std::size_t d = core.dimension(i + j + k);
              if (left.empty()) left.assign(d, ops.zero());
              if (right.empty()) right.assign(d, ops.zero());
              if (left != right) {
                out.ok = false;
                out.witness = "basis triple (" + std::to_string(i) + ":" + std::to_string(a) + ", " +
                              std::to_string(j) + ":" + std::to_string(b) + ", " + std::to_string(k) + ":" +
                              std::to_string(c) + ")";
                return out;
              }
            }
  return out;
}

template <class Ops>
ThetaMap theta_impl(const GradedLieRing& l, const AlgebraCore<Ops>& core) {
  using Row = typename AlgebraCore<Ops>::Row;
  const FiniteGroup& g = core.group;
  if (!l.series().group().same_as(g)) fail(Errc::MismatchedGrading, "Lie ring and algebra of different groups");
  const std::size_t top = l.num_degrees();
  auto in_range = [&](std::size_t i) { return i < core.known() || core.complete; };

  // n - 1 in Delta_k for generators of every Lie degree k (and for the
  // repeating last term) forces the same for whole terms.
  const bool stable = l.series().stabilized();
  const std::size_t last = stable ? std::max(top, core.delta.size() - 1) : top;
  for (std::size_t k = 1; k <= last && in_range(k); ++k) {
    std::vector<Element> check;
    if (k < top || (k == top && !stable))
      check = l.degree(k).generators;
    else
      check = l.degree(top).term.elements();
    for (Element x : check)
      if (!core.delta_at(k).contains(core.augmented(x)))
        fail(Errc::MismatchedGrading, g.label(x) + " - 1 is not in Delta_" + std::to_string(k));
  }

  ThetaMap out;
  for (std::size_t i = 1; i <= top && in_range(i); ++i) {
    ThetaDegree d;
    d.degree = i;
    d.domain = l.tensor_basis(i, core.field);
    Echelon<Ops> span(core.ops, core.dimension(i));
    for (Element x : d.domain) {
      const auto c = core.coords(i, core.augmented(x));
      if (!c) fail(Errc::MismatchedGrading, g.label(x) + " - 1 is not in Delta_" + std::to_string(i));
      if (!c->empty()) span.insert(*c);
      d.columns.push_back(core.rational(*c));
    }
    d.rank = span.rank();
    out.degrees.push_back(std::move(d));
  }

  for (const auto& di : out.degrees)
    for (const auto& dj : out.degrees) {
      const std::size_t s = di.degree + dj.degree;
      if (s >= core.known()) continue;
      for (Element x : di.domain)
        for (Element y : dj.domain) {
          ++out.lie_morphism.checked;
          const auto lhs = core.coords(s, core.augmented(g.commutator(x, y)));
          const Row ax = core.augmented(x), ay = core.augmented(y);
          Row comm = core.mul(ax, ay);
          const Row yx = core.mul(ay, ax);
          for (std::size_t k = 0; k < comm.size(); ++k) comm[k] = core.ops.sub(comm[k], yx[k]);
          const auto rhs = core.coords(s, comm);
          if (!lhs || !rhs || *lhs != *rhs) {
            out.lie_morphism.ok = false;
            out.lie_morphism.witness = "[" + g.label(x) + ", " + g.label(y) + "] in degree " + std::to_string(s);
            return out;
          }
        }
    }
  return out;
}

template <class Ops>
XiReport xi_impl(const GradedLieRing& l, const AlgebraCore<Ops>& core) {
  using Row = typename AlgebraCore<Ops>::Row;
  XiReport out;
  if (core.field.kind != RingSpec::Kind::PrimeField) return out;
  const FiniteGroup& g = core.group;
  const std::uint32_t p = core.field.p;
  for (std::size_t i = 1; i <= l.num_degrees(); ++i)
    for (Element x : l.tensor_basis(i, core.field)) {
      const std::size_t target = i * p;
      if (target >= core.known() && !core.complete) {
        ++out.skipped;
        continue;
      }
      XiEntry e;
      e.degree = i;
      e.element = x;
      e.target_degree = target;
      const Element xp = g.pow(x, p);
      e.lands_in_series = l.series().term(target).contains(xp);
      const Row ax = core.augmented(x);
      Row power = ax;
      for (std::uint32_t k = 1; k < p; ++k) power = core.mul(power, ax);
      const auto lhs = core.coords(target, core.augmented(xp));
      const auto rhs = core.coords(target, power);
      e.matches = lhs && rhs && *lhs == *rhs;
      out.entries.push_back(e);
    }
  return out;
}

template <class Ops>
GenerationReport generation_impl(const AlgebraCore<Ops>& core, const ThetaMap& theta_map) {
  using Row = typename AlgebraCore<Ops>::Row;
  GenerationReport out;
  const std::size_t top = core.known();
  std::vector<std::vector<Row>> reps(top);
  for (std::size_t m = 0; m < top; ++m) {
    out.expected.push_back(core.dimension(m));
    if (m == 0) {
      for (std::size_t a = 0; a < core.dimension(0); ++a) reps[0].push_back(core.basis(0, a));
      out.generated.push_back(reps[0].size());
      continue;
    }
    Echelon<Ops> span(core.ops, core.dimension(m));
    for (std::size_t a = 1; a <= m && a <= theta_map.degrees.size(); ++a)
      for (Element x : theta_map.degrees[a - 1].domain)
        for (const Row& s : reps[m - a]) {
          Row prod = core.mul(core.augmented(x), s);
          const auto c = core.coords(m, prod);
          if (!c) fail(Errc::Internal, "generated element left the filtration");
          if (span.insert(*c)) reps[m].push_back(std::move(prod));
        }
    out.generated.push_back(span.rank());
  }
  return out;
}

}  // namespace

IdentityCheck check_associativity(const GradedAlgebra& a) {
  return std::visit([](const auto& c) { return associativity(c); }, a.impl().core);
}

bool ThetaMap::injective() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const ThetaDegree& d) { return d.injective(); });
}

std::vector<std::size_t> ThetaMap::ranks() const {
  std::vector<std::size_t> out;
  for (const auto& d : degrees) out.push_back(d.rank);
  return out;
}

ThetaMap theta(const GradedLieRing& l, const GradedAlgebra& a) {
  return std::visit([&](const auto& c) { return theta_impl(l, c); }, a.impl().core);
}

bool XiReport::ok() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const XiEntry& e) { return e.lands_in_series && e.matches; });
}

XiReport xi_check(const GradedLieRing& l, const GradedAlgebra& a) {
  return std::visit([&](const auto& c) { return xi_impl(l, c); }, a.impl().core);
}

bool is_primitive(const GradedAlgebra& a, std::size_t i, const GroupRingVector& x) {
  std::lock_guard lock(a.impl().mutex);
  return std::visit([&](const auto& c) { return c.primitive(i, c.row_of(x)); }, a.impl().core);
}

PrimitivityReport primitivity_check(const GradedAlgebra& a, const ThetaMap& theta_map) {
  PrimitivityReport out;
  const FiniteGroup& g = a.filtration().group;
  for (const auto& d : theta_map.degrees)
    for (Element x : d.domain) {
      if (d.degree + 1 > a.known_degrees() && !a.complete()) {
        ++out.skipped;
        continue;
      }
      ++out.checked;
      if (!is_primitive(a, d.degree, GroupRingVector::augmented(g, a.field(), x))) {
        out.witness = element_text(g, d.degree, x);
        return out;
      }
    }
  return out;
}

GenerationReport generation_check(const GradedAlgebra& a, const ThetaMap& theta_map) {
  return std::visit([&](const auto& c) { return generation_impl(c, theta_map); }, a.impl().core);
}

bool HilbertReport::ok() const {
  if (!total_matches_order) return false;
  if (truncated) {
    for (std::size_t n = 0; n < rhs.size(); ++n)
      if ((n < lhs.size() ? lhs[n] : Integer(0)) != rhs[n]) return false;
    return true;
  }
  return lhs == rhs;
}

HilbertReport hilbert_check(const GradedLieRing& lazard, const GradedAlgebra& a) {
  HilbertReport out;
  const RingSpec field = a.field();
  const std::uint32_t p = field.characteristic();
  out.lhs = {Integer(1)};
  for (std::size_t i = 1; i <= lazard.num_degrees(); ++i) {
    const std::size_t d = lazard.tensor_basis(i, field).size();
    out.lie_ranks.push_back(d);
    for (std::size_t r = 0; r < d; ++r) {
      // multiply by 1 + t^i + ... + t^((p-1)i)
      std::vector<Integer> next(out.lhs.size() + (p - 1) * i, Integer(0));
      for (std::size_t n = 0; n < out.lhs.size(); ++n)
        for (std::size_t e = 0; e < p; ++e) next[n + e * i] += out.lhs[n];
      out.lhs = std::move(next);
    }
  }
  for (std::size_t n : a.dimensions()) out.rhs.emplace_back(static_cast<unsigned long>(n));
  out.truncated = !a.complete();
  if (!out.truncated) {
    const std::size_t len = std::max(out.lhs.size(), out.rhs.size());
    out.lhs.resize(len, Integer(0));
    out.rhs.resize(len, Integer(0));
    const std::uint64_t order = a.filtration().group.order();
    const auto primes = prime_divisors(order);
    if (p != 0 && primes.size() == 1 && primes.front() == p) {
      Integer total = 0;
      for (const auto& x : out.rhs) total += x;
      out.total_matches_order = total == Integer(static_cast<unsigned long>(order));
    }
  }
  return out;
}

}  // namespace dimlab
