#include "dimlab/filtration.hpp"

#include <algorithm>

#include "dimlab/error.hpp"
#include "space_ops.hpp"

namespace dimlab {

namespace {

template <class Space>
Space full_space(const Space& zero) {
  Space s = zero;
  for (Element g = 0; g < zero.dim(); ++g) s.insert(detail::unit_row(zero.ops(), zero.dim(), g));
  return s;
}

template <class Space>
void insert_all(Space& into, const Space& from) {
  for (const auto& row : from.rows()) into.insert(row);
}

// Largest k <= cap with g in N_k.
std::vector<std::size_t> element_weights(const NSeries& n, std::size_t cap) {
  std::vector<std::size_t> w(n.group().order(), 1);
  for (std::size_t k = 2; k <= cap; ++k) {
    const Subgroup& term = n.term(k);
    for (Element g : term.elements()) w[g] = k;
  }
  return w;
}

// Witness rule documented on FiltrationBasis::stabilized_at.
template <class Space>
std::optional<std::size_t> witnessed_stabilization(const std::vector<Space>& deltas, std::size_t series_length) {
  const std::size_t run = std::max<std::size_t>(series_length, 1) + 1;
  for (std::size_t j = 1; j < deltas.size(); ++j) {
    if (deltas[j].rank() == 0) return j;
    if (j + run - 1 < deltas.size()) {
      bool equal = true;
      for (std::size_t t = j + 1; t < j + run && equal; ++t) equal = deltas[t] == deltas[j];
      if (equal) return j;
    }
  }
  return std::nullopt;
}

template <class Space>
std::vector<Space> deltas_by_recursion(const NSeries& n, const Space& zero, std::size_t max_degree) {
  const FiniteGroup& g = n.group();
  const auto& ops = zero.ops();
  const std::size_t dim = g.order();
  const std::size_t c = std::max<std::size_t>(n.length(), 1);

  std::vector<Space> out;
  out.push_back(full_space(zero));
  for (std::size_t i = 1; i <= max_degree; ++i) {
    if (i >= 2 && out[i - 1].rank() == 0) {
      out.push_back(zero);
      continue;
    }
    // c + 1 equal consecutive terms force every later term to be equal.
    if (i > c + 1) {
      bool run = true;
      for (std::size_t t = i - c - 1; t < i - 1 && run; ++t) run = t >= 1 && out[t] == out[i - 1];
      if (run) {
        out.push_back(out[i - 1]);
        continue;
      }
    }
    Space s = zero;
    for (Element x : n.term(i).elements())
      if (x != kIdentity) s.insert(detail::augmented_row(ops, dim, x));
    // Products of total weight >= i: the first factor has weight k < i and
    // the remaining product lies in Delta_{i-k}; a first factor of weight
    // >= i can be weakened to weight i-1 because Delta_1 absorbs the rest.
    for (std::size_t k = 1; k < i; ++k) {
      const Subgroup& term = n.term(k);
      if (term.is_trivial()) continue;
      for (Element x : term.elements()) {
        if (x == kIdentity) continue;
        for (const auto& y : out[i - k].rows()) s.insert(detail::left_augmented_product(ops, g, x, y));
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

template <class Space>
Space delta_brute_degree(const NSeries& n, const Space& zero, std::size_t i) {
  const FiniteGroup& g = n.group();
  const auto& ops = zero.ops();
  const std::size_t dim = g.order();
  if (i == 0) return full_space(zero);
  const auto weight = element_weights(n, i);

  // level[s]: span of products of j factors (g_1 - 1)...(g_j - 1) whose
  // capped weights sum to at least s.
  std::vector<Space> level(i + 1, zero);
  for (Element x = 1; x < dim; ++x)
    for (std::size_t s = 0; s <= weight[x]; ++s) level[s].insert(detail::augmented_row(ops, dim, x));
  Space acc = zero;
  insert_all(acc, level[i]);
  for (std::size_t j = 2; j <= i; ++j) {
    std::vector<Space> next(i + 1, zero);
    for (std::size_t s = 0; s <= i; ++s)
      for (Element x = 1; x < dim; ++x) {
        const std::size_t need = s > weight[x] ? s - weight[x] : 0;
        for (const auto& y : level[need].rows()) next[s].insert(detail::right_augmented_product(ops, g, y, x));
      }
    level = std::move(next);
    insert_all(acc, level[i]);
  }
  // Longer products: close under right multiplication by the generators g - 1.
  for (bool grew = true; grew;) {
    grew = false;
    const auto rows = acc.rows();
    for (const auto& y : rows)
      for (Element x = 1; x < dim; ++x) grew = acc.insert(detail::right_augmented_product(ops, g, y, x)) || grew;
  }
  return acc;
}

std::vector<Submodule> wrap(RingSpec ring, auto&& spaces) {
  std::vector<Submodule> out;
  for (auto& s : spaces) {
    Submodule m(ring, s.dim());
    m.storage() = std::move(s);
    out.push_back(std::move(m));
  }
  return out;
}

void require_degree(std::size_t max_degree) {
  if (max_degree < 1) fail(Errc::DegreeOutOfRange, "max_degree must be at least 1");
}

}  // namespace

const Submodule& FiltrationBasis::delta(std::size_t i) const {
  if (i > max_degree)
    fail(Errc::DegreeOutOfRange,
         "degree " + std::to_string(i) + " beyond computed max_degree " + std::to_string(max_degree));
  return degrees[i];
}

std::optional<std::size_t> FiltrationBasis::vanishes_at() const {
  for (std::size_t i = 0; i < degrees.size(); ++i)
    if (degrees[i].rank() == 0) return i;
  return std::nullopt;
}

namespace {

IntVector augmented_int(std::size_t n, Element x) {
  IntVector v(n, 0);
  v[x] += 1;
  v[kIdentity] -= 1;
  return v;
}

}  // namespace

Submodule weight_span(const NSeries& n, RingSpec ring, std::size_t k) {
  if (k < 1) fail(Errc::DegreeOutOfRange, "weight must be at least 1");
  const FiniteGroup& g = n.group();
  Submodule s(ring, g.order());
  for (Element x : n.term(k).elements())
    if (x != kIdentity) s.insert(augmented_int(g.order(), x));
  return s;
}

FiltrationBasis delta_filtration(const NSeries& n, RingSpec ring, std::size_t max_degree) {
  require_degree(max_degree);
  const Submodule zero(ring, n.group().order());
  FiltrationBasis f{n.group(), ring, n, {}, max_degree, std::nullopt};
  std::visit(
      [&](const auto& z) {
        auto deltas = deltas_by_recursion(n, z, max_degree);
        f.stabilized_at = witnessed_stabilization(deltas, n.length());
        f.degrees = wrap(ring, deltas);
      },
      zero.storage());
  return f;
}

FiltrationBasis delta_bruteforce(const NSeries& n, RingSpec ring, std::size_t max_degree, bool allow_expensive) {
  require_degree(max_degree);
  if (n.group().order() > kBruteForceOrderGuard && !allow_expensive)
    fail(Errc::CostGuard, "brute-force filtration limited to order " + std::to_string(kBruteForceOrderGuard) +
                              " (got " + std::to_string(n.group().order()) + ")");
  const Submodule zero(ring, n.group().order());
  FiltrationBasis f{n.group(), ring, n, {}, max_degree, std::nullopt};
  std::visit(
      [&](const auto& z) {
        using Space = std::decay_t<decltype(z)>;
        std::vector<Space> deltas;
        for (std::size_t i = 0; i <= max_degree; ++i) deltas.push_back(delta_brute_degree(n, z, i));
        f.stabilized_at = witnessed_stabilization(deltas, n.length());
        f.degrees = wrap(ring, deltas);
      },
      zero.storage());
  return f;
}

Subgroup dimension_subgroup(const FiltrationBasis& f, std::size_t i) {
  const Submodule& delta = f.delta(i);
  const std::size_t n = f.group.order();
  Subgroup::Bits bits(n);
  bits.set(kIdentity);
  for (Element x = 1; x < n; ++x)
    if (delta.contains(augmented_int(n, x))) bits.set(x);
  try {
    return Subgroup::from_members(f.group, std::move(bits));
  } catch (const Error& e) {
    fail(Errc::Internal, std::string("dimension subgroup is not a subgroup: ") + e.what());
  }
}

std::vector<Subgroup> dimension_subgroups(const FiltrationBasis& f) {
  std::vector<Subgroup> out;
  for (std::size_t i = 1; i <= f.max_degree; ++i) out.push_back(dimension_subgroup(f, i));
  return out;
}

Submodule ideal_power(const FiniteGroup& group, RingSpec ring, std::size_t i) {
  Submodule out(ring, group.order());
  std::visit(
      [&](auto& space) {
        using Space = std::decay_t<decltype(space)>;
        const auto& ops = space.ops();
        Space current = full_space(space);
        for (std::size_t k = 1; k <= i; ++k) {
          Space next = space;
          for (Element x = 1; x < group.order(); ++x)
            for (const auto& y : current.rows()) next.insert(detail::left_augmented_product(ops, group, x, y));
          current = std::move(next);
        }
        space = std::move(current);
      },
      out.storage());
  return out;
}

std::vector<QuotientPiece> graded_quotient_dims(const FiltrationBasis& f) {
  std::vector<QuotientPiece> out;
  for (std::size_t i = 0; i < f.max_degree; ++i) {
    QuotientPiece piece;
    piece.degree = i;
    const Submodule& upper = f.degrees[i];
    const Submodule& lower = f.degrees[i + 1];
    if (f.ring.is_field()) {
      piece.dimension = upper.rank() - lower.rank();
    } else {
      const auto& up = std::get<IntegerLattice>(upper.storage());
      const auto& low = std::get<IntegerLattice>(lower.storage());
      IntMatrix relations;
      for (const auto& row : low.rows()) {
        auto coords = up.coordinates(row);
        if (!coords) fail(Errc::Internal, "filtration is not descending at degree " + std::to_string(i));
        relations.push_back(std::move(*coords));
      }
      piece.invariants = quotient_invariants(relations, up.rank());
      piece.dimension = piece.invariants.size();
    }
    out.push_back(std::move(piece));
  }
  return out;
}

}  // namespace dimlab
