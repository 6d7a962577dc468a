#include "dimlab/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <random>
#include <sstream>

#include "dimlab/error.hpp"
#include "dimlab/linalg.hpp"

namespace dimlab {

struct FiniteGroup::Data {
  std::size_t order = 1;
  std::string name;
  std::vector<Element> table;  // order * order
  std::vector<Element> inverse;
  std::vector<Element> generators;
  std::vector<std::string> labels;
};

std::size_t order_cap_from_env() {
  if (const char* env = std::getenv("DIMLAB_ORDER_CAP")) {
    char* end = nullptr;
    const unsigned long long cap = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0) return static_cast<std::size_t>(cap);
    fail(Errc::InvalidArgument, std::string("DIMLAB_ORDER_CAP='") + env + "' is not a positive integer");
  }
  return kDefaultOrderCap;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

std::string cycle_notation(const Permutation& perm) {
  std::ostringstream os;
  std::vector<bool> seen(perm.size(), false);
  bool any = false;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start] || perm[start] == start) continue;
    any = true;
    os << '(';
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      os << (first ? "" : ",") << x + 1;
      first = false;
      x = perm[x];
    }
    os << ')';
  }
  return any ? os.str() : "()";
}

// Full associativity check up to order 256, a fixed-seed sample above that.
void check_associative(const std::vector<Element>& t, std::size_t n) {
  auto at = [&](Element a, Element b) { return t[a * n + b]; };
  auto check = [&](Element a, Element b, Element c) {
    if (at(at(a, b), c) != at(a, at(b, c)))
      fail(Errc::InvalidTable, "multiplication is not associative at (" + std::to_string(a) + "," +
                                   std::to_string(b) + "," + std::to_string(c) + ")");
  };
  if (n <= 256) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c) check(a, b, c);
    return;
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
  for (int k = 0; k < 200000; ++k) check(pick(rng), pick(rng), pick(rng));
}

}  // namespace

FiniteGroup::FiniteGroup() {
  auto d = std::make_shared<Data>();
  d->order = 1;
  d->name = "trivial";
  d->table = {0};
  d->inverse = {0};
  d->labels = {"()"};
  data_ = std::move(d);
}

FiniteGroup FiniteGroup::from_permutation_generators(std::size_t degree, std::span<const Permutation> gens,
                                                     std::size_t cap, std::string name) {
  if (degree == 0) fail(Errc::InvalidPermutation, "permutation degree must be positive");
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const auto& perm = gens[g];
    if (perm.size() != degree)
      fail(Errc::InvalidPermutation, "generator " + std::to_string(g) + " has " + std::to_string(perm.size()) +
                                         " images, expected " + std::to_string(degree));
    std::vector<bool> hit(degree, false);
    for (std::size_t x = 0; x < degree; ++x) {
      if (perm[x] >= degree || hit[perm[x]])
        fail(Errc::InvalidPermutation,
             "generator " + std::to_string(g) + " is not a bijection (entry " + std::to_string(x) + ")");
      hit[perm[x]] = true;
    }
  }

  auto compose = [&](const Permutation& a, const Permutation& b) {
    Permutation c(degree);
    for (std::size_t x = 0; x < degree; ++x) c[x] = b[a[x]];
    return c;
  };

  Permutation identity(degree);
  for (std::size_t x = 0; x < degree; ++x) identity[x] = static_cast<std::uint32_t>(x);

  std::vector<Permutation> elements{identity};
  std::map<Permutation, Element> index{{identity, 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : gens) {
      Permutation next = compose(elements[head], g);
      if (index.count(next)) continue;
      if (elements.size() >= cap)
        fail(Errc::CapExceeded, "group closure exceeds order cap " + std::to_string(cap));
      index.emplace(next, static_cast<Element>(elements.size()));
      elements.push_back(std::move(next));
    }
  }

  const std::size_t n = elements.size();
  auto d = std::make_shared<Data>();
  d->order = n;
  d->name = std::move(name);
  d->table.resize(n * n);
  d->inverse.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Element c = index.at(compose(elements[a], elements[b]));
      d->table[a * n + b] = c;
      if (c == 0) d->inverse[a] = static_cast<Element>(b);
    }
  for (const auto& g : gens) d->generators.push_back(index.at(g));
  for (const auto& e : elements) d->labels.push_back(cycle_notation(e));
  check_associative(d->table, n);
  return FiniteGroup(std::move(d));
}

FiniteGroup FiniteGroup::from_cayley_table(const std::vector<std::vector<std::uint32_t>>& table, std::string name) {
  const std::size_t n = table.size();
  if (n == 0) fail(Errc::InvalidTable, "empty Cayley table");
  auto d = std::make_shared<Data>();
  d->order = n;
  d->name = std::move(name);
  d->table.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n)
      fail(Errc::InvalidTable, "row " + std::to_string(a) + " has " + std::to_string(table[a].size()) +
                                   " entries, expected " + std::to_string(n));
    std::vector<bool> hit(n, false);
    for (std::size_t b = 0; b < n; ++b) {
      const auto c = table[a][b];
      if (c >= n)
        fail(Errc::InvalidTable, "row " + std::to_string(a) + " entry " + std::to_string(b) + " out of range");
      if (hit[c])
        fail(Errc::InvalidTable, "row " + std::to_string(a) + " repeats element " + std::to_string(c));
      hit[c] = true;
      d->table[a * n + b] = c;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (table[0][a] != a) fail(Errc::InvalidTable, "row 0 is not the identity (entry " + std::to_string(a) + ")");
    if (table[a][0] != a)
      fail(Errc::InvalidTable, "column 0 is not the identity (row " + std::to_string(a) + ")");
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::vector<bool> hit(n, false);
    for (std::size_t a = 0; a < n; ++a) {
      if (hit[table[a][b]])
        fail(Errc::InvalidTable, "column " + std::to_string(b) + " repeats element " + std::to_string(table[a][b]));
      hit[table[a][b]] = true;
    }
  }
  check_associative(d->table, n);
  d->inverse.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (d->table[a * n + b] == 0) d->inverse[a] = static_cast<Element>(b);
  for (std::size_t a = 0; a < n; ++a) d->labels.push_back("e" + std::to_string(a));
  return FiniteGroup(std::move(d));
}

std::size_t FiniteGroup::order() const noexcept { return data_->order; }
const std::string& FiniteGroup::name() const noexcept { return data_->name; }

Element FiniteGroup::mul(Element a, Element b) const noexcept { return data_->table[a * data_->order + b]; }
Element FiniteGroup::inv(Element a) const noexcept { return data_->inverse[a]; }

Element FiniteGroup::pow(Element a, long long n) const noexcept {
  if (n < 0) {
    a = inv(a);
    n = -n;
  }
  Element result = kIdentity;
  Element base = a;
  while (n) {
    if (n & 1) result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result;
}

Element FiniteGroup::commutator(Element a, Element b) const noexcept {
  return mul(mul(inv(a), inv(b)), mul(a, b));
}

Element FiniteGroup::conjugate(Element a, Element g) const noexcept { return mul(mul(inv(g), a), g); }

const std::vector<Element>& FiniteGroup::generators() const noexcept { return data_->generators; }

std::string FiniteGroup::label(Element a) const {
  return a < data_->labels.size() ? data_->labels[a] : std::to_string(a);
}

// --- Subgroup ---------------------------------------------------------------

Subgroup Subgroup::from_members(const FiniteGroup& parent, Bits members) {
  if (members.size() != parent.order())
    fail(Errc::DimensionMismatch, "member bitset does not match parent order");
  if (!members.test(kIdentity)) fail(Errc::InvalidArgument, "subgroup must contain the identity");
  for (auto a = members.find_first(); a != Bits::npos; a = members.find_next(a)) {
    if (!members.test(parent.inv(static_cast<Element>(a))))
      fail(Errc::InvalidArgument, "member set not closed under inverses at " + std::to_string(a));
    for (auto b = members.find_first(); b != Bits::npos; b = members.find_next(b))
      if (!members.test(parent.mul(static_cast<Element>(a), static_cast<Element>(b))))
        fail(Errc::InvalidArgument, "member set not closed under products at (" + std::to_string(a) + "," +
                                        std::to_string(b) + ")");
  }
  return Subgroup(parent, std::move(members));
}

Subgroup Subgroup::whole(const FiniteGroup& parent) {
  Bits bits(parent.order());
  bits.set();
  return from_members(parent, std::move(bits));
}

Subgroup Subgroup::trivial(const FiniteGroup& parent) { return closure(parent, {}); }

std::vector<Element> Subgroup::elements() const {
  std::vector<Element> out;
  out.reserve(order());
  for (auto a = members_.find_first(); a != Bits::npos; a = members_.find_next(a))
    out.push_back(static_cast<Element>(a));
  return out;
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  if (!parent_.same_as(other.parent_)) fail(Errc::ParentMismatch, "subgroups of different groups");
  return members_.is_subset_of(other.members_);
}

Subgroup closure(const FiniteGroup& group, std::span<const Element> seed) {
  Subgroup::Bits bits(group.order());
  std::vector<Element> gens;
  for (Element s : seed) {
    if (s >= group.order()) fail(Errc::InvalidArgument, "element index " + std::to_string(s) + " out of range");
    if (s != kIdentity && std::find(gens.begin(), gens.end(), s) == gens.end()) gens.push_back(s);
  }
  std::vector<Element> members{kIdentity};
  bits.set(kIdentity);
  for (std::size_t head = 0; head < members.size(); ++head)
    for (Element g : gens) {
      const Element next = group.mul(members[head], g);
      if (bits.test(next)) continue;
      bits.set(next);
      members.push_back(next);
    }
  return Subgroup(group, std::move(bits));
}

Subgroup closure(const FiniteGroup& group, std::initializer_list<Element> seed) {
  return closure(group, std::span<const Element>(seed.begin(), seed.size()));
}

namespace {

void require_same_parent(const Subgroup& a, const Subgroup& b) {
  if (!a.parent().same_as(b.parent())) fail(Errc::ParentMismatch, "subgroups belong to different groups");
}

}  // namespace

bool is_normal(const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  const auto members = h.elements();
  for (Element x = 0; x < g.order(); ++x)
    for (Element a : members)
      if (!h.contains(g.conjugate(a, x))) return false;
  return true;
}

bool is_abelian(const FiniteGroup& group) {
  for (Element a = 0; a < group.order(); ++a)
    for (Element b = a + 1; b < group.order(); ++b)
      if (group.mul(a, b) != group.mul(b, a)) return false;
  return true;
}

Subgroup center(const FiniteGroup& group) {
  std::vector<Element> central;
  for (Element a = 0; a < group.order(); ++a) {
    bool ok = true;
    for (Element b = 0; b < group.order() && ok; ++b) ok = group.mul(a, b) == group.mul(b, a);
    if (ok) central.push_back(a);
  }
  return closure(group, central);
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  return Subgroup::from_members(a.parent(), a.bits() & b.bits());
}

Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  const FiniteGroup& g = a.parent();
  Subgroup::Bits seen(g.order());
  std::vector<Element> comms;
  for (Element x : a.elements())
    for (Element y : b.elements()) {
      const Element c = g.commutator(x, y);
      if (!seen.test(c)) {
        seen.set(c);
        comms.push_back(c);
      }
    }
  return closure(g, comms);
}

Subgroup power_subgroup(const Subgroup& h, std::uint64_t n) {
  if (n == 0) fail(Errc::InvalidArgument, "power exponent must be positive");
  const FiniteGroup& g = h.parent();
  std::vector<Element> powers;
  for (Element x : h.elements()) powers.push_back(g.pow(x, static_cast<long long>(n % g.order() + g.order())));
  return closure(g, powers);
}

Subgroup subgroup_product(std::span<const Subgroup> parts) {
  if (parts.empty()) fail(Errc::InvalidArgument, "subgroup_product needs at least one part");
  std::vector<Element> all;
  for (const auto& part : parts) {
    require_same_parent(parts.front(), part);
    if (!is_normal(part)) fail(Errc::NotNormal, "factor of order " + std::to_string(part.order()) + " is not normal");
    const auto els = part.elements();
    all.insert(all.end(), els.begin(), els.end());
  }
  return closure(parts.front().parent(), all);
}

std::vector<Subgroup> lower_central_series(const FiniteGroup& group, std::size_t max_len) {
  std::vector<Subgroup> terms{Subgroup::whole(group)};
  const Subgroup whole = terms.front();
  while (terms.size() < max_len) {
    Subgroup next = commutator_subgroup(terms.back(), whole);
    if (next == terms.back()) break;
    terms.push_back(std::move(next));
  }
  return terms;
}

bool is_nilpotent(const FiniteGroup& group) { return lower_central_series(group).back().is_trivial(); }

std::uint64_t element_order(const FiniteGroup& group, Element a) {
  std::uint64_t m = 1;
  for (Element x = a; x != kIdentity; x = group.mul(x, a)) ++m;
  return m;
}

namespace {

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

void require_nilpotent(const FiniteGroup& group) {
  if (!is_nilpotent(group))
    fail(Errc::NotNilpotent, "group '" + group.name() + "' is not nilpotent (lower central series stalls)");
}

}  // namespace

Subgroup torsion_p_component(const FiniteGroup& group, std::uint64_t p) {
  if (!is_prime(p)) fail(Errc::InvalidArgument, std::to_string(p) + " is not prime");
  require_nilpotent(group);
  Subgroup::Bits bits(group.order());
  for (Element a = 0; a < group.order(); ++a)
    if (is_power_of(element_order(group, a), p)) bits.set(a);
  return Subgroup::from_members(group, std::move(bits));
}

unsigned p_exponent(const FiniteGroup& group, std::uint64_t p) {
  const Subgroup tors = torsion_p_component(group, p);
  unsigned e = 0;
  for (Element a : tors.elements()) {
    std::uint64_t m = element_order(group, a);
    unsigned k = 0;
    while (m > 1) {
      m /= p;
      ++k;
    }
    e = std::max(e, k);
  }
  return e;
}

Subgroup isolator(const Subgroup& h) {
  if (!is_normal(h)) fail(Errc::NotNormal, "isolator requires a normal subgroup");
  const FiniteGroup& g = h.parent();
  Subgroup::Bits bits(g.order());
  for (Element a = 0; a < g.order(); ++a) {
    Element x = a;
    for (std::size_t m = 1; m <= g.order(); ++m, x = g.mul(x, a))
      if (h.contains(x)) {
        bits.set(a);
        break;
      }
  }
  return Subgroup::from_members(g, std::move(bits));
}

std::vector<std::uint64_t> abelian_invariants(const Subgroup& n, const Subgroup& m) {
  require_same_parent(n, m);
  if (!m.is_subset_of(n)) fail(Errc::NotAbelianQuotient, "M is not contained in N");
  const FiniteGroup& g = n.parent();
  const auto n_elems = n.elements();
  for (Element x : n_elems)
    for (Element a : m.elements())
      if (!m.contains(g.conjugate(a, x))) fail(Errc::NotAbelianQuotient, "M is not normal in N");
  if (!commutator_subgroup(n, n).is_subset_of(m)) fail(Errc::NotAbelianQuotient, "N/M is not abelian");

  // Coset of x: least element index of xM.
  const auto m_elems = m.elements();
  std::vector<Element> coset(g.order(), 0);
  for (Element x : n_elems) {
    Element best = x;
    for (Element a : m_elems) best = std::min(best, g.mul(x, a));
    coset[x] = best;
  }

  // Greedy generating set of N modulo M.
  std::vector<Element> gens;
  std::vector<Element> seed = m_elems;
  Subgroup span = m;
  for (Element x : n_elems) {
    if (span.contains(x)) continue;
    gens.push_back(x);
    seed.push_back(x);
    span = closure(g, seed);
  }
  const std::size_t r = gens.size();
  if (r == 0) return {};

  // Spanning tree of the Cayley graph of N/M on the generators; each
  // non-tree edge yields a relation.
  std::map<Element, IntVector> word;
  std::deque<Element> queue{coset[kIdentity]};
  word[coset[kIdentity]] = IntVector(r, 0);
  IntMatrix relations;
  while (!queue.empty()) {
    const Element c = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < r; ++i) {
      const Element next = coset[g.mul(c, gens[i])];
      IntVector w = word.at(c);
      w[i] += 1;
      auto it = word.find(next);
      if (it == word.end()) {
        word.emplace(next, std::move(w));
        queue.push_back(next);
      } else {
        for (std::size_t k = 0; k < r; ++k) w[k] -= it->second[k];
        if (std::any_of(w.begin(), w.end(), [](const Integer& v) { return v != 0; }))
          relations.push_back(std::move(w));
      }
    }
  }
  std::vector<std::uint64_t> out;
  for (const auto& d : quotient_invariants(relations, r)) {
    if (d == 0) fail(Errc::Internal, "infinite invariant for a finite quotient");
    out.push_back(d.get_ui());
  }
  return out;
}

}  // namespace dimlab
