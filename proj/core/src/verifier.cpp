#include "dimlab/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include "dimlab/catalog.hpp"
#include "dimlab/error.hpp"
#include "dimlab/graded.hpp"
#include "dimlab/group_ring.hpp"
#include "json.hpp"

namespace dimlab {
namespace {

using nlohmann::json;

constexpr std::pair<Check, std::string_view> kCheckNames[] = {
    {Check::JL, "JL"},       {Check::JH, "JH"},         {Check::MJHL, "MJHL"},
    {Check::HARTL, "HARTL"}, {Check::ABELIAN, "ABELIAN"}, {Check::BOUND, "BOUND"},
    {Check::FILTRATION_LEMMA, "FILTRATION_LEMMA"},        {Check::QUILLEN, "QUILLEN"},
};

// Degree at which the graded checks are run in the default corpus: every
// catalog p-group has vanished Delta(N; F_p) by then.
constexpr std::size_t kGradedCorpusDegree = 12;

Verdict pass() { return {}; }

Verdict failure(std::string witness) { return {Status::Fail, std::move(witness), {}}; }

Verdict skipped(Status s, std::string reason) { return {s, std::move(reason), {}}; }

std::string element_text(const FiniteGroup& g, Element x) {
  return "element " + std::to_string(x) + " " + g.label(x);
}

// First element on which the two subgroups differ.
std::optional<std::string> difference(const Subgroup& a, std::string_view a_name, const Subgroup& b,
                                      std::string_view b_name) {
  const FiniteGroup& g = a.parent();
  for (Element x = 0; x < g.order(); ++x)
    if (a.contains(x) != b.contains(x))
      return element_text(g, x) + " in " + std::string(a.contains(x) ? a_name : b_name) + " but not " +
             std::string(a.contains(x) ? b_name : a_name);
  return std::nullopt;
}

std::string indexed(std::string_view name, std::size_t i) { return std::string(name) + "_" + std::to_string(i); }

// Compares D_i(f) against expected(i) for i in [1, last].
template <class Expected>
Verdict compare_dimension_subgroups(const FiltrationBasis& f, std::size_t last, std::string_view expected_name,
                                    Expected&& expected) {
  for (std::size_t i = 1; i <= last; ++i) {
    const Subgroup d = dimension_subgroup(f, i);
    if (auto w = difference(d, indexed("D", i), expected(i), indexed(expected_name, i)))
      return failure("degree " + std::to_string(i) + ": " + *w);
  }
  return pass();
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

std::string_view to_string(Check c) {
  for (const auto& [check, name] : kCheckNames)
    if (check == c) return name;
  return "?";
}

Check parse_check(std::string_view name) {
  for (const auto& [check, n] : kCheckNames)
    if (n == name) return check;
  fail(Errc::InvalidArgument, "unknown check '" + std::string(name) + "'");
}

const std::vector<Check>& all_checks() {
  static const std::vector<Check> checks = [] {
    std::vector<Check> out;
    for (const auto& entry : kCheckNames) out.push_back(entry.first);
    return out;
  }();
  return checks;
}

bool check_supports(Check c, RingSpec ring) {
  switch (c) {
    case Check::JL: return ring.kind == RingSpec::Kind::PrimeField;
    case Check::JH: return ring.kind == RingSpec::Kind::Rationals;
    case Check::MJHL:
    case Check::QUILLEN: return ring.is_field();
    case Check::HARTL:
    case Check::ABELIAN:
    case Check::BOUND: return ring.kind == RingSpec::Kind::Integers;
    case Check::FILTRATION_LEMMA: return true;
  }
  return false;
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::PassDegenerate: return "pass(degenerate)";
    case Status::Fail: return "fail";
    case Status::Truncated: return "truncated";
    case Status::SkippedPrecondition: return "skipped(precondition)";
    case Status::SkippedCost: return "skipped(cost)";
    case Status::Error: return "error";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Individual checks

Verdict verify_JL(const FiltrationBasis& fp) {
  if (fp.ring.kind != RingSpec::Kind::PrimeField) fail(Errc::RingMismatch, "JL needs F_p coefficients");
  const NSeries l = lazard_series(fp.series, fp.ring.p);
  return compare_dimension_subgroups(fp, fp.max_degree, "L", [&](std::size_t i) { return l.term(i); });
}

Verdict verify_JL(const NSeries& n, std::uint64_t p, std::size_t max_degree) {
  return verify_JL(delta_filtration(n, RingSpec::prime_field(p), max_degree));
}

Verdict verify_JH(const FiltrationBasis& fq) {
  if (fq.ring.kind != RingSpec::Kind::Rationals) fail(Errc::RingMismatch, "JH needs Q coefficients");
  const NSeries iso = isolator_series(fq.series);
  Verdict v = compare_dimension_subgroups(fq, fq.max_degree, "isolator", [&](std::size_t i) { return iso.term(i); });
  if (v.failed()) return v;
  const Submodule augmentation = ideal_power(fq.group, fq.ring, 1);
  for (std::size_t i = 1; i <= fq.max_degree; ++i)
    if (!(fq.delta(i) == augmentation))
      return failure("degree " + std::to_string(i) + ": Delta_" + std::to_string(i) + " differs from I(Q[G])");
  if (fq.group.order() > 1) v.status = Status::PassDegenerate;
  return v;
}

Verdict verify_JH(const NSeries& n, std::size_t max_degree) {
  return verify_JH(delta_filtration(n, RingSpec::rationals(), max_degree));
}

Verdict verify_MJHL(const FiltrationBasis& f) {
  switch (f.ring.kind) {
    case RingSpec::Kind::PrimeField:
      if (!is_p_restricted(f.series, f.ring.p))
        return skipped(Status::SkippedPrecondition, "series is not " + std::to_string(f.ring.p) + "-restricted");
      break;
    case RingSpec::Kind::Rationals:
      if (!is_zero_restricted(f.series)) return skipped(Status::SkippedPrecondition, "series is not 0-restricted");
      break;
    case RingSpec::Kind::Integers: fail(Errc::RingMismatch, "MJHL needs field coefficients");
  }
  return compare_dimension_subgroups(f, f.max_degree, "N", [&](std::size_t i) { return f.series.term(i); });
}

Verdict verify_MJHL(const NSeries& n, RingSpec ring, std::size_t max_degree) {
  return verify_MJHL(delta_filtration(n, ring, max_degree));
}

Verdict verify_hartl(const FiltrationBasis& fz) {
  if (fz.ring.kind != RingSpec::Kind::Integers) fail(Errc::RingMismatch, "HARTL needs Z coefficients");
  Verdict v = compare_dimension_subgroups(fz, std::min<std::size_t>(3, fz.max_degree), "N",
                                          [&](std::size_t i) { return fz.series.term(i); });
  if (v.failed()) return v;
  for (std::size_t i = 4; i <= fz.max_degree; ++i)
    if (!(dimension_subgroup(fz, i) == fz.series.term(i)))
      v.notes.push_back("interesting: D_" + std::to_string(i) + "(N;Z) != N_" + std::to_string(i));
  return v;
}

Verdict verify_abelian(const FiltrationBasis& fz) {
  if (fz.ring.kind != RingSpec::Kind::Integers) fail(Errc::RingMismatch, "ABELIAN needs Z coefficients");
  if (!is_abelian(fz.group)) return skipped(Status::SkippedPrecondition, "group is not abelian");
  return compare_dimension_subgroups(fz, fz.max_degree, "N", [&](std::size_t i) { return fz.series.term(i); });
}

Verdict verify_low_degrees(const NSeries& n, std::size_t max_degree) {
  const FiltrationBasis fz = delta_filtration(n, RingSpec::integers(), max_degree);
  Verdict v = verify_hartl(fz);
  if (v.failed()) return v;
  Verdict a = verify_abelian(fz);
  if (a.failed()) return a;
  return v;
}

std::optional<std::size_t> bound_degree(const NSeries& n) {
  const FiniteGroup& g = n.group();
  if (!is_nilpotent(g)) fail(Errc::NotNilpotent, (g.name().empty() ? "group" : g.name()) + " is not nilpotent");
  if (n.stabilized()) return std::nullopt;
  const std::size_t d = n.length() - 1;  // N_{d+1} is the trailing trivial term
  std::size_t m = 1;
  for (std::uint64_t p : prime_divisors(g.order())) {
    std::size_t q = 1;
    for (unsigned e = p_exponent(g, p); e > 0; --e) q *= p;
    m = std::max(m, q);
  }
  constexpr std::size_t kSaturated = std::size_t{1} << 40;
  std::size_t degree = d + 1;
  for (std::size_t k = 0; k < d && degree < kSaturated; ++k) degree *= m;
  return std::min(degree, kSaturated);
}

Verdict verify_bound(const NSeries& n, const VerifyOptions& options) {
  const auto degree = bound_degree(n);
  if (!degree) return skipped(Status::SkippedPrecondition, "series does not reach the trivial group");
  if (*degree > options.bound_guard && !options.allow_expensive)
    return skipped(Status::SkippedCost, "degree " + std::to_string(*degree) + " exceeds the guard of " +
                                            std::to_string(options.bound_guard) + " (override: allow expensive)");
  const FiltrationBasis fz = delta_filtration(n, RingSpec::integers(), *degree);
  const Subgroup d = dimension_subgroup(fz, *degree);
  if (!d.is_trivial()) {
    const auto elems = d.elements();
    return failure("degree " + std::to_string(*degree) + ": " + element_text(n.group(), elems[1]) + " in D_" +
                   std::to_string(*degree));
  }
  return pass();
}

Verdict verify_filtration_lemma(const FiltrationBasis& f, const VerifyOptions& options) {
  const FiniteGroup& g = f.group;
  const std::vector<Subgroup> d = dimension_subgroups(f);
  if (auto v = check_series_prefix(g, d)) {
    switch (v->kind) {
      case PrefixViolation::Kind::NotDescending:
        return failure("D_" + std::to_string(v->i) + " is not contained in the previous term");
      case PrefixViolation::Kind::NotNormal:
        return failure("D_" + std::to_string(v->i) + " is not normal");
      case PrefixViolation::Kind::Axiom:
        return failure("[D_" + std::to_string(v->i) + ", D_" + std::to_string(v->j) + "] not in D_" +
                       std::to_string(v->i + v->j));
    }
  }
  for (std::size_t i = 1; i <= f.max_degree; ++i)
    if (!f.series.term(i).is_subset_of(d[i - 1]))
      return failure("degree " + std::to_string(i) + ": N_" + std::to_string(i) + " not in D_" + std::to_string(i));

  const std::uint32_t p = f.ring.characteristic();
  if (p != 0)
    for (std::size_t i = 1; i * p <= f.max_degree; ++i)
      for (Element x : d[i - 1].elements())
        if (!d[i * p - 1].contains(g.pow(x, p)))
          return failure("degree " + std::to_string(i) + ": " + element_text(g, x) + " in D_" + std::to_string(i) +
                         " but its p-th power is not in D_" + std::to_string(i * p));

  std::vector<std::uint64_t> primes = prime_divisors(g.order());
  if (p != 0) primes = {p};
  if (primes.empty()) primes = {2};
  std::mt19937_64 rng(options.seed ^ fnv1a(g.name()) ^ fnv1a(f.ring.to_string()));
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(g.order() - 1));
  std::uniform_int_distribution<unsigned> power(1, 12);
  for (std::size_t s = 0; s < options.identity_samples; ++s) {
    const Element x = pick(rng), y = pick(rng);
    const unsigned m = power(rng);
    const std::uint64_t q = primes[s % primes.size()];
    if (!commutator_identity_holds(g, f.ring, x, y))
      return failure("commutator identity fails at (" + g.label(x) + ", " + g.label(y) + ")");
    if (!frobenius_identity_holds(g, static_cast<std::uint32_t>(q), x))
      return failure("p-th power identity fails at " + g.label(x) + " for p = " + std::to_string(q));
    if (!binomial_identity_holds(g, x, m))
      return failure("binomial identity fails at " + g.label(x) + " for m = " + std::to_string(m));
  }
  return pass();
}

Verdict verify_quillen(const NSeries& n, RingSpec field, std::size_t max_degree) {
  if (!field.is_field()) fail(Errc::RingMismatch, "QUILLEN needs field coefficients");
  const FiniteGroup& g = n.group();
  const FiltrationBasis f = delta_filtration(n, field, max_degree);
  const GradedAlgebra a = graded_algebra(f);

  if (field.kind == RingSpec::Kind::Rationals) {
    // Finite groups: A(N; Q) is Q in degree 0 and L(isolator) (x) Q = 0.
    const GradedLieRing lie = graded_lie(isolator_series(n));
    for (std::size_t i = 1; i <= lie.num_degrees(); ++i)
      if (!lie.tensor_basis(i, field).empty()) return failure("Lie degree " + std::to_string(i) + " is nonzero");
    if (!a.complete() || a.dimensions() != std::vector<std::size_t>{1})
      return failure("graded algebra is not concentrated in degree 0");
    return g.order() > 1 ? skipped(Status::PassDegenerate, "") : pass();
  }

  const NSeries lz = lazard_series(n, field.p);
  const GradedLieRing lie = graded_lie(lz);
  for (std::uint64_t seed : {1, 2, 3})
    if (graded_lie(lz, seed).structure_constants() != lie.structure_constants())
      return failure("bracket depends on coset representatives (seed " + std::to_string(seed) + ")");
  if (const auto c = check_antisymmetry(lie); !c.ok) return failure("antisymmetry fails at " + c.witness);
  if (const auto c = check_jacobi(lie); !c.ok) return failure("Jacobi identity fails at " + c.witness);
  if (const auto c = check_associativity(a); !c.ok) return failure("associativity fails at " + c.witness);

  const ThetaMap t = theta(lie, a);
  if (!t.lie_morphism.ok) return failure("theta is not a Lie morphism at " + t.lie_morphism.witness);
  for (const auto& d : t.degrees)
    if (!d.injective())
      return failure("degree " + std::to_string(d.degree) + ": theta has rank " + std::to_string(d.rank) + " on " +
                     std::to_string(d.domain.size()) + " generators");
  const XiReport xi = xi_check(lie, a);
  for (const auto& e : xi.entries)
    if (!e.lands_in_series || !e.matches)
      return failure("degree " + std::to_string(e.degree) + ": p-th power of " + element_text(g, e.element) +
                     (e.lands_in_series ? " does not match theta(n)^p" : " leaves the series"));
  if (const auto pr = primitivity_check(a, t); !pr.ok()) return failure(pr.witness + " is not primitive");
  const GenerationReport gen = generation_check(a, t);
  for (std::size_t m = 0; m < gen.expected.size(); ++m)
    if (gen.generated[m] != gen.expected[m])
      return failure("degree " + std::to_string(m) + ": theta images generate dimension " +
                     std::to_string(gen.generated[m]) + " of " + std::to_string(gen.expected[m]));
  const HilbertReport h = hilbert_check(lie, a);
  if (!h.ok()) {
    for (std::size_t k = 0; k < std::max(h.lhs.size(), h.rhs.size()); ++k) {
      const Integer l = k < h.lhs.size() ? h.lhs[k] : Integer(0);
      const Integer r = k < h.rhs.size() ? h.rhs[k] : Integer(0);
      if (k >= h.rhs.size() && h.truncated) break;
      if (l != r)
        return failure("degree " + std::to_string(k) + ": Hilbert product gives " + l.get_str() +
                       ", graded algebra has " + r.get_str());
    }
    return failure("graded dimensions do not sum to the group order");
  }
  if (!a.complete())
    return skipped(Status::Truncated,
                   "Delta did not vanish or stabilize by degree " + std::to_string(max_degree));
  return pass();
}

// ---------------------------------------------------------------------------
// Jobs and suites

void VerificationJob::validate() const {
  if (checks.empty()) fail(Errc::InvalidArgument, "job has no checks");
  for (Check c : checks)
    if (!check_supports(c, ring))
      fail(Errc::InvalidArgument,
           "check " + std::string(to_string(c)) + " does not apply over " + ring.to_string());
  if (max_degree == 0) fail(Errc::InvalidArgument, "max_degree must be positive");
}

std::string VerificationJob::describe() const {
  std::string out = group + " " + series.to_string() + " " + ring.to_string() + " deg<=" + std::to_string(max_degree);
  for (std::size_t k = 0; k < checks.size(); ++k) out += (k ? "," : " ") + std::string(to_string(checks[k]));
  return out;
}

bool JobResult::failed() const {
  return !error.empty() ||
         std::any_of(verdicts.begin(), verdicts.end(), [](const auto& cv) { return cv.second.failed(); });
}

bool SuiteReport::failed() const {
  return std::any_of(jobs.begin(), jobs.end(), [](const JobResult& j) { return j.failed(); });
}

std::string SuiteReport::to_json(bool include_timings) const {
  json out_jobs = json::array();
  for (const auto& r : jobs) {
    json checks = json::array();
    for (Check c : r.job.checks) checks.push_back(std::string(to_string(c)));
    json spec{{"group", r.job.group},
              {"series", r.job.series.to_string()},
              {"ring", r.job.ring.to_string()},
              {"max_degree", r.job.max_degree},
              {"checks", checks}};
    json verdicts = json::object();
    for (const auto& [c, v] : r.verdicts) {
      json o{{"status", std::string(to_string(v.status))}};
      if (!v.witness.empty()) o["witness"] = v.witness;
      if (!v.notes.empty()) o["notes"] = v.notes;
      verdicts[std::string(to_string(c))] = std::move(o);
    }
    json job{{"spec", spec}, {"verdicts", verdicts}};
    if (!r.error.empty()) job["error"] = r.error;
    if (include_timings) job["timings_ms"] = r.elapsed_ms;
    out_jobs.push_back(std::move(job));
  }
  json report{{"version", 1}, {"jobs", out_jobs}, {"failed", failed()}};
  return report.dump(2) + "\n";
}

std::vector<VerificationJob> default_corpus(std::size_t max_degree) {
  using C = Check;
  std::vector<VerificationJob> jobs;
  const SeriesSpec lcs{};
  for (const auto& e : catalog_entries()) {
    std::vector<std::uint64_t> primes = prime_divisors(e.expected_order);
    if (primes.empty()) primes = {2};
    const std::size_t graded_degree = std::max(max_degree, kGradedCorpusDegree);
    jobs.push_back({e.name, lcs, RingSpec::rationals(), max_degree, {C::JH, C::MJHL, C::FILTRATION_LEMMA}});
    jobs.push_back({e.name, lcs, RingSpec::rationals(), graded_degree, {C::QUILLEN}});
    jobs.push_back({e.name, lcs, RingSpec::integers(), max_degree,
                    {C::HARTL, C::ABELIAN, C::BOUND, C::FILTRATION_LEMMA}});
    for (std::uint64_t p : primes) {
      const RingSpec fp = RingSpec::prime_field(p);
      const SeriesSpec lazard{SeriesSpec::Kind::Lazard, p, {}};
      jobs.push_back({e.name, lcs, fp, max_degree, {C::JL, C::MJHL, C::FILTRATION_LEMMA}});
      jobs.push_back({e.name, lcs, fp, graded_degree, {C::QUILLEN}});
      jobs.push_back({e.name, lazard, fp, max_degree, {C::JL, C::MJHL, C::FILTRATION_LEMMA}});
      jobs.push_back({e.name, lazard, RingSpec::integers(), max_degree, {C::HARTL, C::ABELIAN}});
    }
  }
  return jobs;
}

std::vector<VerificationJob> parse_jobs_json(std::string_view text, std::string_view source) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(Errc::ParseError, std::string(source) + ": " + e.what());
  }
  auto bad = [&](const std::string& what) { fail(Errc::ParseError, std::string(source) + ": " + what); };
  const json* list = &j;
  if (j.is_object()) {
    if (!j.contains("jobs")) bad("missing \"jobs\"");
    list = &j["jobs"];
  }
  if (!list->is_array()) bad("\"jobs\" is not an array");
  std::vector<VerificationJob> jobs;
  for (std::size_t k = 0; k < list->size(); ++k) {
    const json& o = (*list)[k];
    const std::string where = "job " + std::to_string(k);
    if (!o.is_object()) bad(where + " is not an object");
    auto str = [&](const char* key, const std::string& fallback) {
      if (!o.contains(key)) {
        if (fallback.empty()) bad(where + " is missing \"" + key + "\"");
        return fallback;
      }
      if (!o[key].is_string()) bad(where + " \"" + key + "\" is not a string");
      return o[key].get<std::string>();
    };
    VerificationJob job;
    job.group = str("group", "");
    try {
      job.series = SeriesSpec::parse(str("series", "lcs"));
      job.ring = RingSpec::parse(str("ring", ""));
      if (o.contains("max_degree")) {
        if (!o["max_degree"].is_number_unsigned()) bad(where + " \"max_degree\" is not a positive integer");
        job.max_degree = o["max_degree"].get<std::size_t>();
      }
      if (o.contains("checks")) {
        if (!o["checks"].is_array()) bad(where + " \"checks\" is not an array");
        for (const auto& c : o["checks"]) {
          if (!c.is_string()) bad(where + " has a non-string check");
          job.checks.push_back(parse_check(c.get<std::string>()));
        }
      } else {
        for (Check c : all_checks())
          if (check_supports(c, job.ring)) job.checks.push_back(c);
      }
    } catch (const Error& e) {
      if (e.code() == Errc::ParseError) throw;
      bad(where + ": " + e.what());
    }
    jobs.push_back(std::move(job));
  }
  return jobs;
}

std::vector<VerificationJob> load_job_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::ParseError, path.string() + ": cannot open file");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_jobs_json(text.str(), path.string());
}

JobResult run_job(const VerificationJob& job, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  JobResult r{job, {}, {}, 0};
  try {
    job.validate();
    const FiniteGroup g = resolve_group(job.group);
    const NSeries n = build_series(g, job.series);
    std::optional<FiltrationBasis> f;
    auto filtration = [&]() -> const FiltrationBasis& {
      if (!f) f.emplace(delta_filtration(n, job.ring, job.max_degree));
      return *f;
    };
    for (Check c : job.checks) {
      Verdict v;
      try {
        switch (c) {
          case Check::JL: v = verify_JL(filtration()); break;
          case Check::JH: v = verify_JH(filtration()); break;
          case Check::MJHL: v = verify_MJHL(filtration()); break;
          case Check::HARTL: v = verify_hartl(filtration()); break;
          case Check::ABELIAN: v = verify_abelian(filtration()); break;
          case Check::BOUND: v = verify_bound(n, options); break;
          case Check::FILTRATION_LEMMA: v = verify_filtration_lemma(filtration(), options); break;
          case Check::QUILLEN: v = verify_quillen(n, job.ring, job.max_degree); break;
        }
      } catch (const Error& e) {
        if (c == Check::BOUND && e.code() == Errc::NotNilpotent)
          v = skipped(Status::SkippedPrecondition, "group is not nilpotent");
        else
          v = skipped(Status::Error, e.what());
      } catch (const std::exception& e) {
        v = skipped(Status::Error, e.what());
      }
      r.verdicts.emplace_back(c, std::move(v));
    }
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

SuiteReport run_suite(const std::vector<VerificationJob>& jobs, const SuiteOptions& options) {
  SuiteReport report;
  report.jobs.resize(jobs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) report.jobs[k] = run_job(jobs[k], options.verify);
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return report;
}

}  // namespace dimlab
