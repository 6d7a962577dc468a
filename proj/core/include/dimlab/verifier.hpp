#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dimlab/filtration.hpp"
#include "dimlab/io.hpp"
#include "dimlab/linalg.hpp"
#include "dimlab/series.hpp"

namespace dimlab {

enum class Check { JL, JH, MJHL, HARTL, ABELIAN, BOUND, FILTRATION_LEMMA, QUILLEN };

std::string_view to_string(Check c);
// Throws InvalidArgument for unknown names.
Check parse_check(std::string_view name);
const std::vector<Check>& all_checks();
bool check_supports(Check c, RingSpec ring);

enum class Status {
  Pass,
  PassDegenerate,  // holds only because both sides are vacuous at finite scale
  Fail,
  Truncated,       // no violation within the computed degrees, but not conclusive
  SkippedPrecondition,
  SkippedCost,
  Error,
};

std::string_view to_string(Status s);

struct Verdict {
  Status status = Status::Pass;
  // Failures: degree and element. Skips and errors: the reason.
  std::string witness;
  // Observations that are not failures, e.g. D_i(N;Z) != N_i beyond degree 3.
  std::vector<std::string> notes;

  bool failed() const noexcept { return status == Status::Fail || status == Status::Error; }
};

inline constexpr std::size_t kBoundDegreeGuard = 16;

struct VerifyOptions {
  bool allow_expensive = false;
  std::size_t bound_guard = kBoundDegreeGuard;
  std::size_t identity_samples = 200;
  std::uint64_t seed = 1;
};

// D_i(N; F_p) = L_i(N; p) for i <= max_degree.
Verdict verify_JL(const FiltrationBasis& fp);
Verdict verify_JL(const NSeries& n, std::uint64_t p, std::size_t max_degree);

// D_i(N; Q) equals the isolator series, and Delta_i(N; Q) = I(Q[G]) for i >= 1.
Verdict verify_JH(const FiltrationBasis& fq);
Verdict verify_JH(const NSeries& n, std::size_t max_degree);

// D_i(N; R) = N_i for p-restricted N over F_p, or 0-restricted N over Q.
Verdict verify_MJHL(const FiltrationBasis& f);
Verdict verify_MJHL(const NSeries& n, RingSpec ring, std::size_t max_degree);

// Over Z: D_i = N_i for i <= 3.
Verdict verify_hartl(const FiltrationBasis& fz);
// Over Z for abelian G: D_i = N_i for every computed i.
Verdict verify_abelian(const FiltrationBasis& fz);
Verdict verify_low_degrees(const NSeries& n, std::size_t max_degree);

// m^d (d + 1) with m = max_p p^e(p) and N_{d+1} = 1; nullopt when the series
// never reaches 1. Throws NotNilpotent.
std::optional<std::size_t> bound_degree(const NSeries& n);
// D_{m^d(d+1)}(N; Z) = 1. Throws NotNilpotent.
Verdict verify_bound(const NSeries& n, const VerifyOptions& options = {});

// The D-sequence is an N-series containing N (p-restricted over F_p), and the
// group ring identities hold on random samples.
Verdict verify_filtration_lemma(const FiltrationBasis& f, const VerifyOptions& options = {});

// Graded structure against the restricted Lie ring: Hilbert series, theta
// injectivity and Lie morphism, xi, primitivity, generation, and bracket
// independence of representatives. Over Q only the degenerate case exists.
Verdict verify_quillen(const NSeries& n, RingSpec field, std::size_t max_degree);

struct VerificationJob {
  std::string group;  // catalog name or group file
  SeriesSpec series;
  RingSpec ring;
  std::size_t max_degree = kDefaultMaxDegree;
  std::vector<Check> checks;

  // Throws InvalidArgument for checks the ring does not support.
  void validate() const;
  std::string describe() const;
};

struct JobResult {
  VerificationJob job;
  std::vector<std::pair<Check, Verdict>> verdicts;  // in job order
  std::string error;                                // job-level failure
  double elapsed_ms = 0;

  bool failed() const;
};

struct SuiteOptions {
  unsigned workers = 1;
  VerifyOptions verify;
};

struct SuiteReport {
  std::vector<JobResult> jobs;

  bool failed() const;
  // Deterministic unless timings are included.
  std::string to_json(bool include_timings = false) const;
};

// Every catalog group under lcs and its Lazard series, over Q, Z and F_p for
// the primes dividing the order.
std::vector<VerificationJob> default_corpus(std::size_t max_degree = kDefaultMaxDegree);

// {"jobs": [{"group", "series", "ring", "max_degree", "checks"}]}; "series"
// defaults to lcs, "max_degree" to 8, "checks" to all the ring supports.
std::vector<VerificationJob> parse_jobs_json(std::string_view text, std::string_view source = "<string>");
std::vector<VerificationJob> load_job_file(const std::filesystem::path& path);

JobResult run_job(const VerificationJob& job, const VerifyOptions& options = {});
SuiteReport run_suite(const std::vector<VerificationJob>& jobs, const SuiteOptions& options = {});

}  // namespace dimlab
