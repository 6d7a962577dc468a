// dimlab command-line interface.
//
// Exit status: 0 on success, 1 when a verification fails, 2 on usage, input
// or computation errors.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "dimlab/catalog.hpp"
#include "dimlab/error.hpp"
#include "dimlab/filtration.hpp"
#include "dimlab/io.hpp"
#include "dimlab/verifier.hpp"

namespace {

using namespace dimlab;

struct Config {
  std::string group;
  std::string ring;
  std::string series;
  std::size_t max_degree = kDefaultMaxDegree;
  std::string format = "text";
  std::string output;
  bool allow_expensive = false;
  unsigned workers = 1;
  bool timings = false;
  bool all = false;
  std::string job_file;
};

std::string elements_text(const Subgroup& s) {
  if (s.is_trivial()) return "1";
  if (s.is_whole()) return "G";
  std::string out = "{";
  bool first = true;
  for (Element x : s.elements()) {
    out += (first ? "" : ", ") + std::to_string(x);
    first = false;
  }
  return out + "}";
}

std::string invariants_text(const std::vector<Integer>& inv) {
  if (inv.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < inv.size(); ++k) {
    out += k ? " + " : "";
    out += inv[k] == 0 ? "Z" : "Z/" + inv[k].get_str();
  }
  return out;
}

template <class T>
std::string list_text(const std::vector<T>& xs) {
  std::ostringstream out;
  out << "(";
  for (std::size_t k = 0; k < xs.size(); ++k) out << (k ? "," : "") << xs[k];
  out << ")";
  return out.str();
}

RingSpec default_field(const FiniteGroup& g) {
  const auto primes = prime_divisors(g.order());
  return primes.empty() ? RingSpec::rationals() : RingSpec::prime_field(primes.front());
}

std::string header(const FiniteGroup& g, const std::string& ring, const std::string& series) {
  return "group " + g.name() + " (order " + std::to_string(g.order()) + ")" + (ring.empty() ? "" : "  ring " + ring) +
         "  series " + series + "\n";
}

int cmd_list_groups(const Config& cfg, std::ostream& out) {
  if (cfg.format == "json") {
    out << "[";
    bool first = true;
    for (const auto& e : catalog_entries()) {
      out << (first ? "" : ",") << "\n  {\"name\": \"" << e.name << "\", \"order\": " << e.expected_order
          << ", \"tags\": \"" << e.tags() << "\"}";
      first = false;
    }
    out << "\n]\n";
    return 0;
  }
  for (const auto& e : catalog_entries())
    out << std::left << std::setw(10) << e.name << std::right << std::setw(4) << e.expected_order << "  " << e.tags()
        << "\n";
  return 0;
}

int cmd_series(const Config& cfg, std::ostream& out) {
  const FiniteGroup g = resolve_group(cfg.group);
  std::vector<SeriesSpec> specs;
  if (!cfg.series.empty()) {
    specs.push_back(SeriesSpec::parse(cfg.series));
  } else {
    specs.push_back(SeriesSpec{});
    for (std::uint64_t p : prime_divisors(g.order())) specs.push_back({SeriesSpec::Kind::Lazard, p, {}});
    specs.push_back({SeriesSpec::Kind::Isolator, 0, {}});
  }
  if (cfg.format == "json") {
    out << "[";
    for (std::size_t k = 0; k < specs.size(); ++k)
      out << (k ? ",\n " : "") << series_json(build_series(g, specs[k]), specs[k]);
    out << "]\n";
    return 0;
  }
  for (const auto& spec : specs) {
    const NSeries n = build_series(g, spec);
    out << header(g, "", spec.to_string());
    for (std::size_t i = 1; i <= n.length(); ++i)
      out << "  N_" << i << "  order " << std::setw(3) << n.term(i).order() << "  " << elements_text(n.term(i)) << "\n";
    out << (n.stabilized() ? "  (last term repeats)\n" : "  (trivial from here on)\n");
  }
  return 0;
}

int cmd_filtration(const Config& cfg, std::ostream& out) {
  const FiniteGroup g = resolve_group(cfg.group);
  const SeriesSpec spec = SeriesSpec::parse(cfg.series.empty() ? "lcs" : cfg.series);
  const RingSpec ring = RingSpec::parse(cfg.ring.empty() ? "z" : cfg.ring);
  const FiltrationBasis f = delta_filtration(build_series(g, spec), ring, cfg.max_degree);
  if (cfg.format == "json") {
    out << filtration_json(f, spec) << "\n";
    return 0;
  }
  out << header(g, ring.to_string(), spec.to_string());
  const auto pieces = graded_quotient_dims(f);
  out << "   i  rank Delta_i  Delta_i/Delta_(i+1)\n";
  for (std::size_t i = 0; i <= f.max_degree; ++i) {
    out << std::setw(4) << i << std::setw(14) << f.delta(i).rank() << "  ";
    if (i < pieces.size())
      out << (ring.is_field() ? std::to_string(pieces[i].dimension) : invariants_text(pieces[i].invariants));
    else
      out << "not computed";
    out << "\n";
  }
  if (f.stabilized_at)
    out << "constant from degree " << *f.stabilized_at << (f.vanishes_at() ? " (zero)" : "") << "\n";
  else
    out << "not computed beyond degree " << f.max_degree << "\n";
  return 0;
}

int cmd_dimsub(const Config& cfg, std::ostream& out) {
  const FiniteGroup g = resolve_group(cfg.group);
  const SeriesSpec spec = SeriesSpec::parse(cfg.series.empty() ? "lcs" : cfg.series);
  const RingSpec ring = RingSpec::parse(cfg.ring.empty() ? "z" : cfg.ring);
  const NSeries n = build_series(g, spec);
  const FiltrationBasis f = delta_filtration(n, ring, cfg.max_degree);
  if (cfg.format == "json") {
    out << filtration_json(f, spec) << "\n";
    return 0;
  }
  out << header(g, ring.to_string(), spec.to_string());
  out << "   i  |D_i|  D_i = N_i  D_i\n";
  const auto d = dimension_subgroups(f);
  for (std::size_t i = 1; i <= d.size(); ++i) {
    out << std::setw(4) << i << std::setw(7) << d[i - 1].order() << std::setw(11)
        << (d[i - 1] == n.term(i) ? "yes" : "no") << "  " << elements_text(d[i - 1]) << "\n";
    if (d[i - 1].is_trivial()) {
      if (i < d.size()) out << "D_i = 1 for " << i << " <= i <= " << d.size() << "\n";
      break;
    }
  }
  return 0;
}

int cmd_graded(const Config& cfg, std::ostream& out) {
  const FiniteGroup g = resolve_group(cfg.group);
  const SeriesSpec spec = SeriesSpec::parse(cfg.series.empty() ? "lcs" : cfg.series);
  const RingSpec field = cfg.ring.empty() ? default_field(g) : RingSpec::parse(cfg.ring);
  if (!field.is_field()) fail(Errc::InvalidArgument, "--ring: graded needs q or fp:<prime>");
  const GradedSummary s = summarize_graded(build_series(g, spec), field, cfg.max_degree);
  if (cfg.format == "json") {
    out << graded_json(g, field, spec, s) << "\n";
    return 0;
  }
  auto verdict = [](bool ok) { return ok ? "pass" : "fail"; };
  out << header(g, field.to_string(), spec.to_string());
  out << "algebra dims   " << list_text(s.algebra_dims) << (s.complete ? "" : " (truncated)") << "\n";
  out << "lie ranks      " << list_text(s.lie_ranks) << "\n";
  std::vector<std::string> lhs, rhs;
  for (const auto& x : s.hilbert.lhs) lhs.push_back(x.get_str());
  for (const auto& x : s.hilbert.rhs) rhs.push_back(x.get_str());
  out << "hilbert lhs    " << list_text(lhs) << "\n";
  out << "hilbert rhs    " << list_text(rhs) << "\n";
  out << "hilbert        " << (s.hilbert.ok() ? (s.hilbert.truncated ? "truncated" : "pass") : "fail") << "\n";
  out << "theta ranks    " << list_text(s.theta.ranks()) << (s.theta.injective() ? " injective" : " not injective")
      << "\n";
  out << "lie morphism   " << verdict(s.theta.lie_morphism.ok) << "\n";
  out << "xi             " << verdict(s.xi.ok()) << "\n";
  out << "primitivity    " << verdict(s.primitivity.ok()) << "\n";
  out << "generation     " << verdict(s.generation.ok()) << "\n";
  return 0;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  if (cfg.all == !cfg.job_file.empty()) fail(Errc::InvalidArgument, "verify: give exactly one of --all or a job file");
  const auto jobs = cfg.all ? default_corpus(cfg.max_degree) : load_job_file(cfg.job_file);
  SuiteOptions options;
  options.workers = cfg.workers;
  options.verify.allow_expensive = cfg.allow_expensive;
  const SuiteReport report = run_suite(jobs, options);
  if (cfg.format == "json") {
    out << report.to_json(cfg.timings);
  } else {
    for (const auto& r : report.jobs) {
      out << r.job.describe();
      if (cfg.timings) out << "  [" << std::fixed << std::setprecision(1) << r.elapsed_ms << " ms]";
      out << "\n";
      if (!r.error.empty()) out << "  error: " << r.error << "\n";
      for (const auto& [c, v] : r.verdicts) {
        out << "  " << std::left << std::setw(18) << to_string(c) << std::right << to_string(v.status);
        if (!v.witness.empty()) out << "  " << v.witness;
        out << "\n";
        for (const auto& note : v.notes) out << "    " << note << "\n";
      }
    }
    out << (report.failed() ? "FAILED\n" : "all checks passed\n");
  }
  return report.failed() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dimension subgroups, group ring filtrations and their graded structures"};
  app.require_subcommand(1);
  Config cfg;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--output,-o", cfg.output, "Write output to this file");
  };
  auto add_group = [&](CLI::App* sub) {
    sub->add_option("group", cfg.group, "Catalog name or group file (JSON)")->required();
  };
  auto add_ring = [&](CLI::App* sub) {
    sub->add_option("--ring", cfg.ring, "Coefficients: q, z or fp:<prime>")->check([](const std::string& s) {
      try {
        RingSpec::parse(s);
        return std::string();
      } catch (const Error& e) {
        return std::string(e.what());
      }
    });
  };
  auto add_series = [&](CLI::App* sub) {
    sub->add_option("--series", cfg.series, "lcs, lazard:<prime>, isolator or file:<path>")
        ->check([](const std::string& s) {
          try {
            SeriesSpec::parse(s);
            return std::string();
          } catch (const Error& e) {
            return std::string(e.what());
          }
        });
  };
  auto add_degree = [&](CLI::App* sub) {
    sub->add_option("--max-degree", cfg.max_degree, "Highest filtration degree")->check(CLI::Range(1, 4096));
  };

  auto* list = app.add_subcommand("list-groups", "List the built-in groups");
  add_format(list);

  auto* series = app.add_subcommand("series", "Print the lower central, Lazard and isolator series");
  add_group(series);
  add_series(series);
  add_format(series);

  auto* filtration = app.add_subcommand("filtration", "Ranks of the filtration Delta_i(N; R)");
  add_group(filtration);
  add_ring(filtration);
  add_series(filtration);
  add_degree(filtration);
  add_format(filtration);

  auto* dimsub = app.add_subcommand("dimsub", "Dimension subgroups D_i(N; R)");
  add_group(dimsub);
  add_ring(dimsub);
  add_series(dimsub);
  add_degree(dimsub);
  add_format(dimsub);

  auto* graded = app.add_subcommand("graded", "Graded algebra dimensions, theta ranks and the Hilbert check");
  add_group(graded);
  add_ring(graded);
  add_series(graded);
  add_degree(graded);
  add_format(graded);

  auto* verify = app.add_subcommand("verify", "Run the theorem checks");
  verify->add_flag("--all", cfg.all, "Run the default corpus");
  verify->add_option("jobs", cfg.job_file, "Job file (JSON)");
  verify->add_flag("--allow-expensive", cfg.allow_expensive, "Lift the cost guard of the bound check");
  verify->add_option("--workers", cfg.workers, "Concurrent jobs")->check(CLI::Range(1u, 256u));
  verify->add_flag("--timings", cfg.timings, "Include per-job timings (breaks byte-identical output)");
  add_degree(verify);
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::ostringstream buffer;
  int status = 0;
  try {
    if (*list) status = cmd_list_groups(cfg, buffer);
    else if (*series) status = cmd_series(cfg, buffer);
    else if (*filtration) status = cmd_filtration(cfg, buffer);
    else if (*dimsub) status = cmd_dimsub(cfg, buffer);
    else if (*graded) status = cmd_graded(cfg, buffer);
    else if (*verify) status = cmd_verify(cfg, buffer);
  } catch (const std::exception& e) {
    std::cerr << "dimlab: " << e.what() << "\n";
    return 2;
  }

  if (cfg.output.empty()) {
    std::cout << buffer.str();
  } else {
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) {
      std::cerr << "dimlab: cannot write " << cfg.output << "\n";
      return 2;
    }
    file << buffer.str();
  }
  return status;
}
