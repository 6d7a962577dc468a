#include "dimlab/io.hpp"

#include <fstream>
#include <sstream>

#include "dimlab/catalog.hpp"
#include "dimlab/error.hpp"
#include "json.hpp"

namespace dimlab {
namespace {

using nlohmann::json;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::ParseError, path.string() + ": cannot open file");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

json parse_json(std::string_view text, std::string_view source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(Errc::ParseError, std::string(source) + ": " + e.what());
  }
}

[[noreturn]] void bad_entry(std::string_view source, const std::string& what) {
  fail(Errc::ParseError, std::string(source) + ": " + what);
}

std::vector<std::uint32_t> index_row(const json& row, std::string_view source, const std::string& where) {
  if (!row.is_array()) bad_entry(source, where + " is not an array");
  std::vector<std::uint32_t> out;
  for (std::size_t k = 0; k < row.size(); ++k) {
    const json& v = row[k];
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
      bad_entry(source, where + " entry " + std::to_string(k) + " is not a non-negative integer");
    const auto x = v.get<unsigned long long>();
    if (x > 0xffffffffULL) bad_entry(source, where + " entry " + std::to_string(k) + " is out of range");
    out.push_back(static_cast<std::uint32_t>(x));
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> index_rows(const json& j, const char* key, std::string_view source) {
  if (!j.contains(key)) bad_entry(source, std::string("missing \"") + key + "\"");
  const json& rows = j.at(key);
  if (!rows.is_array()) bad_entry(source, std::string("\"") + key + "\" is not an array");
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t r = 0; r < rows.size(); ++r)
    out.push_back(index_row(rows[r], source, std::string(key) + " row " + std::to_string(r)));
  return out;
}

template <class F>
auto with_source(std::string_view source, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    // Drop the "<code>: " prefix already present in what().
    const std::string_view what = e.what();
    fail(e.code(), std::string(source) + ": " + std::string(what.substr(to_string(e.code()).size() + 2)));
  }
}

json subgroup_json(const Subgroup& s) { return s.elements(); }

json integers_json(const std::vector<Integer>& xs) {
  json out = json::array();
  for (const auto& x : xs) {
    if (x.fits_ulong_p())
      out.push_back(x.get_ui());
    else
      out.push_back(x.get_str());
  }
  return out;
}

}  // namespace

FiniteGroup parse_group_json(std::string_view text, std::string_view source) {
  const json j = parse_json(text, source);
  if (!j.is_object()) bad_entry(source, "top level is not an object");
  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) bad_entry(source, "\"name\" is not a string");
    name = j["name"].get<std::string>();
  }
  if (j.contains("cayley")) {
    const auto table = index_rows(j, "cayley", source);
    return with_source(source, [&] { return FiniteGroup::from_cayley_table(table, name); });
  }
  if (!j.contains("permutation_degree")) bad_entry(source, "missing \"permutation_degree\" or \"cayley\"");
  const json& deg = j["permutation_degree"];
  if (!deg.is_number_integer() || deg.get<long long>() < 1)
    bad_entry(source, "\"permutation_degree\" is not a positive integer");
  const auto gens = index_rows(j, "generators", source);
  return with_source(source, [&] {
    return FiniteGroup::from_permutation_generators(deg.get<std::size_t>(), gens, order_cap_from_env(), name);
  });
}

FiniteGroup load_group_file(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  const json j = parse_json(text, path.string());
  if (j.is_object() && !j.contains("name")) {
    json named = j;
    named["name"] = path.stem().string();
    return parse_group_json(named.dump(), path.string());
  }
  return parse_group_json(text, path.string());
}

FiniteGroup resolve_group(std::string_view name_or_path) {
  for (const auto& e : catalog_entries())
    if (e.name == name_or_path) return get_group(name_or_path);
  const std::filesystem::path path(name_or_path);
  std::error_code ec;
  if (std::filesystem::is_regular_file(path, ec)) return load_group_file(path);
  return get_group(name_or_path);  // UnknownName with suggestions
}

NSeries parse_series_json(std::string_view text, const FiniteGroup& group, std::string_view source) {
  const json j = parse_json(text, source);
  if (!j.is_object()) bad_entry(source, "top level is not an object");
  bool stabilized = false;
  if (j.contains("stabilized")) {
    if (!j["stabilized"].is_boolean()) bad_entry(source, "\"stabilized\" is not a boolean");
    stabilized = j["stabilized"].get<bool>();
  }
  const auto rows = index_rows(j, "terms", source);
  std::vector<Subgroup> terms{Subgroup::whole(group)};
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::uint32_t x : rows[r])
      if (x >= group.order())
        bad_entry(source, "terms row " + std::to_string(r) + " names element " + std::to_string(x) +
                              " of a group of order " + std::to_string(group.order()));
    terms.push_back(closure(group, rows[r]));
  }
  return with_source(source, [&] {
    return nseries_from_terms(group, std::move(terms), stabilized ? SeriesTail::Stable : SeriesTail::Trivial);
  });
}

NSeries load_series_file(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  const json j = parse_json(text, path.string());
  if (!j.is_object() || !j.contains("group") || !j["group"].is_string())
    bad_entry(path.string(), "missing \"group\"");
  std::string group_ref = j["group"].get<std::string>();
  // Relative group files are looked up next to the series file.
  const std::filesystem::path beside = path.parent_path() / group_ref;
  std::error_code ec;
  if (!group_ref.empty() && std::filesystem::is_regular_file(beside, ec)) group_ref = beside.string();
  return parse_series_json(text, resolve_group(group_ref), path.string());
}

NSeries load_series_file(const std::filesystem::path& path, const FiniteGroup& group) {
  const std::string text = read_file(path);
  const json j = parse_json(text, path.string());
  if (!j.is_object() || !j.contains("group") || !j["group"].is_string())
    bad_entry(path.string(), "missing \"group\"");
  const std::string ref = j["group"].get<std::string>();
  if (ref != group.name() && std::filesystem::path(ref).stem().string() != group.name())
    fail(Errc::ParentMismatch, path.string() + ": series is for group '" + ref + "', not '" + group.name() + "'");
  return parse_series_json(text, group, path.string());
}

SeriesSpec SeriesSpec::parse(std::string_view text) {
  SeriesSpec s;
  if (text == "lcs") return s;
  if (text == "isolator") {
    s.kind = Kind::Isolator;
    return s;
  }
  if (text.starts_with("lazard:")) {
    s.kind = Kind::Lazard;
    const std::string digits(text.substr(7));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 9 ||
        !is_prime(std::stoull(digits)))
      fail(Errc::InvalidArgument, "series '" + std::string(text) + "': expected lazard:<prime>");
    s.p = std::stoull(digits);
    return s;
  }
  if (text.starts_with("file:") && text.size() > 5) {
    s.kind = Kind::File;
    s.path = std::string(text.substr(5));
    return s;
  }
  fail(Errc::InvalidArgument,
       "series '" + std::string(text) + "': expected lcs, lazard:<prime>, isolator or file:<path>");
}

std::string SeriesSpec::to_string() const {
  switch (kind) {
    case Kind::Lcs: return "lcs";
    case Kind::Lazard: return "lazard:" + std::to_string(p);
    case Kind::Isolator: return "isolator";
    case Kind::File: return "file:" + path;
  }
  return {};
}

NSeries build_series(const FiniteGroup& group, const SeriesSpec& spec) {
  switch (spec.kind) {
    case SeriesSpec::Kind::Lcs: return lower_central_nseries(group);
    case SeriesSpec::Kind::Lazard: return lazard_series(lower_central_nseries(group), spec.p);
    case SeriesSpec::Kind::Isolator: return isolator_series(lower_central_nseries(group));
    case SeriesSpec::Kind::File: return load_series_file(spec.path, group);
  }
  fail(Errc::Internal, "unhandled series kind");
}

std::string series_json(const NSeries& n, const SeriesSpec& spec) {
  json terms = json::array();
  for (const auto& t : n.terms()) terms.push_back(subgroup_json(t));
  json out{{"group", n.group().name()},
           {"series", spec.to_string()},
           {"terms", terms},
           {"orders", json::array()},
           {"stabilized", n.stabilized()}};
  for (const auto& t : n.terms()) out["orders"].push_back(t.order());
  return out.dump();
}

std::string filtration_json(const FiltrationBasis& f, const SeriesSpec& spec) {
  json dims = json::array();
  for (const auto& d : f.degrees) dims.push_back(d.rank());
  json dsub = json::array();
  for (const auto& d : dimension_subgroups(f)) dsub.push_back(subgroup_json(d));
  json out{{"group", f.group.name()},
           {"ring", f.ring.to_string()},
           {"series", spec.to_string()},
           {"max_degree", f.max_degree},
           {"delta_dims", dims},
           {"dimension_subgroups", dsub},
           {"stabilized_at", nullptr}};
  if (f.stabilized_at) out["stabilized_at"] = *f.stabilized_at;
  return out.dump();
}

GradedSummary summarize_graded(const NSeries& n, RingSpec field, std::size_t max_degree) {
  if (!field.is_field()) fail(Errc::RingMismatch, "graded summaries need a field");
  const NSeries restricted =
      field.kind == RingSpec::Kind::PrimeField ? lazard_series(n, field.p) : isolator_series(n);
  const GradedLieRing lie = graded_lie(restricted);
  const GradedAlgebra algebra = graded_algebra(delta_filtration(n, field, max_degree));
  GradedSummary s;
  for (std::size_t i = 1; i <= lie.num_degrees(); ++i) s.lie_ranks.push_back(lie.tensor_basis(i, field).size());
  s.algebra_dims = algebra.dimensions();
  s.complete = algebra.complete();
  s.theta = theta(lie, algebra);
  s.xi = xi_check(lie, algebra);
  s.primitivity = primitivity_check(algebra, s.theta);
  s.generation = generation_check(algebra, s.theta);
  s.hilbert = hilbert_check(lie, algebra);
  return s;
}

std::string graded_json(const FiniteGroup& group, RingSpec field, const SeriesSpec& spec, const GradedSummary& s) {
  auto verdict = [](bool ok) { return ok ? "pass" : "fail"; };
  json out{{"group", group.name()},
           {"ring", field.to_string()},
           {"series", spec.to_string()},
           {"algebra_dims", s.algebra_dims},
           {"complete", s.complete},
           {"lie_ranks", s.lie_ranks},
           {"hilbert_lhs", integers_json(s.hilbert.lhs)},
           {"hilbert_rhs", integers_json(s.hilbert.rhs)},
           {"hilbert", s.hilbert.ok() ? (s.hilbert.truncated ? "truncated" : "pass") : "fail"},
           {"theta_ranks", s.theta.ranks()},
           {"theta_injective", s.theta.injective()},
           {"lie_morphism", verdict(s.theta.lie_morphism.ok)},
           {"primitivity", verdict(s.primitivity.ok())},
           {"xi", verdict(s.xi.ok())},
           {"generation", verdict(s.generation.ok())}};
  return out.dump();
}

}  // namespace dimlab
