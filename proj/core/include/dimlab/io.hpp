#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "dimlab/filtration.hpp"
#include "dimlab/graded.hpp"
#include "dimlab/group.hpp"
#include "dimlab/series.hpp"

namespace dimlab {

// {"name", "permutation_degree", "generators": [[...], ...]} or
// {"name", "cayley": [[...], ...]}. Throws ParseError naming the path and
// the offending entry.
FiniteGroup load_group_file(const std::filesystem::path& path);
FiniteGroup parse_group_json(std::string_view text, std::string_view source = "<string>");

// A catalog name, or else the path of a group file.
FiniteGroup resolve_group(std::string_view name_or_path);

// {"group": name-or-path, "terms": [[element indices], ...], "stabilized": bool}
// where terms[k] generates N_{k+2}; N_1 = G is implied. With "stabilized"
// the last term repeats forever, otherwise the series ends trivially.
NSeries load_series_file(const std::filesystem::path& path);
// Same, interpreting the terms in `group`; the file's group must name it.
NSeries load_series_file(const std::filesystem::path& path, const FiniteGroup& group);
NSeries parse_series_json(std::string_view text, const FiniteGroup& group, std::string_view source = "<string>");

// "lcs", "lazard:<p>", "isolator" or "file:<path>".
struct SeriesSpec {
  enum class Kind { Lcs, Lazard, Isolator, File };

  Kind kind = Kind::Lcs;
  std::uint64_t p = 0;
  std::string path;

  static SeriesSpec parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const SeriesSpec&, const SeriesSpec&) = default;
};

NSeries build_series(const FiniteGroup& group, const SeriesSpec& spec);

// Sorted element indices of each term.
std::string series_json(const NSeries& n, const SeriesSpec& spec);

// {"group", "ring", "series", "delta_dims", "dimension_subgroups",
//  "stabilized_at", "max_degree"}
std::string filtration_json(const FiltrationBasis& f, const SeriesSpec& spec);

struct GradedSummary {
  std::vector<std::size_t> lie_ranks;  // F-rank of each Lie degree
  std::vector<std::size_t> algebra_dims;
  ThetaMap theta;
  XiReport xi;
  PrimitivityReport primitivity;
  GenerationReport generation;
  HilbertReport hilbert;
  bool complete = false;
};

// Graded Lie ring of the Lazard series (p = char) or the isolator series
// (char 0) against the graded algebra of `n`.
GradedSummary summarize_graded(const NSeries& n, RingSpec field, std::size_t max_degree);

// {"group", "ring", "series", "algebra_dims", "complete", "hilbert_lhs",
//  "hilbert_rhs", "hilbert", "theta_ranks", "theta_injective", "primitivity",
//  "xi", "generation"}
std::string graded_json(const FiniteGroup& group, RingSpec field, const SeriesSpec& spec, const GradedSummary& s);

}  // namespace dimlab
