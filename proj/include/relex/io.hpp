#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>

#include "relex/inference.hpp"

namespace relex {

/// File-format or schema failure; the message carries the offending line.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sequence files are JSON lines: a header {"format":1,"n":N,"sig":[...]}
// followed by one {"i":k,"rels":[[slot-1 tuples],...]} object per item,
// positions 1..N contiguous, tuples sorted as in encode(). Writing a parsed
// file reproduces it byte for byte.

RelSequence parse_sequence(std::istream& in,
                           const std::string& name = "<stream>");
RelSequence parse_sequence_file(const std::filesystem::path& path);
void write_sequence(std::ostream& out, const RelSequence& x);
void write_sequence_file(const std::filesystem::path& path,
                         const RelSequence& x);

/// Whitespace-separated "src dst" lines with positive ids, one interaction
/// per line in arrival order. Self-loops are rejected. Undirected mode
/// stores both orientations.
RelSequence parse_edge_list(std::istream& in, bool directed,
                            const std::string& name = "<stream>");
RelSequence parse_edge_list_file(const std::filesystem::path& path,
                                 bool directed);

// Model files: {"format":1,"sig":[...],"support":[{"code":"<encode text>",
// "weight":"p/q"|number},...]} or a mixture {"format":1,"components":
// [{"weight":...,"model":{...}},...]}.

using Model = std::variant<SimplexPoint, MixingMeasure>;

Model parse_model(std::istream& in, const std::string& name = "<stream>");
Model parse_model_file(const std::filesystem::path& path);
void write_model(std::ostream& out, const SimplexPoint& f);
void write_model_file(const std::filesystem::path& path,
                      const SimplexPoint& f);

std::string to_json(const ExchangeabilityReport& report);
std::string to_json(const Chi2Report& report);

}  // namespace relex
