#pragma once

// JSON formats (1-based ids and permutation values on the wire):
//   Placement       {"n": 4, "rects": [{"id": 1, "xmin": 0, "ymin": "1/2", ...}]}
//   Representation  {"n": 3, "pairs": [{"i": 1, "j": 2, "rel": "west"}, ...]}  (i < j)
//   Permutation     [2, 5, 7, 6, 1, 3, 8, 4]
//   SequencePair    {"pi": [...], "rho": [...]}
//   Dimensions      {"widths": [...], "heights": [...]}
//   Netlist         {"nets": [[1, 3], [2, 4, 5]]}
//   BadQuartet      {"a": 1, "b": 2, "c": 3, "d": 4}
//   Certificate     {"pi": [...], "verified": true}
// Rationals are written as integers when integral and as "p/q" strings
// otherwise. Readers throw ParseError for malformed JSON and InvalidInput for
// well-formed JSON that violates a semantic rule.

#include <string>
#include <string_view>

#include "rectrep/evaluate.hpp"
#include "rectrep/forcing.hpp"
#include "rectrep/geometry.hpp"
#include "rectrep/permutation.hpp"
#include "rectrep/sequence_pair.hpp"

namespace rectrep::io {

Placement parse_placement(std::string_view json);
std::string to_json(const Placement& placement);

Representation parse_representation(std::string_view json);
std::string to_json(const Representation& r);

Permutation parse_permutation(std::string_view json);
std::string to_json(const Permutation& perm);

SequencePair parse_sequence_pair(std::string_view json);
std::string to_json(const SequencePair& sp);

Dimensions parse_dimensions(std::string_view json);
std::string to_json(const Dimensions& dims);

Netlist parse_netlist(std::string_view json);
std::string to_json(const Netlist& netlist);

std::string to_json(const BadQuartet& q);
std::string certificate_json(const ForcingCertificate& certificate);

// "i j" per line (1-based), sorted.
std::string arc_list(const BitMatrix& graph);

// Which document kind a JSON text holds, for commands accepting several.
enum class DocumentKind { kPlacement, kPermutation, kSequencePair, kUnknown };
DocumentKind sniff(std::string_view json);

}  // namespace rectrep::io
