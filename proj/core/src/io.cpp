#include "rectrep/io.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "json.hpp"
#include "rectrep/error.hpp"

namespace rectrep::io {
namespace {

using Json = nlohmann::ordered_json;

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

const Json& field(const Json& object, const char* key) {
  if (!object.is_object()) throw ParseError("expected a JSON object");
  const auto it = object.find(key);
  if (it == object.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

long long as_integer(const Json& value, const char* what) {
  if (!value.is_number_integer()) {
    throw ParseError(std::string(what) + " must be an integer");
  }
  return value.get<long long>();
}

const Json& as_array(const Json& value, const char* what) {
  if (!value.is_array()) throw ParseError(std::string(what) + " must be an array");
  return value;
}

Rational as_rational(const Json& value) {
  if (value.is_number_integer()) return Rational(std::to_string(value.get<long long>()));
  if (value.is_string()) return parse_rational(value.get<std::string>());
  throw ParseError("coordinates must be integers or \"p/q\" strings");
}

Json rational_json(const Rational& value) {
  if (is_integer(value) && value.get_num().fits_slong_p()) return Json(value.get_num().get_si());
  return Json(format_rational(value));
}

// 1-based wire index -> 0-based, range checked against n.
int index_from_wire(const Json& value, int n, const char* what) {
  const long long raw = as_integer(value, what);
  if (raw < 1 || raw > n) {
    throw InvalidInput(std::string(what) + " " + std::to_string(raw) + " outside 1.." +
                       std::to_string(n));
  }
  return static_cast<int>(raw - 1);
}

Permutation permutation_from(const Json& value, const char* what) {
  as_array(value, what);
  std::vector<int> image;
  image.reserve(value.size());
  for (const Json& v : value) {
    const long long raw = as_integer(v, what);
    if (raw < -1000000000LL || raw > 1000000000LL) throw InvalidInput("permutation value out of range");
    image.push_back(static_cast<int>(raw) - 1);
  }
  return Permutation(std::move(image));
}

Json permutation_json(const Permutation& perm) { return Json(perm.one_based()); }

std::vector<Rational> rational_list(const Json& value, const char* what) {
  as_array(value, what);
  std::vector<Rational> out;
  for (const Json& v : value) out.push_back(as_rational(v));
  return out;
}

Json rational_list_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const Rational& v : values) out.push_back(rational_json(v));
  return out;
}

}  // namespace

Placement parse_placement(std::string_view json) {
  const Json doc = parse_document(json);
  const long long n = as_integer(field(doc, "n"), "n");
  const Json& rects = as_array(field(doc, "rects"), "rects");
  if (n < 1) throw InvalidInput("n must be at least 1");
  if (static_cast<long long>(rects.size()) != n) {
    throw InvalidInput("placement lists " + std::to_string(rects.size()) +
                       " rectangles but n = " + std::to_string(n));
  }
  std::vector<std::optional<Rect>> slots(static_cast<std::size_t>(n));
  for (const Json& r : rects) {
    const int id = index_from_wire(field(r, "id"), static_cast<int>(n), "rectangle id");
    if (slots[static_cast<std::size_t>(id)]) {
      throw InvalidInput("duplicate rectangle id " + std::to_string(id + 1));
    }
    slots[static_cast<std::size_t>(id)] =
        Rect{as_rational(field(r, "xmin")), as_rational(field(r, "ymin")),
             as_rational(field(r, "xmax")), as_rational(field(r, "ymax"))};
  }
  std::vector<Rect> out;
  for (auto& slot : slots) out.push_back(std::move(*slot));
  return Placement(std::move(out));
}

std::string to_json(const Placement& placement) {
  std::ostringstream out;
  out << "{\n  \"n\": " << placement.size() << ",\n  \"rects\": [\n";
  for (int i = 0; i < placement.size(); ++i) {
    const Rect& r = placement.rect(i);
    Json rect;
    rect["id"] = i + 1;
    rect["xmin"] = rational_json(r.xmin);
    rect["ymin"] = rational_json(r.ymin);
    rect["xmax"] = rational_json(r.xmax);
    rect["ymax"] = rational_json(r.ymax);
    out << "    " << rect.dump() << (i + 1 < placement.size() ? ",\n" : "\n");
  }
  out << "  ]\n}\n";
  return out.str();
}

Representation parse_representation(std::string_view json) {
  const Json doc = parse_document(json);
  const long long n_raw = as_integer(field(doc, "n"), "n");
  if (n_raw < 1 || n_raw > 100000) throw InvalidInput("n out of range");
  const int n = static_cast<int>(n_raw);
  const Json& pairs = as_array(field(doc, "pairs"), "pairs");

  std::vector<std::optional<Relation>> upper(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (const Json& p : pairs) {
    const int i = index_from_wire(field(p, "i"), n, "pair index i");
    const int j = index_from_wire(field(p, "j"), n, "pair index j");
    if (i >= j) throw InvalidInput("representation pairs must satisfy i < j");
    const Json& rel = field(p, "rel");
    if (!rel.is_string()) throw ParseError("\"rel\" must be a string");
    auto& slot = upper[static_cast<std::size_t>(i * n + j)];
    if (slot) throw InvalidInput("pair listed twice");
    slot = relation_from_string(rel.get<std::string>());
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!upper[static_cast<std::size_t>(i * n + j)]) {
        throw InvalidInput("pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                           ") missing from representation");
      }
    }
  }
  return Representation::from_upper_triangle(
      n, [&](int i, int j) { return *upper[static_cast<std::size_t>(i * n + j)]; });
}

std::string to_json(const Representation& r) {
  std::ostringstream out;
  out << "{\n  \"n\": " << r.size() << ",\n  \"pairs\": [";
  bool first = true;
  for (int i = 0; i < r.size(); ++i) {
    for (int j = i + 1; j < r.size(); ++j) {
      Json pair;
      pair["i"] = i + 1;
      pair["j"] = j + 1;
      pair["rel"] = std::string(to_string(r.at(i, j)));
      out << (first ? "\n    " : ",\n    ") << pair.dump();
      first = false;
    }
  }
  out << (first ? "]\n}\n" : "\n  ]\n}\n");
  return out.str();
}

Permutation parse_permutation(std::string_view json) {
  return permutation_from(parse_document(json), "permutation");
}

std::string to_json(const Permutation& perm) { return permutation_json(perm).dump() + "\n"; }

SequencePair parse_sequence_pair(std::string_view json) {
  const Json doc = parse_document(json);
  return SequencePair(permutation_from(field(doc, "pi"), "pi"),
                      permutation_from(field(doc, "rho"), "rho"));
}

std::string to_json(const SequencePair& sp) {
  Json doc;
  doc["pi"] = permutation_json(sp.pi);
  doc["rho"] = permutation_json(sp.rho);
  return doc.dump() + "\n";
}

Dimensions parse_dimensions(std::string_view json) {
  const Json doc = parse_document(json);
  return Dimensions(rational_list(field(doc, "widths"), "widths"),
                    rational_list(field(doc, "heights"), "heights"));
}

std::string to_json(const Dimensions& dims) {
  Json doc;
  doc["widths"] = rational_list_json(dims.widths);
  doc["heights"] = rational_list_json(dims.heights);
  return doc.dump() + "\n";
}

Netlist parse_netlist(std::string_view json) {
  const Json doc = parse_document(json);
  Netlist netlist;
  for (const Json& net : as_array(field(doc, "nets"), "nets")) {
    std::vector<int> members;
    for (const Json& v : as_array(net, "net")) {
      const long long raw = as_integer(v, "net member");
      if (raw < 1 || raw > 1000000000LL) throw InvalidInput("net member out of range");
      members.push_back(static_cast<int>(raw - 1));
    }
    netlist.nets.push_back(std::move(members));
  }
  return netlist;
}

std::string to_json(const Netlist& netlist) {
  Json nets = Json::array();
  for (const auto& net : netlist.nets) {
    Json members = Json::array();
    for (int v : net) members.push_back(v + 1);
    nets.push_back(members);
  }
  Json doc;
  doc["nets"] = nets;
  return doc.dump() + "\n";
}

std::string to_json(const BadQuartet& q) {
  Json doc;
  doc["a"] = q.a + 1;
  doc["b"] = q.b + 1;
  doc["c"] = q.c + 1;
  doc["d"] = q.d + 1;
  return doc.dump() + "\n";
}

std::string certificate_json(const ForcingCertificate& certificate) {
  Json doc;
  doc["pi"] = permutation_json(certificate.pi);
  doc["verified"] = certificate.checked;
  return doc.dump() + "\n";
}

std::string arc_list(const BitMatrix& graph) {
  std::string out;
  for (const auto& [from, to] : graph.arcs()) {
    out += std::to_string(from + 1) + " " + std::to_string(to + 1) + "\n";
  }
  return out;
}

DocumentKind sniff(std::string_view json) {
  const Json doc = parse_document(json);
  if (doc.is_array()) return DocumentKind::kPermutation;
  if (doc.is_object()) {
    if (doc.contains("rects")) return DocumentKind::kPlacement;
    if (doc.contains("pi") && doc.contains("rho")) return DocumentKind::kSequencePair;
  }
  return DocumentKind::kUnknown;
}

}  // namespace rectrep::io
