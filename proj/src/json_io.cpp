#include "rubikred/json_io.hpp"

#include <fstream>
#include <sstream>

#include "rubikred/errors.hpp"

namespace rubikred {

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  out << text;
}

namespace {

const Json& field(const Json& doc, const char* key, std::string_view what) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw SchemaError(std::string(what) + ": missing \"" + key + "\"");
  }
  return doc[key];
}

int int_field(const Json& doc, const char* key, std::string_view what) {
  const Json& v = field(doc, key, what);
  if (!v.is_number_integer()) throw SchemaError(std::string(what) + ": \"" + key + "\" must be an integer");
  return v.get<int>();
}

Puzzle puzzle_from(const Json& doc, std::string_view what) {
  const Json& kind = field(doc, "kind", what);
  if (!kind.is_string()) throw SchemaError(std::string(what) + ": \"kind\" must be a string");
  const int side = int_field(doc, "side", what);
  try {
    return Puzzle(kind_from_string(kind.get<std::string>()), side);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string(what) + ": " + e.what());
  }
}

Json point_json(Point p) { return Json::array({p.x, p.y}); }

Point point_from(const Json& v, std::string_view what) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer()) {
    throw SchemaError(std::string(what) + ": points must be integer pairs");
  }
  return {v[0].get<int>(), v[1].get<int>()};
}

}  // namespace

// ---------------------------------------------------------------------------

Json config_to_json(const PuzzleConfig& config) {
  const Puzzle& p = config.puzzle();
  Json faces = Json::object();
  for (Face f : kAllFaces) {
    Json rows = Json::array();
    const std::size_t cols = p.face_cols(f);
    for (std::size_t r = 0; r < p.face_rows(f); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < cols; ++c) {
        row.push_back(std::string(1, to_char(config.colors()[p.face_offset(f) + r * cols + c])));
      }
      rows.push_back(std::move(row));
    }
    faces[std::string(to_string(f))] = std::move(rows);
  }
  return Json{{"kind", to_string(p.kind())}, {"side", p.side()}, {"faces", std::move(faces)}};
}

PuzzleConfig config_from_json(const Json& doc) {
  constexpr std::string_view what = "configuration";
  const Puzzle p = puzzle_from(doc, what);
  const Json& faces = field(doc, "faces", what);
  if (!faces.is_object() || faces.size() != 6) throw SchemaError("configuration: need six faces");
  std::vector<Color> colors(p.sticker_count());
  for (Face f : kAllFaces) {
    const std::string key(to_string(f));
    if (!faces.contains(key)) throw SchemaError("configuration: missing face " + key);
    const Json& rows = faces[key];
    const std::size_t cols = p.face_cols(f);
    if (!rows.is_array() || rows.size() != p.face_rows(f)) {
      throw SchemaError("configuration: face " + key + " has the wrong number of rows");
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!rows[r].is_array() || rows[r].size() != cols) {
        throw SchemaError("configuration: face " + key + " has a row of the wrong length");
      }
      for (std::size_t c = 0; c < cols; ++c) {
        const Json& cell = rows[r][c];
        if (!cell.is_string() || cell.get<std::string>().size() != 1) {
          throw SchemaError("configuration: colours are single-character strings");
        }
        try {
          colors[p.face_offset(f) + r * cols + c] = color_from_char(cell.get<std::string>()[0]);
        } catch (const std::exception& e) {
          throw SchemaError(std::string("configuration: ") + e.what());
        }
      }
    }
  }
  return PuzzleConfig(p, std::move(colors));
}

Json permutation_to_json(const StickerPermutation& perm) {
  const Puzzle& p = perm.puzzle();
  Json map = Json::array();
  for (std::uint32_t j : perm.map()) map.push_back(j);
  return Json{{"kind", to_string(p.kind())}, {"side", p.side()}, {"map", std::move(map)}};
}

StickerPermutation permutation_from_json(const Json& doc) {
  constexpr std::string_view what = "transformation";
  const Puzzle p = puzzle_from(doc, what);
  const Json& map = field(doc, "map", what);
  if (!map.is_array()) throw SchemaError("transformation: \"map\" must be an array");
  std::vector<std::uint32_t> out;
  out.reserve(map.size());
  for (const Json& v : map) {
    if (!v.is_number_unsigned()) throw SchemaError("transformation: map entries must be ids");
    out.push_back(v.get<std::uint32_t>());
  }
  try {
    return StickerPermutation(p, std::move(out));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("transformation: ") + e.what());
  }
}

Json cubical_to_json(const CubicalInstance& inst) {
  Json labels = Json::array();
  for (const Bitstring& b : inst.labels) labels.push_back(b.str());
  return Json{{"labels", std::move(labels)}};
}

CubicalInstance cubical_from_json(const Json& doc) {
  const Json& labels = field(doc, "labels", "cubical instance");
  if (!labels.is_array()) throw SchemaError("cubical instance: \"labels\" must be an array");
  CubicalInstance out;
  for (const Json& v : labels) {
    if (!v.is_string()) throw SchemaError("cubical instance: labels must be strings");
    out.labels.push_back(Bitstring::parse(v.get<std::string>()));
  }
  return out;
}

Json grid_to_json(const GridGraph& g) {
  Json vertices = Json::array();
  for (Point p : g.vertices()) vertices.push_back(point_json(p));
  return Json{{"vertices", std::move(vertices)}};
}

GridGraph grid_from_json(const Json& doc) {
  const Json& vertices = field(doc, "vertices", "grid graph");
  if (!vertices.is_array()) throw SchemaError("grid graph: \"vertices\" must be an array");
  std::vector<Point> points;
  for (const Json& v : vertices) points.push_back(point_from(v, "grid graph"));
  try {
    return GridGraph(std::move(points));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("grid graph: ") + e.what());
  }
}

Json promise_to_json(const PromiseGridInstance& inst) {
  Json doc = grid_to_json(inst.graph);
  doc["s"] = point_json(inst.s_vertex);
  doc["t"] = point_json(inst.t_vertex);
  return doc;
}

PromiseGridInstance promise_from_json(const Json& doc) {
  PromiseGridInstance out{grid_from_json(doc), point_from(field(doc, "s", "promise instance"), "s"),
                          point_from(field(doc, "t", "promise instance"), "t")};
  if (!out.graph.contains(out.s_vertex) || !out.graph.contains(out.t_vertex) ||
      out.s_vertex == out.t_vertex) {
    throw SchemaError("promise instance: s and t must be distinct vertices of the graph");
  }
  return out;
}

Json certificate_to_json(const PathCertificate& cert) {
  return Json{{"ordering", cert.ordering}};
}

PathCertificate certificate_from_json(const Json& doc) {
  const Json& ordering = field(doc, "ordering", "certificate");
  if (!ordering.is_array()) throw SchemaError("certificate: \"ordering\" must be an array");
  PathCertificate out;
  for (const Json& v : ordering) {
    if (!v.is_number_unsigned()) throw SchemaError("certificate: entries must be positive integers");
    out.ordering.push_back(v.get<std::size_t>());
  }
  return out;
}

Json reduced_to_json(const ReducedInstance& ri) {
  Json doc{{"kind", to_string(ri.kind)}, {"group", ri.group}, {"side", ri.side}, {"k", ri.budget}};
  doc["transformation"] = ri.transformation ? permutation_to_json(*ri.transformation) : Json(nullptr);
  doc["configuration"] = ri.configuration ? config_to_json(*ri.configuration) : Json(nullptr);
  doc["source"] = cubical_to_json(ri.source);
  return doc;
}

ReducedInstance reduced_from_json(const Json& doc) {
  constexpr std::string_view what = "reduced instance";
  ReducedInstance ri;
  const Json& kind = field(doc, "kind", what);
  if (!kind.is_string()) throw SchemaError("reduced instance: \"kind\" must be a string");
  ri.kind = problem_kind_from_string(kind.get<std::string>());
  const Json& group = field(doc, "group", what);
  if (!group.is_boolean()) throw SchemaError("reduced instance: \"group\" must be a boolean");
  ri.group = group.get<bool>();
  ri.side = int_field(doc, "side", what);
  ri.budget = int_field(doc, "k", what);
  if (ri.budget < 0) throw SchemaError("reduced instance: \"k\" must be nonnegative");
  const Json& t = field(doc, "transformation", what);
  const Json& c = field(doc, "configuration", what);
  if (ri.group) {
    if (t.is_null() || !c.is_null()) {
      throw SchemaError("reduced instance: group variant carries a transformation only");
    }
    ri.transformation = permutation_from_json(t);
    if (ri.transformation->puzzle() != ri.puzzle()) {
      throw SchemaError("reduced instance: transformation puzzle differs from kind/side");
    }
  } else {
    if (c.is_null() || !t.is_null()) {
      throw SchemaError("reduced instance: non-group variant carries a configuration only");
    }
    ri.configuration = config_from_json(c);
    if (ri.configuration->puzzle() != ri.puzzle()) {
      throw SchemaError("reduced instance: configuration puzzle differs from kind/side");
    }
  }
  ri.source = cubical_from_json(field(doc, "source", what));
  return ri;
}

std::string_view to_string(DocumentType type) {
  switch (type) {
    case DocumentType::GridGraph:
      return "grid graph";
    case DocumentType::PromiseGrid:
      return "promise grid instance";
    case DocumentType::Cubical:
      return "cubical instance";
    case DocumentType::Reduced:
      return "reduced instance";
    case DocumentType::Config:
      return "configuration";
    case DocumentType::Permutation:
      return "transformation";
    case DocumentType::Certificate:
      return "certificate";
  }
  return "";
}

DocumentType detect_document(const Json& doc) {
  if (!doc.is_object()) throw SchemaError("expected a JSON object");
  if (doc.contains("vertices")) {
    return doc.contains("s") || doc.contains("t") ? DocumentType::PromiseGrid : DocumentType::GridGraph;
  }
  if (doc.contains("k") && doc.contains("source")) return DocumentType::Reduced;
  if (doc.contains("labels")) return DocumentType::Cubical;
  if (doc.contains("faces")) return DocumentType::Config;
  if (doc.contains("map")) return DocumentType::Permutation;
  if (doc.contains("ordering")) return DocumentType::Certificate;
  throw SchemaError("unrecognised document");
}

}  // namespace rubikred
