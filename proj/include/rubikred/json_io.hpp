#pragma once

// JSON documents for every pipeline stage. Malformed input throws SchemaError.

#include <filesystem>
#include <string>

#include "json.hpp"

#include "rubikred/certificates.hpp"
#include "rubikred/reduction.hpp"

namespace rubikred {

using Json = nlohmann::ordered_json;

Json parse_json(std::string_view text);
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

// {"kind","side","faces":{"+x":[["O",...],...],...}}; rows follow u, columns v.
Json config_to_json(const PuzzleConfig& config);
PuzzleConfig config_from_json(const Json& doc);

// {"kind","side","map":[...]}
Json permutation_to_json(const StickerPermutation& perm);
StickerPermutation permutation_from_json(const Json& doc);

// {"labels":["011",...]}
Json cubical_to_json(const CubicalInstance& inst);
CubicalInstance cubical_from_json(const Json& doc);

// {"vertices":[[x,y],...]} and the same plus "s", "t".
Json grid_to_json(const GridGraph& g);
GridGraph grid_from_json(const Json& doc);
Json promise_to_json(const PromiseGridInstance& inst);
PromiseGridInstance promise_from_json(const Json& doc);

// {"ordering":[1,...]}
Json certificate_to_json(const PathCertificate& cert);
PathCertificate certificate_from_json(const Json& doc);

// {"kind","group","side","k","transformation","configuration","source"};
// exactly one of transformation/configuration is non-null.
Json reduced_to_json(const ReducedInstance& ri);
ReducedInstance reduced_from_json(const Json& doc);

enum class DocumentType : std::uint8_t {
  GridGraph,
  PromiseGrid,
  Cubical,
  Reduced,
  Config,
  Permutation,
  Certificate
};
std::string_view to_string(DocumentType type);
// Classifies a document by its keys; throws SchemaError when none fits.
DocumentType detect_document(const Json& doc);

}  // namespace rubikred
