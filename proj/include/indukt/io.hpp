#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "indukt/groupoid.hpp"
#include "indukt/measures.hpp"
#include "indukt/representation.hpp"

namespace indukt {

/// File / parse / document-shape problems. Semantic validation is delegated
/// to the module validators.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Json = nlohmann::json;

// Versioned document envelope: { "kind": ..., "version": 1, "body": {...} }.
// Kinds: groupoid, subgroupoid, haar, equivariant, representation, scenario.
Json make_document(const std::string& kind, Json body);
std::string document_kind(const Json& doc);
const Json& document_body(const Json& doc);

Json to_document(const FiniteGroupoid& g);
GroupoidPtr groupoid_from(const Json& doc);

Json to_document(const WideSubgroupoid& h);
std::vector<int> subgroupoid_members_from(const Json& doc);

Json to_document(const HaarSystem& h);
HaarSystem haar_from(const Json& doc, GroupoidPtr g);

/// Saved with explicit coset weights keyed by the coset's default (minimal)
/// representative element id. Loading also accepts "orbit_weights" keyed by
/// orbit index.
Json to_document(const EquivariantSystem& mu);
EquivariantSystem equivariant_from(const Json& doc, CosetSpacePtr cs);

/// Matrices are stored row-major as arrays of [re, im] pairs, keyed by
/// element id; dims keyed by unit id. The groupoid context is supplied by the
/// caller.
Json to_document(const Representation& rep);
Representation representation_from(const Json& doc, GroupoidPtr g);

/// Canonical text form: sorted keys, compact separators, floating-point
/// numbers at 17 significant digits, trailing newline. Deterministic.
std::string canonical_dump(const Json& doc);

Json parse_document(const std::string& text);
Json load_document(const std::string& path);
void save_document(const Json& doc, const std::string& path);

/// The built-in fixture catalog, as documents.
std::vector<std::string> catalog_names();
bool catalog_has(const std::string& name);
Json catalog_document(const std::string& name);

/// Resolves "catalog:NAME" against the catalog, anything else as a file path
/// (relative paths against base_dir when nonempty).
Json resolve_ref(const std::string& ref, const std::string& base_dir = "");

}  // namespace indukt
