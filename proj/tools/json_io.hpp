#pragma once

// JSON encodings of library records. Every top-level document carries
// "schema_version" and "kind"; see schemas/subclose-output.v1.schema.json.

#include "json.hpp"

#include "subclose/conjecture.hpp"
#include "subclose/families.hpp"
#include "subclose/graphs.hpp"

namespace subclose::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "subclose/1";

Json document(const char* kind);

Json family_to_json(const SubsetFamily& fam);
Json edges_to_json(const Graph& g);
Json rational_to_json(const Rational& x);

/// `closed` is the closed-form value when the caller computed one.
Json kr_record_to_json(const KrRecord& rec, const std::optional<std::int64_t>& closed = {});

struct SigmaExtras {
  bool threshold = false;
  std::vector<std::pair<int, BuildStep>> build_sequence;
};
Json sigma_record_to_json(const SigmaRecord& rec, const SigmaExtras& extras);

Json conjecture_report_to_json(const ConjectureReport& rep);

Json generator_to_json(const LinearCode& code, int ell, int m,
                       const std::optional<SchubertIndex>& alpha);

}  // namespace subclose::io
