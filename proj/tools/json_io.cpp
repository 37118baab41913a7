#include "json_io.hpp"

namespace subclose::io {

Json document(const char* kind) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind;
  return j;
}

Json family_to_json(const SubsetFamily& fam) {
  Json out = Json::array();
  for (Mask s : fam.members()) out.push_back(subset_elements(s));
  return out;
}

Json edges_to_json(const Graph& g) {
  Json out = Json::array();
  for (auto [u, v] : g.edge_list()) out.push_back({u, v});
  return out;
}

Json rational_to_json(const Rational& x) {
  return Json{{"num", x.numerator()}, {"den", x.denominator()}};
}

Json kr_record_to_json(const KrRecord& rec, const std::optional<std::int64_t>& closed) {
  Json j = document("kr_record");
  j["ell"] = rec.ell;
  j["m"] = rec.m;
  j["r"] = rec.r;
  j["value"] = rec.value;
  j["method"] = to_string(rec.method);
  j["maximizer"] = family_to_json(rec.maximizer);
  j["maximizer_count"] = rec.maximizer_count ? Json(*rec.maximizer_count) : Json(nullptr);
  j["closed_form"] = closed ? Json(*closed) : Json(nullptr);
  return j;
}

Json sigma_record_to_json(const SigmaRecord& rec, const SigmaExtras& extras) {
  Json j = document("sigma_record");
  j["m"] = rec.m;
  j["r"] = rec.r;
  j["sigma_max"] = rec.sigma_max;
  j["sigma_via_families"] = rec.sigma_via_families;
  j["maximizer"] = edges_to_json(rec.maximizer);
  j["maximizer_count"] = rec.maximizer_count;
  j["threshold"] = extras.threshold;
  Json seq = Json::array();
  for (auto [v, step] : extras.build_sequence)
    seq.push_back({{"vertex", v}, {"step", step == BuildStep::Isolated ? "isolated" : "universal"}});
  j["build_sequence"] = seq;

  Json bounds;
  bounds["de_caen"] = {{"value", rational_to_json(rec.de_caen)},
                       {"tight", Rational(rec.sigma_max) == rec.de_caen}};
  bounds["trivial"] = rec.trivial ? Json{{"value", *rec.trivial}, {"tight", rec.sigma_max == *rec.trivial}}
                                  : Json(nullptr);
  bounds["dual"] = rec.dual ? Json{{"value", *rec.dual}, {"tight", rec.sigma_max == *rec.dual}}
                            : Json(nullptr);
  j["bounds"] = bounds;
  return j;
}

Json conjecture_report_to_json(const ConjectureReport& rep) {
  Json j = document("conjecture_report");
  Json params;
  params["ell"] = rep.ell;
  params["m"] = rep.m;
  params["q"] = rep.q;
  params["alpha"] = rep.alpha ? Json(*rep.alpha) : Json(nullptr);
  params["r"] = rep.r;
  j["params"] = params;
  j["n"] = rep.length;
  j["k"] = rep.dimension;
  j["d_r"] = rep.d_r;
  j["rhs_subclose"] = rep.rhs_subclose;
  j["rhs_all_coordinate"] = rep.rhs_all_coordinate;
  j["verdict"] = to_string(rep.verdict);
  j["witness_lambda"] = family_to_json(rep.witness_lambda);
  j["subclose_k"] = rep.subclose_k;
  j["subclose_families"] = rep.subclose_families;
  j["proven_regime"] = rep.proven_regime ? Json(*rep.proven_regime) : Json(nullptr);
  return j;
}

Json generator_to_json(const LinearCode& code, int ell, int m,
                       const std::optional<SchubertIndex>& alpha) {
  Json j = document("generator_matrix");
  j["ell"] = ell;
  j["m"] = m;
  j["q"] = code.q();
  j["alpha"] = alpha ? Json(alpha->alpha()) : Json(nullptr);
  j["n"] = code.length();
  j["k"] = code.dimension();
  Json rows = Json::array();
  for (Mask b : code.row_labels()) rows.push_back(subset_elements(b));
  j["row_labels"] = rows;
  Json matrix = Json::array();
  for (int i = 0; i < code.dimension(); ++i) {
    Json row = Json::array();
    for (int c = 0; c < code.length(); ++c) row.push_back(code.generator().at(i, c));
    matrix.push_back(row);
  }
  j["matrix"] = matrix;
  return j;
}

}  // namespace subclose::io
