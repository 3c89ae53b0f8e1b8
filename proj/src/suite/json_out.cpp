#include "suite/json_out.hpp"

namespace suite {

std::string emit(json doc, const std::string& kind) {
  doc["schema"] = kind + "/v" + kSchemaVersion;
  return doc.dump(2) + "\n";
}

json to_json(const hodges::HodgesData& d) {
  std::vector<uint32_t> all;
  for (uint32_t i = 0; i < d.n; ++i) all.push_back(d.r_at(i));
  return {{"n", d.n}, {"p", d.p}, {"r", d.r}, {"r_all", all}, {"v", hodges::poly_to_string(d.v(), d.p)}};
}

// Wall-clock time is left out so that repeated runs print the same bytes.
json to_json(const hodges::ShirshovReport& r) {
  json j{{"match", r.match},
         {"expected_is_gs", r.expected_is_gs},
         {"computed", r.computed},
         {"expected", r.expected},
         {"basis_size", r.basis_size},
         {"basis_size_t", r.basis_size_t},
         {"compositions", r.compositions}};
  j["difference"] = r.difference ? json(*r.difference) : json(nullptr);
  return j;
}

namespace {

json layers_json(const std::vector<std::vector<hodges::LayerInfo>>& layers) {
  json out = json::array();
  for (const auto& layer : layers) {
    json parts = json::array();
    for (const auto& l : layer) parts.push_back({{"simple", l.simple}, {"shift", l.shift}, {"multiplicity", l.multiplicity}});
    out.push_back(parts);
  }
  return out;
}

}  // namespace

json to_json(const hodges::StructureReport& s) {
  json j{{"data", to_json(s.data)},
         {"present", s.present},
         {"lambda", s.lambda},
         {"dim_L", s.dim_L},
         {"dim_T", s.dim_T},
         {"weighted_sum", s.weighted_sum},
         {"dim_t", s.dim_t}};
  json vs = json::array();
  for (size_t i : s.present)
    vs.push_back({{"index", i},
                  {"dim_V", s.V[i].dim},
                  {"dim_Vprime", s.Vp[i].dim},
                  {"V_layers", layers_json(s.v_layers[i])},
                  {"Vprime_layers", layers_json(s.vp_layers[i])}});
  j["modules"] = vs;
  j["ext1_quiver"] = hodges::ext1_quiver(s);
  return j;
}

json to_json(const nocycle::SweepReport& r) {
  return {{"representations", r.representations}, {"indecomposable", r.indecomposable},
          {"unmatched", r.unmatched},             {"ambiguous", r.ambiguous},
          {"catalog_size", r.catalog_size},       {"catalog_missed", r.catalog_missed},
          {"ok", r.ok()}};
}

json to_json(const nocycle::UpsilonReport& r) {
  return {{"n", r.n},
          {"q", r.q},
          {"zeta", r.zeta},
          {"dim_C", r.dim_c},
          {"dim_N", r.dim_n},
          {"relations_ok", r.relations_ok},
          {"multiplicative", r.multiplicative},
          {"unital", r.unital},
          {"rank", r.rank},
          {"bijective", r.bijective},
          {"grading_ok", r.grading_ok},
          {"ok", r.ok()}};
}

json to_json(const modlie::LayerInfo& l) {
  return {{"simple", l.simple},
          {"dim", l.dim},
          {"multiplicity", l.multiplicity},
          {"degree_offset", l.degree_offset},
          {"shift", l.shift},
          {"integral", l.integral}};
}

json to_json(const modlie::VermaReport& r) {
  json layers = json::array();
  for (const auto& l : r.layers) layers.push_back(to_json(l));
  return {{"k", r.k},
          {"alpha", r.alpha},
          {"dim", r.dim},
          {"multiplicities", r.multiplicities},
          {"end_dim", r.end_dim},
          {"relations", {{"brackets", r.relations.brackets},
                         {"p_powers", r.relations.p_powers},
                         {"checked", r.relations.checked},
                         {"ok", r.relations.ok()}}},
          {"layers", layers}};
}

json to_json(const modlie::ChainData& c) {
  json layers = json::array();
  for (const auto& per : c.layers) {
    json row = json::array();
    for (const auto& l : per) row.push_back(to_json(l));
    layers.push_back(row);
  }
  return {{"weight", c.weight.label()},
          {"orbit_weight", c.orbit_weight},
          {"orbit_classes", c.orbit_classes},
          {"dim_L", c.dim_L},
          {"layers", layers}};
}

json to_json(const ktheory::RelationReport& r) {
  json rels = json::array();
  for (const auto& x : r.relations)
    rels.push_back({{"name", x.name}, {"ok", x.ok}, {"checked", x.checked}, {"witness", x.witness}});
  return {{"n", r.n},
          {"relations", rels},
          {"theta_discrepancy", r.theta_discrepancy},
          {"expected_discrepancy", r.expected_discrepancy},
          {"ok", r.ok()}};
}

json to_json(const ktheory::ExtTable& t) {
  json rows = json::array();
  for (const auto& [key, degs] : t.entries) {
    const auto& [i, j, m] = key;
    for (const auto& [deg, dim] : degs)
      rows.push_back({{"i", i}, {"j", j}, {"m", m}, {"vprime_degree", deg.first}, {"v_degree", deg.second}, {"dim", dim}});
  }
  return {{"n", t.n}, {"entries", rows}};
}

json to_json(const ktheory::KElt& x) {
  json coords = json::array();
  for (const auto& c : x.coords) coords.push_back(c.to_string());
  return {{"text", ktheory::to_string(x)}, {"coords", coords}};
}

json gram_json(const std::vector<std::vector<scalars::LaurentBi>>& g) {
  json rows = json::array();
  for (const auto& row : g) {
    json r = json::array();
    for (const auto& c : row) r.push_back(c.to_string());
    rows.push_back(r);
  }
  return rows;
}

}  // namespace suite
