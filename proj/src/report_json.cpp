#include "mcmgr/report_json.hpp"

#include "mcmgr/error.hpp"

namespace mcmgr {

using nlohmann::json;

namespace {

json optional_uint(const std::optional<unsigned>& v) { return v ? json(*v) : json(nullptr); }

json forms_json(const std::vector<Form>& forms) {
  json out = json::array();
  for (const auto& f : forms) out.push_back(f);
  return out;
}

}  // namespace

json report_to_json(const InvariantReport& r) {
  json doc;
  doc["instance"] = {{"characteristic", r.characteristic},
                     {"variables", r.vars},
                     {"matrix", r.matrix},
                     {"hypersurface", r.hypersurface ? json(*r.hypersurface) : json(nullptr)}};
  doc["mu"] = r.basic.mu;
  doc["i_M"] = r.basic.i_m;
  doc["ord_det"] = r.basic.ord_det;
  doc["dim"] = r.basic.dim;
  doc["h"] = r.h.h;
  doc["h_text"] = r.h.to_string();
  doc["h_direct"] = r.h_direct.h;
  doc["e"] = r.e;
  doc["hilbert_polynomial"] = r.h.hilbert_polynomial();
  doc["reduction_number"] = optional_uint(r.reduction_number);
  doc["depth"] = r.depth.depth;
  doc["cohen_macaulay"] = r.depth.cohen_macaulay;
  doc["sally_trace"] = r.depth.trace;
  doc["rr_lengths"] = r.depth.rr_lengths;
  doc["r_poly"] = r.depth.r_poly;
  doc["h_tilde"] = r.depth.h_tilde ? json(r.depth.h_tilde->h) : json(nullptr);
  doc["rr_residual"] = r.depth.rr_residual;
  doc["ulrich"] = r.flags.ulrich;
  doc["minimal_multiplicity"] = r.flags.minimal_multiplicity;
  doc["dvr_divisors"] = r.dvr ? json(r.dvr->a) : json(nullptr);
  doc["seed"] = r.seed;
  doc["chain_attempt"] = r.chain_attempt;
  doc["forms"] = forms_json(r.forms);
  doc["lifted_forms"] = forms_json(r.lifted_forms);
  doc["truncations"] = r.truncations;
  doc["truncation_confirmed"] = r.truncation_confirmed;
  return doc;
}

InvariantReport report_from_json(const json& doc) {
  try {
    InvariantReport r;
    const json& inst = doc.at("instance");
    r.characteristic = inst.at("characteristic").get<std::uint32_t>();
    r.vars = inst.at("variables").get<std::vector<std::string>>();
    r.matrix = inst.at("matrix").get<std::vector<std::vector<std::string>>>();
    if (!inst.at("hypersurface").is_null()) r.hypersurface = inst.at("hypersurface").get<std::string>();
    r.basic.mu = doc.at("mu").get<std::size_t>();
    r.basic.i_m = doc.at("i_M").get<unsigned>();
    r.basic.ord_det = doc.at("ord_det").get<unsigned>();
    r.basic.dim = doc.at("dim").get<std::size_t>();
    const auto dim = static_cast<unsigned>(r.basic.dim);
    r.h = HData{doc.at("h").get<IntSeries>(), dim};
    r.h_direct = HData{doc.at("h_direct").get<IntSeries>(), dim};
    r.e = doc.at("e").get<IntSeries>();
    if (!doc.at("reduction_number").is_null()) r.reduction_number = doc.at("reduction_number").get<unsigned>();
    r.depth.depth = doc.at("depth").get<unsigned>();
    r.depth.cohen_macaulay = doc.at("cohen_macaulay").get<bool>();
    r.depth.trace = doc.at("sally_trace").get<std::vector<bool>>();
    r.depth.rr_lengths = doc.at("rr_lengths").get<IntSeries>();
    r.depth.r_poly = doc.at("r_poly").get<IntSeries>();
    if (!doc.at("h_tilde").is_null()) r.depth.h_tilde = HData{doc.at("h_tilde").get<IntSeries>(), dim};
    r.depth.rr_residual = doc.at("rr_residual").get<IntSeries>();
    r.flags.ulrich = doc.at("ulrich").get<bool>();
    r.flags.minimal_multiplicity = doc.at("minimal_multiplicity").get<bool>();
    if (!doc.at("dvr_divisors").is_null()) r.dvr = DvrDecomposition{doc.at("dvr_divisors").get<std::vector<unsigned>>()};
    r.seed = doc.at("seed").get<std::uint64_t>();
    r.chain_attempt = doc.at("chain_attempt").get<unsigned>();
    r.forms = doc.at("forms").get<std::vector<Form>>();
    r.lifted_forms = doc.at("lifted_forms").get<std::vector<Form>>();
    r.truncations = doc.at("truncations").get<std::vector<unsigned>>();
    r.truncation_confirmed = doc.at("truncation_confirmed").get<bool>();
    return r;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace mcmgr
