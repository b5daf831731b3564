#include "adlv/json_io.hpp"

namespace adlv {

Json element_json(const WeylElement& w, Weyl& wy) {
  ReducedWord rw = wy.reduced_word(w);
  Json j;
  j["word"] = rw.letters;
  j["omega"] = rw.omega_name;
  return j;
}

Json elements_json(const std::vector<WeylElement>& v, Weyl& wy) {
  Json arr = Json::array();
  for (const auto& w : v) arr.push_back(element_json(w, wy));
  return arr;
}

Json nodeset_json(const NodeSet& s) { return Json(s.nodes()); }

Json witness_json(const std::vector<WitnessStep>& steps) {
  Json arr = Json::array();
  for (const auto& st : steps) {
    Json j;
    switch (st.kind) {
      case WitnessStep::Cyclic: j["kind"] = "cyclic"; break;
      case WitnessStep::DropConj: j["kind"] = "drop-conj"; break;
      case WitnessStep::DropLeft: j["kind"] = "drop-left"; break;
      case WitnessStep::Base: j["kind"] = "base"; break;
    }
    if (st.s >= 0) j["s"] = st.s;
    arr.push_back(j);
  }
  return arr;
}

Json stratum_json(const StratumDescriptor& d, const CoxeterDatum& datum) {
  Weyl& wy = datum.weyl();
  Json j;
  j["w"] = element_json(d.w, wy);
  j["support"] = nodeset_json(d.support);
  j["i_set"] = nodeset_json(d.i_set);
  j["parahoric_type"] = nodeset_json(d.parahoric_type);
  Json res = Json::array();
  for (const auto& rc : d.residual) {
    Json c;
    c["type"] = rc.type_name;
    c["nodes"] = rc.nodes;
    res.push_back(c);
  }
  j["residual"] = res;
  Json frob = Json::object();
  auto supp_nodes = d.support.nodes();
  for (size_t i = 0; i < supp_nodes.size(); ++i)
    frob[std::to_string(supp_nodes[i])] = d.residual_frobenius[i];
  j["residual_frobenius"] = frob;
  j["dl_element"] = element_json(d.dl_element, wy);
  j["dimension"] = d.dimension;
  if (d.smooth) j["smooth"] = *d.smooth;
  return j;
}

Json orbits_json(const std::vector<NodeSet>& orbits) {
  Json arr = Json::array();
  for (const auto& o : orbits) arr.push_back(o.nodes());
  return arr;
}

Json sweep_row_json(const SweepRow& row) {
  Json j;
  j["type"] = row.datum.rd().type_str();
  j["sigma"] = row.sigma_name;
  j["sigma_perm"] = row.datum.sigma().node_perm();
  j["mu"] = row.mu_coeffs;
  j["K"] = nodeset_json(row.datum.k_set());
  j["k_adm_0"] = elements_json(row.level0, row.datum.weyl());
  j["sigma_orbits"] = orbits_json(row.sigma_orbits);
  j["ad_tau_sigma_orbits"] = orbits_json(row.ad_tau_sigma_orbits);
  j["rank_j_tau"] = row.rank_j;
  return j;
}

std::string element_str_compact(const WeylElement& w, Weyl& wy) {
  ReducedWord rw = wy.reduced_word(w);
  std::string s;
  size_t i = 0;
  while (i < rw.letters.size()) {
    size_t j = i;
    while (j + 1 < rw.letters.size() && rw.letters[j + 1] == rw.letters[j] - 1) ++j;
    if (!s.empty()) s += " ";
    if (j - i >= 2)
      s += "s[" + std::to_string(rw.letters[i]) + "," + std::to_string(rw.letters[j]) + "]";
    else
      for (size_t k = i; k <= j; ++k)
        s += (k > i ? " s" : "s") + std::to_string(rw.letters[k]);
    i = j + 1;
  }
  if (rw.omega_name != "1") {
    if (!s.empty()) s += " . ";
    s += rw.omega_name;
  }
  return s.empty() ? "1" : s;
}

}  // namespace adlv
