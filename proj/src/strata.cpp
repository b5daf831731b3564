#include "adlv/strata.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace adlv {

NodeSet i_set_general(const WeylElement& w, const CoxeterDatum& datum) {
  Weyl& wy = datum.weyl();
  const RootDatum& rd = datum.rd();
  std::vector<WeylElement> simples;
  for (int t = 0; t < rd.num_nodes(); ++t) simples.push_back(wy.simple_reflection(t));
  WeylElement winv = wy.inverse(w);
  NodeSet cur = datum.k_set();
  while (true) {
    NodeSet next;
    for (int s : cur.nodes()) {
      WeylElement conj = wy.multiply(wy.multiply(w, simples[datum.sigma().node(s)]), winv);
      for (int t : cur.nodes())
        if (conj == simples[t]) {
          next.add(s);
          break;
        }
    }
    if (next == cur) return cur;
    cur = next;
  }
}

NodeSet i_set_coxeter(const WeylElement& w, const CoxeterDatum& datum) {
  if (!is_twisted_coxeter(w, datum))
    throw std::invalid_argument("i_set_coxeter: element is not twisted Coxeter");
  const RootDatum& rd = datum.rd();
  NodeSet supp = sigma_support(w, datum);
  if (!rd.spans_finite(supp))
    throw std::invalid_argument("i_set_coxeter: support spans an infinite subgroup");
  NodeSet out;
  for (int s : datum.k_set().minus(supp).nodes()) {
    bool commutes = true;
    for (int t : supp.nodes())
      if (rd.adjacent(s, t)) {
        commutes = false;
        break;
      }
    if (!commutes) continue;
    if (datum.ad_tau_sigma().orbit_of(s).subset_of(datum.k_set())) out.add(s);
  }
  return out;
}

namespace {

bool closure_leq_with(const WeylElement& w1, const WeylElement& w2, const CoxeterDatum& datum,
                      const std::vector<WeylElement>& wk) {
  Weyl& wy = datum.weyl();
  for (const WeylElement& u : wk) {
    WeylElement conj =
        wy.multiply(wy.multiply(wy.inverse(u), w1), wy.apply_sigma(datum.sigma(), u));
    if (wy.bruhat_leq(conj, w2)) return true;
  }
  return false;
}

}  // namespace

bool closure_leq(const WeylElement& w1, const WeylElement& w2, const CoxeterDatum& datum,
                 size_t wk_budget) {
  auto wk = datum.weyl().enumerate_subgroup(datum.k_set(), wk_budget);
  return closure_leq_with(w1, w2, datum, wk);
}

NodeSet recover_support(const NodeSet& union_set, const NodeSet& k, const RootDatum& rd,
                        const DiagramAutomorphism& twist) {
  NodeSet out;
  for (const NodeSet& comp : rd.connected_components(union_set))
    if (!comp.minus(k).empty()) out = out.unite(comp);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int s : out.nodes()) {
      int t = twist.node(s);
      if (union_set.contains(t) && !out.contains(t)) {
        out.add(t);
        grew = true;
      }
    }
  }
  return out;
}

std::string classify_finite_type(const RootDatum& rd, const NodeSet& conn) {
  auto nodes = conn.nodes();
  int r = static_cast<int>(nodes.size());
  if (r == 0) return "";
  if (r == 1) return "A1";
  int max_bond = 0;
  std::vector<int> degree(nodes.size(), 0);
  for (size_t i = 0; i < nodes.size(); ++i)
    for (size_t j = 0; j < nodes.size(); ++j) {
      if (i == j) continue;
      int bond = static_cast<int>(rd.cartan(nodes[i], nodes[j]) * rd.cartan(nodes[j], nodes[i]));
      if (bond > 0) ++degree[i];
      max_bond = std::max(max_bond, bond);
    }
  int branches = 0, ends = 0;
  for (int d : degree) {
    if (d >= 3) ++branches;
    if (d == 1) ++ends;
  }
  if (max_bond == 3) return "G2";
  if (max_bond == 2) {
    if (branches > 0) return "?" + std::to_string(r);
    if (r == 2) return "C2";
    // double bond must sit at an end of the path; its outer node decides B vs C
    for (size_t i = 0; i < nodes.size(); ++i) {
      if (degree[i] != 1) continue;
      for (size_t j = 0; j < nodes.size(); ++j) {
        int bond = static_cast<int>(rd.cartan(nodes[i], nodes[j]) * rd.cartan(nodes[j], nodes[i]));
        if (i != j && bond == 2) {
          Vec a = rd.alpha_vec(nodes[i]);
          Vec b = rd.alpha_vec(nodes[j]);
          return (dot(a, a) < dot(b, b) ? "B" : "C") + std::to_string(r);
        }
      }
    }
    return "F" + std::to_string(r);
  }
  if (branches == 0) return "A" + std::to_string(r);
  if (branches == 1) {
    // arm lengths from the branch node
    size_t center = 0;
    for (size_t i = 0; i < nodes.size(); ++i)
      if (degree[i] >= 3) center = i;
    std::vector<int> arms;
    for (size_t i = 0; i < nodes.size(); ++i) {
      if (i == center || !rd.adjacent(nodes[i], nodes[center])) continue;
      int len = 1;
      int prev = nodes[center], cur = nodes[i];
      while (true) {
        int next = -1;
        for (int t : conn.nodes())
          if (t != prev && rd.adjacent(t, cur)) next = t;
        if (next < 0) break;
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms.size() == 3 && arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(r);
    if (arms.size() == 3 && arms[0] == 1 && arms[1] == 2) return "E" + std::to_string(r);
  }
  return "?" + std::to_string(r);
}

StrataPoset strata_poset(const CoxeterDatum& datum, long long budget) {
  Weyl& wy = datum.weyl();
  const RootDatum& rd = datum.rd();
  AdmissibleSets sets(datum, budget);
  StrataPoset out;
  out.coxeter_type = is_coxeter_type_direct(datum, budget);

  WeylElement tau_inv = wy.inverse(datum.tau());
  for (const WeylElement& w : sets.k_adm_0()) {
    StratumDescriptor d;
    d.w = w;
    d.support = sets.support(w);
    d.i_set = i_set_general(w, datum);
    d.parahoric_type = d.support.unite(d.i_set);
    for (const NodeSet& comp : rd.connected_components(d.support))
      d.residual.push_back({classify_finite_type(rd, comp), comp.nodes()});
    for (int s : d.support.nodes()) d.residual_frobenius.push_back(datum.ad_tau_sigma().node(s));
    d.dl_element = wy.multiply(w, tau_inv);
    d.dimension = w.length();
    out.strata.push_back(std::move(d));
  }

  // the parahoric subgroup attached to a stratum is finite, its index set
  // is disjoint from the support, and in the Coxeter case the support is
  // recovered from the union
  for (const auto& d : out.strata) {
    if (!rd.spans_finite(d.parahoric_type))
      throw std::logic_error("stratum parahoric type spans an infinite subgroup");
    if (!d.i_set.intersect(d.support).empty())
      throw std::logic_error("stratum index set meets the support");
    if (out.coxeter_type &&
        !(recover_support(d.parahoric_type, datum.k_set(), rd, datum.ad_tau_sigma()) == d.support))
      throw std::logic_error("support not recoverable from the parahoric type");
  }
  if (out.coxeter_type) {
    for (size_t i = 0; i < out.strata.size(); ++i)
      for (size_t j = i + 1; j < out.strata.size(); ++j)
        if (out.strata[i].parahoric_type == out.strata[j].parahoric_type)
          throw std::logic_error("two strata share a parahoric type");
  }

  // closure order and its covers
  size_t n = out.strata.size();
  auto wk = wy.enumerate_subgroup(datum.k_set());
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      leq[i][j] = closure_leq_with(out.strata[i].w, out.strata[j].w, datum, wk);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j || !leq[i][j]) continue;
      bool cover = true;
      for (size_t m = 0; m < n && cover; ++m)
        if (m != i && m != j && leq[i][m] && leq[m][j]) cover = false;
      if (cover) out.hasse.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return out;
}

std::string poset_dot(const StrataPoset& poset, const CoxeterDatum& datum) {
  Weyl& wy = datum.weyl();
  std::ostringstream os;
  os << "digraph strata {\n  rankdir=BT;\n";
  for (size_t i = 0; i < poset.strata.size(); ++i) {
    const auto& d = poset.strata[i];
    os << "  n" << i << " [label=\"" << wy.element_str(d.w) << "\\nsupp="
       << d.support.str() << " dim=" << d.dimension << "\"];\n";
  }
  for (const auto& [below, above] : poset.hasse)
    os << "  n" << below << " -> n" << above << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace adlv
