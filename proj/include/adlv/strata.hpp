#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adlv/admissible.hpp"
#include "adlv/datum.hpp"

namespace adlv {

struct ResidualComponent {
  std::string type_name;   // "A3", "C2", ...
  std::vector<int> nodes;  // global node ids
};

// one stratum type of the level-K union
struct StratumDescriptor {
  WeylElement w;
  NodeSet support;         // sigma-support
  NodeSet i_set;           // maximal Ad(w) o sigma stable subset of K
  NodeSet parahoric_type;  // support + i_set
  std::vector<ResidualComponent> residual;  // typed components of the support
  std::vector<int> residual_frobenius;      // Ad(tau) o sigma restricted to the support
  WeylElement dl_element;                   // w tau^{-1}
  int dimension = 0;
  std::optional<bool> smooth;
};

NodeSet i_set_general(const WeylElement& w, const CoxeterDatum& datum);
// requires w twisted Coxeter with finite support: the orbits in K not
// adjacent to the support
NodeSet i_set_coxeter(const WeylElement& w, const CoxeterDatum& datum);

// w1 below w2 in the closure order: some W_K twisted conjugate of w1 is
// Bruhat-below w2
bool closure_leq(const WeylElement& w1, const WeylElement& w2, const CoxeterDatum& datum,
                 size_t wk_budget = 200000);

// connected components of the union meeting the complement of K, closed
// under the twist Ad(tau) o sigma (the support is twist-stable, and distinct
// diagram components can share one twist orbit)
NodeSet recover_support(const NodeSet& union_set, const NodeSet& k, const RootDatum& rd,
                        const DiagramAutomorphism& twist);

// finite Dynkin type of a connected node subset
std::string classify_finite_type(const RootDatum& rd, const NodeSet& conn);

struct StrataPoset {
  std::vector<StratumDescriptor> strata;       // canonical order
  std::vector<std::pair<int, int>> hasse;      // cover pairs (below, above)
  bool coxeter_type = false;                   // full poset guarantees
};

StrataPoset strata_poset(const CoxeterDatum& datum, long long budget = 40);

std::string poset_dot(const StrataPoset& poset, const CoxeterDatum& datum);

}  // namespace adlv
