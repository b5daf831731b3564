#pragma once

#include <unordered_map>
#include <vector>

#include "adlv/datum.hpp"

namespace adlv {

// Elements of the extended affine Weyl group below some translation of the
// mu-orbit in Bruhat order, together with the level-K refinements.
// Sets are kept in canonical order: by (length, canonical word, omega name).
class AdmissibleSets {
 public:
  explicit AdmissibleSets(const CoxeterDatum& datum, long long budget = 40);

  const CoxeterDatum& datum() const { return datum_; }
  const std::vector<WeylElement>& adm() const { return adm_; }
  const std::vector<WeylElement>& k_adm() const { return k_adm_; }
  const std::vector<WeylElement>& k_adm_0() const { return k_adm_0_; }
  const std::vector<WeylElement>& k_cox() const { return k_cox_; }

  NodeSet support(const WeylElement& w) const;       // sigma-support
  bool twisted_coxeter(const WeylElement& w) const;  // at most one letter per orbit
  bool contains(const WeylElement& w) const;

 private:
  CoxeterDatum datum_;
  std::vector<WeylElement> adm_, k_adm_, k_adm_0_, k_cox_;
  mutable std::unordered_map<WeylElement, NodeSet, ElemHash> support_cache_;
};

std::vector<WeylElement> canonical_sort(std::vector<WeylElement> v, const Weyl& wy);

// the W_0-orbit of a coweight, deterministically ordered
std::vector<Vec> coweight_orbit(const RootDatum& rd, const Vec& v);

std::vector<WeylElement> adm(const CoxeterDatum& datum, long long budget = 40);
std::vector<WeylElement> k_adm(const CoxeterDatum& datum, long long budget = 40);
std::vector<WeylElement> k_adm_0(const CoxeterDatum& datum, long long budget = 40);
std::vector<WeylElement> k_cox(const CoxeterDatum& datum, long long budget = 40);

NodeSet sigma_support(const WeylElement& w, const CoxeterDatum& datum);
bool is_twisted_coxeter(const WeylElement& w, const CoxeterDatum& datum);

// full Hodge-Newton surrogate (the triple inequality) together with the
// set equality k_cox == k_adm_0; products are handled factor by factor
bool is_coxeter_type_direct(const CoxeterDatum& datum, long long budget = 40);

}  // namespace adlv
