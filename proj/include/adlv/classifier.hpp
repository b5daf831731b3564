#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adlv/datum.hpp"

namespace adlv {

// A triple (xi, J, K') entering the level-K inequality test: xi in the
// finite Weyl orbit of mu, J a maximal proper sigma-stable node subset,
// K' sigma-stable with K <= K' <= J, t^xi of minimal length in W_{K'} t^xi,
// and the averaged restriction of xi lying in the K'-coroot span.
struct AdmissibleTriple {
  Vec xi;
  NodeSet j;
  NodeSet k_prime;
};

// restriction of xi to the J-coroot span: the unique vector there with the
// same pairings against the roots attached to J
Vec xi_j(const RootDatum& rd, const Vec& xi, const NodeSet& j);

// average over the cyclic group generated by the linear part of sigma
Vec sigma_average(const Vec& v, const DiagramAutomorphism& sigma);

// minimal sigma-stable subset of k_prime whose coroot span contains the
// averaged restriction of xi
NodeSet k_xi(const RootDatum& rd, const DiagramAutomorphism& sigma, const Vec& xi,
             const NodeSet& j, const NodeSet& k_prime);

bool triple_is_admissible(const CoxeterDatum& datum, const AdmissibleTriple& t);

// semisimple rank of the twisted centralizer: orbits of Ad(tau) o sigma on
// the node universe, minus one; requires a quasi-simple datum
int rank_ss_j_tau(const CoxeterDatum& datum);

struct ConditionWitness {
  bool holds = true;
  bool rank_prefilter_failed = false;  // <mu,2rho> > 2 * absolute rank
  std::optional<AdmissibleTriple> triple;
  long long lhs = 0, rhs = 0;
  std::string str(const CoxeterDatum& datum) const;
};

// the inequality <mu,2rho> <= #{sigma-orbits of K'_xi} + rank_ss(J_tau)
// over all admissible triples with K' containing the datum's K
ConditionWitness check_condition_3(const CoxeterDatum& datum);

// a twisted Coxeter element c of W_{K_xi} with l(t^xi c) = l(t^xi) - l(c);
// the returned element t^xi c is K-minimal, admissible, with central
// Newton point (all verified)
WeylElement find_coxeter_witness(const CoxeterDatum& datum, const AdmissibleTriple& t);

struct SweepRow {
  CoxeterDatum datum;            // with the minimal K
  std::string sigma_name;
  std::vector<long long> mu_coeffs;
  std::vector<WeylElement> level0;  // k_adm_0 at the minimal K
  std::vector<NodeSet> sigma_orbits, ad_tau_sigma_orbits;
  int rank_j = 0;
};

// classification of the irreducible data (single components and swapped
// identical pairs) admitting a level of Coxeter type, with minimal K,
// deduplicated up to affine diagram isomorphism
std::vector<SweepRow> classify_sweep(int max_rank, long long budget = 40);

// canonical isomorphism-class key of (type, sigma, mu-class, K)
std::string datum_iso_key(const CoxeterDatum& datum);

// display name for an enumerated automorphism (matches the named catalog
// where possible)
std::string identify_automorphism(std::shared_ptr<const RootDatum> rd,
                                  const DiagramAutomorphism& sigma);

}  // namespace adlv
