#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "adlv/weyl.hpp"

namespace adlv {

// Length classes of the oriented local diagram at the classed ends of
// B/C components. Keys are global node ids; value true means long.
struct Orientation {
  std::map<int, bool> is_long;
  bool explicitly_set = false;
};

// The quadruple (W_a, sigma, mu, K) plus an optional orientation.
class CoxeterDatum {
 public:
  CoxeterDatum(std::shared_ptr<Weyl> weyl, DiagramAutomorphism sigma, Vec mu, NodeSet k,
               std::optional<Orientation> orient = std::nullopt);

  const RootDatum& rd() const { return weyl_->rd(); }
  std::shared_ptr<const RootDatum> rd_ptr() const { return weyl_->rd_ptr(); }
  Weyl& weyl() const { return *weyl_; }
  std::shared_ptr<Weyl> weyl_ptr() const { return weyl_; }
  const DiagramAutomorphism& sigma() const { return sigma_; }
  const Vec& mu() const { return mu_; }
  const NodeSet& k_set() const { return k_; }
  const Orientation& orientation() const { return orientation_; }

  const WeylElement& tau() const { return tau_; }
  const WeylElement& t_mu() const { return t_mu_; }
  const DiagramAutomorphism& ad_tau_sigma() const { return ad_tau_sigma_; }
  long long mu_two_rho() const;

  bool quasi_simple() const;  // sigma transitive on the components
  // decomposition along the sigma-orbits of components
  std::vector<CoxeterDatum> irreducible_factors() const;

  // end nodes of B/C components carrying a length class
  std::vector<int> classed_end_nodes() const;
  bool node_is_long(int s) const;

  CoxeterDatum with_k(const NodeSet& k) const;
  CoxeterDatum with_orientation(const Orientation& o) const;

  std::string str() const;

 private:
  std::shared_ptr<Weyl> weyl_;
  DiagramAutomorphism sigma_;
  Vec mu_;
  NodeSet k_;
  Orientation orientation_;
  WeylElement tau_, t_mu_;
  DiagramAutomorphism ad_tau_sigma_;
};

// Parse the datum grammar, e.g.
//   A3:id:mu=[0,1,0]:K={1,2}
//   C2:Ad(tau2):mu=[0,1]:K={0,2}
//   A3xA3:swap:mu=[1,0,0];[0,0,1]:K={1,2,3};{1,2,3}
//   C2:id:mu=[1,0]:K={1}:orient=0=short,2=short
// B2 inputs are normalized to C2 (nodes 1 and 2 exchanged).
CoxeterDatum parse_datum(const std::string& text);
std::string render_datum(const CoxeterDatum& d);

}  // namespace adlv
