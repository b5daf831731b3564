#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "adlv/root_data.hpp"

namespace adlv {

// Element of the finite Weyl group, stored as its permutation of the roots.
struct W0Perm {
  std::vector<int16_t> img;

  bool is_identity() const {
    for (size_t i = 0; i < img.size(); ++i)
      if (img[i] != static_cast<int16_t>(i)) return false;
    return true;
  }
  bool operator==(const W0Perm& o) const { return img == o.img; }
};

// Element of the extended affine Weyl group in (translation, finite part)
// normal form: w = t^lambda u. Immutable; length computed at construction.
class WeylElement {
 public:
  WeylElement() = default;
  WeylElement(const RootDatum* rd, Vec lambda, W0Perm u);

  const RootDatum* datum() const { return rd_; }
  const Vec& translation() const { return lambda_; }
  const W0Perm& finite_part() const { return u_; }
  int length() const { return len_; }
  bool is_identity() const { return len_ == 0 && is_zero_vec(lambda_) && u_.is_identity(); }

  bool operator==(const WeylElement& o) const {
    return lambda_ == o.lambda_ && u_.img == o.u_.img;
  }
  bool operator!=(const WeylElement& o) const { return !(*this == o); }
  bool operator<(const WeylElement& o) const;

 private:
  const RootDatum* rd_ = nullptr;
  Vec lambda_;
  W0Perm u_;
  int len_ = 0;
};

struct ElemHash {
  size_t operator()(const WeylElement& w) const {
    VecHash vh;
    size_t h = vh(w.translation());
    for (int16_t x : w.finite_part().img) h = h * 131 + static_cast<size_t>(x + 1);
    return h;
  }
};

// A length-preserving automorphism of the extended affine Weyl group,
// given by a node permutation of the affine diagram together with its
// realization as an affine isometry x -> L x + v of the coweight space.
class DiagramAutomorphism {
 public:
  DiagramAutomorphism() = default;
  DiagramAutomorphism(std::shared_ptr<const RootDatum> rd, std::vector<int> node_perm,
                      std::string name);

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  int node(int s) const { return node_perm_[s]; }
  const std::vector<int>& node_perm() const { return node_perm_; }
  NodeSet apply(const NodeSet& s) const;
  const Mat& linear_part() const { return L_; }
  Vec linear_apply(const Vec& v) const { return mat_apply(L_, v); }
  int order() const { return order_; }
  bool is_identity() const;
  bool same_permutation(const DiagramAutomorphism& o) const { return node_perm_ == o.node_perm_; }
  const std::vector<int16_t>& root_perm() const { return root_perm_; }
  const std::vector<int16_t>& root_perm_inv() const { return root_perm_inv_; }
  const Vec& translation_part() const { return v_; }
  const RootDatum* datum() const { return rd_.get(); }

  DiagramAutomorphism compose(const DiagramAutomorphism& inner) const;  // this o inner
  DiagramAutomorphism inverse() const;

  // orbits of the node action, sorted
  std::vector<NodeSet> node_orbits() const;
  NodeSet orbit_of(int s) const;

 private:
  std::shared_ptr<const RootDatum> rd_;
  std::vector<int> node_perm_;
  std::string name_;
  Mat L_;
  Vec v_;
  std::vector<int16_t> root_perm_, root_perm_inv_;
  int order_ = 1;
};

// named automorphisms: "id", "rho<i>" (type A rotations), "sigma0",
// "Ad(tau<i>)", "1sigma0"/"swap" (factor exchange), and "*"-compositions
DiagramAutomorphism named_automorphism(const std::string& name,
                                       std::shared_ptr<const RootDatum> rd);

// every node permutation preserving the affine Cartan matrix
std::vector<DiagramAutomorphism> all_diagram_automorphisms(std::shared_ptr<const RootDatum> rd);

struct ReducedWord {
  std::vector<int> letters;       // simple reflections, left to right
  WeylElement omega;              // trailing length-zero element
  std::string omega_name;
};

struct TwistedMove {
  WeylElement result;
  int length_change;  // -2, 0, +2
};

// Arithmetic context for one root datum. Public operations are pure in
// their arguments; the caches are confined to this object.
class Weyl {
 public:
  explicit Weyl(std::shared_ptr<const RootDatum> rd);

  const RootDatum& rd() const { return *rd_; }
  std::shared_ptr<const RootDatum> rd_ptr() const { return rd_; }

  WeylElement identity() const;
  WeylElement simple_reflection(int s) const;
  WeylElement translation(const Vec& coweight) const;
  WeylElement multiply(const WeylElement& a, const WeylElement& b) const;
  WeylElement inverse(const WeylElement& a) const;
  WeylElement conjugate(const WeylElement& g, const WeylElement& x) const;  // g x g^-1
  Vec act_on_coweight(const W0Perm& u, const Vec& v) const;

  std::vector<int> left_descents(const WeylElement& w) const;
  bool is_left_descent(int s, const WeylElement& w) const;
  ReducedWord reduced_word(const WeylElement& w) const;  // smallest-descent-first
  ReducedWord random_reduced_word(const WeylElement& w, uint64_t seed) const;
  WeylElement from_word(const std::vector<int>& letters, const WeylElement& omega) const;

  bool bruhat_leq(const WeylElement& x, const WeylElement& y) const;

  bool is_in_kw(const WeylElement& w, const NodeSet& k) const;
  WeylElement min_coset_rep(const WeylElement& w, const NodeSet& k) const;

  // length-zero subgroup
  Vec kottwitz(const WeylElement& w) const;  // omega-class key
  std::string omega_name(const Vec& class_key) const;
  WeylElement omega_element(const Vec& class_key) const;
  WeylElement omega_of(const WeylElement& w) const;  // length-0 element of W_a w
  std::vector<int> ad_node_perm(const WeylElement& omega) const;
  DiagramAutomorphism ad_automorphism(const WeylElement& omega) const;

  WeylElement apply_sigma(const DiagramAutomorphism& sigma, const WeylElement& w) const;
  TwistedMove twisted_conj_move(const WeylElement& x, int s,
                                const DiagramAutomorphism& sigma) const;

  // dominant average of the translation parts of the powers of (w sigma)
  Vec newton_point(const WeylElement& w, const DiagramAutomorphism& sigma) const;
  bool newton_is_central(const WeylElement& w, const DiagramAutomorphism& sigma) const;

  std::vector<WeylElement> enumerate_subgroup(const NodeSet& k, size_t budget = 200000) const;

  std::string element_str(const WeylElement& w) const;

 private:
  std::shared_ptr<const RootDatum> rd_;
  mutable std::unordered_map<Vec, WeylElement, VecHash> omega_cache_;
  mutable std::unordered_map<WeylElement, std::vector<int>, ElemHash> ad_perm_cache_;
  struct PairHash {
    size_t operator()(const std::pair<WeylElement, WeylElement>& p) const {
      ElemHash h;
      return h(p.first) * 1000003u ^ h(p.second);
    }
  };
  mutable std::unordered_map<std::pair<WeylElement, WeylElement>, bool, PairHash> bruhat_cache_;
};

std::shared_ptr<Weyl> make_weyl(const AffineType& t);

}  // namespace adlv
