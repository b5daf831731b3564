#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "adlv/linalg.hpp"

namespace adlv {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct ComponentSpec {
  Family family;
  int rank;  // finite rank; node labels 0..rank with 0 the affine node
  bool operator==(const ComponentSpec& o) const { return family == o.family && rank == o.rank; }
};

// An affine type: ordered list of irreducible components.
// B2 is normalized to C2 at construction (identical Coxeter systems).
struct AffineType {
  std::vector<ComponentSpec> components;

  static AffineType single(Family f, int rank) { return AffineType{{{f, rank}}}; }
  std::string str() const;
  bool operator==(const AffineType& o) const { return components == o.components; }
};

// Subset of the affine node universe, as a bitset over global node ids.
struct NodeSet {
  uint64_t bits = 0;

  static NodeSet full(int n) { return NodeSet{n >= 64 ? ~0ull : ((1ull << n) - 1)}; }
  bool contains(int s) const { return (bits >> s) & 1; }
  void add(int s) { bits |= 1ull << s; }
  void remove(int s) { bits &= ~(1ull << s); }
  int size() const { return __builtin_popcountll(bits); }
  bool empty() const { return bits == 0; }
  bool subset_of(const NodeSet& o) const { return (bits & ~o.bits) == 0; }
  NodeSet unite(const NodeSet& o) const { return NodeSet{bits | o.bits}; }
  NodeSet intersect(const NodeSet& o) const { return NodeSet{bits & o.bits}; }
  NodeSet minus(const NodeSet& o) const { return NodeSet{bits & ~o.bits}; }
  bool operator==(const NodeSet& o) const { return bits == o.bits; }
  bool operator!=(const NodeSet& o) const { return bits != o.bits; }
  bool operator<(const NodeSet& o) const { return bits < o.bits; }
  std::vector<int> nodes() const {
    std::vector<int> r;
    for (int s = 0; s < 64; ++s)
      if (contains(s)) r.push_back(s);
    return r;
  }
  std::string str() const;
};

// Exact realization of the (reduced) root system of an affine type:
// roots and coroots in the standard Euclidean coordinates, the affine
// Cartan matrix, rho, fundamental coweights, highest roots, and the
// component-of-units data needed for the length-zero subgroup.
class RootDatum {
 public:
  explicit RootDatum(AffineType t);

  const AffineType& type() const { return type_; }
  std::string type_str() const { return type_.str(); }

  // -- node universe ----------------------------------------------------
  int num_nodes() const { return num_nodes_; }
  int num_components() const { return static_cast<int>(type_.components.size()); }
  int component_of_node(int s) const { return node_component_[s]; }
  int node_offset(int comp) const { return node_offset_[comp]; }
  int coord_offset(int comp) const { return coord_offset_[comp]; }
  int component_dim(int comp) const {
    return (comp + 1 < num_components() ? coord_offset_[comp + 1] : dim_) - coord_offset_[comp];
  }
  int component_rank(int comp) const { return type_.components[comp].rank; }
  bool is_affine_node(int s) const { return s == node_offset_[node_component_[s]]; }
  int local_node(int s) const { return s - node_offset_[node_component_[s]]; }
  NodeSet all_nodes() const { return NodeSet::full(num_nodes_); }
  NodeSet component_nodes(int comp) const;
  NodeSet finite_nodes() const;  // all non-affine nodes

  // affine Cartan matrix  A(s,t) = <alpha_s, alpha_t^vee>
  long long cartan(int s, int t) const { return cartan_[s][t]; }
  bool adjacent(int s, int t) const { return s != t && cartan_[s][t] != 0; }
  std::vector<NodeSet> connected_components(const NodeSet& set) const;
  // true iff the subgroup generated by the set is finite
  // (the set omits at least one node of every component it meets)
  bool spans_finite(const NodeSet& set) const;

  // -- roots -------------------------------------------------------------
  int num_roots() const { return static_cast<int>(roots_.size()); }
  const Vec& root(int r) const { return roots_[r]; }
  const Vec& coroot(int r) const { return coroots_[r]; }
  bool is_positive_root(int r) const { return r < num_positive_; }
  int num_positive_roots() const { return num_positive_; }
  int negate_root(int r) const { return negate_[r]; }
  int root_index(const Vec& v) const;  // -1 if not a root
  int root_component(int r) const { return root_component_[r]; }
  // simple root attached to a finite node
  int simple_root_of_node(int s) const { return node_simple_root_[s]; }
  // alpha_s: the simple root for finite s, minus the highest root for the
  // affine node of the component
  Vec alpha_vec(int s) const;
  int highest_root(int comp) const { return theta_[comp]; }
  // the root subsystem generated by { alpha_s : s in J } (its finite Weyl
  // orbit) and a basis of its coroot span; J must span a finite subgroup
  std::pair<std::vector<int>, std::vector<Vec>> phi_j_data(const NodeSet& j) const;
  // root permutation induced by the reflection in root r
  const std::vector<int16_t>& reflection_perm(int r) const { return reflection_perm_[r]; }
  // reflection attached to node s acting on the coordinate space
  Vec reflect(int s, const Vec& v) const;

  // -- coweights ----------------------------------------------------------
  int dim() const { return dim_; }
  const Vec& fundamental_coweight(int finite_node) const { return fundamental_coweight_[finite_node]; }
  const Vec& two_rho() const { return two_rho_; }
  Rat pair_two_rho(const Vec& cw) const { return dot(cw, two_rho_); }
  Rat pairing(const Vec& cw, const Vec& root_vec) const { return dot(cw, root_vec); }
  // coweight from per-component fundamental-coweight coefficients
  Vec coweight(const std::vector<std::vector<long long>>& coeffs) const;
  // coefficients of v in the basis of simple coroots (v must lie in the span)
  Vec coroot_coefficients(const Vec& v) const;
  bool in_coroot_span(const Vec& v) const;
  bool in_coweight_lattice(const Vec& v) const;  // integral pairing with all roots
  bool is_dominant(const Vec& v) const;
  Vec dominant_rep(Vec v) const;  // dominant representative of the finite Weyl orbit
  std::vector<long long> fundamental_coeffs(const Vec& v) const;  // pairings with simple roots
  bool is_central(const Vec& v, int comp) const;  // orthogonal to the component's roots

  // -- length-zero subgroup data -------------------------------------------
  // canonical label of the class of a coweight in X_* / (coroot lattice),
  // encoded as the fractional parts of its simple-coroot coefficients
  Vec omega_class(const Vec& cw) const;
  // minuscule fundamental nodes per component (local labels)
  const std::vector<int>& minuscule_nodes(int comp) const { return minuscule_[comp]; }
  // representative coweight and display name for each omega class
  struct OmegaClassInfo {
    Vec frac;         // class key
    Vec rep_coweight; // translation representative
    std::string name; // "1", "tau1", "tau1|tau3", ...
  };
  const std::vector<OmegaClassInfo>& omega_classes() const { return omega_classes_; }
  const OmegaClassInfo& omega_class_info(const Vec& frac_key) const;

 private:
  void build_component(int comp);
  void finish();

  AffineType type_;
  int num_nodes_ = 0;
  int dim_ = 0;
  std::vector<int> node_component_, node_offset_, coord_offset_;
  std::vector<Vec> roots_, coroots_;
  std::vector<int> negate_, root_component_;
  int num_positive_ = 0;
  std::vector<int> node_simple_root_;  // finite nodes only (-1 for affine)
  std::vector<int> theta_;             // highest root index per component
  std::vector<std::vector<long long>> cartan_;
  std::vector<std::vector<int16_t>> reflection_perm_;
  std::vector<Vec> fundamental_coweight_;  // per finite node (empty Vec for affine)
  Vec two_rho_;
  Mat finite_cartan_inv_;  // inverse of the finite Cartan matrix (block diagonal)
  std::vector<int> finite_node_list_;
  std::vector<std::vector<int>> minuscule_;
  std::vector<OmegaClassInfo> omega_classes_;
  std::unordered_map<Vec, int, VecHash> root_lookup_;
};

std::shared_ptr<const RootDatum> make_root_datum(const AffineType& t);

}  // namespace adlv
