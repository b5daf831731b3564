#pragma once

#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "adlv/admissible.hpp"
#include "adlv/datum.hpp"

namespace adlv {

// dimension of one twisted orbit variety; empty set is a distinct state
struct DimStatus {
  bool nonempty = false;
  int dim = -1;

  bool operator==(const DimStatus& o) const {
    return nonempty == o.nonempty && (!nonempty || dim == o.dim);
  }
};

struct WitnessStep {
  int s;
  enum Kind { Cyclic, DropConj, DropLeft, Base } kind;
};

// Memoized reduction: length-preserving twisted conjugations walk each
// length level, a length-dropping conjugation splits into the two shorter
// branches, and minimal-length elements are decided by the class invariants
// (component label and Newton point) against the basic class of the datum.
class DimTable {
 public:
  explicit DimTable(const CoxeterDatum& datum, size_t node_budget = 4000000);

  const CoxeterDatum& datum() const { return datum_; }

  DimStatus dim_x_w(const WeylElement& w);
  std::vector<WitnessStep> witness(const WeylElement& w);

  // some minimal-length element of the twisted conjugacy class, with the
  // non-increasing move chain that reaches it
  std::pair<WeylElement, std::vector<WitnessStep>> reach_minimal(const WeylElement& x);

  // x must be of minimal length in its twisted class
  DimStatus base_case(const WeylElement& x) const;

  // permutes the move-exploration order (for path-independence checks)
  void set_move_seed(uint64_t seed);

  size_t memo_size() const { return memo_.size(); }

 private:
  struct LevelScan {
    std::vector<WeylElement> cls;  // the reachable level, in discovery order
    std::optional<std::pair<size_t, int>> drop;  // (index into cls, node)
    std::vector<std::pair<int, int>> parent;     // (parent index, node) per element
  };
  LevelScan scan_level(const WeylElement& x) const;
  DimStatus compute(const WeylElement& w, int depth);

  CoxeterDatum datum_;
  std::vector<WeylElement> refl_;
  Vec tau_class_;
  Vec tau_newton_;
  std::vector<int> node_order_;
  size_t budget_;
  std::unordered_map<WeylElement, DimStatus, ElemHash> memo_;
};

struct DimResult {
  int value = -1;          // max stratum dimension over the level set
  bool exact = true;       // false when the datum fails the triple inequality
  WeylElement achiever;    // an element attaining the maximum
};

// dimension of the level-K union: max over the K-minimal admissible
// elements of the per-element dimensions
DimResult dim_x_mu_tau_k(const CoxeterDatum& datum, long long budget = 40);
bool dim_equals_rank(const CoxeterDatum& datum, long long budget = 40);

}  // namespace adlv
