#pragma once

#include <map>
#include <string>
#include <vector>

#include "adlv/datum.hpp"

namespace adlv {

// the self-dual partition in the n x n square attached to an increasing
// tuple (d_1 < ... < d_n), d_i in [1, 2n+1] - {n+1}, no two summing to 2n+2
std::vector<int> partition_from_d(const std::vector<int>& d, int n);

// k x k square (all parts equal, as many parts as their value), or a hook
// (one row plus a column); the empty partition is a degenerate square
bool is_square_or_hook(const std::vector<int>& partition);

struct SmoothnessVerdict {
  bool smooth = true;
  std::vector<std::string> trace;  // one terminal rule per factor
};

// smoothness of the closure of the stratum of w, with the orientation
// taken from the datum
SmoothnessVerdict stratum_smoothness(const WeylElement& w, const CoxeterDatum& datum);

struct OrientedVerdict {
  std::map<int, bool> is_long;  // assignment of the classed end nodes
  bool intrinsic = false;
  SmoothnessVerdict verdict;
};

// one verdict when the orientation was given explicitly, otherwise one per
// assignment of the classed ends (the intrinsic one marked)
std::vector<OrientedVerdict> stratum_smoothness_oriented(const WeylElement& w,
                                                         const CoxeterDatum& datum);

}  // namespace adlv
