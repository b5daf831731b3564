#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "adlv/admissible.hpp"
#include "adlv/datum.hpp"

namespace testing_support {

using namespace adlv;

// word length by breadth-first search from the length-zero elements;
// independent of the Iwahori-Matsumoto formula used by the library
struct BfsLengths {
  std::map<WeylElement, int> depth;

  BfsLengths(Weyl& wy, int max_len) {
    std::vector<WeylElement> frontier;
    for (const auto& info : wy.rd().omega_classes()) {
      WeylElement om = wy.omega_element(info.frac);
      depth[om] = 0;
      frontier.push_back(om);
    }
    for (int l = 1; l <= max_len; ++l) {
      std::vector<WeylElement> next;
      for (const auto& w : frontier)
        for (int s = 0; s < wy.rd().num_nodes(); ++s) {
          WeylElement sw = wy.multiply(wy.simple_reflection(s), w);
          if (depth.emplace(sw, l).second) next.push_back(sw);
        }
      frontier = std::move(next);
    }
  }
};

// Bruhat comparison by subsequence products of a fixed reduced word of y
inline bool subword_leq(Weyl& wy, const WeylElement& x, const WeylElement& y) {
  if (!(wy.kottwitz(x) == wy.kottwitz(y))) return false;
  ReducedWord rw = wy.reduced_word(y);
  WeylElement target = wy.multiply(x, wy.inverse(rw.omega));
  std::set<WeylElement> products = {wy.identity()};
  for (int s : rw.letters) {
    std::set<WeylElement> next = products;
    for (const auto& p : products) next.insert(wy.multiply(p, wy.simple_reflection(s)));
    products = std::move(next);
  }
  return products.count(target) > 0;
}

// minimal length over the full coset W_K w
inline WeylElement coset_min_scan(Weyl& wy, const WeylElement& w, const NodeSet& k) {
  WeylElement best = w;
  for (const auto& u : wy.enumerate_subgroup(k)) {
    WeylElement uw = wy.multiply(u, w);
    if (uw.length() < best.length()) best = uw;
  }
  return best;
}

// minimal length in the twisted conjugacy class, by exhaustive closure
// within the length ball of x
inline int class_min_length_scan(const CoxeterDatum& datum, const WeylElement& x) {
  Weyl& wy = datum.weyl();
  std::set<WeylElement> seen = {x};
  std::vector<WeylElement> queue = {x};
  int best = x.length();
  for (size_t i = 0; i < queue.size(); ++i)
    for (int s = 0; s < datum.rd().num_nodes(); ++s) {
      WeylElement y = wy.multiply(wy.multiply(wy.simple_reflection(s), queue[i]),
                                  wy.simple_reflection(datum.sigma().node(s)));
      if (y.length() <= x.length() && seen.insert(y).second) {
        best = std::min(best, y.length());
        queue.push_back(y);
      }
    }
  return best;
}

inline CoxeterDatum datum(const std::string& text) { return parse_datum(text); }

inline bool same_set(std::vector<WeylElement> a, std::vector<WeylElement> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

// w = s_{i1} ... s_{ik} omega built from local letters
inline WeylElement word(Weyl& wy, const std::vector<int>& letters,
                        const WeylElement& omega) {
  return wy.from_word(letters, omega);
}

inline WeylElement word(Weyl& wy, const std::vector<int>& letters) {
  return wy.from_word(letters, wy.identity());
}

}  // namespace testing_support
