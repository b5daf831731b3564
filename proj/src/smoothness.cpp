#include "adlv/smoothness.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "adlv/admissible.hpp"

namespace adlv {

std::vector<int> partition_from_d(const std::vector<int>& d, int n) {
  if (static_cast<int>(d.size()) != n)
    throw std::invalid_argument("partition_from_d: tuple size must be n");
  for (int i = 0; i < n; ++i) {
    if (d[i] < 1 || d[i] > 2 * n + 1 || d[i] == n + 1)
      throw std::invalid_argument("partition_from_d: entry out of range");
    if (i && d[i] <= d[i - 1])
      throw std::invalid_argument("partition_from_d: tuple must be strictly increasing");
    for (int j = 0; j < i; ++j)
      if (d[i] + d[j] == 2 * n + 2)
        throw std::invalid_argument("partition_from_d: entries pair to 2n+2");
  }
  std::vector<int> a(n, 0);
  for (int i = 1; i <= n; ++i) {
    int v = d[i - 1] - i - (d[i - 1] > n + 1 ? 1 : 0);
    a[n - i] = v;
  }
  for (int i = 0; i < n; ++i)
    if (a[i] < 0 || a[i] > n || (i && a[i] > a[i - 1]))
      throw std::logic_error("partition_from_d: result is not a partition in the square");
  return a;
}

bool is_square_or_hook(const std::vector<int>& partition) {
  std::vector<int> a;
  for (int x : partition) {
    if (x < 0) throw std::invalid_argument("negative partition entry");
    if (x > 0) a.push_back(x);
  }
  for (size_t i = 1; i < a.size(); ++i)
    if (a[i] > a[i - 1]) throw std::invalid_argument("entries must be non-increasing");
  if (a.empty()) return true;
  bool square = static_cast<int>(a.size()) == a[0];
  for (int x : a) square = square && x == a[0];
  if (square) return true;
  bool hook = true;
  for (size_t i = 1; i < a.size(); ++i) hook = hook && a[i] == 1;
  return hook;
}

namespace {

int max_double_coset_length(Weyl& wy, const std::vector<WeylElement>& left,
                            const WeylElement& w, const std::vector<WeylElement>& right) {
  int best = -1;
  for (const auto& u : left) {
    WeylElement uw = wy.multiply(u, w);
    for (const auto& v : right) best = std::max(best, wy.multiply(uw, v).length());
  }
  return best;
}

int longest_length(const std::vector<WeylElement>& grp) {
  int best = 0;
  for (const auto& g : grp) best = std::max(best, g.length());
  return best;
}

}  // namespace

SmoothnessVerdict stratum_smoothness(const WeylElement& w, const CoxeterDatum& datum) {
  Weyl& wy = datum.weyl();
  const RootDatum& rd = datum.rd();
  SmoothnessVerdict out;

  if (!wy.is_in_kw(w, datum.k_set()))
    throw std::invalid_argument("stratum_smoothness: element is not K-minimal");
  if (!is_twisted_coxeter(w, datum))
    throw std::invalid_argument("stratum_smoothness: element is not twisted Coxeter");
  NodeSet supp = sigma_support(w, datum);
  if (!rd.spans_finite(supp))
    throw std::invalid_argument("stratum_smoothness: support spans an infinite subgroup");

  if (w.length() <= 1) {
    out.trace.push_back("dimension <= 1: smooth");
    return out;
  }

  // factors: orbits of the twist on the connected components of the support
  auto comps = rd.connected_components(supp);
  const auto& twist = datum.ad_tau_sigma();
  std::vector<int> group(comps.size(), -1);
  int ngroups = 0;
  for (size_t i = 0; i < comps.size(); ++i) {
    if (group[i] >= 0) continue;
    size_t cur = i;
    while (group[cur] < 0) {
      group[cur] = ngroups;
      NodeSet img = twist.apply(comps[cur]);
      for (size_t j = 0; j < comps.size(); ++j)
        if (comps[j] == img) {
          cur = j;
          break;
        }
    }
    ++ngroups;
  }

  ReducedWord rw = wy.reduced_word(wy.multiply(w, wy.inverse(datum.tau())));

  // the one cell handled by the Bruhat test on the closed-up triple product
  bool grassmannian_cell = false;
  if (rd.num_components() == 1 && rd.type().components[0].family == Family::A &&
      datum.sigma().is_identity()) {
    auto coeffs = rd.fundamental_coeffs(datum.mu());
    int rank = rd.component_rank(0);
    grassmannian_cell = rank >= 2 && coeffs.front() == 1 && coeffs.back() == 1 &&
                        std::count(coeffs.begin(), coeffs.end(), 0) == rank - 2;
  }

  for (int g = 0; g < ngroups; ++g) {
    NodeSet factor;
    for (size_t i = 0; i < comps.size(); ++i)
      if (group[i] == g) factor = factor.unite(comps[i]);
    std::vector<int> letters;
    for (int s : rw.letters)
      if (factor.contains(s)) letters.push_back(s);
    int len_f = static_cast<int>(letters.size());
    std::ostringstream tag;
    tag << "factor " << factor.str() << ": ";

    NodeSet q = factor.intersect(datum.k_set());
    NodeSet tq = twist.apply(q);

    // the stratum closure is the closure of the coarse orbit variety; its
    // dimension must match the element length
    {
      WeylElement wf = wy.identity();
      for (int s : letters) wf = wy.multiply(wf, wy.simple_reflection(s));
      if (!wy.is_in_kw(wf, q))
        throw std::logic_error("stratum factor is not minimal for its parabolic");
      auto wq = wy.enumerate_subgroup(q);
      auto wtq = wy.enumerate_subgroup(tq);
      int dim = max_double_coset_length(wy, wq, wf, wtq) - longest_length(wq);
      if (dim != len_f)
        throw std::logic_error("stratum closure dimension mismatch in factor " + factor.str());
    }

    if (len_f <= 1) {
      out.trace.push_back(tag.str() + "dimension <= 1: smooth");
      continue;
    }
    bool closed_orbit = true;
    for (int s : letters) closed_orbit = closed_orbit && tq.contains(s);
    if (closed_orbit) {
      out.trace.push_back(tag.str() + "word inside the twisted parabolic: closed orbit, smooth");
      continue;
    }
    if (q.empty()) {
      out.trace.push_back(tag.str() + "Coxeter element in the full flag variety: smooth");
      continue;
    }
    if (grassmannian_cell) {
      int rank = rd.component_rank(0);
      WeylElement probe = wy.multiply(
          wy.multiply(wy.simple_reflection(0), wy.simple_reflection(1)),
          wy.simple_reflection(rank));
      bool singular = wy.bruhat_leq(probe, w);
      out.trace.push_back(tag.str() + (singular
          ? "Grassmannian factor contains the boundary pattern: singular"
          : "Grassmannian factor avoids the boundary pattern: smooth"));
      out.smooth = out.smooth && !singular;
      continue;
    }
    {
      // end-node factor of a two-length-class diagram
      NodeSet outside = factor.minus(datum.k_set());
      auto ends = datum.classed_end_nodes();
      if (outside.size() == 1 &&
          std::find(ends.begin(), ends.end(), outside.nodes()[0]) != ends.end()) {
        int e = outside.nodes()[0];
        bool lng = datum.node_is_long(e);
        out.trace.push_back(tag.str() + (lng
            ? "minuscule quotient at a long end node, dimension >= 2: singular"
            : "minuscule quotient at a short end node: smooth"));
        out.smooth = out.smooth && !lng;
        continue;
      }
    }
    throw std::runtime_error("stratum_smoothness: unsupported cell for factor " + factor.str());
  }
  return out;
}

std::vector<OrientedVerdict> stratum_smoothness_oriented(const WeylElement& w,
                                                         const CoxeterDatum& datum) {
  std::vector<OrientedVerdict> out;
  if (datum.orientation().explicitly_set || datum.classed_end_nodes().empty()) {
    OrientedVerdict v;
    v.is_long = datum.orientation().is_long;
    v.intrinsic = !datum.orientation().explicitly_set;
    v.verdict = stratum_smoothness(w, datum);
    out.push_back(std::move(v));
    return out;
  }
  auto ends = datum.classed_end_nodes();
  for (uint64_t mask = 0; mask < (1ull << ends.size()); ++mask) {
    Orientation o;
    o.explicitly_set = true;
    for (size_t i = 0; i < ends.size(); ++i) o.is_long[ends[i]] = (mask >> i) & 1;
    CoxeterDatum oriented = datum.with_orientation(o);
    OrientedVerdict v;
    v.is_long = o.is_long;
    v.intrinsic = o.is_long == datum.orientation().is_long;
    v.verdict = stratum_smoothness(w, oriented);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace adlv
