#include "adlv/admissible.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "adlv/classifier.hpp"

namespace adlv {

std::vector<WeylElement> canonical_sort(std::vector<WeylElement> v, const Weyl& wy) {
  std::vector<std::pair<std::vector<int>, size_t>> keys;
  keys.reserve(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    ReducedWord rw = wy.reduced_word(v[i]);
    std::vector<int> key;
    key.push_back(v[i].length());
    for (int s : rw.letters) key.push_back(s);
    key.push_back(-1);
    for (char ch : rw.omega_name) key.push_back(ch);
    keys.emplace_back(std::move(key), i);
  }
  std::sort(keys.begin(), keys.end());
  std::vector<WeylElement> out;
  out.reserve(v.size());
  for (const auto& [k, i] : keys) out.push_back(v[i]);
  return out;
}

std::vector<Vec> coweight_orbit(const RootDatum& rd, const Vec& v) {
  std::set<std::vector<std::pair<long long, long long>>> seen;
  auto key = [](const Vec& x) {
    std::vector<std::pair<long long, long long>> k;
    for (const auto& r : x) k.emplace_back(r.num, r.den);
    return k;
  };
  std::vector<Vec> orbit = {v};
  seen.insert(key(v));
  for (size_t i = 0; i < orbit.size(); ++i)
    for (int s : rd.finite_nodes().nodes()) {
      Vec img = rd.reflect(s, orbit[i]);
      if (seen.insert(key(img)).second) orbit.push_back(img);
    }
  std::sort(orbit.begin(), orbit.end(), [&](const Vec& a, const Vec& b) { return key(a) < key(b); });
  return orbit;
}

AdmissibleSets::AdmissibleSets(const CoxeterDatum& datum, long long budget) : datum_(datum) {
  Weyl& wy = datum_.weyl();
  long long len = datum_.mu_two_rho();
  if (len > budget)
    throw std::runtime_error("admissible set enumeration refused: <mu,2rho> = " +
                             std::to_string(len) + " exceeds budget " + std::to_string(budget));

  // all elements below a translation of the orbit: products of subsequences
  // of a reduced word of each t^xi, deduplicated
  std::unordered_set<WeylElement, ElemHash> all;
  for (const Vec& xi : coweight_orbit(datum_.rd(), datum_.mu())) {
    WeylElement t = wy.translation(xi);
    ReducedWord rw = wy.reduced_word(t);
    std::vector<WeylElement> prefix = {wy.identity()};
    std::unordered_set<WeylElement, ElemHash> seen(prefix.begin(), prefix.end());
    for (int s : rw.letters) {
      WeylElement refl = wy.simple_reflection(s);
      size_t n = prefix.size();
      for (size_t i = 0; i < n; ++i) {
        WeylElement ext = wy.multiply(prefix[i], refl);
        if (seen.insert(ext).second) prefix.push_back(ext);
      }
    }
    for (const WeylElement& p : prefix) all.insert(wy.multiply(p, rw.omega));
  }
  adm_ = canonical_sort(std::vector<WeylElement>(all.begin(), all.end()), wy);

  for (const WeylElement& w : adm_)
    if (wy.is_in_kw(w, datum_.k_set())) k_adm_.push_back(w);
  for (const WeylElement& w : k_adm_)
    if (datum_.rd().spans_finite(support(w))) k_adm_0_.push_back(w);
  for (const WeylElement& w : k_adm_0_)
    if (twisted_coxeter(w)) k_cox_.push_back(w);
}

NodeSet AdmissibleSets::support(const WeylElement& w) const {
  auto it = support_cache_.find(w);
  if (it != support_cache_.end()) return it->second;
  NodeSet s = sigma_support(w, datum_);
  support_cache_.emplace(w, s);
  return s;
}

bool AdmissibleSets::twisted_coxeter(const WeylElement& w) const {
  return is_twisted_coxeter(w, datum_);
}

bool AdmissibleSets::contains(const WeylElement& w) const {
  return std::find(adm_.begin(), adm_.end(), w) != adm_.end();
}

NodeSet sigma_support(const WeylElement& w, const CoxeterDatum& datum) {
  Weyl& wy = datum.weyl();
  WeylElement omega = wy.omega_of(w);
  ReducedWord rw = wy.reduced_word(wy.multiply(w, wy.inverse(omega)));
  NodeSet s;
  for (int letter : rw.letters) s.add(letter);
  // close under Ad(omega) o sigma
  std::vector<int> ad = wy.ad_node_perm(omega);
  const auto& sp = datum.sigma().node_perm();
  bool grew = true;
  while (grew) {
    grew = false;
    for (int x : s.nodes()) {
      int y = ad[sp[x]];
      if (!s.contains(y)) {
        s.add(y);
        grew = true;
      }
    }
  }
  return s;
}

bool is_twisted_coxeter(const WeylElement& w, const CoxeterDatum& datum) {
  Weyl& wy = datum.weyl();
  WeylElement omega = wy.omega_of(w);
  ReducedWord rw = wy.reduced_word(wy.multiply(w, wy.inverse(omega)));
  std::vector<int> ad = wy.ad_node_perm(omega);
  const auto& sp = datum.sigma().node_perm();
  std::vector<int> perm(ad.size());
  for (size_t x = 0; x < perm.size(); ++x) perm[x] = ad[sp[x]];
  std::vector<int> hits(datum.rd().num_nodes(), 0);
  for (int letter : rw.letters) {
    int t = letter;
    do {
      if (++hits[t] > 1) return false;
      t = perm[t];
    } while (t != letter);
  }
  return true;
}

std::vector<WeylElement> adm(const CoxeterDatum& datum, long long budget) {
  return AdmissibleSets(datum, budget).adm();
}
std::vector<WeylElement> k_adm(const CoxeterDatum& datum, long long budget) {
  return AdmissibleSets(datum, budget).k_adm();
}
std::vector<WeylElement> k_adm_0(const CoxeterDatum& datum, long long budget) {
  return AdmissibleSets(datum, budget).k_adm_0();
}
std::vector<WeylElement> k_cox(const CoxeterDatum& datum, long long budget) {
  return AdmissibleSets(datum, budget).k_cox();
}

bool is_coxeter_type_direct(const CoxeterDatum& datum, long long budget) {
  for (const CoxeterDatum& factor : datum.irreducible_factors()) {
    if (!check_condition_3(factor).holds) return false;
    AdmissibleSets sets(factor, budget);
    if (sets.k_cox() != sets.k_adm_0()) return false;
  }
  return true;
}

}  // namespace adlv
