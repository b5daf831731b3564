#include "adlv/dl_reduction.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "adlv/classifier.hpp"

namespace adlv {

DimTable::DimTable(const CoxeterDatum& datum, size_t node_budget)
    : datum_(datum), budget_(node_budget) {
  Weyl& wy = datum_.weyl();
  for (int s = 0; s < datum_.rd().num_nodes(); ++s) refl_.push_back(wy.simple_reflection(s));
  tau_class_ = wy.kottwitz(datum_.tau());
  tau_newton_ = wy.newton_point(datum_.tau(), datum_.sigma());
  node_order_.resize(datum_.rd().num_nodes());
  for (int s = 0; s < datum_.rd().num_nodes(); ++s) node_order_[s] = s;
}

void DimTable::set_move_seed(uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::shuffle(node_order_.begin(), node_order_.end(), rng);
  memo_.clear();
}

DimTable::LevelScan DimTable::scan_level(const WeylElement& x) const {
  Weyl& wy = datum_.weyl();
  LevelScan scan;
  scan.cls.push_back(x);
  scan.parent.emplace_back(-1, -1);
  std::unordered_map<WeylElement, char, ElemHash> seen;
  seen.emplace(x, 1);
  for (size_t i = 0; i < scan.cls.size(); ++i) {
    for (int s : node_order_) {
      WeylElement y = wy.multiply(wy.multiply(refl_[s], scan.cls[i]),
                                  refl_[datum_.sigma().node(s)]);
      int delta = y.length() - scan.cls[i].length();
      if (delta < 0) {
        scan.drop = std::make_pair(i, s);
        return scan;
      }
      if (delta == 0 && seen.emplace(y, 1).second) {
        scan.cls.push_back(y);
        scan.parent.emplace_back(static_cast<int>(i), s);
        if (scan.cls.size() > budget_)
          throw std::runtime_error("twisted-class walk exceeded the node budget");
      }
    }
  }
  return scan;
}

DimStatus DimTable::base_case(const WeylElement& x) const {
  Weyl& wy = datum_.weyl();
  if (!(wy.kottwitz(x) == tau_class_)) return DimStatus{false, -1};
  if (!(wy.newton_point(x, datum_.sigma()) == tau_newton_)) return DimStatus{false, -1};
  long long nu = datum_.rd().pair_two_rho(tau_newton_).to_int();
  return DimStatus{true, static_cast<int>(x.length() - nu)};
}

DimStatus DimTable::compute(const WeylElement& w, int depth) {
  auto it = memo_.find(w);
  if (it != memo_.end()) return it->second;
  if (depth > 4096) throw std::runtime_error("reduction recursion exceeded the depth budget");
  if (!(datum_.weyl().kottwitz(w) == tau_class_)) {
    memo_.emplace(w, DimStatus{false, -1});
    return DimStatus{false, -1};
  }

  LevelScan scan = scan_level(w);
  DimStatus val;
  if (!scan.drop) {
    val = base_case(scan.cls[0]);
  } else {
    Weyl& wy = datum_.weyl();
    const WeylElement& y = scan.cls[scan.drop->first];
    int s = scan.drop->second;
    WeylElement sy = wy.multiply(refl_[s], y);
    WeylElement sys = wy.multiply(sy, refl_[datum_.sigma().node(s)]);
    DimStatus d1 = compute(sys, depth + 1);
    DimStatus d2 = compute(sy, depth + 1);
    if (!d1.nonempty && !d2.nonempty)
      val = DimStatus{false, -1};
    else
      val = DimStatus{true, 1 + std::max(d1.nonempty ? d1.dim : -1, d2.nonempty ? d2.dim : -1)};
  }
  for (const WeylElement& z : scan.cls) memo_.emplace(z, val);
  if (memo_.size() > budget_) throw std::runtime_error("reduction memo exceeded the node budget");
  return val;
}

DimStatus DimTable::dim_x_w(const WeylElement& w) { return compute(w, 0); }

std::vector<WitnessStep> DimTable::witness(const WeylElement& w) {
  dim_x_w(w);
  std::vector<WitnessStep> steps;
  Weyl& wy = datum_.weyl();
  WeylElement cur = w;
  int guard = 0;
  while (true) {
    if (++guard > 100000) throw std::logic_error("witness chain did not terminate");
    LevelScan scan = scan_level(cur);
    if (!scan.drop) {
      steps.push_back(WitnessStep{-1, WitnessStep::Base});
      return steps;
    }
    // cyclic path from cur to the drop point
    std::vector<WitnessStep> path;
    size_t i = scan.drop->first;
    while (scan.parent[i].first >= 0) {
      path.push_back(WitnessStep{scan.parent[i].second, WitnessStep::Cyclic});
      i = static_cast<size_t>(scan.parent[i].first);
    }
    std::reverse(path.begin(), path.end());
    for (const auto& st : path) steps.push_back(st);
    const WeylElement& y = scan.cls[scan.drop->first];
    int s = scan.drop->second;
    WeylElement sy = wy.multiply(refl_[s], y);
    WeylElement sys = wy.multiply(sy, refl_[datum_.sigma().node(s)]);
    DimStatus d1 = dim_x_w(sys);
    DimStatus d2 = dim_x_w(sy);
    if (!d1.nonempty && !d2.nonempty) {
      steps.push_back(WitnessStep{s, WitnessStep::DropConj});
      return steps;  // both branches empty
    }
    if (d1.nonempty && (!d2.nonempty || d1.dim >= d2.dim)) {
      steps.push_back(WitnessStep{s, WitnessStep::DropConj});
      cur = sys;
    } else {
      steps.push_back(WitnessStep{s, WitnessStep::DropLeft});
      cur = sy;
    }
  }
}

std::pair<WeylElement, std::vector<WitnessStep>> DimTable::reach_minimal(const WeylElement& x) {
  Weyl& wy = datum_.weyl();
  std::vector<WitnessStep> steps;
  WeylElement cur = x;
  while (true) {
    LevelScan scan = scan_level(cur);
    if (!scan.drop) return {cur, steps};
    std::vector<WitnessStep> path;
    size_t i = scan.drop->first;
    while (scan.parent[i].first >= 0) {
      path.push_back(WitnessStep{scan.parent[i].second, WitnessStep::Cyclic});
      i = static_cast<size_t>(scan.parent[i].first);
    }
    std::reverse(path.begin(), path.end());
    for (const auto& st : path) steps.push_back(st);
    int s = scan.drop->second;
    steps.push_back(WitnessStep{s, WitnessStep::DropConj});
    cur = wy.multiply(wy.multiply(refl_[s], scan.cls[scan.drop->first]),
                      refl_[datum_.sigma().node(s)]);
  }
}

DimResult dim_x_mu_tau_k(const CoxeterDatum& datum, long long budget) {
  AdmissibleSets sets(datum, budget);
  DimTable table(datum);
  DimResult out;
  out.value = -1;
  for (const WeylElement& w : sets.k_adm()) {
    DimStatus st = table.dim_x_w(w);
    if (st.nonempty && st.dim > out.value) {
      out.value = st.dim;
      out.achiever = w;
    }
  }
  bool cond3 = true;
  for (const CoxeterDatum& f : datum.irreducible_factors())
    cond3 = cond3 && check_condition_3(f).holds;
  out.exact = cond3;
  return out;
}

bool dim_equals_rank(const CoxeterDatum& datum, long long budget) {
  int rank = 0;
  for (const CoxeterDatum& f : datum.irreducible_factors()) rank += rank_ss_j_tau(f);
  return dim_x_mu_tau_k(datum, budget).value == rank;
}

}  // namespace adlv
