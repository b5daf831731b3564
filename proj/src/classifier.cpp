#include "adlv/classifier.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "adlv/admissible.hpp"

namespace adlv {

Vec xi_j(const RootDatum& rd, const Vec& xi, const NodeSet& j) {
  auto nodes = j.nodes();
  size_t n = nodes.size();
  if (n == 0) return zero_vec(rd.dim());
  if (!rd.spans_finite(j)) throw std::invalid_argument("xi_j: J spans an infinite subgroup");
  std::vector<Vec> covee;
  for (int s : nodes) {
    Vec a = rd.alpha_vec(s);
    covee.push_back(scale(Rat(2) / dot(a, a), a));
  }
  Mat g(n, zero_vec(n));
  Vec rhs(n);
  for (size_t t = 0; t < n; ++t) {
    Vec at = rd.alpha_vec(nodes[t]);
    for (size_t s = 0; s < n; ++s) g[t][s] = dot(covee[s], at);
    rhs[t] = dot(xi, at);
  }
  Vec c;
  if (!solve_linear(g, rhs, c)) throw std::logic_error("xi_j: singular pairing matrix");
  Vec out = zero_vec(rd.dim());
  for (size_t s = 0; s < n; ++s) out = add(out, scale(c[s], covee[s]));
  return out;
}

Vec sigma_average(const Vec& v, const DiagramAutomorphism& sigma) {
  Vec total = v, cur = v;
  for (int i = 1; i < sigma.order(); ++i) {
    cur = sigma.linear_apply(cur);
    total = add(total, cur);
  }
  return scale(Rat(1, sigma.order()), total);
}

NodeSet k_xi(const RootDatum& rd, const DiagramAutomorphism& sigma, const Vec& xi,
             const NodeSet& j, const NodeSet& k_prime) {
  Vec avg = sigma_average(xi_j(rd, xi, j), sigma);
  NodeSet active;
  for (const NodeSet& comp : rd.connected_components(k_prime)) {
    bool nonzero = false;
    for (int s : comp.nodes())
      if (!dot(avg, rd.alpha_vec(s)).is_zero()) {
        nonzero = true;
        break;
      }
    if (nonzero) active = active.unite(comp);
  }
  // close under sigma
  bool grew = true;
  while (grew) {
    grew = false;
    for (int s : active.nodes())
      if (!active.contains(sigma.node(s))) {
        active.add(sigma.node(s));
        grew = true;
      }
  }
  if (!active.subset_of(k_prime))
    throw std::logic_error("k_xi: sigma closure left K'");
  return active;
}

namespace {

// t^xi is K'-minimal iff xi pairs nonnegatively with every alpha_s, s in K'
bool translation_is_k_minimal(const RootDatum& rd, const Vec& xi, const NodeSet& k) {
  for (int s : k.nodes())
    if (dot(xi, rd.alpha_vec(s)) < Rat(0)) return false;
  return true;
}

bool average_in_span(const RootDatum& rd, const Vec& avg, const NodeSet& k) {
  std::vector<Vec> basis;
  for (int s : k.nodes()) {
    Vec a = rd.alpha_vec(s);
    basis.push_back(scale(Rat(2) / dot(a, a), a));
  }
  return in_span(basis, avg);
}

int count_orbits(const DiagramAutomorphism& sigma, const NodeSet& set) {
  NodeSet seen;
  int n = 0;
  for (int s : set.nodes()) {
    if (seen.contains(s)) continue;
    int t = s;
    do {
      seen.add(t);
      t = sigma.node(t);
    } while (t != s);
    ++n;
  }
  return n;
}

long long total_rank(const RootDatum& rd) {
  long long r = 0;
  for (int c = 0; c < rd.num_components(); ++c) r += rd.component_rank(c);
  return r;
}

}  // namespace

bool triple_is_admissible(const CoxeterDatum& datum, const AdmissibleTriple& t) {
  const RootDatum& rd = datum.rd();
  if (!t.k_prime.subset_of(t.j)) return false;
  if (!(datum.sigma().apply(t.k_prime) == t.k_prime)) return false;
  if (!translation_is_k_minimal(rd, t.xi, t.k_prime)) return false;
  Vec avg = sigma_average(xi_j(rd, t.xi, t.j), datum.sigma());
  return average_in_span(rd, avg, t.k_prime);
}

int rank_ss_j_tau(const CoxeterDatum& datum) {
  if (!datum.quasi_simple())
    throw std::invalid_argument("rank_ss_j_tau: datum is not quasi-simple");
  return static_cast<int>(datum.ad_tau_sigma().node_orbits().size()) - 1;
}

std::string ConditionWitness::str(const CoxeterDatum& datum) const {
  std::ostringstream os;
  if (holds) return "holds";
  if (rank_prefilter_failed) {
    os << "<mu,2rho> = " << lhs << " exceeds twice the absolute rank " << rhs;
    return os.str();
  }
  os << "fails at xi with coefficients (";
  auto fc = datum.rd().fundamental_coeffs(triple->xi);
  for (size_t i = 0; i < fc.size(); ++i) os << (i ? "," : "") << fc[i];
  os << "), J=" << triple->j.str() << ", K'=" << triple->k_prime.str() << ": " << lhs << " > "
     << rhs;
  return os.str();
}

ConditionWitness check_condition_3(const CoxeterDatum& datum) {
  if (!datum.quasi_simple())
    throw std::invalid_argument("check_condition_3: datum is not quasi-simple");
  const RootDatum& rd = datum.rd();
  long long mu2rho = datum.mu_two_rho();
  ConditionWitness out;
  out.lhs = mu2rho;

  if (mu2rho > 2 * total_rank(rd)) {
    out.holds = false;
    out.rank_prefilter_failed = true;
    out.rhs = 2 * total_rank(rd);
    return out;
  }

  int rank_j = rank_ss_j_tau(datum);
  auto orbit = coweight_orbit(rd, datum.mu());
  auto sigma_orbits = datum.sigma().node_orbits();

  for (const NodeSet& removed : sigma_orbits) {
    NodeSet j = rd.all_nodes().minus(removed);
    if (!datum.k_set().subset_of(j)) continue;
    // sigma-orbits available inside J beyond K
    std::vector<NodeSet> extra;
    for (const NodeSet& o : sigma_orbits)
      if (o.subset_of(j) && !o.subset_of(datum.k_set())) extra.push_back(o);
    for (const Vec& xi : orbit) {
      Vec xij = xi_j(rd, xi, j);
      Vec avg = sigma_average(xij, datum.sigma());
      for (uint64_t mask = 0; mask < (1ull << extra.size()); ++mask) {
        NodeSet kp = datum.k_set();
        for (size_t b = 0; b < extra.size(); ++b)
          if ((mask >> b) & 1) kp = kp.unite(extra[b]);
        if (!translation_is_k_minimal(rd, xi, kp)) continue;
        if (!average_in_span(rd, avg, kp)) continue;
        NodeSet kx = k_xi(rd, datum.sigma(), xi, j, kp);
        long long rhs = count_orbits(datum.sigma(), kx) + rank_j;
        if (mu2rho > rhs) {
          out.holds = false;
          out.triple = AdmissibleTriple{xi, j, kp};
          out.rhs = rhs;
          return out;
        }
      }
    }
  }
  return out;
}

WeylElement find_coxeter_witness(const CoxeterDatum& datum, const AdmissibleTriple& t) {
  if (!triple_is_admissible(datum, t))
    throw std::invalid_argument("find_coxeter_witness: triple is not admissible");
  const RootDatum& rd = datum.rd();
  Weyl& wy = datum.weyl();
  NodeSet kx = k_xi(rd, datum.sigma(), t.xi, t.j, t.k_prime);
  // one representative node per sigma-orbit of K_xi
  std::vector<std::vector<int>> orbits;
  NodeSet seen;
  for (int s : kx.nodes()) {
    if (seen.contains(s)) continue;
    std::vector<int> orb;
    int x = s;
    do {
      orb.push_back(x);
      seen.add(x);
      x = datum.sigma().node(x);
    } while (x != s);
    orbits.push_back(orb);
  }
  int m = static_cast<int>(orbits.size());
  WeylElement t_xi = wy.translation(t.xi);
  int target = t_xi.length() - m;

  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = i;
  std::vector<size_t> choice(m, 0);
  do {
    // all representative choices for this ordering
    while (true) {
      WeylElement c = wy.identity();
      for (int i = 0; i < m; ++i)
        c = wy.multiply(c, wy.simple_reflection(orbits[order[i]][choice[i]]));
      if (c.length() == m) {
        WeylElement w = wy.multiply(t_xi, c);
        if (w.length() == target) {
          if (!wy.is_in_kw(w, datum.k_set()))
            throw std::logic_error("coxeter witness not K-minimal");
          if (!wy.bruhat_leq(w, t_xi))
            throw std::logic_error("coxeter witness not admissible");
          if (!wy.newton_is_central(w, datum.sigma()))
            throw std::logic_error("coxeter witness has non-central Newton point");
          return w;
        }
      }
      int b = m - 1;
      while (b >= 0 && ++choice[b] == orbits[order[b]].size()) choice[b--] = 0;
      if (b < 0) break;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  throw std::logic_error("no twisted Coxeter witness found for an admissible triple");
}

// ---------------------------------------------------------------------------
// classification sweep

std::string identify_automorphism(std::shared_ptr<const RootDatum> rd,
                                  const DiagramAutomorphism& sigma) {
  std::vector<std::string> names = {"id"};
  const RootDatum& d = *rd;
  if (d.num_components() == 1) {
    Family f = d.type().components[0].family;
    int rank = d.component_rank(0);
    if (f == Family::A)
      for (int i = 1; i <= rank; ++i) names.push_back("rho" + std::to_string(i));
    if (f == Family::A || f == Family::D || (f == Family::E && rank == 6)) names.push_back("sigma0");
    for (int i : d.minuscule_nodes(0)) names.push_back("Ad(tau" + std::to_string(i) + ")");
    std::vector<std::string> base = names;
    for (const auto& n : base)
      if (n != "id" && n != "sigma0" &&
          (f == Family::A || f == Family::D || (f == Family::E && rank == 6)))
        names.push_back(n + "*sigma0");
  } else if (d.num_components() == 2 && d.type().components[0] == d.type().components[1]) {
    names.push_back("1sigma0");
  }
  for (const auto& n : names) {
    try {
      if (named_automorphism(n, rd).same_permutation(sigma)) return n;
    } catch (const std::invalid_argument&) {
    }
  }
  std::string s = "perm[";
  for (size_t i = 0; i < sigma.node_perm().size(); ++i)
    s += (i ? "," : "") + std::to_string(sigma.node_perm()[i]);
  return s + "]";
}

namespace {

std::string encode_cell(const RootDatum& rd, const std::vector<int>& sigma_perm, const Vec& mu,
                        std::optional<NodeSet> k = std::nullopt) {
  std::ostringstream os;
  os << rd.type_str() << "/";
  for (int x : sigma_perm) os << x << ",";
  os << "/";
  for (long long c : rd.fundamental_coeffs(rd.dominant_rep(mu))) os << c << ",";
  if (k) os << "/" << k->bits;
  return os.str();
}

struct CellKey {
  std::string canonical;
  bool is_representative;
};

CellKey canonical_cell(const RootDatum& rd, const std::vector<DiagramAutomorphism>& autos,
                       const DiagramAutomorphism& sigma, const Vec& mu) {
  std::string self = encode_cell(rd, sigma.node_perm(), mu);
  std::string best = self;
  for (const auto& psi : autos) {
    auto conj = psi.compose(sigma).compose(psi.inverse());
    std::string key = encode_cell(rd, conj.node_perm(), psi.linear_apply(mu));
    if (key < best) best = key;
  }
  return CellKey{best, best == self};
}

void enumerate_mu(const RootDatum& rd, long long bound, std::vector<Vec>& out) {
  // dominant coweights, non-central in every component, <mu,2rho> <= bound
  auto finite = rd.finite_nodes().nodes();
  std::vector<long long> weight;
  for (int s : finite) weight.push_back(rd.pair_two_rho(rd.fundamental_coweight(s)).to_int());
  std::vector<long long> coeff(finite.size(), 0);
  std::function<void(size_t, long long)> rec = [&](size_t i, long long used) {
    if (i == finite.size()) {
      Vec mu = zero_vec(rd.dim());
      for (size_t j = 0; j < finite.size(); ++j)
        if (coeff[j])
          mu = add(mu, scale(Rat(coeff[j]), rd.fundamental_coweight(finite[j])));
      for (int c = 0; c < rd.num_components(); ++c)
        if (rd.is_central(mu, c)) return;
      out.push_back(mu);
      return;
    }
    for (long long v = 0; used + v * weight[i] <= bound; ++v) {
      coeff[i] = v;
      rec(i + 1, used + v * weight[i]);
    }
    coeff[i] = 0;
  };
  rec(0, 0);
}

std::vector<NodeSet> sigma_stable_levels(const RootDatum& rd, const DiagramAutomorphism& sigma) {
  auto orbits = sigma.node_orbits();
  std::vector<NodeSet> out;
  for (uint64_t mask = 0; mask < (1ull << orbits.size()); ++mask) {
    NodeSet k;
    for (size_t b = 0; b < orbits.size(); ++b)
      if ((mask >> b) & 1) k = k.unite(orbits[b]);
    if (rd.spans_finite(k)) out.push_back(k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string datum_iso_key(const CoxeterDatum& datum) {
  auto autos = all_diagram_automorphisms(datum.rd_ptr());
  std::string best;
  for (const auto& psi : autos) {
    auto conj = psi.compose(datum.sigma()).compose(psi.inverse());
    std::string key = encode_cell(datum.rd(), conj.node_perm(), psi.linear_apply(datum.mu()),
                                  psi.apply(datum.k_set()));
    if (best.empty() || key < best) best = key;
  }
  return best;
}

std::vector<SweepRow> classify_sweep(int max_rank, long long budget) {
  std::vector<AffineType> types;
  for (int r = 1; r <= max_rank; ++r) types.push_back(AffineType::single(Family::A, r));
  for (int r = 3; r <= max_rank; ++r) types.push_back(AffineType::single(Family::B, r));
  for (int r = 2; r <= max_rank; ++r) types.push_back(AffineType::single(Family::C, r));
  for (int r = 4; r <= max_rank; ++r) types.push_back(AffineType::single(Family::D, r));
  for (int r = 6; r <= std::min(max_rank, 8); ++r) types.push_back(AffineType::single(Family::E, r));
  if (max_rank >= 4) types.push_back(AffineType::single(Family::F, 4));
  if (max_rank >= 2) types.push_back(AffineType::single(Family::G, 2));
  // swapped identical pairs
  std::vector<AffineType> pairs;
  for (const auto& t : types) {
    int r = t.components[0].rank;
    if (2 * r <= max_rank) pairs.push_back(AffineType{{t.components[0], t.components[0]}});
  }
  types.insert(types.end(), pairs.begin(), pairs.end());

  std::vector<SweepRow> rows;
  for (const AffineType& type : types) {
    auto wy = make_weyl(type);
    auto rd = wy->rd_ptr();
    auto autos = all_diagram_automorphisms(rd);
    long long bound = 2 * total_rank(*rd);

    std::vector<Vec> mus;
    enumerate_mu(*rd, bound, mus);

    for (const auto& sigma : autos) {
      // irreducible data only: sigma transitive on the components
      {
        std::vector<bool> seen(rd->num_components(), false);
        int c = 0, count = 0;
        do {
          if (!seen[c]) {
            seen[c] = true;
            ++count;
          }
          c = rd->component_of_node(sigma.node(rd->node_offset(c)));
        } while (c != 0);
        if (count != rd->num_components()) continue;
      }
      for (const Vec& mu : mus) {
        if (!canonical_cell(*rd, autos, sigma, mu).is_representative) continue;
        auto levels = sigma_stable_levels(*rd, sigma);

        // find all K of Coxeter type for this cell
        std::vector<NodeSet> passing;
        std::unique_ptr<AdmissibleSets> sets;  // built lazily
        std::vector<NodeSet> supports;
        std::vector<bool> coxflag;
        for (const NodeSet& k : levels) {
          CoxeterDatum datum(wy, sigma, mu, k, std::nullopt);
          ConditionWitness cw = check_condition_3(datum);
          if (!cw.holds) continue;
          if (!sets) {
            CoxeterDatum base(wy, sigma, mu, NodeSet{}, std::nullopt);
            sets = std::make_unique<AdmissibleSets>(base, budget);
            for (const WeylElement& w : sets->adm()) {
              supports.push_back(sets->support(w));
              coxflag.push_back(sets->twisted_coxeter(w));
            }
          }
          bool eq = true;
          for (size_t i = 0; i < sets->adm().size() && eq; ++i) {
            const WeylElement& w = sets->adm()[i];
            if (!wy->is_in_kw(w, k)) continue;
            if (!rd->spans_finite(supports[i])) continue;
            if (!coxflag[i]) eq = false;
          }
          if (eq) passing.push_back(k);
        }
        if (passing.empty()) continue;

        // inclusion-minimal levels
        std::vector<NodeSet> minimal;
        for (const NodeSet& k : passing) {
          bool min = true;
          for (const NodeSet& k2 : passing)
            if (k2 != k && k2.subset_of(k)) {
              min = false;
              break;
            }
          if (min) minimal.push_back(k);
        }
        // the minimal levels must form one orbit under the stabilizer of (sigma, mu)
        NodeSet kmin = *std::min_element(minimal.begin(), minimal.end());
        for (const NodeSet& k : minimal) {
          bool related = false;
          for (const auto& psi : autos) {
            auto conj = psi.compose(sigma).compose(psi.inverse());
            if (!conj.same_permutation(sigma)) continue;
            if (!(rd->dominant_rep(psi.linear_apply(mu)) == mu)) continue;
            if (psi.apply(k) == kmin) {
              related = true;
              break;
            }
          }
          if (!related)
            throw std::logic_error("minimal Coxeter levels are not unique up to isomorphism for " +
                                   rd->type_str());
        }

        CoxeterDatum datum(wy, sigma, mu, kmin, std::nullopt);
        SweepRow row{datum, identify_automorphism(rd, sigma), {}, {}, {}, {}, 0};
        row.mu_coeffs = rd->fundamental_coeffs(mu);
        AdmissibleSets final_sets(datum, budget);
        row.level0 = final_sets.k_adm_0();
        row.sigma_orbits = sigma.node_orbits();
        row.ad_tau_sigma_orbits = datum.ad_tau_sigma().node_orbits();
        row.rank_j = rank_ss_j_tau(datum);
        rows.push_back(std::move(row));
      }
    }
  }
  std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
    auto ka = std::make_tuple(a.datum.rd().type_str(), a.sigma_name, a.mu_coeffs,
                              a.datum.k_set().bits);
    auto kb = std::make_tuple(b.datum.rd().type_str(), b.sigma_name, b.mu_coeffs,
                              b.datum.k_set().bits);
    return ka < kb;
  });
  return rows;
}

}  // namespace adlv
