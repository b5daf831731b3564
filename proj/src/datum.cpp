#include "adlv/datum.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace adlv {

CoxeterDatum::CoxeterDatum(std::shared_ptr<Weyl> weyl, DiagramAutomorphism sigma, Vec mu,
                           NodeSet k, std::optional<Orientation> orient)
    : weyl_(std::move(weyl)), sigma_(std::move(sigma)), mu_(std::move(mu)), k_(k) {
  const RootDatum& d = rd();
  if (!(sigma_.apply(k_) == k_)) throw std::invalid_argument("K is not sigma-stable");
  if (!d.spans_finite(k_)) throw std::invalid_argument("K contains a full component");
  if (!d.in_coweight_lattice(mu_)) throw std::invalid_argument("mu is not in the coweight lattice");
  if (!d.is_dominant(mu_)) throw std::invalid_argument("mu is not dominant");
  for (int c = 0; c < d.num_components(); ++c)
    if (d.is_central(mu_, c)) throw std::invalid_argument("mu is central in a component");

  t_mu_ = weyl_->translation(mu_);
  tau_ = weyl_->omega_of(t_mu_);
  ad_tau_sigma_ = weyl_->ad_automorphism(tau_).compose(sigma_);

  // default orientation: the intrinsic length classes
  for (int s : classed_end_nodes()) {
    Vec a = d.alpha_vec(s);
    Rat norm = dot(a, a);
    Rat maxnorm(0);
    int comp = d.component_of_node(s);
    for (int r = 0; r < d.num_roots(); ++r)
      if (d.root_component(r) == comp) maxnorm = std::max(maxnorm, dot(d.root(r), d.root(r)));
    orientation_.is_long[s] = norm == maxnorm;
  }
  if (orient) {
    for (const auto& [s, lng] : orient->is_long) {
      if (!orientation_.is_long.count(s))
        throw std::invalid_argument("orientation given for a node without a length class");
      orientation_.is_long[s] = lng;
    }
    orientation_.explicitly_set = true;
  }
}

long long CoxeterDatum::mu_two_rho() const { return rd().pair_two_rho(mu_).to_int(); }

bool CoxeterDatum::quasi_simple() const {
  const RootDatum& d = rd();
  std::vector<bool> seen(d.num_components(), false);
  int c = 0, count = 0;
  do {
    if (!seen[c]) {
      seen[c] = true;
      ++count;
    }
    c = d.component_of_node(sigma_.node(d.node_offset(c)));
  } while (c != 0 && count <= d.num_components());
  return count == d.num_components();
}

std::vector<CoxeterDatum> CoxeterDatum::irreducible_factors() const {
  const RootDatum& d = rd();
  if (quasi_simple()) return {*this};
  // partition components into sigma-orbits
  std::vector<int> part(d.num_components(), -1);
  int nparts = 0;
  for (int c = 0; c < d.num_components(); ++c) {
    if (part[c] >= 0) continue;
    int x = c;
    while (part[x] < 0) {
      part[x] = nparts;
      x = d.component_of_node(sigma_.node(d.node_offset(x)));
    }
    ++nparts;
  }
  std::vector<CoxeterDatum> out;
  for (int pid = 0; pid < nparts; ++pid) {
    std::vector<int> comps;
    for (int c = 0; c < d.num_components(); ++c)
      if (part[c] == pid) comps.push_back(c);
    AffineType sub;
    for (int c : comps) sub.components.push_back(d.type().components[c]);
    auto wy = make_weyl(sub);
    const RootDatum& sd = wy->rd();
    // node and coordinate maps
    std::vector<int> node_map(d.num_nodes(), -1);
    Vec sub_mu = zero_vec(sd.dim());
    NodeSet sub_k;
    for (size_t i = 0; i < comps.size(); ++i) {
      int c = comps[i];
      for (int j = 0; j <= d.component_rank(c); ++j)
        node_map[d.node_offset(c) + j] = sd.node_offset(static_cast<int>(i)) + j;
      for (int x = 0; x < d.component_dim(c); ++x)
        sub_mu[sd.coord_offset(static_cast<int>(i)) + x] = mu_[d.coord_offset(c) + x];
    }
    for (int s : k_.nodes())
      if (node_map[s] >= 0) sub_k.add(node_map[s]);
    std::vector<int> sub_perm(sd.num_nodes(), -1);
    for (int s = 0; s < d.num_nodes(); ++s)
      if (node_map[s] >= 0) sub_perm[node_map[s]] = node_map[sigma_.node(s)];
    DiagramAutomorphism sub_sigma(wy->rd_ptr(), sub_perm, sigma_.name());
    Orientation sub_orient;
    sub_orient.explicitly_set = orientation_.explicitly_set;
    for (const auto& [s, lng] : orientation_.is_long)
      if (node_map[s] >= 0) sub_orient.is_long[node_map[s]] = lng;
    out.emplace_back(wy, sub_sigma, sub_mu, sub_k, sub_orient);
  }
  return out;
}

std::vector<int> CoxeterDatum::classed_end_nodes() const {
  const RootDatum& d = rd();
  std::vector<int> out;
  for (int c = 0; c < d.num_components(); ++c) {
    Family f = d.type().components[c].family;
    if (f == Family::C) {
      out.push_back(d.node_offset(c));
      out.push_back(d.node_offset(c) + d.component_rank(c));
    } else if (f == Family::B) {
      out.push_back(d.node_offset(c) + d.component_rank(c));
    }
  }
  return out;
}

bool CoxeterDatum::node_is_long(int s) const {
  auto it = orientation_.is_long.find(s);
  if (it == orientation_.is_long.end())
    throw std::invalid_argument("node has no length class");
  return it->second;
}

CoxeterDatum CoxeterDatum::with_k(const NodeSet& k) const {
  Orientation o = orientation_;
  return CoxeterDatum(weyl_, sigma_, mu_, k, o);
}

CoxeterDatum CoxeterDatum::with_orientation(const Orientation& o) const {
  return CoxeterDatum(weyl_, sigma_, mu_, k_, o);
}

std::string CoxeterDatum::str() const { return render_datum(*this); }

// ---------------------------------------------------------------------------
// grammar

namespace {

struct Cursor {
  const std::string& text;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + what);
  }
  bool eof() const { return pos >= text.size(); }
  char peek() const { return eof() ? '\0' : text[pos]; }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  long long integer() {
    size_t start = pos;
    if (peek() == '-') ++pos;
    while (!eof() && isdigit(text[pos])) ++pos;
    if (pos == start || (text[start] == '-' && pos == start + 1)) fail("expected an integer");
    return std::stoll(text.substr(start, pos - start));
  }
  std::string until(char stop) {
    size_t start = pos;
    while (!eof() && text[pos] != stop) ++pos;
    return text.substr(start, pos - start);
  }
};

}  // namespace

CoxeterDatum parse_datum(const std::string& text) {
  Cursor c{text};
  // type list
  AffineType type;
  std::vector<bool> was_b2;
  while (true) {
    char fam = c.peek();
    if (fam < 'A' || fam > 'G') c.fail("expected a family letter A-G");
    ++c.pos;
    long long rank = c.integer();
    bool b2 = (fam == 'B' && rank == 2);
    was_b2.push_back(b2);
    if (b2) fam = 'C';
    type.components.push_back({static_cast<Family>(fam), static_cast<int>(rank)});
    if (!c.accept('x')) break;
  }
  c.expect(':');
  std::string sigma_name = c.until(':');
  c.expect(':');
  // mu
  if (c.until('=') != "mu") c.fail("expected mu=");
  c.expect('=');
  std::vector<std::vector<long long>> coeffs;
  for (size_t comp = 0; comp < type.components.size(); ++comp) {
    if (comp) c.expect(';');
    c.expect('[');
    std::vector<long long> v;
    if (!c.accept(']')) {
      v.push_back(c.integer());
      while (c.accept(',')) v.push_back(c.integer());
      c.expect(']');
    }
    if (static_cast<int>(v.size()) != type.components[comp].rank)
      c.fail("mu coefficient count does not match the rank");
    if (was_b2[comp]) std::swap(v[0], v[1]);  // B2 -> C2 exchanges nodes 1 and 2
    coeffs.push_back(v);
  }
  c.expect(':');
  if (c.until('=') != "K") c.fail("expected K=");
  c.expect('=');
  auto wy = make_weyl(type);
  const RootDatum& rdm = wy->rd();
  NodeSet k;
  for (size_t comp = 0; comp < type.components.size(); ++comp) {
    if (comp) c.expect(';');
    c.expect('{');
    if (!c.accept('}')) {
      while (true) {
        long long s = c.integer();
        if (s < 0 || s > rdm.component_rank(static_cast<int>(comp)))
          c.fail("node label out of range");
        if (was_b2[comp] && s != 0) s = 3 - s;
        k.add(rdm.node_offset(static_cast<int>(comp)) + static_cast<int>(s));
        if (c.accept('}')) break;
        c.expect(',');
      }
    }
  }
  std::optional<Orientation> orient;
  if (c.accept(':')) {
    if (c.until('=') != "orient") c.fail("expected orient=");
    c.expect('=');
    Orientation o;
    o.explicitly_set = true;
    while (true) {
      long long s = c.integer();
      c.expect('=');
      size_t start = c.pos;
      while (!c.eof() && c.peek() != ',' && c.peek() != ':') ++c.pos;
      std::string cls = text.substr(start, c.pos - start);
      if (cls != "long" && cls != "short") c.fail("orientation class must be long or short");
      o.is_long[static_cast<int>(s)] = cls == "long";
      if (!c.accept(',')) break;
    }
    orient = o;
  }
  if (!c.eof()) c.fail("trailing input");

  DiagramAutomorphism sigma = named_automorphism(sigma_name, wy->rd_ptr());
  return CoxeterDatum(wy, sigma, rdm.coweight(coeffs), k, orient);
}

std::string render_datum(const CoxeterDatum& d) {
  const RootDatum& rdm = d.rd();
  std::ostringstream os;
  os << rdm.type_str() << ":" << d.sigma().name() << ":mu=";
  auto coeffs = rdm.fundamental_coeffs(d.mu());
  size_t idx = 0;
  for (int c = 0; c < rdm.num_components(); ++c) {
    if (c) os << ";";
    os << "[";
    for (int j = 0; j < rdm.component_rank(c); ++j) {
      if (j) os << ",";
      os << coeffs[idx++];
    }
    os << "]";
  }
  os << ":K=";
  for (int c = 0; c < rdm.num_components(); ++c) {
    if (c) os << ";";
    os << "{";
    bool first = true;
    for (int s : d.k_set().nodes())
      if (rdm.component_of_node(s) == c) {
        if (!first) os << ",";
        os << rdm.local_node(s);
        first = false;
      }
    os << "}";
  }
  if (d.orientation().explicitly_set) {
    os << ":orient=";
    bool first = true;
    for (const auto& [s, lng] : d.orientation().is_long) {
      if (!first) os << ",";
      os << s << "=" << (lng ? "long" : "short");
      first = false;
    }
  }
  return os.str();
}

}  // namespace adlv
