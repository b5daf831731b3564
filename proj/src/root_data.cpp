#include "adlv/root_data.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace adlv {

std::string AffineType::str() const {
  std::string s;
  for (size_t i = 0; i < components.size(); ++i) {
    if (i) s += "x";
    s += static_cast<char>(components[i].family);
    s += std::to_string(components[i].rank);
  }
  return s;
}

std::string NodeSet::str() const {
  std::string s = "{";
  bool first = true;
  for (int v : nodes()) {
    if (!first) s += ",";
    s += std::to_string(v);
    first = false;
  }
  return s + "}";
}

namespace {

void check_component(Family f, int rank) {
  switch (f) {
    case Family::A: if (rank >= 1) return; break;
    case Family::B: if (rank >= 3) return; break;  // B2 normalized to C2 upstream
    case Family::C: if (rank >= 2) return; break;
    case Family::D: if (rank >= 4) return; break;
    case Family::E: if (rank >= 6 && rank <= 8) return; break;
    case Family::F: if (rank == 4) return; break;
    case Family::G: if (rank == 2) return; break;
  }
  throw std::invalid_argument("inadmissible rank for family " +
                              std::string(1, static_cast<char>(f)) + std::to_string(rank));
}

// Bourbaki simple roots; coordinates sized per family.
std::vector<Vec> simple_roots_for(Family f, int rank, int& dim) {
  auto e = [&](int i) {
    Vec v(dim, Rat(0));
    v[i] = Rat(1);
    return v;
  };
  std::vector<Vec> a;
  switch (f) {
    case Family::A: {
      dim = rank + 1;
      for (int i = 0; i < rank; ++i) {
        Vec v(dim, Rat(0));
        v[i] = Rat(1);
        v[i + 1] = Rat(-1);
        a.push_back(v);
      }
      break;
    }
    case Family::B: {
      dim = rank;
      for (int i = 0; i + 1 < rank; ++i) {
        Vec v(dim, Rat(0));
        v[i] = Rat(1);
        v[i + 1] = Rat(-1);
        a.push_back(v);
      }
      a.push_back(e(rank - 1));
      break;
    }
    case Family::C: {
      dim = rank;
      for (int i = 0; i + 1 < rank; ++i) {
        Vec v(dim, Rat(0));
        v[i] = Rat(1);
        v[i + 1] = Rat(-1);
        a.push_back(v);
      }
      Vec v(dim, Rat(0));
      v[rank - 1] = Rat(2);
      a.push_back(v);
      break;
    }
    case Family::D: {
      dim = rank;
      for (int i = 0; i + 1 < rank; ++i) {
        Vec v(dim, Rat(0));
        v[i] = Rat(1);
        v[i + 1] = Rat(-1);
        a.push_back(v);
      }
      Vec v(dim, Rat(0));
      v[rank - 2] = Rat(1);
      v[rank - 1] = Rat(1);
      a.push_back(v);
      break;
    }
    case Family::E: {
      dim = 8;
      Vec a1(dim, Rat(-1, 2));
      a1[0] = Rat(1, 2);
      a1[7] = Rat(1, 2);
      a.push_back(a1);
      Vec a2(dim, Rat(0));
      a2[0] = Rat(1);
      a2[1] = Rat(1);
      a.push_back(a2);
      auto diff = [&](int i, int j) {
        Vec v(dim, Rat(0));
        v[i] = Rat(1);
        v[j] = Rat(-1);
        return v;
      };
      a.push_back(diff(1, 0));  // alpha3 = e2 - e1
      a.push_back(diff(2, 1));
      a.push_back(diff(3, 2));
      a.push_back(diff(4, 3));
      if (rank >= 7) a.push_back(diff(5, 4));
      if (rank == 8) a.push_back(diff(6, 5));
      break;
    }
    case Family::F: {
      dim = 4;
      Vec a1(dim, Rat(0)); a1[1] = Rat(1); a1[2] = Rat(-1);
      Vec a2(dim, Rat(0)); a2[2] = Rat(1); a2[3] = Rat(-1);
      Vec a3(dim, Rat(0)); a3[3] = Rat(1);
      Vec a4(dim, Rat(1, 2)); a4[0] = Rat(1, 2); a4[1] = Rat(-1, 2); a4[2] = Rat(-1, 2); a4[3] = Rat(-1, 2);
      a = {a1, a2, a3, a4};
      break;
    }
    case Family::G: {
      dim = 3;
      Vec a1(dim, Rat(0)); a1[0] = Rat(1); a1[1] = Rat(-1);
      Vec a2(dim, Rat(0)); a2[0] = Rat(-2); a2[1] = Rat(1); a2[2] = Rat(1);
      a = {a1, a2};
      break;
    }
  }
  return a;
}

std::vector<int> minuscule_nodes_for(Family f, int rank) {
  switch (f) {
    case Family::A: {
      std::vector<int> r;
      for (int i = 1; i <= rank; ++i) r.push_back(i);
      return r;
    }
    case Family::B: return {1};
    case Family::C: return {rank};
    case Family::D: return {1, rank - 1, rank};
    case Family::E:
      if (rank == 6) return {1, 6};
      if (rank == 7) return {7};
      return {};
    default: return {};
  }
}

Vec embed(const Vec& local, int offset, int dim) {
  Vec v(dim, Rat(0));
  for (size_t i = 0; i < local.size(); ++i) v[offset + i] = local[i];
  return v;
}

}  // namespace

RootDatum::RootDatum(AffineType t) : type_(std::move(t)) {
  if (type_.components.empty()) throw std::invalid_argument("empty affine type");
  // normalize B2 -> C2 (the parser maps node labels and coefficients)
  for (auto& c : type_.components)
    if (c.family == Family::B && c.rank == 2) c.family = Family::C;
  for (auto& c : type_.components) check_component(c.family, c.rank);

  // layout
  int node_off = 0, coord_off = 0;
  std::vector<std::vector<Vec>> simple(type_.components.size());
  std::vector<int> comp_dim(type_.components.size());
  for (size_t c = 0; c < type_.components.size(); ++c) {
    node_offset_.push_back(node_off);
    coord_offset_.push_back(coord_off);
    int d = 0;
    simple[c] = simple_roots_for(type_.components[c].family, type_.components[c].rank, d);
    comp_dim[c] = d;
    for (int j = 0; j <= type_.components[c].rank; ++j) node_component_.push_back(static_cast<int>(c));
    node_off += type_.components[c].rank + 1;
    coord_off += d;
  }
  num_nodes_ = node_off;
  dim_ = coord_off;
  if (num_nodes_ > 60) throw std::invalid_argument("node universe too large");

  node_simple_root_.assign(num_nodes_, -1);
  theta_.assign(type_.components.size(), -1);
  minuscule_.resize(type_.components.size());

  // roots: reflection closure of the simple roots, per component
  for (size_t c = 0; c < type_.components.size(); ++c) {
    std::vector<Vec> gens;
    for (const auto& s : simple[c]) gens.push_back(embed(s, coord_offset_[c], dim_));
    std::vector<Vec> all = gens;
    std::set<std::vector<std::pair<long long, long long>>> seen;
    auto key = [](const Vec& v) {
      std::vector<std::pair<long long, long long>> k;
      for (const auto& x : v) k.emplace_back(x.num, x.den);
      return k;
    };
    for (const auto& g : all) seen.insert(key(g));
    for (size_t i = 0; i < all.size(); ++i) {
      for (const auto& g : gens) {
        // s_g(all[i]) = all[i] - <all[i], g^vee> g
        Rat n2 = dot(g, g);
        Rat coef = dot(all[i], g) * Rat(2) / n2;
        Vec r = sub(all[i], scale(coef, g));
        if (seen.insert(key(r)).second) all.push_back(r);
      }
    }
    // also closure under negation
    for (size_t i = 0; i < all.size(); ++i) {
      Vec r = scale(Rat(-1), all[i]);
      if (seen.insert(key(r)).second) all.push_back(r);
    }
    int rank = type_.components[c].rank;
    // positive roots: nonnegative coefficients on the simple basis
    Mat basis_mat(dim_, zero_vec(rank));
    for (int j = 0; j < rank; ++j)
      for (int i = 0; i < dim_; ++i) basis_mat[i][j] = gens[j][i];
    std::vector<std::pair<Vec, Vec>> pos;  // (root, simple-coefficients)
    for (const auto& r : all) {
      Vec coeffs;
      if (!solve_linear(basis_mat, r, coeffs)) {
        // A-type: simple roots do not span the coordinate space, but every
        // root does lie in their span, so failure means a bug
        throw std::logic_error("root outside simple-root span");
      }
      bool nonneg = true;
      for (const auto& x : coeffs) nonneg = nonneg && x >= Rat(0);
      if (nonneg) pos.emplace_back(r, coeffs);
    }
    // order by height then lexicographically, for determinism
    std::sort(pos.begin(), pos.end(), [](const auto& a, const auto& b) {
      Rat ha(0), hb(0);
      for (const auto& x : a.second) ha += x;
      for (const auto& x : b.second) hb += x;
      if (ha != hb) return ha < hb;
      for (size_t i = 0; i < a.first.size(); ++i)
        if (a.first[i] != b.first[i]) return a.first[i] < b.first[i];
      return false;
    });
    int base = static_cast<int>(roots_.size());
    for (const auto& [r, coeffs] : pos) {
      roots_.push_back(r);
      root_component_.push_back(static_cast<int>(c));
    }
    // highest root: the last in height order (unique maximal height)
    theta_[c] = base + static_cast<int>(pos.size()) - 1;
    (void)base;
  }
  num_positive_ = static_cast<int>(roots_.size());
  int npos = num_positive_;
  for (int r = 0; r < npos; ++r) {
    roots_.push_back(scale(Rat(-1), roots_[r]));
    root_component_.push_back(root_component_[r]);
  }
  negate_.assign(roots_.size(), 0);
  for (int r = 0; r < npos; ++r) {
    negate_[r] = r + npos;
    negate_[r + npos] = r;
  }
  for (int r = 0; r < static_cast<int>(roots_.size()); ++r) {
    coroots_.push_back(scale(Rat(2) / dot(roots_[r], roots_[r]), roots_[r]));
    root_lookup_[roots_[r]] = r;
  }

  // simple-root indices per finite node
  for (size_t c = 0; c < type_.components.size(); ++c) {
    for (int j = 1; j <= type_.components[c].rank; ++j) {
      Vec v = embed(simple[c][j - 1], coord_offset_[c], dim_);
      int idx = root_index(v);
      if (idx < 0) throw std::logic_error("simple root not found in closure");
      node_simple_root_[node_offset_[c] + j] = idx;
    }
    minuscule_[c] = minuscule_nodes_for(type_.components[c].family, type_.components[c].rank);
  }

  finish();
}

void RootDatum::finish() {
  // affine Cartan matrix
  cartan_.assign(num_nodes_, std::vector<long long>(num_nodes_, 0));
  for (int s = 0; s < num_nodes_; ++s) {
    Vec as = alpha_vec(s);
    for (int t = 0; t < num_nodes_; ++t) {
      if (node_component_[s] != node_component_[t]) continue;
      Vec at = alpha_vec(t);
      Rat v = dot(as, at) * Rat(2) / dot(at, at);
      cartan_[s][t] = v.to_int();
    }
  }

  // reflection permutations on roots
  reflection_perm_.resize(roots_.size());
  for (int r = 0; r < static_cast<int>(roots_.size()); ++r) {
    auto& perm = reflection_perm_[r];
    perm.resize(roots_.size());
    for (int q = 0; q < static_cast<int>(roots_.size()); ++q) {
      if (root_component_[q] != root_component_[r]) {
        perm[q] = static_cast<int16_t>(q);
        continue;
      }
      Rat coef = dot(roots_[q], coroots_[r]);
      Vec img = sub(roots_[q], scale(coef, roots_[r]));
      int idx = root_index(img);
      if (idx < 0) throw std::logic_error("reflection image not a root");
      perm[q] = static_cast<int16_t>(idx);
    }
  }

  // two_rho
  two_rho_ = zero_vec(dim_);
  for (int r = 0; r < num_positive_; ++r) two_rho_ = add(two_rho_, roots_[r]);

  // finite Cartan inverse (block diagonal over finite nodes)
  for (int s = 0; s < num_nodes_; ++s)
    if (!is_affine_node(s)) finite_node_list_.push_back(s);
  int n = static_cast<int>(finite_node_list_.size());
  Mat c(n, zero_vec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      c[i][j] = dot(root(simple_root_of_node(finite_node_list_[i])),
                    coroot(simple_root_of_node(finite_node_list_[j])));
  finite_cartan_inv_ = mat_inverse(c);

  // fundamental coweights: omega_i = sum_k (C^-1 e_i)_k alpha_k^vee
  fundamental_coweight_.assign(num_nodes_, Vec());
  for (int i = 0; i < n; ++i) {
    Vec w = zero_vec(dim_);
    for (int k = 0; k < n; ++k) {
      const Rat& ck = finite_cartan_inv_[k][i];
      if (ck.is_zero()) continue;
      w = add(w, scale(ck, coroot(simple_root_of_node(finite_node_list_[k]))));
    }
    fundamental_coweight_[finite_node_list_[i]] = w;
  }

  // omega classes: products of per-component classes {0, minuscule coweights}
  std::vector<std::vector<std::pair<Vec, std::string>>> comp_classes(num_components());
  for (int c2 = 0; c2 < num_components(); ++c2) {
    comp_classes[c2].emplace_back(zero_vec(dim_), "1");
    for (int j : minuscule_[c2])
      comp_classes[c2].emplace_back(fundamental_coweight_[node_offset_[c2] + j],
                                    "tau" + std::to_string(j));
  }
  std::vector<std::pair<Vec, std::string>> acc = {{zero_vec(dim_), ""}};
  for (int c2 = 0; c2 < num_components(); ++c2) {
    std::vector<std::pair<Vec, std::string>> next;
    for (const auto& [v, name] : acc)
      for (const auto& [w, cname] : comp_classes[c2])
        next.emplace_back(add(v, w), name.empty() ? cname : name + "|" + cname);
    acc = std::move(next);
  }
  std::map<std::vector<std::pair<long long, long long>>, OmegaClassInfo> uniq;
  for (const auto& [v, name] : acc) {
    Vec key = omega_class(v);
    std::vector<std::pair<long long, long long>> k;
    for (const auto& x : key) k.emplace_back(x.num, x.den);
    if (!uniq.count(k)) uniq[k] = OmegaClassInfo{key, v, name};
  }
  for (auto& [k, info] : uniq) omega_classes_.push_back(info);
}

NodeSet RootDatum::component_nodes(int comp) const {
  NodeSet s;
  for (int j = 0; j <= type_.components[comp].rank; ++j) s.add(node_offset_[comp] + j);
  return s;
}

NodeSet RootDatum::finite_nodes() const {
  NodeSet s = all_nodes();
  for (int c = 0; c < num_components(); ++c) s.remove(node_offset_[c]);
  return s;
}

std::vector<NodeSet> RootDatum::connected_components(const NodeSet& set) const {
  std::vector<NodeSet> out;
  NodeSet left = set;
  while (!left.empty()) {
    int start = left.nodes()[0];
    NodeSet comp;
    std::vector<int> stack = {start};
    comp.add(start);
    while (!stack.empty()) {
      int s = stack.back();
      stack.pop_back();
      for (int t : left.nodes())
        if (!comp.contains(t) && adjacent(s, t)) {
          comp.add(t);
          stack.push_back(t);
        }
    }
    out.push_back(comp);
    left = left.minus(comp);
  }
  return out;
}

bool RootDatum::spans_finite(const NodeSet& set) const {
  for (int c = 0; c < num_components(); ++c) {
    NodeSet cn = component_nodes(c);
    NodeSet inter = set.intersect(cn);
    if (inter == cn) return false;
  }
  return true;
}

int RootDatum::root_index(const Vec& v) const {
  auto it = root_lookup_.find(v);
  return it == root_lookup_.end() ? -1 : it->second;
}

std::pair<std::vector<int>, std::vector<Vec>> RootDatum::phi_j_data(const NodeSet& j) const {
  if (!spans_finite(j))
    throw std::invalid_argument("phi_j_data: J contains a full component node set");
  std::vector<int> gens;
  for (int s : j.nodes()) {
    int r = is_affine_node(s) ? negate_[theta_[node_component_[s]]] : node_simple_root_[s];
    gens.push_back(r);
  }
  std::set<int> closed(gens.begin(), gens.end());
  std::vector<int> queue(gens.begin(), gens.end());
  for (size_t i = 0; i < queue.size(); ++i)
    for (int g : gens) {
      int img = reflection_perm_[g][queue[i]];
      if (closed.insert(img).second) queue.push_back(img);
    }
  std::vector<int> roots(closed.begin(), closed.end());
  std::vector<Vec> basis;
  for (int g : gens) basis.push_back(coroot(g));
  return {roots, basis};
}

Vec RootDatum::alpha_vec(int s) const {
  if (is_affine_node(s)) return scale(Rat(-1), root(theta_[node_component_[s]]));
  return root(node_simple_root_[s]);
}

Vec RootDatum::reflect(int s, const Vec& v) const {
  Vec a = alpha_vec(s);
  Vec av = scale(Rat(2) / dot(a, a), a);
  return sub(v, scale(dot(v, a), av));
}

Vec RootDatum::coweight(const std::vector<std::vector<long long>>& coeffs) const {
  if (static_cast<int>(coeffs.size()) != num_components())
    throw std::invalid_argument("coweight: wrong number of components");
  Vec v = zero_vec(dim_);
  for (int c = 0; c < num_components(); ++c) {
    if (static_cast<int>(coeffs[c].size()) != component_rank(c))
      throw std::invalid_argument("coweight: wrong coefficient count for component");
    for (int j = 1; j <= component_rank(c); ++j)
      if (coeffs[c][j - 1] != 0)
        v = add(v, scale(Rat(coeffs[c][j - 1]), fundamental_coweight_[node_offset_[c] + j]));
  }
  return v;
}

Vec RootDatum::coroot_coefficients(const Vec& v) const {
  int n = static_cast<int>(finite_node_list_.size());
  Vec p(n);
  for (int i = 0; i < n; ++i) p[i] = dot(v, root(simple_root_of_node(finite_node_list_[i])));
  Vec c = mat_apply(finite_cartan_inv_, p);
  // verify the input lies in the coroot span
  Vec check = zero_vec(dim_);
  for (int k = 0; k < n; ++k)
    check = add(check, scale(c[k], coroot(simple_root_of_node(finite_node_list_[k]))));
  if (!(check == v)) throw std::domain_error("coweight outside the coroot span");
  return c;
}

bool RootDatum::in_coroot_span(const Vec& v) const {
  int n = static_cast<int>(finite_node_list_.size());
  Vec p(n);
  for (int i = 0; i < n; ++i) p[i] = dot(v, root(simple_root_of_node(finite_node_list_[i])));
  Vec c = mat_apply(finite_cartan_inv_, p);
  Vec check = zero_vec(dim_);
  for (int k = 0; k < n; ++k)
    check = add(check, scale(c[k], coroot(simple_root_of_node(finite_node_list_[k]))));
  return check == v;
}

bool RootDatum::in_coweight_lattice(const Vec& v) const {
  if (!in_coroot_span(v)) return false;
  for (int r = 0; r < num_positive_; ++r)
    if (!dot(v, roots_[r]).is_integer()) return false;
  return true;
}

bool RootDatum::is_dominant(const Vec& v) const {
  for (int s : finite_node_list_)
    if (dot(v, root(simple_root_of_node(s))) < Rat(0)) return false;
  return true;
}

Vec RootDatum::dominant_rep(Vec v) const {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s : finite_node_list_) {
      if (dot(v, root(simple_root_of_node(s))) < Rat(0)) {
        v = reflect(s, v);
        changed = true;
      }
    }
  }
  return v;
}

std::vector<long long> RootDatum::fundamental_coeffs(const Vec& v) const {
  std::vector<long long> out;
  for (int s : finite_node_list_) out.push_back(dot(v, root(simple_root_of_node(s))).to_int());
  return out;
}

bool RootDatum::is_central(const Vec& v, int comp) const {
  for (int r = 0; r < num_positive_; ++r)
    if (root_component_[r] == comp && !dot(v, roots_[r]).is_zero()) return false;
  return true;
}

Vec RootDatum::omega_class(const Vec& cw) const {
  Vec c = coroot_coefficients(cw);
  for (auto& x : c) x = x.frac();
  return c;
}

const RootDatum::OmegaClassInfo& RootDatum::omega_class_info(const Vec& frac_key) const {
  for (const auto& info : omega_classes_)
    if (info.frac == frac_key) return info;
  throw std::logic_error("unknown length-zero class");
}

std::shared_ptr<const RootDatum> make_root_datum(const AffineType& t) {
  return std::make_shared<const RootDatum>(t);
}

}  // namespace adlv
