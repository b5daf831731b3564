#include "adlv/weyl.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>

namespace adlv {

namespace {

W0Perm identity_perm(const RootDatum& rd) {
  W0Perm p;
  p.img.resize(rd.num_roots());
  for (int i = 0; i < rd.num_roots(); ++i) p.img[i] = static_cast<int16_t>(i);
  return p;
}

W0Perm compose_perm(const W0Perm& a, const W0Perm& b) {
  W0Perm r;
  r.img.resize(a.img.size());
  for (size_t i = 0; i < a.img.size(); ++i) r.img[i] = a.img[b.img[i]];
  return r;
}

W0Perm invert_perm(const W0Perm& a) {
  W0Perm r;
  r.img.resize(a.img.size());
  for (size_t i = 0; i < a.img.size(); ++i) r.img[a.img[i]] = static_cast<int16_t>(i);
  return r;
}

int perm_order(const W0Perm& a) {
  W0Perm p = a;
  int o = 1;
  while (!p.is_identity()) {
    p = compose_perm(p, a);
    ++o;
    if (o > 100000) throw std::logic_error("finite part of unreasonable order");
  }
  return o;
}

}  // namespace

WeylElement::WeylElement(const RootDatum* rd, Vec lambda, W0Perm u)
    : rd_(rd), lambda_(std::move(lambda)), u_(std::move(u)) {
  // Iwahori-Matsumoto length
  W0Perm uinv = invert_perm(u_);
  long long len = 0;
  for (int r = 0; r < rd_->num_positive_roots(); ++r) {
    long long a = dot(lambda_, rd_->root(r)).to_int();
    bool pre_positive = rd_->is_positive_root(uinv.img[r]);
    if (pre_positive)
      len += a < 0 ? -a : a;
    else
      len += a - 1 < 0 ? 1 - a : a - 1;
  }
  len_ = static_cast<int>(len);
}

bool WeylElement::operator<(const WeylElement& o) const {
  if (len_ != o.len_) return len_ < o.len_;
  for (size_t i = 0; i < lambda_.size(); ++i)
    if (lambda_[i] != o.lambda_[i]) return lambda_[i] < o.lambda_[i];
  return u_.img < o.u_.img;
}

// ---------------------------------------------------------------------------
// DiagramAutomorphism

DiagramAutomorphism::DiagramAutomorphism(std::shared_ptr<const RootDatum> rd,
                                         std::vector<int> node_perm, std::string name)
    : rd_(std::move(rd)), node_perm_(std::move(node_perm)), name_(std::move(name)) {
  const RootDatum& d = *rd_;
  int m = d.num_nodes();
  if (static_cast<int>(node_perm_.size()) != m)
    throw std::invalid_argument("automorphism: wrong permutation size");
  std::vector<bool> hit(m, false);
  for (int s = 0; s < m; ++s) {
    if (node_perm_[s] < 0 || node_perm_[s] >= m || hit[node_perm_[s]])
      throw std::invalid_argument("automorphism: not a permutation");
    hit[node_perm_[s]] = true;
  }
  for (int s = 0; s < m; ++s)
    for (int t = 0; t < m; ++t)
      if (d.cartan(node_perm_[s], node_perm_[t]) != d.cartan(s, t))
        throw std::invalid_argument("automorphism does not preserve the Cartan matrix");

  // linear part: determined by alpha_s -> alpha_{pi(s)} on finite nodes and
  // extended identically on the orthogonal complement of each root span
  // (identical components share the same local realization, so the
  // complement basis transports canonically)
  int dim = d.dim();
  std::vector<Vec> basis, image;
  std::vector<int> comp_image(d.num_components());
  for (int c = 0; c < d.num_components(); ++c)
    comp_image[c] = d.component_of_node(node_perm_[d.node_offset(c)]);
  auto complement_basis = [&](int comp) {
    // nullspace of the simple-root pairings within the component block
    int n = d.component_rank(comp), cd = d.component_dim(comp), off = d.coord_offset(comp);
    Mat rows(n, zero_vec(cd));
    for (int j = 1; j <= n; ++j) {
      Vec a = d.alpha_vec(d.node_offset(comp) + j);
      for (int x = 0; x < cd; ++x) rows[j - 1][x] = a[off + x];
    }
    // Gauss: identify pivot columns, free columns give nullspace vectors
    Mat m = rows;
    std::vector<int> pivot_of_row(n, -1);
    int r = 0;
    for (int c2 = 0; c2 < cd && r < n; ++c2) {
      int p = r;
      while (p < n && m[p][c2].is_zero()) ++p;
      if (p == n) continue;
      std::swap(m[p], m[r]);
      Rat inv = Rat(1) / m[r][c2];
      for (int x = 0; x < cd; ++x) m[r][x] *= inv;
      for (int i = 0; i < n; ++i)
        if (i != r && !m[i][c2].is_zero()) {
          Rat f = m[i][c2];
          for (int x = 0; x < cd; ++x) m[i][x] -= f * m[r][x];
        }
      pivot_of_row[r] = c2;
      ++r;
    }
    std::vector<bool> is_pivot(cd, false);
    for (int i = 0; i < r; ++i) is_pivot[pivot_of_row[i]] = true;
    std::vector<Vec> out;
    for (int c2 = 0; c2 < cd; ++c2) {
      if (is_pivot[c2]) continue;
      Vec v = zero_vec(dim);
      v[off + c2] = Rat(1);
      for (int i = 0; i < r; ++i) v[off + pivot_of_row[i]] = -m[i][c2];
      out.push_back(v);
    }
    return out;
  };
  for (int c = 0; c < d.num_components(); ++c) {
    for (int j = 1; j <= d.component_rank(c); ++j) {
      int s = d.node_offset(c) + j;
      basis.push_back(d.alpha_vec(s));
      image.push_back(d.alpha_vec(node_perm_[s]));
    }
    auto comp_basis = complement_basis(c);
    auto img_basis = complement_basis(comp_image[c]);
    if (comp_basis.size() != img_basis.size())
      throw std::logic_error("automorphism maps between unequal component realizations");
    // shift the image complement into the image block
    for (size_t i = 0; i < comp_basis.size(); ++i) {
      basis.push_back(comp_basis[i]);
      image.push_back(img_basis[i]);
    }
  }
  Mat b(dim, zero_vec(dim)), bp(dim, zero_vec(dim));
  for (size_t j = 0; j < basis.size(); ++j)
    for (int i = 0; i < dim; ++i) {
      b[i][j] = basis[j][i];
      bp[i][j] = image[j][i];
    }
  L_ = mat_mul(bp, mat_inverse(b));

  v_ = zero_vec(dim);
  for (int c = 0; c < d.num_components(); ++c) {
    int t = node_perm_[d.node_offset(c)];
    if (!d.is_affine_node(t)) v_ = add(v_, d.fundamental_coweight(t));
  }

  root_perm_.resize(d.num_roots());
  for (int r = 0; r < d.num_roots(); ++r) {
    int idx = d.root_index(mat_apply(L_, d.root(r)));
    if (idx < 0) throw std::logic_error("automorphism: linear part does not permute roots");
    root_perm_[r] = static_cast<int16_t>(idx);
  }
  root_perm_inv_.resize(d.num_roots());
  for (int r = 0; r < d.num_roots(); ++r) root_perm_inv_[root_perm_[r]] = static_cast<int16_t>(r);

  // order of the node permutation; the affine realization must close up
  std::vector<int> p(m);
  for (int s = 0; s < m; ++s) p[s] = s;
  order_ = 0;
  do {
    for (int s = 0; s < m; ++s) p[s] = node_perm_[p[s]];
    ++order_;
  } while (![&] {
    for (int s = 0; s < m; ++s)
      if (p[s] != s) return false;
    return true;
  }());
  Mat lk = identity_mat(dim);
  Vec vk = zero_vec(dim);
  for (int i = 0; i < order_; ++i) {
    vk = add(mat_apply(L_, vk), v_);
    lk = mat_mul(L_, lk);
  }
  if (!(lk == identity_mat(dim)) || !is_zero_vec(vk))
    throw std::logic_error("automorphism: affine realization has wrong order");
}

NodeSet DiagramAutomorphism::apply(const NodeSet& s) const {
  NodeSet r;
  for (int x : s.nodes()) r.add(node_perm_[x]);
  return r;
}

bool DiagramAutomorphism::is_identity() const {
  for (size_t s = 0; s < node_perm_.size(); ++s)
    if (node_perm_[s] != static_cast<int>(s)) return false;
  return true;
}

DiagramAutomorphism DiagramAutomorphism::compose(const DiagramAutomorphism& inner) const {
  std::vector<int> p(node_perm_.size());
  for (size_t s = 0; s < p.size(); ++s) p[s] = node_perm_[inner.node_perm_[s]];
  std::string nm = name_ == "id" ? inner.name() : (inner.name() == "id" ? name_ : name_ + "*" + inner.name());
  return DiagramAutomorphism(rd_, p, nm);
}

DiagramAutomorphism DiagramAutomorphism::inverse() const {
  std::vector<int> p(node_perm_.size());
  for (size_t s = 0; s < p.size(); ++s) p[node_perm_[s]] = static_cast<int>(s);
  return DiagramAutomorphism(rd_, p, is_identity() ? "id" : name_ + "^-1");
}

std::vector<NodeSet> DiagramAutomorphism::node_orbits() const {
  std::vector<NodeSet> out;
  NodeSet seen;
  for (int s = 0; s < static_cast<int>(node_perm_.size()); ++s) {
    if (seen.contains(s)) continue;
    NodeSet orb = orbit_of(s);
    seen = seen.unite(orb);
    out.push_back(orb);
  }
  return out;
}

NodeSet DiagramAutomorphism::orbit_of(int s) const {
  NodeSet orb;
  int t = s;
  do {
    orb.add(t);
    t = node_perm_[t];
  } while (t != s);
  return orb;
}

DiagramAutomorphism named_automorphism(const std::string& name,
                                       std::shared_ptr<const RootDatum> rd) {
  const RootDatum& d = *rd;
  auto star = name.find('*');
  if (star != std::string::npos) {
    DiagramAutomorphism left = named_automorphism(name.substr(0, star), rd);
    return left.compose(named_automorphism(name.substr(star + 1), rd));
  }
  int m = d.num_nodes();
  std::vector<int> p(m);
  for (int s = 0; s < m; ++s) p[s] = s;
  if (name == "id") return DiagramAutomorphism(rd, p, "id");

  if (name == "swap" || name == "1sigma0") {
    if (d.num_components() != 2 || !(d.type().components[0] == d.type().components[1]))
      throw std::invalid_argument(name + " requires two identical components");
    int half = d.component_rank(0) + 1;
    for (int s = 0; s < m; ++s) p[s] = s < half ? s + half : s - half;
    return DiagramAutomorphism(rd, p, "1sigma0");
  }

  if (name.rfind("rho", 0) == 0) {
    if (d.num_components() != 1 || d.type().components[0].family != Family::A)
      throw std::invalid_argument("rho<i> is only defined for a single type-A component");
    int i = std::stoi(name.substr(3));
    int n = d.component_rank(0) + 1;  // number of nodes
    for (int s = 0; s < m; ++s) p[s] = (s + i) % n;
    return DiagramAutomorphism(rd, p, "rho" + std::to_string(((i % n) + n) % n));
  }

  if (name == "sigma0") {
    if (d.num_components() != 1)
      throw std::invalid_argument("sigma0 is only defined for a single component");
    Family f = d.type().components[0].family;
    int rank = d.component_rank(0);
    if (f == Family::A) {
      for (int j = 1; j <= rank; ++j) p[j] = rank + 1 - j;
    } else if (f == Family::D) {
      std::swap(p[rank - 1], p[rank]);
    } else if (f == Family::E && rank == 6) {
      std::swap(p[1], p[6]);
      std::swap(p[3], p[5]);
    } else {
      throw std::invalid_argument("sigma0 is not defined for this type");
    }
    return DiagramAutomorphism(rd, p, "sigma0");
  }

  if (name.rfind("Ad(tau", 0) == 0 && name.back() == ')') {
    int i = std::stoi(name.substr(6, name.size() - 7));
    if (d.num_components() != 1)
      throw std::invalid_argument("Ad(tau<i>) names a single-component automorphism");
    if (i == 0) return DiagramAutomorphism(rd, p, "id");
    const auto& mins = d.minuscule_nodes(0);
    if (std::find(mins.begin(), mins.end(), i) == mins.end())
      throw std::invalid_argument("Ad(tau" + std::to_string(i) + "): coweight not minuscule");
    Weyl wy(rd);
    WeylElement tau = wy.omega_element(d.omega_class(d.fundamental_coweight(i)));
    return DiagramAutomorphism(rd, wy.ad_node_perm(tau), "Ad(tau" + std::to_string(i) + ")");
  }

  throw std::invalid_argument("unknown automorphism name: " + name);
}

std::vector<DiagramAutomorphism> all_diagram_automorphisms(std::shared_ptr<const RootDatum> rd) {
  const RootDatum& d = *rd;
  int m = d.num_nodes();
  std::vector<DiagramAutomorphism> out;
  std::vector<int> p(m, -1);
  std::vector<bool> used(m, false);
  auto consistent = [&](int s, int img) {
    for (int t = 0; t < m; ++t) {
      if (p[t] < 0) continue;
      if (d.cartan(s, t) != d.cartan(img, p[t]) || d.cartan(t, s) != d.cartan(p[t], img))
        return false;
    }
    return true;
  };
  std::function<void(int)> rec = [&](int s) {
    if (s == m) {
      out.emplace_back(rd, p, "perm");
      return;
    }
    for (int img = 0; img < m; ++img) {
      if (used[img] || !consistent(s, img)) continue;
      p[s] = img;
      used[img] = true;
      rec(s + 1);
      p[s] = -1;
      used[img] = false;
    }
  };
  rec(0);
  return out;
}

// ---------------------------------------------------------------------------
// Weyl

Weyl::Weyl(std::shared_ptr<const RootDatum> rd) : rd_(std::move(rd)) {}

WeylElement Weyl::identity() const {
  return WeylElement(rd_.get(), zero_vec(rd_->dim()), identity_perm(*rd_));
}

WeylElement Weyl::simple_reflection(int s) const {
  const RootDatum& d = *rd_;
  if (d.is_affine_node(s)) {
    int theta = d.highest_root(d.component_of_node(s));
    return WeylElement(rd_.get(), d.coroot(theta), W0Perm{d.reflection_perm(theta)});
  }
  int r = d.simple_root_of_node(s);
  return WeylElement(rd_.get(), zero_vec(d.dim()), W0Perm{d.reflection_perm(r)});
}

WeylElement Weyl::translation(const Vec& coweight) const {
  if (!rd_->in_coweight_lattice(coweight))
    throw std::invalid_argument("translation: not in the coweight lattice");
  return WeylElement(rd_.get(), coweight, identity_perm(*rd_));
}

Vec Weyl::act_on_coweight(const W0Perm& u, const Vec& v) const {
  const RootDatum& d = *rd_;
  Vec c = d.coroot_coefficients(v);
  Vec res = zero_vec(d.dim());
  auto fn = d.finite_nodes().nodes();
  for (size_t k = 0; k < fn.size(); ++k) {
    if (c[k].is_zero()) continue;
    int img = u.img[d.simple_root_of_node(fn[k])];
    res = add(res, scale(c[k], d.coroot(img)));
  }
  return res;
}

WeylElement Weyl::multiply(const WeylElement& a, const WeylElement& b) const {
  if (a.datum() != rd_.get() || b.datum() != rd_.get())
    throw std::invalid_argument("multiply: elements of a different datum");
  Vec lambda = add(a.translation(), act_on_coweight(a.finite_part(), b.translation()));
  return WeylElement(rd_.get(), std::move(lambda),
                     compose_perm(a.finite_part(), b.finite_part()));
}

WeylElement Weyl::inverse(const WeylElement& a) const {
  W0Perm uinv = invert_perm(a.finite_part());
  Vec lambda = scale(Rat(-1), act_on_coweight(uinv, a.translation()));
  return WeylElement(rd_.get(), std::move(lambda), std::move(uinv));
}

WeylElement Weyl::conjugate(const WeylElement& g, const WeylElement& x) const {
  return multiply(multiply(g, x), inverse(g));
}

bool Weyl::is_left_descent(int s, const WeylElement& w) const {
  // s w < w iff w^{-1}(a_s) is a negative affine root, where
  // w^{-1}(alpha + k delta) = u^{-1} alpha + (k + <lambda, alpha>) delta
  const RootDatum& d = *rd_;
  int r;
  long long k;
  if (d.is_affine_node(s)) {
    r = d.negate_root(d.highest_root(d.component_of_node(s)));
    k = 1;
  } else {
    r = d.simple_root_of_node(s);
    k = 0;
  }
  long long m = k + dot(w.translation(), d.root(r)).to_int();
  // u^{-1}(alpha_r): find preimage under the finite part
  int pre = -1;
  for (int q = 0; q < d.num_roots(); ++q)
    if (w.finite_part().img[q] == r) {
      pre = q;
      break;
    }
  if (m != 0) return m < 0;
  return !d.is_positive_root(pre);
}

std::vector<int> Weyl::left_descents(const WeylElement& w) const {
  const RootDatum& d = *rd_;
  W0Perm uinv = invert_perm(w.finite_part());
  std::vector<int> out;
  for (int s = 0; s < d.num_nodes(); ++s) {
    int r;
    long long k;
    if (d.is_affine_node(s)) {
      r = d.negate_root(d.highest_root(d.component_of_node(s)));
      k = 1;
    } else {
      r = d.simple_root_of_node(s);
      k = 0;
    }
    long long m = k + dot(w.translation(), d.root(r)).to_int();
    bool neg = m != 0 ? m < 0 : !d.is_positive_root(uinv.img[r]);
    if (neg) out.push_back(s);
  }
  return out;
}

ReducedWord Weyl::reduced_word(const WeylElement& w) const {
  ReducedWord rw;
  WeylElement cur = w;
  while (cur.length() > 0) {
    auto ds = left_descents(cur);
    if (ds.empty()) throw std::logic_error("positive length but no descent");
    rw.letters.push_back(ds[0]);
    cur = multiply(simple_reflection(ds[0]), cur);
  }
  rw.omega = cur;
  rw.omega_name = omega_name(kottwitz(cur));
  return rw;
}

ReducedWord Weyl::random_reduced_word(const WeylElement& w, uint64_t seed) const {
  std::mt19937_64 rng(seed);
  ReducedWord rw;
  WeylElement cur = w;
  while (cur.length() > 0) {
    auto ds = left_descents(cur);
    int s = ds[rng() % ds.size()];
    rw.letters.push_back(s);
    cur = multiply(simple_reflection(s), cur);
  }
  rw.omega = cur;
  rw.omega_name = omega_name(kottwitz(cur));
  return rw;
}

WeylElement Weyl::from_word(const std::vector<int>& letters, const WeylElement& omega) const {
  WeylElement w = omega;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    w = multiply(simple_reflection(*it), w);
  return w;
}

bool Weyl::bruhat_leq(const WeylElement& x, const WeylElement& y) const {
  if (!(kottwitz(x) == kottwitz(y))) return false;
  if (x.length() > y.length()) return false;
  if (x.length() == 0) return true;
  if (x.length() == y.length()) return x == y;
  auto key = std::make_pair(x, y);
  auto it = bruhat_cache_.find(key);
  if (it != bruhat_cache_.end()) return it->second;
  int s = left_descents(y)[0];
  WeylElement sy = multiply(simple_reflection(s), y);
  bool res;
  if (is_left_descent(s, x))
    res = bruhat_leq(multiply(simple_reflection(s), x), sy);
  else
    res = bruhat_leq(x, sy);
  bruhat_cache_.emplace(std::move(key), res);
  return res;
}

bool Weyl::is_in_kw(const WeylElement& w, const NodeSet& k) const {
  for (int s : k.nodes())
    if (is_left_descent(s, w)) return false;
  return true;
}

WeylElement Weyl::min_coset_rep(const WeylElement& w, const NodeSet& k) const {
  WeylElement cur = w;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s : k.nodes())
      if (is_left_descent(s, cur)) {
        cur = multiply(simple_reflection(s), cur);
        changed = true;
        break;
      }
  }
  return cur;
}

Vec Weyl::kottwitz(const WeylElement& w) const { return rd_->omega_class(w.translation()); }

std::string Weyl::omega_name(const Vec& class_key) const {
  return rd_->omega_class_info(class_key).name;
}

WeylElement Weyl::omega_element(const Vec& class_key) const {
  auto it = omega_cache_.find(class_key);
  if (it != omega_cache_.end()) return it->second;
  WeylElement cur = translation(rd_->omega_class_info(class_key).rep_coweight);
  while (cur.length() > 0) cur = multiply(simple_reflection(left_descents(cur)[0]), cur);
  omega_cache_.emplace(class_key, cur);
  return cur;
}

WeylElement Weyl::omega_of(const WeylElement& w) const { return omega_element(kottwitz(w)); }

std::vector<int> Weyl::ad_node_perm(const WeylElement& omega) const {
  auto it = ad_perm_cache_.find(omega);
  if (it != ad_perm_cache_.end()) return it->second;
  if (omega.length() != 0) throw std::invalid_argument("ad_node_perm: element has positive length");
  const RootDatum& d = *rd_;
  std::vector<int> perm(d.num_nodes(), -1);
  std::vector<WeylElement> simples;
  for (int t = 0; t < d.num_nodes(); ++t) simples.push_back(simple_reflection(t));
  for (int s = 0; s < d.num_nodes(); ++s) {
    WeylElement conj = conjugate(omega, simples[s]);
    for (int t = 0; t < d.num_nodes(); ++t)
      if (conj == simples[t]) {
        perm[s] = t;
        break;
      }
    if (perm[s] < 0) throw std::logic_error("length-zero conjugation did not permute the generators");
  }
  ad_perm_cache_.emplace(omega, perm);
  return perm;
}

DiagramAutomorphism Weyl::ad_automorphism(const WeylElement& omega) const {
  return DiagramAutomorphism(rd_, ad_node_perm(omega),
                             "Ad(" + omega_name(kottwitz(omega)) + ")");
}

WeylElement Weyl::apply_sigma(const DiagramAutomorphism& sigma, const WeylElement& w) const {
  const auto& pl = sigma.root_perm();
  const auto& pli = sigma.root_perm_inv();
  W0Perm m;
  m.img.resize(pl.size());
  for (size_t r = 0; r < pl.size(); ++r) m.img[r] = pl[w.finite_part().img[pli[r]]];
  Vec lambda = add(sigma.linear_apply(w.translation()), sigma.translation_part());
  lambda = sub(lambda, act_on_coweight(m, sigma.translation_part()));
  WeylElement out(rd_.get(), std::move(lambda), std::move(m));
  if (out.length() != w.length()) throw std::logic_error("automorphism failed to preserve length");
  return out;
}

TwistedMove Weyl::twisted_conj_move(const WeylElement& x, int s,
                                    const DiagramAutomorphism& sigma) const {
  WeylElement res = multiply(multiply(simple_reflection(s), x),
                             simple_reflection(sigma.node(s)));
  return TwistedMove{res, res.length() - x.length()};
}

Vec Weyl::newton_point(const WeylElement& w, const DiagramAutomorphism& sigma) const {
  int d = sigma.order();
  // e = w sigma(w) sigma^2(w) ... sigma^{d-1}(w), so that (w sigma)^d = e
  WeylElement e = w, cur = w;
  for (int i = 1; i < d; ++i) {
    cur = apply_sigma(sigma, cur);
    e = multiply(e, cur);
  }
  int o = perm_order(e.finite_part());
  if (static_cast<long long>(o) * d > 1000000)
    throw std::logic_error("newton_point: iteration bound exceeded");
  // e^o = t^{v + u(v) + ... + u^{o-1}(v)} with e = t^v u
  Vec total = zero_vec(rd_->dim());
  Vec v = e.translation();
  W0Perm acc = identity_perm(*rd_);
  for (int i = 0; i < o; ++i) {
    total = add(total, act_on_coweight(acc, v));
    acc = compose_perm(acc, e.finite_part());
  }
  return rd_->dominant_rep(scale(Rat(1, static_cast<long long>(o) * d), total));
}

bool Weyl::newton_is_central(const WeylElement& w, const DiagramAutomorphism& sigma) const {
  return is_zero_vec(newton_point(w, sigma));
}

std::vector<WeylElement> Weyl::enumerate_subgroup(const NodeSet& k, size_t budget) const {
  if (!rd_->spans_finite(k)) throw std::invalid_argument("enumerate_subgroup: infinite subgroup");
  std::vector<WeylElement> out = {identity()};
  std::set<WeylElement> seen(out.begin(), out.end());
  for (size_t i = 0; i < out.size(); ++i) {
    for (int s : k.nodes()) {
      WeylElement next = multiply(simple_reflection(s), out[i]);
      if (seen.insert(next).second) {
        out.push_back(next);
        if (out.size() > budget) throw std::runtime_error("enumerate_subgroup: budget exceeded");
      }
    }
  }
  return out;
}

std::string Weyl::element_str(const WeylElement& w) const {
  ReducedWord rw = reduced_word(w);
  std::string s;
  for (size_t i = 0; i < rw.letters.size(); ++i) {
    if (i) s += " ";
    s += "s" + std::to_string(rw.letters[i]);
  }
  if (rw.omega_name != "1") {
    if (!s.empty()) s += " . ";
    s += rw.omega_name;
  }
  if (s.empty()) s = "1";
  return s;
}

std::shared_ptr<Weyl> make_weyl(const AffineType& t) {
  return std::make_shared<Weyl>(make_root_datum(t));
}

}  // namespace adlv
