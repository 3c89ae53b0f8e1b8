#include "modlie/modlie.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "scalars/fp.hpp"

namespace modlie {

using fdrep::Vec;
using scalars::mod_add;
using scalars::mod_inv;
using scalars::mod_mul;
using scalars::mod_reduce;
using scalars::mod_sub;

namespace {

constexpr size_t kMaxDim = 4096;

Mat unit(uint32_t n, uint32_t p, size_t a, size_t b) {
  Mat e(n, n, p);
  e.at(a, b) = 1;
  return e;
}

uint32_t det(Mat a) {
  const uint32_t p = a.p();
  const size_t n = a.rows();
  uint32_t d = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && a.at(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (size_t j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(c, j));
      d = mod_sub(0, d, p);
    }
    d = mod_mul(d, a.at(c, c), p);
    uint32_t inv = mod_inv(a.at(c, c), p);
    for (size_t r = c + 1; r < n; ++r) {
      uint32_t f = mod_mul(a.at(r, c), inv, p);
      for (size_t j = c; j < n; ++j) a.at(r, j) = mod_sub(a.at(r, j), mod_mul(f, a.at(c, j), p), p);
    }
  }
  return d;
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

// T_0 weights: nu = diag(1, .., 1, 1-n).
std::vector<int64_t> torus_weights(uint32_t n) {
  std::vector<int64_t> w(n, 1);
  w[n - 1] = 1 - static_cast<int64_t>(n);
  return w;
}

}  // namespace

uint32_t SubregChi::operator()(const Mat& x) const {
  uint32_t s = 0;
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j) s = mod_add(s, mod_mul(table.at(i, j), x.at(i, j), p), p);
  return s;
}

SubregChi make_chi(uint32_t n, uint32_t p) {
  if (n < 2) throw std::invalid_argument("sl_n needs n >= 2");
  if (!scalars::is_prime(p)) throw std::invalid_argument("p must be prime");
  if (p <= n) throw std::invalid_argument("p > n required");
  SubregChi c{n, p, Mat(n, n, p)};
  for (uint32_t j = 0; j + 2 < n; ++j) c.table.at(j + 1, j) = 1;
  return c;
}

Mat flag_basis(uint32_t n, uint32_t p, uint32_t j, uint32_t alpha) {
  if (j < 1 || j >= n) throw std::invalid_argument("flag index must lie in [1, n-1]");
  Mat g(n, n, p);
  std::vector<size_t> order;
  for (uint32_t i = 0; i + 1 < j; ++i) order.push_back(i);
  order.push_back(j - 1);
  order.push_back(n - 1);
  for (uint32_t i = j; i + 1 < n; ++i) order.push_back(i);
  for (size_t c = 0; c < n; ++c) g.at(order[c], c) = 1;
  g.at(n - 1, j - 1) = alpha % p;
  return g;
}

FlagBorel flag_borel(const SubregChi& chi, uint32_t k, uint32_t alpha) {
  const uint32_t n = chi.n, p = chi.p;
  FlagBorel b;
  b.k = k;
  b.alpha = alpha % p;
  if (k == 0) {
    if (b.alpha != 0) throw std::invalid_argument("(0, alpha) requires alpha = 0");
    b.g = Mat::identity(n, p);
  } else {
    if (k >= n) throw std::invalid_argument("k must lie in [0, n-1]");
    b.g = flag_basis(n, p, n - k, b.alpha);
    uint32_t d = det(b.g);
    uint32_t fix = mod_inv(d, p);
    for (size_t r = 0; r < n; ++r) b.g.at(r, n - 1) = mod_mul(b.g.at(r, n - 1), fix, p);
  }
  b.ginv = *fdrep::inverse(b.g);
  // chi must vanish on b.
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t c = a; c < n; ++c)
      if (chi(b.g * unit(n, p, a, c) * b.ginv) != 0) throw std::logic_error("flag outside the Springer fibre");
  std::vector<uint32_t> perm(n);
  bool monomial = true;
  for (uint32_t c = 0; c < n && monomial; ++c) {
    size_t nz = 0;
    for (uint32_t r = 0; r < n; ++r)
      if (b.g.at(r, c)) ++nz, perm[c] = r;
    monomial = nz == 1;
  }
  if (monomial) b.perm = perm;
  return b;
}

Mat stabiliser(const Mat& g) {
  const size_t n = g.rows();
  const uint32_t p = g.p();
  Mat ginv = *fdrep::inverse(g);
  Mat out(0, n * n, p);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a; b < n; ++b) out.append_row((g * unit(n, p, a, b) * ginv).data());
  return out;
}

bool torus_moves_flags(uint32_t n, uint32_t p, uint32_t j, uint32_t alpha) {
  auto w = torus_weights(n);
  for (uint32_t tau = 1; tau < p; ++tau) {
    Mat nu(n, n, p);
    for (uint32_t i = 0; i < n; ++i) nu.at(i, i) = scalars::FpElem(tau, p).pow(w[i] < 0 ? (p - 1) * n + w[i] : w[i]).value();
    uint32_t tn = mod_inv(scalars::mod_pow(tau, n, p), p);
    Mat moved = nu * flag_basis(n, p, j, alpha);
    Mat target = flag_basis(n, p, j, mod_mul(tn, alpha, p));
    for (size_t m = 1; m <= n; ++m) {
      Mat a(0, n, p), both(0, n, p);
      for (size_t c = 0; c < m; ++c) {
        a.append_row(moved.col_vec(c));
        both.append_row(moved.col_vec(c));
        both.append_row(target.col_vec(c));
      }
      if (fdrep::rank(a) != m || fdrep::rank(both) != m) return false;
    }
  }
  return true;
}

uint32_t WeightData::r0() const {
  uint32_t s = std::accumulate(r.begin(), r.end(), 0u);
  return p - s;
}

bool WeightData::regular() const {
  return r0() > 0 && std::all_of(r.begin(), r.end(), [](uint32_t x) { return x > 0; });
}

std::vector<int64_t> WeightData::rho_shifted() const {
  std::vector<int64_t> out(n, 0);
  for (int64_t k = static_cast<int64_t>(n) - 2; k >= 0; --k) out[k] = out[k + 1] + r[k];
  return out;
}

std::vector<int64_t> WeightData::mu() const {
  auto out = rho_shifted();
  for (uint32_t k = 0; k < n; ++k) out[k] -= static_cast<int64_t>(n - 1 - k);
  return out;
}

std::string WeightData::label() const {
  std::string s = "(n=" + std::to_string(n) + ",p=" + std::to_string(p) + ",r=(";
  for (size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
  return s + "))";
}

WeightData make_weight(uint32_t n, uint32_t p, std::vector<uint32_t> r) {
  make_chi(n, p);
  if (r.size() != n - 1) throw std::invalid_argument("need n-1 values r_1..r_{n-1}");
  uint64_t s = std::accumulate(r.begin(), r.end(), uint64_t{0});
  if (s > p) throw std::invalid_argument("r_1 + ... + r_{n-1} must not exceed p");
  return {n, p, std::move(r)};
}

std::vector<std::vector<int64_t>> dot_orbit(const WeightData& w) {
  auto lr = w.rho_shifted();
  std::vector<size_t> perm(w.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int64_t>> out;
  do {
    std::vector<int64_t> mu(w.n);
    for (uint32_t k = 0; k < w.n; ++k) mu[k] = lr[perm[k]] - static_cast<int64_t>(w.n - 1 - k);
    out.push_back(mu);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<std::string> generator_names(uint32_t n) {
  std::vector<std::string> out;
  for (uint32_t i = 1; i <= n; ++i)
    for (uint32_t j = 1; j <= n; ++j)
      if (i != j) out.push_back("E" + std::to_string(i) + std::to_string(j));
  for (uint32_t i = 1; i < n; ++i) out.push_back("H" + std::to_string(i));
  return out;
}

Mat generator_matrix(uint32_t n, uint32_t p, size_t index) {
  const size_t off = static_cast<size_t>(n) * (n - 1);
  if (index < off) {
    size_t i = index / (n - 1), jj = index % (n - 1);
    size_t j = jj >= i ? jj + 1 : jj;
    return unit(n, p, i, j);
  }
  size_t i = index - off;
  if (i + 1 >= n) throw std::out_of_range("generator index");
  Mat h(n, n, p);
  h.at(i, i) = 1;
  h.at(i + 1, i + 1) = p - 1;
  return h;
}

namespace {

// Induced module for b_+ with p-character chi' (zero on b_+) and weight mu, via PBW straightening.
class Straightener {
 public:
  Straightener(uint32_t n, uint32_t p, const Mat& chi_twisted, const std::vector<int64_t>& mu)
      : n_(n), p_(p), chi_(chi_twisted), mu_(mu) {
    for (uint32_t h = n - 1; h >= 1; --h)
      for (uint32_t j = 0; j + h < n; ++j) roots_.push_back({j + h, j});
    root_pos_.assign(n * n, -1);
    for (size_t t = 0; t < roots_.size(); ++t) root_pos_[roots_[t].first * n + roots_[t].second] = static_cast<int>(t);
    dim_ = 1;
    for (size_t t = 0; t < roots_.size(); ++t) {
      pw_.push_back(dim_);
      if (dim_ > kMaxDim) break;
      dim_ *= p;
    }
    if (dim_ > kMaxDim) throw std::invalid_argument("baby Verma too large for dense matrices");
    memo_.assign(n * n, std::vector<Vec>(dim_));
  }

  size_t dim() const { return dim_; }
  const std::vector<std::pair<uint32_t, uint32_t>>& roots() const { return roots_; }
  size_t digit(size_t m, size_t t) const { return (m / pw_[t]) % p_; }

  Mat matrix(size_t x) {
    Mat out(dim_, dim_, p_);
    for (size_t m = 0; m < dim_; ++m) {
      const Vec& c = col(x, m);
      for (size_t r = 0; r < dim_; ++r) out.at(r, m) = c[r];
    }
    return out;
  }

 private:
  void axpy(Vec& y, uint32_t a, const Vec& x) const {
    if (!a) return;
    for (size_t i = 0; i < dim_; ++i)
      if (x[i]) y[i] = mod_add(y[i], mod_mul(a, x[i], p_), p_);
  }

  // E_x applied to the PBW monomial m (x = a*n+b).
  const Vec& col(size_t x, size_t m) {
    Vec& slot = memo_[x][m];
    if (!slot.empty()) return slot;
    Vec res(dim_, 0);
    const size_t a = x / n_, b = x % n_;
    const int pos = root_pos_[x];
    size_t first = roots_.size();
    for (size_t t = 0; t < roots_.size(); ++t)
      if (digit(m, t)) {
        first = t;
        break;
      }
    if (pos >= 0 && static_cast<size_t>(pos) <= first) {
      size_t e = digit(m, pos);
      if (e + 1 < p_)
        res[m + pw_[pos]] = 1;
      else if (uint32_t c = chi_.at(a, b))  // F^p = chi'(F)^p = chi'(F)
        res[m - e * pw_[pos]] = c;
    } else if (first == roots_.size()) {
      if (a == b) res[0] = mod_reduce(mu_[a], p_);
      // strictly upper triangular: kills 1 (x) 1
    } else {
      // E_x F_g m' = F_g (E_x m') + [E_x, F_g] m'
      const auto [gi, gj] = roots_[first];
      const size_t g = gi * n_ + gj;
      const size_t rest = m - pw_[first];
      Vec u = col(x, rest);
      for (size_t c = 0; c < dim_; ++c)
        if (u[c]) axpy(res, u[c], col(g, c));
      // [E_ab, E_cd] = d_bc E_ad - d_da E_cb
      if (b == gi) axpy(res, 1, col(a * n_ + gj, rest));
      if (gj == a) axpy(res, p_ - 1, col(gi * n_ + b, rest));
    }
    memo_[x][m] = std::move(res);
    return memo_[x][m];
  }

  uint32_t n_, p_;
  Mat chi_;
  std::vector<int64_t> mu_;
  std::vector<std::pair<uint32_t, uint32_t>> roots_;
  std::vector<int> root_pos_;
  std::vector<size_t> pw_;
  size_t dim_ = 1;
  std::vector<std::vector<Vec>> memo_;
};

}  // namespace

LieVerma baby_verma_weight(const SubregChi& chi, const std::vector<int64_t>& weight, const FlagBorel& bor) {
  const uint32_t n = chi.n, p = chi.p;
  if (weight.size() != n) throw std::invalid_argument("weight has the wrong length");
  // chi'(E_ab) = chi(g E_ab g^-1)
  Mat chi_t(n, n, p);
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = 0; b < n; ++b) chi_t.at(a, b) = chi(bor.g * unit(n, p, a, b) * bor.ginv);
  Straightener s(n, p, chi_t, weight);
  LieVerma out;
  out.weight = weight;
  for (size_t x = 0; x < static_cast<size_t>(n) * n; ++x) out.gl_action.push_back(s.matrix(x));
  const auto names = generator_names(n);
  out.module = FDModule(p, s.dim(), names);
  for (size_t k = 0; k < names.size(); ++k) {
    Mat y = bor.ginv * generator_matrix(n, p, k) * bor.g;
    Mat& target = out.module.gens[k];
    for (uint32_t a = 0; a < n; ++a)
      for (uint32_t b = 0; b < n; ++b)
        if (uint32_t c = y.at(a, b)) target = target + out.gl_action[a * n + b].scaled(c);
  }
  if (bor.perm) {
    const auto w = torus_weights(n);
    const auto& perm = *bor.perm;
    int64_t base = 0;
    for (uint32_t k = 0; k < n; ++k) base += weight[k] * w[perm[k]];
    std::vector<int64_t> deg(s.dim(), base);
    for (size_t m = 0; m < s.dim(); ++m)
      for (size_t t = 0; t < s.roots().size(); ++t) {
        auto [i, j] = s.roots()[t];
        deg[m] += static_cast<int64_t>(s.digit(m, t)) * (w[perm[i]] - w[perm[j]]);
      }
    out.module.grading = deg;
  }
  return out;
}

FDModule baby_verma_lie(const SubregChi& chi, const WeightData& w, const FlagBorel& bor) {
  if (w.n != chi.n || w.p != chi.p) throw std::invalid_argument("weight and character disagree");
  return baby_verma_weight(chi, w.mu(), bor).module;
}

Mat act(const FDModule& m, const Mat& x) {
  const size_t n = x.rows();
  const uint32_t p = x.p();
  Mat out(m.dim, m.dim, p);
  size_t idx = 0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (i != j) {
        if (x.at(i, j)) out = out + m.gens[idx].scaled(x.at(i, j));
        ++idx;
      }
  uint32_t trace = 0;
  for (size_t i = 0; i < n; ++i) trace = mod_add(trace, x.at(i, i), p);
  if (trace) throw std::invalid_argument("act: matrix is not traceless");
  uint32_t cum = 0;
  for (size_t i = 0; i + 1 < n; ++i) {
    cum = mod_add(cum, x.at(i, i), p);
    if (cum) out = out + m.gens[idx + i].scaled(cum);
  }
  return out;
}

RelationCheck check_relations(const FDModule& m, const SubregChi& chi) {
  const uint32_t n = chi.n, p = chi.p;
  RelationCheck rc;
  const size_t G = static_cast<size_t>(n) * n - 1;
  for (size_t x = 0; x < G; ++x) {
    Mat X = generator_matrix(n, p, x);
    for (size_t y = x + 1; y < G; ++y) {
      Mat Y = generator_matrix(n, p, y);
      ++rc.checked;
      if (commutator(m.gens[x], m.gens[y]) != act(m, commutator(X, Y))) rc.brackets = false;
    }
    ++rc.checked;
    Mat lhs = m.gens[x].pow(p);
    Mat rhs = act(m, X.pow(p)) + Mat::identity(m.dim, p).scaled(scalars::mod_pow(chi(X), p, p));
    if (lhs != rhs) rc.p_powers = false;
  }
  return rc;
}

size_t end_dim_at_flag(const SubregChi& chi, const WeightData& w, const FlagBorel& bor) {
  const uint32_t n = chi.n, p = chi.p;
  FDModule z = baby_verma_lie(chi, w, bor);
  auto mu = w.mu();
  Mat sys(0, z.dim, p);
  auto add = [&](const Mat& y, uint32_t eigen) {
    Mat a = act(z, bor.g * y * bor.ginv) - Mat::identity(z.dim, p).scaled(eigen);
    for (size_t r = 0; r < a.rows(); ++r) sys.append_row(a.row(r));
  };
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = a + 1; b < n; ++b) add(unit(n, p, a, b), 0);
  for (uint32_t a = 0; a + 1 < n; ++a) {
    Mat h = unit(n, p, a, a) - unit(n, p, a + 1, a + 1);
    add(h, mod_reduce(mu[a] - mu[a + 1], p));
  }
  return z.dim - fdrep::rank(sys);
}

ChainData chain(const SubregChi& chi, const WeightData& w) {
  if (!w.regular()) throw std::invalid_argument("the chain of simples needs a regular weight");
  const uint32_t n = chi.n, p = chi.p;
  FlagBorel plus = flag_borel(chi, 0, 0);
  ChainData c;
  c.weight = w;
  c.chi = chi;
  // Baby Vermas over the dot orbit, grouped by isomorphism.
  std::vector<std::vector<int64_t>> reps;
  std::vector<FDModule> mods;
  for (const auto& mu : dot_orbit(w)) {
    FDModule z = baby_verma_weight(chi, mu, plus).module;
    bool seen = false;
    for (const auto& m : mods)
      if (fdrep::is_isomorphic(m, z)) {
        seen = true;
        break;
      }
    if (!seen) {
      mods.push_back(std::move(z));
      reps.push_back(mu);
    }
  }
  c.orbit_classes = mods.size();
  if (mods.size() != n) throw std::logic_error("dot orbit does not give n isomorphism classes");
  // Heads: quotient by the images of every map from the other classes.
  std::vector<FDModule> heads;
  for (size_t a = 0; a < n; ++a) {
    std::vector<Mat> maps;
    for (size_t b = 0; b < n; ++b)
      if (b != a)
        for (auto& f : fdrep::hom(mods[b], mods[a])) maps.push_back(std::move(f));
    Mat rad = fdrep::image_span(maps, mods[a].dim, p);
    heads.push_back(fdrep::quotient(mods[a], rad).module);
  }
  // Cyclic order: the second radical layer of V_a is the head of its successor.
  std::vector<size_t> next(n);
  for (size_t a = 0; a < n; ++a) {
    auto layers = fdrep::loewy_series(mods[a], heads);
    if (layers.size() < 2 || layers[1].parts.size() != 1) throw std::logic_error("baby Verma is not uniserial");
    next[a] = layers[1].parts[0].simple;
  }
  // Label so that dim L_i = p^((n^2-n-2)/2) r_{n-1-i}, starting from the first class.
  size_t scale = 1;
  for (uint32_t e = 0; e < (n * n - n - 2) / 2; ++e) scale *= p;
  auto r_at = [&](size_t i) { return i == 0 ? w.r0() : w.r[i - 1]; };
  std::optional<std::vector<size_t>> cls;
  for (size_t start = 0; start < n && !cls; ++start) {
    std::vector<size_t> order(n);
    size_t cur = 0;
    bool ok = true;
    for (size_t t = 0; t < n; ++t) {
      size_t i = (start + t) % n;
      order[i] = cur;
      if (heads[cur].dim != scale * r_at(n - 1 - i)) ok = false;
      cur = next[cur];
    }
    if (ok && cur == 0) cls = order;
  }
  if (!cls) throw std::logic_error("simple dimensions do not match any cyclic labelling");
  for (size_t i = 0; i < n; ++i) {
    c.V.push_back(mods[(*cls)[i]]);
    c.orbit_weight.push_back(reps[(*cls)[i]]);
    c.L.push_back(heads[(*cls)[i]]);
    c.dim_L.push_back(heads[(*cls)[i]].dim);
  }
  // Fix graded representatives so that V_0 has layers L_0, L_1[-1], ..., L_{n-1}[1-n].
  auto l0 = fdrep::loewy_series(c.V[0], c.L);
  for (size_t t = 0; t < l0.size(); ++t) {
    const auto& part = l0[t].parts.at(0);
    c.L[part.simple] = fdrep::shifted(c.L[part.simple], *part.shift + static_cast<int64_t>(p) * t);
  }
  for (size_t i = 0; i < n; ++i) {
    auto ls = fdrep::loewy_series(c.V[i], c.L);
    std::vector<LayerInfo> info;
    const int64_t head = *ls.at(0).parts.at(0).shift;
    for (const auto& layer : ls)
      for (const auto& part : layer.parts) {
        LayerInfo li;
        li.simple = part.simple;
        li.dim = c.L[part.simple].dim;
        li.multiplicity = part.multiplicity;
        li.degree_offset = *part.shift - head;
        li.integral = li.degree_offset % static_cast<int64_t>(p) == 0;
        li.shift = li.degree_offset / static_cast<int64_t>(p);
        info.push_back(li);
      }
    c.layers.push_back(info);
  }
  return c;
}

VermaReport verma_report(const ChainData& c, const FlagBorel& bor) {
  VermaReport rep;
  rep.k = bor.k;
  rep.alpha = bor.alpha;
  FDModule z = baby_verma_lie(c.chi, c.weight, bor);
  rep.dim = z.dim;
  std::vector<FDModule> plain;
  for (const auto& l : c.L) {
    FDModule u = l;
    u.grading.reset();
    plain.push_back(std::move(u));
  }
  FDModule zu = z;
  zu.grading.reset();
  rep.multiplicities = fdrep::composition_multiplicities(zu, plain);
  rep.end_dim = end_dim_at_flag(c.chi, c.weight, bor);
  rep.relations = check_relations(z, c.chi);
  if (z.graded()) {
    auto ls = fdrep::loewy_series(z, c.L);
    const int64_t head = *ls.at(0).parts.at(0).shift;
    for (const auto& layer : ls)
      for (const auto& part : layer.parts) {
        LayerInfo li;
        li.simple = part.simple;
        li.dim = c.L[part.simple].dim;
        li.multiplicity = part.multiplicity;
        li.degree_offset = *part.shift - head;
        li.integral = li.degree_offset % static_cast<int64_t>(c.chi.p) == 0;
        li.shift = li.degree_offset / static_cast<int64_t>(c.chi.p);
        rep.layers.push_back(li);
      }
  }
  return rep;
}

}  // namespace modlie
