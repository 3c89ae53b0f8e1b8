#include "fdrep/module.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "scalars/fp.hpp"
#include "scalars/kernels.hpp"

namespace fdrep {

using scalars::mod_neg;
namespace kern = scalars::kernels;

FDModule::FDModule(uint32_t field, size_t dimension, std::vector<std::string> gen_names)
    : q(field), dim(dimension), names(std::move(gen_names)) {
  for (size_t i = 0; i < names.size(); ++i) gens.emplace_back(dim, dim, q);
}

size_t FDModule::index(const std::string& name) const {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  throw std::out_of_range("module has no generator named " + name);
}

void FDModule::validate() const {
  if (names.size() != gens.size()) throw std::invalid_argument("generator name/matrix count mismatch");
  for (const auto& g : gens)
    if (g.rows() != dim || g.cols() != dim || g.p() != q) throw std::invalid_argument("generator shape mismatch");
  if (grading && grading->size() != dim) throw std::invalid_argument("grading length mismatch");
}

namespace {

// Generator matrices of n reordered to match m's generator names.
std::vector<const Mat*> matched(const FDModule& m, const FDModule& n) {
  if (m.q != n.q) throw std::invalid_argument("hom: modules over different fields");
  if (m.names.size() != n.names.size()) throw std::invalid_argument("hom: generator sets differ");
  std::vector<const Mat*> out;
  for (const auto& nm : m.names) out.push_back(&n.gen(nm));
  return out;
}

// out += c * src, entrywise.
void add_scaled(Mat& out, const Mat& src, uint32_t c) {
  kern::axpy(out.raw(), src.data().data(), c, out.p(), out.data().size());
}

}  // namespace

// Spin M from homogeneous standard vectors; unknowns are the images of the seeds.  Each spin
// vector's image is tracked as a matrix L_i (dim N x #unknowns); every (vector, generator) pair
// that did not create a new spin vector gives a linear constraint, and the solution space shrinks
// constraint by constraint.
std::vector<Mat> hom(const FDModule& m, const FDModule& n, std::optional<int64_t> shift) {
  m.validate();
  n.validate();
  auto nb = matched(m, n);
  const uint32_t q = m.q;
  if (shift && (!m.graded() || !n.graded())) throw std::invalid_argument("graded hom needs graded modules");
  if (m.dim == 0 || n.dim == 0) return {};

  struct Node {
    Vec v;
    int parent;
    int gen;
  };
  std::vector<Node> spin;
  std::vector<std::vector<bool>> produced;
  std::vector<size_t> seeds;  // spin indices
  std::vector<size_t> seed_std;
  Echelon ech(m.dim, q);
  for (size_t k = 0; k < m.dim && ech.dim() < m.dim; ++k) {
    Vec e(m.dim, 0);
    e[k] = 1 % q;
    if (!ech.insert(e)) continue;
    seeds.push_back(spin.size());
    seed_std.push_back(k);
    spin.push_back({e, -1, -1});
    produced.emplace_back(m.gens.size(), false);
    for (size_t i = spin.size() - 1; i < spin.size(); ++i) {
      for (size_t x = 0; x < m.gens.size(); ++x) {
        Vec w = m.gens[x] * spin[i].v;
        if (ech.insert(w)) {
          produced[i][x] = true;
          spin.push_back({std::move(w), static_cast<int>(i), static_cast<int>(x)});
          produced.emplace_back(m.gens.size(), false);
        }
      }
    }
  }
  const size_t d = spin.size();

  Mat s(0, m.dim, q);
  for (const auto& nd : spin) s.append_row(nd.v);
  Mat sinv = *inverse(s);

  // Unknown coordinates for each seed.
  std::vector<std::vector<size_t>> allowed(seeds.size());
  size_t unknowns = 0;
  for (size_t g = 0; g < seeds.size(); ++g) {
    for (size_t j = 0; j < n.dim; ++j) {
      if (shift && (*n.grading)[j] + *shift != (*m.grading)[seed_std[g]]) continue;
      allowed[g].push_back(j);
    }
    unknowns += allowed[g].size();
  }
  if (unknowns == 0) return {};

  std::vector<Mat> l(d);
  size_t col = 0;
  std::vector<int> seed_of(d, -1);
  for (size_t g = 0; g < seeds.size(); ++g) seed_of[seeds[g]] = static_cast<int>(g);
  for (size_t i = 0; i < d; ++i) {
    if (seed_of[i] >= 0) {
      l[i] = Mat(n.dim, unknowns, q);
      for (size_t j : allowed[seed_of[i]]) l[i].at(j, col++) = 1 % q;
    } else {
      l[i] = *nb[spin[i].gen] * l[spin[i].parent];
    }
  }

  size_t k = unknowns;
  for (size_t i = 0; i < d && k > 0; ++i) {
    for (size_t x = 0; x < m.gens.size() && k > 0; ++x) {
      if (produced[i][x]) continue;
      Vec w = m.gens[x] * spin[i].v;
      Vec c = vec_mul(w, sinv);
      Mat r = *nb[x] * l[i];
      for (size_t j = 0; j < d; ++j)
        if (c[j]) add_scaled(r, l[j], mod_neg(c[j], q));
      if (r.is_zero()) continue;
      Mat t = kernel(r);  // rows: combinations of current solutions that survive
      k = t.rows();
      if (k == 0) return {};
      Mat tt = t.transpose();
      for (auto& li : l) li = li * tt;
    }
  }

  std::vector<Mat> out;
  for (size_t sol = 0; sol < k; ++sol) {
    Mat y(n.dim, d, q);
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < n.dim; ++j) y.at(j, i) = l[i].at(j, sol);
    Mat phi = y * sinv.transpose();
    for (size_t x = 0; x < m.gens.size(); ++x)
      if (phi * m.gens[x] != *nb[x] * phi) throw std::logic_error("hom: solution fails to intertwine");
    out.push_back(std::move(phi));
  }
  return out;
}

size_t hom_dim(const FDModule& m, const FDModule& n, std::optional<int64_t> shift) {
  return hom(m, n, shift).size();
}

FDModule direct_sum(const FDModule& a, const FDModule& b) {
  if (a.q != b.q) throw std::invalid_argument("direct_sum: field mismatch");
  FDModule s(a.q, a.dim + b.dim, a.names);
  for (size_t x = 0; x < a.names.size(); ++x) {
    const Mat& ga = a.gens[x];
    const Mat& gb = b.gen(a.names[x]);
    for (size_t i = 0; i < a.dim; ++i)
      for (size_t j = 0; j < a.dim; ++j) s.gens[x].at(i, j) = ga.at(i, j);
    for (size_t i = 0; i < b.dim; ++i)
      for (size_t j = 0; j < b.dim; ++j) s.gens[x].at(a.dim + i, a.dim + j) = gb.at(i, j);
  }
  if (a.graded() && b.graded()) {
    std::vector<int64_t> g = *a.grading;
    g.insert(g.end(), b.grading->begin(), b.grading->end());
    s.grading = g;
  }
  return s;
}

FDModule shifted(const FDModule& m, int64_t by) {
  if (!m.graded()) throw std::invalid_argument("shifted: module is not graded");
  FDModule r = m;
  for (auto& d : *r.grading) d += by;
  return r;
}

namespace {

std::optional<int64_t> degree_of(const FDModule& m, const uint32_t* v) {
  std::optional<int64_t> deg;
  for (size_t j = 0; j < m.dim; ++j) {
    if (!v[j]) continue;
    if (deg && *deg != (*m.grading)[j]) return std::nullopt;
    deg = (*m.grading)[j];
  }
  return deg;
}

}  // namespace

FDModule submodule(const FDModule& m, const Mat& basis) {
  const size_t k = basis.rows();
  const uint32_t q = m.q;
  FDModule s(q, k, m.names);
  if (k == 0) {
    if (m.graded()) s.grading = std::vector<int64_t>{};
    return s;
  }
  Mat ut = basis.transpose();
  for (size_t x = 0; x < m.gens.size(); ++x) {
    Mat aut = m.gens[x] * ut;
    Mat aug(m.dim, 2 * k, q);
    for (size_t i = 0; i < m.dim; ++i)
      for (size_t j = 0; j < k; ++j) {
        aug.at(i, j) = ut.at(i, j);
        aug.at(i, k + j) = aut.at(i, j);
      }
    auto piv = rref(aug);
    if (piv.size() < k || piv[k - 1] != k - 1) throw std::invalid_argument("submodule: basis is dependent");
    if (piv.size() > k) throw std::invalid_argument("submodule: subspace is not invariant");
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) s.gens[x].at(i, j) = aug.at(i, k + j);
  }
  if (m.graded()) {
    std::vector<int64_t> g;
    for (size_t i = 0; i < k; ++i) {
      auto d = degree_of(m, basis.row(i));
      if (!d) throw std::invalid_argument("submodule: basis vector is not homogeneous");
      g.push_back(*d);
    }
    s.grading = g;
  }
  return s;
}

Quotient quotient(const FDModule& m, const Mat& sub_basis) {
  const uint32_t q = m.q;
  Mat e = sub_basis;
  auto piv = rref(e);
  const size_t k = piv.size();
  std::vector<bool> is_piv(m.dim, false);
  for (size_t c : piv) is_piv[c] = true;
  Mat b(0, m.dim, q), lift(0, m.dim, q);
  for (size_t i = 0; i < k; ++i) b.append_row(e.row(i));
  std::vector<size_t> comp;
  for (size_t j = 0; j < m.dim; ++j) {
    if (is_piv[j]) continue;
    Vec v(m.dim, 0);
    v[j] = 1 % q;
    b.append_row(v);
    lift.append_row(v);
    comp.push_back(j);
  }
  Mat binv = *inverse(b);
  const size_t qd = comp.size();
  Quotient out{FDModule(q, qd, m.names), Mat(qd, m.dim, q), lift};
  for (size_t i = 0; i < m.dim; ++i)
    for (size_t j = 0; j < qd; ++j) out.projection.at(j, i) = binv.at(i, k + j);
  for (size_t x = 0; x < m.gens.size(); ++x)
    for (size_t j = 0; j < qd; ++j) {
      Vec w = m.gens[x].col_vec(comp[j]);
      Vec c = vec_mul(w, binv);
      for (size_t i = 0; i < qd; ++i) out.module.gens[x].at(i, j) = c[k + i];
    }
  if (m.graded()) {
    // The subspace must be graded for the quotient grading to make sense.
    homogeneous_basis(m, sub_basis);
    std::vector<int64_t> g;
    for (size_t j : comp) g.push_back((*m.grading)[j]);
    out.module.grading = g;
  }
  return out;
}

Mat homogeneous_basis(const FDModule& m, const Mat& u) {
  if (!m.graded()) throw std::invalid_argument("homogeneous_basis: module is not graded");
  const uint32_t q = m.q;
  Mat basis = row_space(u);
  std::set<int64_t> degs(m.grading->begin(), m.grading->end());
  Mat out(0, m.dim, q);
  for (int64_t deg : degs) {
    std::vector<size_t> off;
    for (size_t j = 0; j < m.dim; ++j)
      if ((*m.grading)[j] != deg) off.push_back(j);
    Mat sys(off.size(), basis.rows(), q);
    for (size_t a = 0; a < off.size(); ++a)
      for (size_t i = 0; i < basis.rows(); ++i) sys.at(a, i) = basis.at(i, off[a]);
    Mat ker = kernel(sys);
    if (ker.rows() == 0) continue;
    Mat vecs = row_space(ker * basis);
    for (size_t i = 0; i < vecs.rows(); ++i) out.append_row(vecs.row(i));
  }
  if (out.rows() != basis.rows()) throw std::invalid_argument("homogeneous_basis: subspace is not graded");
  return out;
}

Mat image_span(const std::vector<Mat>& maps, size_t target_dim, uint32_t q) {
  Echelon e(target_dim, q);
  for (const auto& f : maps) {
    Mat ft = f.transpose();
    for (size_t i = 0; i < ft.rows(); ++i) e.insert(ft.row_vec(i));
  }
  return row_space(e.basis());
}

Mat common_kernel(const std::vector<Mat>& maps, size_t source_dim, uint32_t q) {
  Mat stack(0, source_dim, q);
  for (const auto& f : maps)
    for (size_t i = 0; i < f.rows(); ++i) stack.append_row(f.row(i));
  if (stack.rows() == 0) return Mat::identity(source_dim, q);
  return row_space(kernel(stack));
}

namespace {

bool is_nilpotent(const Mat& a) { return a.pow(a.rows()).is_zero(); }

Vec flatten(const Mat& a) { return a.data(); }

}  // namespace

// Local endomorphism ring test.  Each basis element must be scalar plus nilpotent, and the
// nilpotent parts must form a nilpotent ideal of codimension one.  This assumes the residue
// field of End(M) is the prime field, which holds for the split modules used here.
bool is_indecomposable(const FDModule& m) {
  if (m.dim == 0) return false;
  auto end = hom(m, m);
  if (end.size() == 1) return true;
  const uint32_t q = m.q;
  const size_t n = m.dim;
  Mat id = Mat::identity(n, q);
  std::vector<Mat> nil;
  for (const auto& f : end) {
    std::optional<Mat> part;
    for (uint32_t c = 0; c < q && !part; ++c) {
      Mat g = f - id.scaled(c);
      if (is_nilpotent(g)) part = g;
    }
    if (!part) return false;
    nil.push_back(*part);
  }
  Echelon span(n * n, q);
  std::vector<Mat> nbasis;
  for (const auto& g : nil)
    if (span.insert(flatten(g))) nbasis.push_back(g);
  if (nbasis.size() != end.size() - 1) return false;
  // Powers of the ideal must stay inside it and die out.
  std::vector<Mat> power = nbasis;
  for (size_t step = 0; step <= n && !power.empty(); ++step) {
    Echelon next(n * n, q);
    std::vector<Mat> nextb;
    for (const auto& a : power)
      for (const auto& b : nbasis) {
        Mat ab = a * b;
        if (!span.contains(flatten(ab))) return false;
        if (next.insert(flatten(ab))) nextb.push_back(std::move(ab));
      }
    power = std::move(nextb);
  }
  if (!power.empty()) return false;
  // Fitting check on random endomorphisms.
  std::mt19937_64 rng(0x5eed + n);
  for (int trial = 0; trial < 8; ++trial) {
    Mat f(n, n, q);
    for (const auto& b : end) add_scaled(f, b, static_cast<uint32_t>(rng() % q));
    size_t rk = rank(f.pow(n));
    if (rk != 0 && rk != n) return false;
  }
  return true;
}

bool is_isomorphic(const FDModule& a, const FDModule& b, std::optional<int64_t> shift) {
  if (a.dim != b.dim) return false;
  if (a.dim == 0) return true;
  auto hs = hom(a, b, shift);
  if (hs.empty()) return false;
  const uint32_t q = a.q;
  const size_t n = a.dim;
  auto invertible = [&](const std::vector<uint32_t>& c) {
    Mat f(n, n, q);
    for (size_t i = 0; i < hs.size(); ++i)
      if (c[i]) add_scaled(f, hs[i], c[i]);
    return rank(f) == n;
  };
  double total = 1;
  for (size_t i = 0; i < hs.size() && total < 1e9; ++i) total *= q;
  if (total <= 4096) {
    std::vector<uint32_t> c(hs.size(), 0);
    for (;;) {
      if (invertible(c)) return true;
      size_t i = 0;
      while (i < c.size() && ++c[i] == q) c[i++] = 0;
      if (i == c.size()) return false;
    }
  }
  // Invertible maps form a dense subset when they exist at all.
  std::mt19937_64 rng(0xabcdef + n);
  for (int trial = 0; trial < 256; ++trial) {
    std::vector<uint32_t> c(hs.size());
    for (auto& x : c) x = static_cast<uint32_t>(rng() % q);
    if (invertible(c)) return true;
  }
  return false;
}

Mat radical(const FDModule& m, const std::vector<FDModule>& simples) {
  std::vector<Mat> maps;
  for (const auto& s : simples) {
    auto hs = hom(m, s);
    maps.insert(maps.end(), hs.begin(), hs.end());
  }
  Mat r = common_kernel(maps, m.dim, m.q);
  return m.graded() ? homogeneous_basis(m, r) : r;
}

Mat socle(const FDModule& m, const std::vector<FDModule>& simples) {
  std::vector<Mat> maps;
  for (const auto& s : simples) {
    auto hs = hom(s, m);
    maps.insert(maps.end(), hs.begin(), hs.end());
  }
  Mat r = image_span(maps, m.dim, m.q);
  return m.graded() && r.rows() ? homogeneous_basis(m, r) : r;
}

namespace {

// Splits a semisimple module into isotypic counts.  Graded simples are matched up to shift.
std::vector<LayerPart> identify_semisimple(const FDModule& layer, const std::vector<FDModule>& simples,
                                           bool use_grading) {
  std::vector<LayerPart> parts;
  size_t covered = 0;
  for (size_t i = 0; i < simples.size(); ++i) {
    const auto& s = simples[i];
    if (use_grading) {
      std::set<int64_t> shifts;
      for (int64_t a : *layer.grading)
        for (int64_t b : *s.grading) shifts.insert(a - b);
      size_t e = hom_dim(s, s, int64_t{0});
      for (int64_t sh : shifts) {
        size_t h = hom_dim(layer, s, sh);
        if (h == 0) continue;
        parts.push_back({i, h / e, sh});
        covered += (h / e) * s.dim;
      }
    } else {
      size_t h = hom_dim(layer, s);
      if (h == 0) continue;
      size_t e = hom_dim(s, s);
      parts.push_back({i, h / e, std::nullopt});
      covered += (h / e) * s.dim;
    }
  }
  if (covered != layer.dim) throw UnknownFactor("layer is not a sum of the supplied simples");
  return parts;
}

bool all_graded(const FDModule& m, const std::vector<FDModule>& simples) {
  if (!m.graded()) return false;
  for (const auto& s : simples)
    if (!s.graded()) return false;
  return true;
}

}  // namespace

std::vector<size_t> composition_multiplicities(const FDModule& m, const std::vector<FDModule>& simples) {
  std::vector<size_t> counts(simples.size(), 0);
  std::vector<size_t> ends;
  for (const auto& s : simples) ends.push_back(hom_dim(s, s));
  FDModule cur = m;
  cur.grading.reset();
  while (cur.dim > 0) {
    Mat soc = socle(cur, simples);
    if (soc.rows() == 0) throw UnknownFactor("no supplied simple embeds in the remaining quotient");
    size_t seen = 0;
    for (size_t i = 0; i < simples.size(); ++i) {
      size_t mult = hom_dim(simples[i], cur) / ends[i];
      counts[i] += mult;
      seen += mult * simples[i].dim;
    }
    if (seen != soc.rows()) throw UnknownFactor("socle is not a sum of the supplied simples");
    cur = quotient(cur, soc).module;
  }
  return counts;
}

std::vector<Layer> loewy_series(const FDModule& m, const std::vector<FDModule>& simples, Series series) {
  const bool graded = all_graded(m, simples);
  std::vector<Layer> out;
  FDModule cur = m;
  if (!graded) cur.grading.reset();
  while (cur.dim > 0) {
    if (series == Series::radical) {
      Mat rad = radical(cur, simples);
      Quotient top = quotient(cur, rad);
      if (top.module.dim == 0) throw UnknownFactor("radical equals module");
      out.push_back({top.module.dim, identify_semisimple(top.module, simples, graded)});
      cur = submodule(cur, rad);
    } else {
      Mat soc = socle(cur, simples);
      if (soc.rows() == 0) throw UnknownFactor("zero socle");
      FDModule layer = submodule(cur, soc);
      out.push_back({layer.dim, identify_semisimple(layer, simples, graded)});
      cur = quotient(cur, soc).module;
    }
  }
  return out;
}

}  // namespace fdrep
