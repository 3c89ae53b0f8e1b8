#include "hodges/hodges.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "scalars/fp.hpp"

namespace hodges {

using fdrep::FDModule;
using fdrep::Mat;
using freealg::FreeElt;
using freealg::Monomial;
using scalars::mod_add;
using scalars::mod_mul;
using scalars::mod_pow;
using scalars::mod_reduce;

Poly poly_trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

Poly poly_mul(const Poly& f, const Poly& g, uint32_t p) {
  if (f.empty() || g.empty()) return {};
  Poly r(f.size() + g.size() - 1, 0);
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j) r[i + j] = mod_add(r[i + j], mod_mul(f[i], g[j], p), p);
  return poly_trim(r);
}

Poly poly_add(const Poly& f, const Poly& g, uint32_t p) {
  Poly r(std::max(f.size(), g.size()), 0);
  for (size_t i = 0; i < r.size(); ++i)
    r[i] = mod_add(i < f.size() ? f[i] : 0, i < g.size() ? g[i] : 0, p);
  return poly_trim(r);
}

Poly poly_shift(const Poly& f, int64_t c, uint32_t p) {
  // Horner in z + c.
  Poly r;
  const Poly lin = poly_trim({mod_reduce(c, p), 1});
  for (size_t i = f.size(); i-- > 0;) r = poly_add(poly_mul(r, lin, p), poly_trim({f[i]}), p);
  return r;
}

uint32_t poly_eval(const Poly& f, int64_t z, uint32_t p) {
  uint32_t x = mod_reduce(z, p), acc = 0;
  for (size_t i = f.size(); i-- > 0;) acc = mod_add(mod_mul(acc, x, p), f[i], p);
  return acc;
}

std::string poly_to_string(const Poly& f, uint32_t p, const std::string& var) {
  if (f.empty()) return "0";
  std::string out;
  for (size_t i = f.size(); i-- > 0;) {
    if (!f[i]) continue;
    int64_t c = f[i];
    if (c > p / 2) c -= p;
    std::string mag = std::to_string(c < 0 ? -c : c);
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (mono.empty())
      out += mag;
    else
      out += (mag == "1" ? "" : mag + " ") + mono;
  }
  return out;
}

HodgesData HodgesData::make(uint32_t n, uint32_t p, std::vector<uint32_t> r) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (!scalars::is_prime(p)) throw std::invalid_argument("p must be prime");
  if (std::gcd(n, p) != 1) throw std::invalid_argument("n and p must be coprime");
  if (r.size() != n - 1) throw std::invalid_argument("need exactly n-1 values r_1..r_{n-1}");
  uint64_t s = 0;
  for (auto x : r) s += x;
  if (s > p) throw std::invalid_argument("r_1 + ... + r_{n-1} must not exceed p");
  HodgesData d;
  d.n = n;
  d.p = p;
  d.r = std::move(r);
  return d;
}

uint32_t HodgesData::r0() const {
  uint32_t s = 0;
  for (auto x : r) s += x;
  return p - s;
}

uint32_t HodgesData::r_at(size_t i) const { return i == 0 ? r0() : r.at(i - 1); }

std::vector<uint32_t> HodgesData::roots() const {
  std::vector<uint32_t> out{0};
  uint64_t s = 0;
  for (size_t i = 0; i + 1 < n; ++i) {
    s += r[i];
    out.push_back(static_cast<uint32_t>(s % p));
  }
  return out;
}

bool HodgesData::is_root(int64_t x) const { return poly_eval(v(), x, p) == 0; }

Poly HodgesData::v() const {
  Poly f{1};
  for (uint32_t root : roots()) f = poly_mul(f, poly_trim({scalars::mod_neg(root, p), 1}), p);
  return f;
}

std::string HodgesData::label() const {
  std::ostringstream o;
  o << "(n=" << n << ",p=" << p << ",r=(";
  for (size_t i = 0; i < r.size(); ++i) o << (i ? "," : "") << r[i];
  o << "))";
  return o.str();
}

Poly shifted_product(const HodgesData& d, int i) {
  if (i == 0) throw std::invalid_argument("shifted_product: index 0 is not defined");
  const int m = std::abs(i);
  if (static_cast<uint32_t>(m) > d.p) throw std::invalid_argument("shifted_product: |i| exceeds p");
  Poly v = d.v(), out{1};
  for (int k = 0; k < m; ++k) out = poly_mul(out, poly_shift(v, i > 0 ? k : -k, d.p), d.p);
  return out;
}

Level parse_level(const std::string& s) {
  if (s == "T") return Level::T;
  if (s == "frakT") return Level::frakT;
  if (s == "t") return Level::t;
  throw std::invalid_argument("unknown level " + s + " (expected T, frakT or t)");
}

std::string level_name(Level l) { return l == Level::T ? "T" : l == Level::frakT ? "frakT" : "t"; }

freealg::Alphabet alphabet(const HodgesData& d) {
  return freealg::Alphabet(d.p, {{"a", 1}, {"b", 2 * d.n - 1}, {"h", 1}}, {"Y"});
}

FreeElt poly_in_h(const freealg::Alphabet& al, const Poly& f, int64_t c) {
  Poly g = poly_shift(f, c, al.q);
  FreeElt out(al.q);
  const auto h = al.letter("h");
  for (size_t i = 0; i < g.size(); ++i)
    if (g[i]) out.add_term(freealg::make_monomial(al, freealg::Word(i, h)), g[i]);
  return out;
}

namespace {

FreeElt word(const freealg::Alphabet& al, const std::string& letters, int64_t c = 1) {
  freealg::Word w;
  for (char ch : letters) w.push_back(al.letter(std::string(1, ch)));
  return FreeElt::term(al.q, freealg::make_monomial(al, w), c);
}

FreeElt power(const freealg::Alphabet& al, const std::string& letter, size_t e) {
  return FreeElt::term(al.q, freealg::make_monomial(al, freealg::Word(e, al.letter(letter))));
}

}  // namespace

std::vector<FreeElt> relations(const HodgesData& d, Level level) {
  auto al = alphabet(d);
  Poly v = d.v();
  std::vector<FreeElt> out{
      word(al, "ha") - word(al, "ah") - word(al, "a"),
      word(al, "hb") - word(al, "bh") + word(al, "b"),
      word(al, "ba") - poly_in_h(al, v, 0),
      word(al, "ab") - poly_in_h(al, v, -1),
  };
  if (level != Level::T) {
    out.push_back(power(al, "a", d.p));
    out.push_back(power(al, "b", d.p));
  }
  if (level == Level::t) out.push_back(power(al, "h", d.p) - word(al, "h"));
  return out;
}

gs::GSPair relation_pair(const HodgesData& d, Level level) { return gs::GSPair::from(alphabet(d), relations(d, level)); }

std::vector<FreeElt> expected_basis(const HodgesData& d) {
  auto al = alphabet(d);
  auto out = relations(d, Level::frakT);
  for (uint32_t i = 1; i <= d.p; ++i)
    out.push_back(freealg::multiply(power(al, "a", d.p - i), poly_in_h(al, shifted_product(d, -static_cast<int>(i)), -1)));
  for (uint32_t i = 1; i < d.p; ++i)
    out.push_back(freealg::multiply(power(al, "b", d.p - i), poly_in_h(al, shifted_product(d, static_cast<int>(i)), 0)));
  return out;
}

uint32_t default_weight_cap(const HodgesData& d) { return 2 * d.n * d.p + 4; }

namespace {

// Monic, tail-reduced form of a rule set that is already minimal.
gs::GSPair interreduced(const gs::GSPair& in) {
  gs::GSPair out;
  out.alphabet = in.alphabet;
  std::vector<gs::Rule> rules;
  for (const gs::Rule* r : in.rules()) {
    FreeElt tail = gs::reduce(r->replacement(), in);
    rules.push_back(gs::make_rule(FreeElt::term(in.alphabet.q, r->pattern) - tail));
  }
  std::sort(rules.begin(), rules.end(), [](const gs::Rule& a, const gs::Rule& b) { return a.pattern < b.pattern; });
  for (auto& r : rules) (r.origin == gs::Origin::ring ? out.S : out.T).push_back(r);
  return out;
}

struct CacheKey {
  uint32_t n, p;
  std::vector<uint32_t> r;
  Level level;
  bool operator<(const CacheKey& o) const {
    return std::tie(n, p, r, level) < std::tie(o.n, o.p, o.r, o.level);
  }
};

// Completed pairs are reused by the module constructions.
const gs::GSPair& completed(const HodgesData& d, Level level) {
  static std::mutex mu;
  static std::map<CacheKey, gs::GSPair> cache;
  CacheKey key{d.n, d.p, d.r, level};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  gs::GSPair pair = gs::complete(relation_pair(d, level), default_weight_cap(d));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(pair)).first->second;
}

}  // namespace

ShirshovReport verify_shirshov(const HodgesData& d, std::optional<uint32_t> weight_cap) {
  auto start = std::chrono::steady_clock::now();
  ShirshovReport rep;
  auto run = gs::complete_logged(relation_pair(d, Level::frakT), weight_cap.value_or(default_weight_cap(d)));
  rep.compositions = run.compositions_processed;
  gs::GSPair expected = gs::GSPair::from(alphabet(d), expected_basis(d));
  auto check = gs::is_gs_pair(expected);
  rep.expected_is_gs = check.ok;
  gs::GSPair exp_red = interreduced(expected);
  rep.computed = gs::to_strings(run.pair);
  rep.expected = gs::to_strings(exp_red);
  rep.match = rep.computed == rep.expected;
  if (!rep.match) {
    for (size_t i = 0; i < std::max(rep.computed.size(), rep.expected.size()); ++i) {
      std::string a = i < rep.computed.size() ? rep.computed[i] : "<none>";
      std::string b = i < rep.expected.size() ? rep.expected[i] : "<none>";
      if (a != b) {
        rep.difference = "rule " + std::to_string(i) + ": computed " + a + ", expected " + b;
        break;
      }
    }
  }
  rep.basis_size = gs::standard_monomials(run.pair, gs::Scope::of_ring()).size();
  rep.basis_size_t = quotient_dim(d, Level::t);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

size_t quotient_dim(const HodgesData& d, Level level) {
  return gs::standard_monomials(completed(d, level), gs::Scope::of_ring()).size();
}

Mat evaluate(const FreeElt& f, const FDModule& m) {
  const uint32_t q = m.q;
  if (f.q() != q) throw std::invalid_argument("evaluate: field mismatch");
  std::vector<const Mat*> gens{&m.gen("a"), &m.gen("b"), &m.gen("h")};
  Mat out(m.dim, m.dim, q);
  for (const auto& [mono, c] : f.terms()) {
    if (mono.is_module()) throw std::invalid_argument("evaluate: module element");
    Mat prod = Mat::identity(m.dim, q);
    for (auto x : mono.word) prod = prod * *gens.at(x);
    out = out + prod.scaled(c);
  }
  return out;
}

bool satisfies_relations(const FDModule& m, const HodgesData& d, Level level) {
  for (const auto& f : relations(d, level))
    if (!evaluate(f, m).is_zero()) return false;
  return true;
}

VermaModule baby_verma(const HodgesData& d, int64_t lambda, Variant variant) {
  const uint32_t p = d.p;
  VermaModule vm;
  vm.lambda = lambda;
  vm.variant = variant;
  const bool plain = variant == Variant::plain;
  if (!d.is_root(plain ? lambda : lambda - 1)) {
    vm.module = FDModule(p, 0, {"a", "b", "h"});
    vm.module.grading = std::vector<int64_t>{};
    return vm;
  }
  vm.zero = false;
  Poly v = d.v();
  FDModule m(p, p, {"a", "b", "h"});
  std::vector<int64_t> grading;
  Mat &a = m.gen("a"), &b = m.gen("b"), &h = m.gen("h");
  for (uint32_t k = 0; k < p; ++k) {
    const int64_t kk = k;
    if (plain) {
      h.set(k, k, lambda - kk);
      if (k + 1 < p) b.at(k + 1, k) = 1;
      if (k > 0) a.set(k - 1, k, poly_eval(v, lambda - kk, p));
      grading.push_back((lambda - kk) * d.n);
    } else {
      h.set(k, k, lambda + kk);
      if (k + 1 < p) a.at(k + 1, k) = 1;
      if (k > 0) b.set(k - 1, k, poly_eval(v, lambda + kk - 1, p));
      grading.push_back((lambda + kk) * d.n);
    }
  }
  m.grading = grading;

  // Certify the presentation (S, {(h - lambda) Y, a Y}) (resp. b Y) and rebuild the action from normal forms.
  const gs::GSPair& s = completed(d, Level::frakT);
  auto al = s.alphabet;
  const Monomial y = freealg::make_monomial(al, {}, 0);
  FreeElt gen = FreeElt::term(p, y);
  FreeElt hy = freealg::multiply(word(al, "h"), gen) - gen.scaled(mod_reduce(lambda, p));
  FreeElt ky = freealg::multiply(word(al, plain ? "a" : "b"), gen);
  gs::GSPair pair = s;
  pair.complete = false;
  pair.T = {gs::make_rule(hy), gs::make_rule(ky)};
  auto check = gs::is_gs_pair(pair);
  if (!check.ok) throw std::logic_error("baby Verma presentation is not a Groebner-Shirshov pair");
  pair.complete = true;
  auto basis = gs::standard_monomials(pair, gs::Scope::of_module(0));
  if (basis.size() != p) throw std::logic_error("baby Verma normal forms do not have p elements");
  std::map<Monomial, size_t> pos;
  for (size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = i;
  for (const char* x : {"a", "b", "h"}) {
    Mat from_nf(p, p, p);
    for (size_t j = 0; j < basis.size(); ++j) {
      FreeElt img = gs::reduce(freealg::multiply(word(al, x), FreeElt::term(p, basis[j])), pair);
      for (const auto& [mono, c] : img.terms()) from_nf.at(pos.at(mono), j) = c;
    }
    if (from_nf != m.gen(x)) throw std::logic_error(std::string("baby Verma action of ") + x + " disagrees with normal forms");
  }
  vm.module = std::move(m);
  return vm;
}

FDModule shift(const FDModule& m, const HodgesData& d, int64_t i) { return fdrep::shifted(m, static_cast<int64_t>(d.p) * i); }

namespace {

std::vector<std::vector<LayerInfo>> layers_of(const FDModule& m, const std::vector<FDModule>& simples,
                                              const std::vector<size_t>& index, uint32_t p) {
  std::vector<std::vector<LayerInfo>> out;
  for (const auto& layer : fdrep::loewy_series(m, simples, fdrep::Series::radical)) {
    std::vector<LayerInfo> row;
    for (const auto& part : layer.parts) {
      if (!part.shift || *part.shift % static_cast<int64_t>(p) != 0)
        throw std::logic_error("layer shift is not a multiple of p");
      row.push_back({index[part.simple], *part.shift / static_cast<int64_t>(p), part.multiplicity});
    }
    out.push_back(row);
  }
  return out;
}

}  // namespace

StructureReport structure_report(const HodgesData& d) {
  const uint32_t n = d.n, p = d.p;
  StructureReport s;
  s.data = d;
  // lambda_i = r_1 + ... + r_{n-1-i}; lambda_n = -r_0 closes the cycle.
  for (uint32_t i = 0; i <= n; ++i) {
    int64_t lam = 0;
    if (i == n)
      lam = -static_cast<int64_t>(d.r0());
    else
      for (uint32_t j = 1; j + i <= n - 1; ++j) lam += d.r_at(j);
    s.lambda.push_back(lam);
  }
  std::vector<FDModule> V;
  for (uint32_t i = 0; i <= n; ++i) V.push_back(shift(baby_verma(d, s.lambda[i], Variant::plain).module, d, i));
  if (*V[n].grading != *V[0].grading) throw std::logic_error("V_n and V_0 differ as graded modules");

  FDModule empty(p, 0, {"a", "b", "h"});
  empty.grading = std::vector<int64_t>{};
  s.V.assign(n, empty);
  s.Vp.assign(n, empty);
  s.L.assign(n, empty);
  s.T.assign(n, empty);
  s.dim_L.assign(n, 0);
  s.dim_T.assign(n, 0);
  std::vector<Mat> proj(n);
  for (uint32_t i = 0; i < n; ++i) {
    const uint32_t r = d.r_at(n - 1 - i);
    if (r == 0) continue;
    s.present.push_back(i);
    s.V[i] = V[i];
    // theta_i : V_{i+1}[-1] -> V_i sends the generator to b^r |0>.
    FDModule src = shift(V[i + 1], d, -1);
    Mat theta(p, p, p);
    for (uint32_t k = 0; k + r < p; ++k) theta.at(k + r, k) = 1;
    for (const auto& x : src.names)
      if (theta * src.gen(x) != V[i].gen(x) * theta) throw std::logic_error("theta is not a module map");
    for (uint32_t k = 0; k + r < p; ++k)
      if ((*src.grading)[k] != (*V[i].grading)[k + r]) throw std::logic_error("theta is not homogeneous");
    Mat image(0, p, p);
    for (uint32_t k = r; k < p; ++k) {
      fdrep::Vec e(p, 0);
      e[k] = 1;
      image.append_row(e);
    }
    auto q = fdrep::quotient(V[i], image);
    s.L[i] = q.module;
    proj[i] = q.projection;
    s.dim_L[i] = r;
  }
  std::vector<FDModule> simples;
  for (size_t i : s.present) simples.push_back(s.L[i]);

  for (size_t i : s.present) {
    s.Vp[i] = shift(baby_verma(d, s.lambda[i + 1] + 1, Variant::primed).module, d, static_cast<int64_t>(i));
    auto maps = fdrep::hom(s.Vp[i], s.L[i], int64_t{0});
    if (maps.size() != 1) throw std::logic_error("V'_i does not map onto L_i uniquely");
    // Kernel of (x, y) -> pi(x) + pi'(y).
    Mat both(s.dim_L[i], 2 * p, p);
    for (size_t row = 0; row < s.dim_L[i]; ++row)
      for (uint32_t c = 0; c < p; ++c) {
        both.at(row, c) = proj[i].at(row, c);
        both.at(row, p + c) = maps[0].at(row, c);
      }
    FDModule sum = fdrep::direct_sum(s.V[i], s.Vp[i]);
    s.T[i] = fdrep::submodule(sum, fdrep::homogeneous_basis(sum, fdrep::kernel(both)));
    s.dim_T[i] = s.T[i].dim;
    s.weighted_sum += s.dim_T[i] * s.dim_L[i];
  }
  s.v_layers.assign(n, {});
  s.vp_layers.assign(n, {});
  for (size_t i : s.present) {
    s.v_layers[i] = layers_of(s.V[i], simples, s.present, p);
    s.vp_layers[i] = layers_of(s.Vp[i], simples, s.present, p);
  }
  s.dim_t = quotient_dim(d, Level::t);
  return s;
}

std::vector<std::vector<size_t>> ext1_quiver(const StructureReport& s) {
  const size_t k = s.present.size();
  std::vector<FDModule> simples;
  for (size_t i : s.present) simples.push_back(s.L[i]);
  std::vector<std::vector<size_t>> adj(k, std::vector<size_t>(k, 0));
  for (size_t a = 0; a < k; ++a) {
    auto series = fdrep::loewy_series(s.T[s.present[a]], simples, fdrep::Series::radical);
    if (series.size() < 2) continue;
    for (const auto& part : series[1].parts) adj[a][part.simple] += part.multiplicity;
  }
  return adj;
}

std::vector<std::vector<size_t>> ext1_quiver(const HodgesData& d) { return ext1_quiver(structure_report(d)); }

std::vector<std::pair<size_t, int64_t>> verma_matches(const StructureReport& s, int64_t lambda, int64_t range) {
  std::vector<std::pair<size_t, int64_t>> out;
  auto vm = baby_verma(s.data, lambda, Variant::plain);
  if (vm.zero) return out;
  auto degs = [](const FDModule& m) {
    auto g = *m.grading;
    std::sort(g.begin(), g.end());
    return g;
  };
  auto target = degs(vm.module);
  for (size_t i : s.present)
    for (int64_t j = -range; j <= range; ++j) {
      FDModule cand = shift(s.V[i], s.data, j);
      if (degs(cand) != target) continue;
      if (fdrep::is_isomorphic(vm.module, cand, int64_t{0})) out.emplace_back(i, j);
    }
  return out;
}

}  // namespace hodges
