#include "nocycle/nocycle.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "scalars/fp.hpp"

namespace nocycle {

using fdrep::FDModule;
using fdrep::Mat;
using fdrep::Vec;

namespace {

uint32_t add_mod(uint32_t v, int64_t d, uint32_t k) {
  int64_t r = (static_cast<int64_t>(v) + d) % static_cast<int64_t>(k);
  return static_cast<uint32_t>(r < 0 ? r + k : r);
}

// Arrow kind a moves up one vertex, b moves down.
int step(Kind kind) { return kind == Kind::a ? 1 : kind == Kind::b ? -1 : 0; }

std::string path_name(const Path& p, uint32_t k) {
  if (p.kind == Kind::e) return "e" + std::to_string(p.start);
  // Written as a composite, last arrow leftmost.
  std::string out;
  const char c = p.kind == Kind::a ? 'a' : 'b';
  for (uint32_t j = p.length; j-- > 0;) {
    uint32_t from = add_mod(p.start, step(p.kind) * static_cast<int64_t>(j), k);
    uint32_t idx = p.kind == Kind::a ? from : add_mod(from, -1, k);
    out += c + std::to_string(idx);
  }
  return out;
}

}  // namespace

size_t NoCycleAlg::index_of(Kind kind, uint32_t start, uint32_t length) const {
  for (size_t i = 0; i < basis.size(); ++i)
    if (basis[i].kind == kind && basis[i].start == start && basis[i].length == length) return i;
  throw std::out_of_range("no such basis path");
}

uint32_t NoCycleAlg::end(size_t x) const {
  const Path& p = basis.at(x);
  return add_mod(p.start, step(p.kind) * static_cast<int64_t>(p.length), k);
}

Vec NoCycleAlg::multiply(const Vec& x, const Vec& y) const {
  Vec out(dim(), 0);
  for (size_t i = 0; i < dim(); ++i) {
    if (!x[i]) continue;
    for (size_t j = 0; j < dim(); ++j) {
      if (!y[j]) continue;
      int r = product(i, j);
      if (r >= 0) out[r] = scalars::mod_add(out[r], scalars::mod_mul(x[i], y[j], q), q);
    }
  }
  return out;
}

Vec NoCycleAlg::unit() const {
  Vec u(dim(), 0);
  for (size_t i = 0; i < dim(); ++i)
    if (basis[i].kind == Kind::e) u[i] = 1;
  return u;
}

Vec NoCycleAlg::element(size_t basis_index) const {
  Vec u(dim(), 0);
  u.at(basis_index) = 1;
  return u;
}

NoCycleAlg build_nocycle(uint32_t k, uint32_t q) {
  if (k < 1) throw std::invalid_argument("no-cycle algebra needs k >= 1");
  if (!scalars::is_prime(q)) throw std::invalid_argument("field size must be prime");
  NoCycleAlg alg;
  alg.k = k;
  alg.q = q;
  for (uint32_t i = 0; i < k; ++i) alg.basis.push_back({Kind::e, i, 0});
  for (Kind kind : {Kind::a, Kind::b})
    for (uint32_t len = 1; len < k; ++len)
      for (uint32_t s = 0; s < k; ++s) alg.basis.push_back({kind, s, len});
  for (const auto& p : alg.basis) {
    alg.names.push_back(path_name(p, k));
    alg.degree.push_back(-step(p.kind) * static_cast<int64_t>(p.length));
  }
  const size_t n = alg.dim();
  alg.table.assign(n * n, -1);
  for (size_t x = 0; x < n; ++x)
    for (size_t y = 0; y < n; ++y) {
      const Path &px = alg.basis[x], &py = alg.basis[y];
      if (alg.end(y) != px.start) continue;
      int r = -1;
      if (py.kind == Kind::e)
        r = static_cast<int>(x);
      else if (px.kind == Kind::e)
        r = static_cast<int>(y);
      else if (px.kind == py.kind && px.length + py.length < k)
        r = static_cast<int>(alg.index_of(px.kind, py.start, px.length + py.length));
      alg.table[x * n + y] = r;
    }
  if (n != static_cast<size_t>(k) * (2 * k - 1)) throw std::logic_error("no-cycle basis has the wrong size");
  return alg;
}

bool check_associativity(const NoCycleAlg& alg) {
  const size_t n = alg.dim();
  for (size_t x = 0; x < n; ++x)
    for (size_t y = 0; y < n; ++y)
      for (size_t z = 0; z < n; ++z) {
        int xy = alg.product(x, y), yz = alg.product(y, z);
        int l = xy < 0 ? -1 : alg.product(xy, z);
        int r = yz < 0 ? -1 : alg.product(x, yz);
        if (l != r) return false;
      }
  return true;
}

std::vector<std::string> generator_names(uint32_t k) {
  std::vector<std::string> out;
  for (const char* c : {"e", "a", "b"})
    for (uint32_t i = 0; i < k; ++i) out.push_back(c + std::to_string(i));
  return out;
}

uint32_t encode(const Letter& l, uint32_t k) {
  uint32_t block = (l.inverse ? 2 : 0) + (l.kind == Kind::b ? 1 : 0);
  return block * k + l.index;
}

Letter decode(uint32_t code, uint32_t k) {
  if (code >= 4 * k) throw std::out_of_range("letter code");
  uint32_t block = code / k;
  return {block % 2 ? Kind::b : Kind::a, code % k, block >= 2};
}

uint32_t letter_source(const Letter& l, uint32_t k) {
  // a_i : i -> i+1, b_i : i+1 -> i; an inverse letter runs the other way.
  uint32_t tail = l.kind == Kind::a ? l.index : add_mod(l.index, 1, k);
  uint32_t head = l.kind == Kind::a ? add_mod(l.index, 1, k) : l.index;
  return l.inverse ? head : tail;
}

uint32_t letter_target(const Letter& l, uint32_t k) {
  Letter flipped = l;
  flipped.inverse = !l.inverse;
  return letter_source(flipped, k);
}

std::vector<uint32_t> successors(uint32_t code, uint32_t k) {
  Letter l = decode(code, k);
  const uint32_t i = l.index;
  auto enc = [&](Kind kind, uint32_t idx, bool inv) { return encode({kind, idx, inv}, k); };
  const uint32_t down = add_mod(i, -1, k), up = add_mod(i, 1, k);
  if (l.kind == Kind::a && !l.inverse) return {enc(Kind::a, down, false), enc(Kind::b, down, true)};
  if (l.kind == Kind::b && !l.inverse) return {enc(Kind::b, up, false), enc(Kind::a, up, true)};
  if (l.kind == Kind::a) return {enc(Kind::a, up, true), enc(Kind::b, up, false)};
  return {enc(Kind::b, down, true), enc(Kind::a, down, false)};
}

namespace {

bool pure(const StringWord& w) {
  Letter first = decode(w.letters.front(), w.k);
  return std::all_of(w.letters.begin(), w.letters.end(), [&](uint32_t c) {
    Letter l = decode(c, w.k);
    return l.kind == first.kind && l.inverse == first.inverse;
  });
}

}  // namespace

bool in_S(const StringWord& w) {
  if (w.letters.empty() || w.length() > w.k) return false;
  for (uint32_t c : w.letters)
    if (c >= 4 * w.k) return false;
  for (size_t j = 0; j + 1 < w.length(); ++j) {
    auto s = successors(w.letters[j], w.k);
    if (std::find(s.begin(), s.end(), w.letters[j + 1]) == s.end()) return false;
  }
  if (w.length() == w.k && pure(w)) return false;
  return true;
}

StringWord inverse(const StringWord& w) {
  StringWord out{w.k, {}};
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    Letter l = decode(*it, w.k);
    l.inverse = !l.inverse;
    out.letters.push_back(encode(l, w.k));
  }
  return out;
}

StringWord canonical(const StringWord& w) {
  StringWord best = std::min(w, inverse(w));
  if (w.length() == w.k) {
    StringWord r = w;
    for (size_t s = 1; s < w.length(); ++s) {
      std::rotate(r.letters.begin(), r.letters.begin() + 1, r.letters.end());
      best = std::min({best, r, inverse(r)});
    }
  }
  return best;
}

std::string to_string(const StringWord& w) {
  std::string out;
  for (uint32_t c : w.letters) {
    Letter l = decode(c, w.k);
    if (!out.empty()) out += ' ';
    out += (l.kind == Kind::a ? "a" : "b") + std::to_string(l.index) + (l.inverse ? "*" : "");
  }
  return out;
}

StringWord parse_word(const std::string& s, uint32_t k) {
  StringWord w{k, {}};
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    Letter l;
    if (tok.size() < 2 || (tok[0] != 'a' && tok[0] != 'b')) throw std::invalid_argument("bad letter " + tok);
    l.kind = tok[0] == 'a' ? Kind::a : Kind::b;
    l.inverse = tok.back() == '*';
    std::string digits = tok.substr(1, tok.size() - 1 - (l.inverse ? 1 : 0));
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
      throw std::invalid_argument("bad letter " + tok);
    l.index = static_cast<uint32_t>(std::stoul(digits));
    if (l.index >= k) throw std::invalid_argument("arrow index out of range: " + tok);
    w.letters.push_back(encode(l, k));
  }
  return w;
}

std::vector<StringWord> enumerate_strings(uint32_t k, uint32_t t) {
  if (t < 1 || t > k) throw std::invalid_argument("string length must lie in [1, k]");
  std::set<StringWord> reps;
  std::vector<StringWord> frontier;
  for (uint32_t c = 0; c < 4 * k; ++c) frontier.push_back({k, {c}});
  for (uint32_t len = 1; len < t; ++len) {
    std::vector<StringWord> next;
    for (const auto& w : frontier)
      for (uint32_t s : successors(w.letters.back(), k)) {
        StringWord x = w;
        x.letters.push_back(s);
        next.push_back(std::move(x));
      }
    frontier = std::move(next);
  }
  for (const auto& w : frontier)
    if (in_S(w)) reps.insert(canonical(w));
  return {reps.begin(), reps.end()};
}

namespace {

FDModule blank(const NoCycleAlg& alg, size_t dim) { return FDModule(alg.q, dim, generator_names(alg.k)); }

void place(FDModule& m, const std::vector<uint32_t>& vertex) {
  for (size_t j = 0; j < vertex.size(); ++j) m.gen("e" + std::to_string(vertex[j])).at(j, j) = 1;
}

std::string arrow_name(const Letter& l) { return (l.kind == Kind::a ? "a" : "b") + std::to_string(l.index); }

}  // namespace

FDModule simple_module(const NoCycleAlg& alg, uint32_t vertex) {
  if (vertex >= alg.k) throw std::out_of_range("vertex");
  FDModule m = blank(alg, 1);
  place(m, {vertex});
  m.grading = std::vector<int64_t>{0};
  return m;
}

FDModule string_module(const NoCycleAlg& alg, const StringWord& c) {
  if (c.k != alg.k) throw std::invalid_argument("word and algebra disagree on k");
  if (c.length() >= alg.k) throw std::invalid_argument("string modules need t < k");
  if (!in_S(c)) throw std::invalid_argument("not a valid string: " + to_string(c));
  const size_t t = c.length();
  FDModule m = blank(alg, t + 1);
  std::vector<uint32_t> vertex(t + 1);
  std::vector<int64_t> deg(t + 1, 0);
  vertex[0] = letter_target(decode(c.letters[0], alg.k), alg.k);
  for (size_t j = 1; j <= t; ++j) {
    Letter l = decode(c.letters[j - 1], alg.k);
    vertex[j] = letter_source(l, alg.k);
    const int64_t d = l.kind == Kind::a ? -1 : 1;
    Mat& g = m.gen(arrow_name(l));
    if (!l.inverse) {
      g.at(j - 1, j) = 1;  // c(z_j) = z_{j-1}
      deg[j] = deg[j - 1] - d;
    } else {
      g.at(j, j - 1) = 1;  // c(z_{j-1}) = z_j
      deg[j] = deg[j - 1] + d;
    }
  }
  place(m, vertex);
  m.grading = deg;
  return m;
}

FDModule band_module(const NoCycleAlg& alg, const BandWord& b) {
  const StringWord& c = b.word;
  if (c.k != alg.k) throw std::invalid_argument("word and algebra disagree on k");
  if (c.length() != alg.k) throw std::invalid_argument("band words have length exactly k");
  if (b.lambda % alg.q == 0) throw std::invalid_argument("band parameter must be nonzero");
  if (!in_S(c)) throw std::invalid_argument("not a valid band word: " + to_string(c));
  const size_t k = alg.k;
  const uint32_t lam = b.lambda % alg.q;
  FDModule m = blank(alg, k);
  std::vector<uint32_t> vertex(k);
  vertex[0] = letter_target(decode(c.letters[0], alg.k), alg.k);
  for (size_t j = 1; j < k; ++j) vertex[j] = letter_source(decode(c.letters[j - 1], alg.k), alg.k);
  for (size_t j = 1; j <= k; ++j) {
    Letter l = decode(c.letters[j - 1], alg.k);
    Mat& g = m.gen(arrow_name(l));
    size_t hi = j % k, lo = j - 1;
    uint32_t coeff = 1;
    if (j == k) coeff = l.inverse ? scalars::mod_inv(lam, alg.q) : lam;
    if (!l.inverse)
      g.at(lo, hi) = coeff;
    else
      g.at(hi, lo) = coeff;
  }
  place(m, vertex);
  return m;
}

std::vector<uint32_t> vertex_support(const FDModule& m, uint32_t k) {
  std::vector<uint32_t> out(k, 0);
  for (uint32_t i = 0; i < k; ++i) out[i] = static_cast<uint32_t>(fdrep::rank(m.gen("e" + std::to_string(i))));
  return out;
}

std::vector<CatalogEntry> catalog(const NoCycleAlg& alg, size_t max_dim) {
  std::vector<CatalogEntry> out;
  if (max_dim == 0) return out;
  for (uint32_t v = 0; v < alg.k; ++v) out.push_back({"S(e" + std::to_string(v) + ")", simple_module(alg, v)});
  for (uint32_t t = 1; t < alg.k && t + 1 <= max_dim; ++t)
    for (const auto& w : enumerate_strings(alg.k, t)) out.push_back({"St(" + to_string(w) + ")", string_module(alg, w)});
  if (alg.k <= max_dim)
    for (const auto& w : enumerate_strings(alg.k, alg.k))
      for (uint32_t lam = 1; lam < alg.q; ++lam)
        out.push_back({"Bd_" + std::to_string(lam) + "(" + to_string(w) + ")", band_module(alg, {w, lam})});
  return out;
}

namespace {

struct Arrow {
  std::string name;
  uint32_t tail, head;
};

std::vector<Arrow> arrows(uint32_t k) {
  std::vector<Arrow> out;
  for (uint32_t i = 0; i < k; ++i) out.push_back({"a" + std::to_string(i), i, add_mod(i, 1, k)});
  for (uint32_t i = 0; i < k; ++i) out.push_back({"b" + std::to_string(i), add_mod(i, 1, k), i});
  return out;
}

// Composable arrow sequences of length <= k that return to their start vertex.
std::vector<std::vector<size_t>> cycles(uint32_t k) {
  auto ar = arrows(k);
  std::vector<std::vector<size_t>> out, frontier;
  for (size_t x = 0; x < ar.size(); ++x) frontier.push_back({x});
  for (uint32_t len = 1; len <= k; ++len) {
    std::vector<std::vector<size_t>> next;
    for (const auto& c : frontier) {
      if (ar[c.back()].head == ar[c.front()].tail) out.push_back(c);
      if (len == k) continue;
      for (size_t x = 0; x < ar.size(); ++x)
        if (ar[x].tail == ar[c.back()].head) {
          auto d = c;
          d.push_back(x);
          next.push_back(std::move(d));
        }
    }
    frontier = std::move(next);
  }
  return out;
}

void dimension_vectors(uint32_t k, size_t total, std::vector<uint32_t>& cur, std::vector<std::vector<uint32_t>>& out) {
  if (cur.size() == k) {
    if (total == 0) out.push_back(cur);
    return;
  }
  for (size_t d = 0; d <= total; ++d) {
    cur.push_back(static_cast<uint32_t>(d));
    dimension_vectors(k, total - d, cur, out);
    cur.pop_back();
  }
}

}  // namespace

SweepReport toy_sweep(const NoCycleAlg& alg, size_t max_dim) {
  const uint32_t k = alg.k, q = alg.q;
  SweepReport rep;
  auto cat = catalog(alg, max_dim);
  rep.catalog_size = cat.size();
  std::vector<bool> hit(cat.size(), false);
  std::vector<std::vector<uint32_t>> cat_support;
  for (const auto& e : cat) cat_support.push_back(vertex_support(e.module, k));
  const auto ar = arrows(k);
  const auto cyc = cycles(k);

  for (size_t total = 1; total <= max_dim; ++total) {
    std::vector<std::vector<uint32_t>> dvs;
    std::vector<uint32_t> cur;
    dimension_vectors(k, total, cur, dvs);
    for (const auto& dv : dvs) {
      std::vector<size_t> offset(k, 0);
      for (uint32_t i = 1; i < k; ++i) offset[i] = offset[i - 1] + dv[i - 1];
      // Free entries: arrow x contributes a dv[head] x dv[tail] block.
      struct Slot {
        size_t arrow, row, col;
      };
      std::vector<Slot> slots;
      for (size_t x = 0; x < ar.size(); ++x)
        for (uint32_t r = 0; r < dv[ar[x].head]; ++r)
          for (uint32_t c = 0; c < dv[ar[x].tail]; ++c)
            slots.push_back({x, offset[ar[x].head] + r, offset[ar[x].tail] + c});
      double count = 1;
      for (size_t s = 0; s < slots.size(); ++s) count *= q;
      if (count > 5e6) throw std::invalid_argument("toy sweep too large");
      std::vector<uint32_t> val(slots.size(), 0);
      while (true) {
        FDModule m = FDModule(q, total, generator_names(k));
        for (uint32_t i = 0; i < k; ++i)
          for (uint32_t r = 0; r < dv[i]; ++r) m.gen("e" + std::to_string(i)).at(offset[i] + r, offset[i] + r) = 1;
        for (size_t s = 0; s < slots.size(); ++s) m.gen(ar[slots[s].arrow].name).at(slots[s].row, slots[s].col) = val[s];
        bool ok = true;
        for (const auto& c : cyc) {
          Mat prod = m.gen(ar[c[0]].name);
          for (size_t j = 1; j < c.size() && !prod.is_zero(); ++j) prod = m.gen(ar[c[j]].name) * prod;
          if (!prod.is_zero()) {
            ok = false;
            break;
          }
        }
        if (ok) {
          ++rep.representations;
          if (fdrep::is_indecomposable(m)) {
            ++rep.indecomposable;
            size_t matches = 0;
            for (size_t e = 0; e < cat.size(); ++e) {
              if (cat[e].module.dim != total || cat_support[e] != dv) continue;
              if (fdrep::is_isomorphic(m, cat[e].module)) {
                ++matches;
                hit[e] = true;
              }
            }
            if (matches == 0) ++rep.unmatched;
            if (matches > 1) ++rep.ambiguous;
          }
        }
        size_t s = 0;
        while (s < val.size() && ++val[s] == q) val[s++] = 0;
        if (s == val.size()) break;
      }
    }
  }
  rep.catalog_missed = static_cast<size_t>(std::count(hit.begin(), hit.end(), false));
  return rep;
}

}  // namespace nocycle
