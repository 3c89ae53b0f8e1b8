#include "gs/engine.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "scalars/fp.hpp"

namespace gs {

using freealg::concat;
using freealg::make_monomial;
using freealg::sandwich;
using freealg::Word;

FreeElt Rule::replacement() const { return FreeElt::term(f.q(), pattern) - f; }

Rule make_rule(const FreeElt& f) {
  if (f.is_zero()) throw std::invalid_argument("make_rule: zero relation");
  Rule r;
  r.f = f.monic();
  r.pattern = freealg::leading_term(r.f).first;
  r.origin = r.pattern.is_module() ? Origin::module : Origin::ring;
  return r;
}

GSPair GSPair::from(const Alphabet& al, const std::vector<FreeElt>& ring, const std::vector<FreeElt>& module) {
  GSPair p;
  p.alphabet = al;
  for (const auto& f : ring) {
    if (f.is_zero()) continue;
    if (f.is_module()) throw std::invalid_argument("ring rule with module terms");
    p.S.push_back(make_rule(f));
  }
  for (const auto& f : module) {
    if (f.is_zero()) continue;
    if (!f.is_module()) throw std::invalid_argument("module rule without module terms");
    p.T.push_back(make_rule(f));
  }
  return p;
}

std::vector<const Rule*> GSPair::rules() const {
  std::vector<const Rule*> out;
  for (const auto& r : S) out.push_back(&r);
  for (const auto& r : T) out.push_back(&r);
  return out;
}

namespace {

Monomial sub_monomial(const Alphabet& al, const Word& w, size_t from, size_t to, int tail = -1) {
  return make_monomial(al, Word(w.begin() + from, w.begin() + to), tail);
}

// Start of a legal occurrence of pattern p in m, chosen by strategy; -1 if none.
long find_match(const Monomial& m, const Monomial& p, Strategy strategy) {
  const size_t n = m.word.size(), k = p.word.size();
  if (k > n || p.weight > m.weight) return -1;
  if (p.is_module()) {
    if (m.tail != p.tail) return -1;
    return std::equal(p.word.begin(), p.word.end(), m.word.end() - k) ? static_cast<long>(n - k) : -1;
  }
  if (strategy == Strategy::rightmost) {
    for (size_t i = n - k + 1; i-- > 0;)
      if (std::equal(p.word.begin(), p.word.end(), m.word.begin() + i)) return static_cast<long>(i);
  } else {
    for (size_t i = 0; i + k <= n; ++i)
      if (std::equal(p.word.begin(), p.word.end(), m.word.begin() + i)) return static_cast<long>(i);
  }
  return -1;
}

struct Match {
  const Rule* rule = nullptr;
  long at = -1;
};

Match best_match(const Monomial& m, const std::vector<const Rule*>& rules, Strategy strategy) {
  Match best;
  for (const Rule* r : rules) {
    long at = find_match(m, r->pattern, strategy);
    if (at < 0) continue;
    bool better = best.at < 0 || (strategy == Strategy::rightmost ? at > best.at : at < best.at);
    if (better) best = {r, at};
  }
  return best;
}

// c * W f V with the pattern of f sitting at position at of m.
FreeElt expand(const Alphabet& al, const Monomial& m, const Rule& r, long at, uint32_t c) {
  const size_t k = r.pattern.word.size();
  Monomial u = sub_monomial(al, m.word, 0, static_cast<size_t>(at));
  Monomial v = r.pattern.is_module() ? Monomial{}
                                     : sub_monomial(al, m.word, static_cast<size_t>(at) + k, m.word.size(), m.tail);
  return sandwich(u, r.f, v).scaled(c);
}

FreeElt reduce_with(const FreeElt& f, const Alphabet& al, const std::vector<const Rule*>& rules, Strategy strategy) {
  FreeElt work = f, done(f.q());
  while (!work.is_zero()) {
    auto [m, c] = freealg::leading_term(work);
    Match hit = best_match(m, rules, strategy);
    if (!hit.rule) {
      done.add_term(m, c);
      work.add_term(m, scalars::mod_neg(c, f.q()));
      continue;
    }
    work -= expand(al, m, *hit.rule, hit.at, c);
  }
  return done;
}

}  // namespace

bool is_reducible(const Monomial& m, const GSPair& pair) {
  return best_match(m, pair.rules(), Strategy::rightmost).rule != nullptr;
}

std::optional<FreeElt> reduce_step(const FreeElt& f, const GSPair& pair, Strategy strategy) {
  auto rules = pair.rules();
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    Match hit = best_match(it->first, rules, strategy);
    if (hit.rule) return f - expand(pair.alphabet, it->first, *hit.rule, hit.at, it->second);
  }
  return std::nullopt;
}

FreeElt reduce(const FreeElt& f, const GSPair& pair, Strategy strategy) {
  return reduce_with(f, pair.alphabet, pair.rules(), strategy);
}

std::vector<Composition> compositions(const FreeElt& f0, const FreeElt& g0, const Alphabet& al) {
  std::vector<Composition> out;
  if (f0.is_zero() || g0.is_zero()) return out;
  FreeElt f = f0.monic(), g = g0.monic();
  const Monomial F = freealg::leading_term(f).first, G = freealg::leading_term(g).first;
  const Word &fw = F.word, &gw = G.word;
  const bool same = f == g;

  if (F.is_module()) {
    // Module rules only compose with module rules, by suffix inclusion.
    if (!G.is_module() || F.tail != G.tail || fw.size() > gw.size() || same) return out;
    if (!std::equal(fw.begin(), fw.end(), gw.end() - fw.size())) return out;
    Monomial w = sub_monomial(al, gw, 0, gw.size() - fw.size());
    out.push_back({G, sandwich(w, f, Monomial{}) - g, Composition::inclusion});
    return out;
  }

  // Overlaps: a proper suffix Z of F is a prefix of G's word.  For ring g, Z must also be proper in G.
  const size_t max_k = std::min(fw.size() - 1, G.is_module() ? gw.size() : gw.size() - 1);
  for (size_t k = 1; k <= max_k && fw.size() > 0; ++k) {
    if (!std::equal(fw.end() - k, fw.end(), gw.begin())) continue;
    Monomial v = sub_monomial(al, gw, k, gw.size(), G.tail);
    Monomial wl = sub_monomial(al, fw, 0, fw.size() - k);
    Composition c;
    c.w = concat(F, v);
    c.elt = sandwich(Monomial{}, f, v) - sandwich(wl, g, Monomial{});
    c.kind = Composition::overlap;
    out.push_back(std::move(c));
  }
  // Inclusions: F sits inside G.
  if (!same && fw.size() <= gw.size()) {
    for (size_t i = 0; i + fw.size() <= gw.size(); ++i) {
      if (!std::equal(fw.begin(), fw.end(), gw.begin() + i)) continue;
      Monomial u = sub_monomial(al, gw, 0, i);
      Monomial v = sub_monomial(al, gw, i + fw.size(), gw.size(), G.tail);
      out.push_back({G, sandwich(u, f, v) - g, Composition::inclusion});
    }
  }
  return out;
}

GSCheck is_gs_pair(const GSPair& pair) {
  GSCheck res;
  auto rules = pair.rules();
  for (const Rule* a : rules)
    for (const Rule* b : rules)
      for (auto& c : compositions(a->f, b->f, pair.alphabet)) {
        ++res.checked;
        FreeElt nf = reduce_with(c.elt, pair.alphabet, rules, Strategy::rightmost);
        if (!nf.is_zero()) {
          res.ok = false;
          res.failure = Certificate{a->f, b->f, c.w, nf};
          return res;
        }
      }
  return res;
}

namespace {

bool contains_pattern(const Monomial& big, const Monomial& small) {
  return find_match(big, small, Strategy::leftmost) >= 0;
}

struct Completer {
  const Alphabet& al;
  uint32_t cap;
  Completion out;
  std::vector<Rule> arena;
  std::vector<bool> alive;

  struct Pending {
    Monomial w;
    size_t i, j, seq;
    bool operator<(const Pending& o) const { return std::tie(w, i, j, seq) < std::tie(o.w, o.i, o.j, o.seq); }
  };
  std::map<Pending, FreeElt> queue;
  size_t seq = 0;

  std::vector<const Rule*> active() const {
    std::vector<const Rule*> r;
    for (size_t i = 0; i < arena.size(); ++i)
      if (alive[i]) r.push_back(&arena[i]);
    return r;
  }
  std::vector<size_t> active_ids() const {
    std::vector<size_t> r;
    for (size_t i = 0; i < arena.size(); ++i)
      if (alive[i]) r.push_back(i);
    return r;
  }

  void push(size_t i, size_t j) {
    for (auto& c : compositions(arena[i].f, arena[j].f, al)) queue.emplace(Pending{c.w, i, j, seq++}, std::move(c.elt));
  }

  void add(const FreeElt& f0) {
    std::vector<FreeElt> todo{f0};
    while (!todo.empty()) {
      FreeElt f = reduce_with(todo.back(), al, active(), Strategy::rightmost);
      todo.pop_back();
      if (f.is_zero()) continue;
      Rule r = make_rule(f);
      if (r.pattern.weight > cap)
        throw CapExceeded("completion produced leading monomial " + freealg::to_string(al, r.pattern) +
                          " of weight " + std::to_string(r.pattern.weight) + " above cap " + std::to_string(cap));
      if (arena.size() > 20000) throw CapExceeded("completion exceeded 20000 rules");
      const size_t id = arena.size();
      // Rules whose pattern contains the new pattern leave the basis and are re-reduced.
      for (size_t i = 0; i < id; ++i)
        if (alive[i] && contains_pattern(arena[i].pattern, r.pattern)) {
          alive[i] = false;
          todo.push_back(arena[i].f);
        }
      arena.push_back(r);
      alive.push_back(true);
      out.arena.push_back(r.f);
      for (size_t i = 0; i <= id; ++i) {
        if (!alive[i]) continue;
        push(i, id);
        if (i != id) push(id, i);
      }
    }
  }

  void run(const GSPair& in) {
    for (const Rule* r : in.rules()) add(r->f);
    while (!queue.empty()) {
      auto node = queue.extract(queue.begin());
      const Pending& key = node.key();
      if (!alive[key.i] || !alive[key.j]) continue;
      ++out.compositions_processed;
      auto before = active_ids();
      FreeElt nf = reduce_with(node.mapped(), al, active(), Strategy::rightmost);
      if (nf.is_zero()) continue;
      CompletionStep step{key.i, key.j, key.w, node.mapped(), nf.monic(), std::move(before)};
      out.log.push_back(std::move(step));
      add(nf);
    }
    // Tail-reduce the surviving rules.
    GSPair res;
    res.alphabet = al;
    auto act = active();
    std::vector<Rule> final_rules;
    for (const Rule* r : act) {
      FreeElt tail = reduce_with(r->replacement(), al, act, Strategy::rightmost);
      final_rules.push_back(make_rule(FreeElt::term(al.q, r->pattern) - tail));
    }
    std::sort(final_rules.begin(), final_rules.end(),
              [](const Rule& a, const Rule& b) { return a.pattern < b.pattern; });
    for (auto& r : final_rules) (r.origin == Origin::ring ? res.S : res.T).push_back(std::move(r));
    out.pair = std::move(res);
  }
};

}  // namespace

Completion complete_logged(const GSPair& pair, uint32_t weight_cap) {
  Completer c{pair.alphabet, weight_cap, {}, {}, {}, {}, 0};
  c.run(pair);
  GSCheck check = is_gs_pair(c.out.pair);
  if (!check.ok) throw std::logic_error("completion output failed the composition check");
  c.out.pair.complete = true;
  return std::move(c.out);
}

GSPair complete(const GSPair& pair, uint32_t weight_cap) { return complete_logged(pair, weight_cap).pair; }

std::vector<Monomial> standard_monomials(const GSPair& pair, Scope scope, size_t element_cap) {
  if (!pair.complete) throw std::invalid_argument("standard_monomials needs a verified Groebner-Shirshov pair");
  const Alphabet& al = pair.alphabet;
  auto rules = pair.rules();
  std::vector<Monomial> out;
  std::vector<int> tails;
  if (scope.kind == Scope::ring) tails.push_back(-1);
  if (scope.kind == Scope::module) tails.push_back(scope.module_index);
  if (scope.kind == Scope::all_modules)
    for (size_t j = 0; j < al.module_names.size(); ++j) tails.push_back(static_cast<int>(j));

  auto reducible = [&](const Monomial& m) { return best_match(m, rules, Strategy::rightmost).rule != nullptr; };
  for (int tail : tails) {
    Monomial start = make_monomial(al, {}, tail);
    if (reducible(start)) continue;
    std::vector<Monomial> frontier{start};
    out.push_back(start);
    while (!frontier.empty()) {
      std::vector<Monomial> next;
      for (const auto& m : frontier)
        for (size_t x = 0; x < al.size(); ++x) {
          Word w;
          // Ring words grow on the right, module words on the left, keeping all checked factors legal.
          if (tail < 0) {
            w = m.word;
            w.push_back(static_cast<freealg::Letter>(x));
          } else {
            w.push_back(static_cast<freealg::Letter>(x));
            w.insert(w.end(), m.word.begin(), m.word.end());
          }
          Monomial c = make_monomial(al, std::move(w), tail);
          if (reducible(c)) continue;
          if (out.size() >= element_cap)
            throw CapExceeded("standard monomial enumeration passed " + std::to_string(element_cap) +
                              " elements; the quotient may be infinite-dimensional");
          out.push_back(c);
          next.push_back(std::move(c));
        }
      frontier = std::move(next);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> to_strings(const GSPair& pair) {
  std::vector<std::string> out;
  for (const Rule* r : pair.rules()) out.push_back(freealg::to_string(pair.alphabet, r->f));
  return out;
}

}  // namespace gs
