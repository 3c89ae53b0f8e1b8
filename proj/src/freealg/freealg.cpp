#include "freealg/freealg.hpp"

#include <cctype>
#include <set>

#include "scalars/fp.hpp"

namespace freealg {

using scalars::mod_add;
using scalars::mod_inv;
using scalars::mod_mul;
using scalars::mod_neg;
using scalars::mod_reduce;

Alphabet::Alphabet(uint32_t field, const std::vector<std::pair<std::string, uint32_t>>& letters,
                   std::vector<std::string> modules)
    : q(field), module_names(std::move(modules)) {
  if (!scalars::is_prime(q)) throw std::invalid_argument("alphabet: coefficient field must be prime");
  if (letters.size() > 255) throw std::invalid_argument("alphabet: too many letters");
  std::set<std::string> seen;
  for (const auto& [name, w] : letters) {
    if (w == 0) throw std::invalid_argument("alphabet: weights must be positive");
    if (name.empty() || !seen.insert(name).second) throw std::invalid_argument("alphabet: bad or repeated name");
    names.push_back(name);
    weights.push_back(w);
  }
  for (const auto& m : module_names)
    if (m.empty() || !seen.insert(m).second) throw std::invalid_argument("alphabet: bad or repeated name");
}

Letter Alphabet::letter(const std::string& name) const {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<Letter>(i);
  throw std::out_of_range("unknown letter " + name);
}

int Alphabet::module(const std::string& name) const {
  for (size_t i = 0; i < module_names.size(); ++i)
    if (module_names[i] == name) return static_cast<int>(i);
  throw std::out_of_range("unknown module generator " + name);
}

uint32_t Alphabet::weight(const Word& w) const {
  uint32_t s = 0;
  for (Letter x : w) s += weights.at(x);
  return s;
}

Monomial make_monomial(const Alphabet& al, Word w, int tail) {
  Monomial m;
  m.weight = al.weight(w);
  m.word = std::move(w);
  m.tail = tail;
  return m;
}

Monomial concat(const Monomial& a, const Monomial& b) {
  if (a.is_module() && b.word.empty() && !b.is_module()) return a;
  if (a.is_module()) throw UndefinedProduct("cannot right-multiply a module monomial");
  Monomial m;
  m.weight = a.weight + b.weight;
  m.word.reserve(a.word.size() + b.word.size());
  m.word = a.word;
  m.word.insert(m.word.end(), b.word.begin(), b.word.end());
  m.tail = b.tail;
  return m;
}

std::string to_string(const Alphabet& al, const Monomial& m) {
  std::string out;
  auto emit = [&](const std::string& s) {
    if (!out.empty()) out += ' ';
    out += s;
  };
  for (size_t i = 0; i < m.word.size();) {
    size_t j = i;
    while (j < m.word.size() && m.word[j] == m.word[i]) ++j;
    std::string s = al.names.at(m.word[i]);
    if (j - i > 1) s += "^" + std::to_string(j - i);
    emit(s);
    i = j;
  }
  if (m.is_module()) emit(al.module_names.at(m.tail));
  return out.empty() ? "1" : out;
}

FreeElt FreeElt::constant(uint32_t q, int64_t c) { return term(q, Monomial{}, c); }

FreeElt FreeElt::term(uint32_t q, const Monomial& m, int64_t c) {
  FreeElt f(q);
  f.add_term(m, mod_reduce(c, q));
  return f;
}

bool FreeElt::is_module() const { return !terms_.empty() && terms_.begin()->first.is_module(); }

uint32_t FreeElt::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void FreeElt::add_term(const Monomial& m, uint32_t c) {
  if (c == 0) return;
  if (!terms_.empty() && terms_.begin()->first.is_module() != m.is_module())
    throw std::invalid_argument("cannot mix ring and module monomials");
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second = mod_add(it->second, c, q_);
    if (it->second == 0) terms_.erase(it);
  }
}

FreeElt& FreeElt::operator+=(const FreeElt& o) {
  if (o.q_ != q_) throw std::invalid_argument("field mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

FreeElt& FreeElt::operator-=(const FreeElt& o) {
  if (o.q_ != q_) throw std::invalid_argument("field mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, mod_neg(c, q_));
  return *this;
}

FreeElt FreeElt::operator+(const FreeElt& o) const {
  FreeElt r = *this;
  r += o;
  return r;
}

FreeElt FreeElt::operator-(const FreeElt& o) const {
  FreeElt r = *this;
  r -= o;
  return r;
}

FreeElt FreeElt::operator-() const { return scaled(q_ - 1); }

FreeElt FreeElt::scaled(uint32_t c) const {
  c %= q_;
  FreeElt r(q_);
  if (c == 0) return r;
  for (const auto& [m, a] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, mod_mul(a, c, q_));
  return r;
}

FreeElt FreeElt::monic() const {
  if (is_zero()) return *this;
  return scaled(mod_inv(terms_.rbegin()->second, q_));
}

FreeElt multiply(const FreeElt& f, const FreeElt& g) {
  if (f.q() != g.q()) throw std::invalid_argument("field mismatch");
  if (f.is_module()) throw UndefinedProduct("left factor lies in the free module");
  FreeElt r(f.q());
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms()) r.add_term(concat(a, b), mod_mul(ca, cb, f.q()));
  return r;
}

FreeElt sandwich(const Monomial& u, const FreeElt& f, const Monomial& v) {
  if (f.is_module() && (!v.word.empty() || v.is_module())) throw UndefinedProduct("module element followed by letters");
  FreeElt r(f.q());
  for (const auto& [m, c] : f.terms()) r.add_term(concat(concat(u, m), v), c);
  return r;
}

std::pair<Monomial, uint32_t> leading_term(const FreeElt& f) {
  if (f.is_zero()) throw std::invalid_argument("leading_term of zero");
  return *f.terms().rbegin();
}

std::string to_string(const Alphabet& al, const FreeElt& f) {
  if (f.is_zero()) return "0";
  std::string out;
  const uint32_t q = f.q();
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    int64_t c = it->second;
    if (c > static_cast<int64_t>(q / 2)) c -= q;
    bool neg = c < 0;
    if (neg) c = -c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    bool unit = it->first.word.empty() && !it->first.is_module();
    if (c != 1 || unit) out += std::to_string(c);
    if (!unit) {
      if (c != 1) out += ' ';
      out += to_string(al, it->first);
    }
  }
  return out;
}

namespace {

struct Parser {
  const Alphabet& al;
  const std::string& s;
  size_t i = 0;

  void skip() {
    while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == '*')) ++i;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("parse error at offset " + std::to_string(i) + ": " + why);
  }
  int64_t number() {
    int64_t v = 0;
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("expected a number");
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) v = v * 10 + (s[i++] - '0');
    return v;
  }
  // Longest letter or module name starting at i.  Returns (index, is_module).
  std::pair<int, bool> name() {
    size_t best = 0;
    std::pair<int, bool> hit{-1, false};
    for (size_t k = 0; k < al.names.size(); ++k)
      if (al.names[k].size() > best && s.compare(i, al.names[k].size(), al.names[k]) == 0)
        best = al.names[k].size(), hit = {static_cast<int>(k), false};
    for (size_t k = 0; k < al.module_names.size(); ++k)
      if (al.module_names[k].size() > best && s.compare(i, al.module_names[k].size(), al.module_names[k]) == 0)
        best = al.module_names[k].size(), hit = {static_cast<int>(k), true};
    if (hit.first < 0) fail("unknown symbol");
    i += best;
    return hit;
  }

  FreeElt run() {
    FreeElt out(al.q);
    skip();
    bool first = true;
    while (i < s.size()) {
      int sign = 1;
      if (s[i] == '+' || s[i] == '-') {
        sign = s[i] == '-' ? -1 : 1;
        ++i;
        skip();
      } else if (!first) {
        fail("expected + or -");
      }
      first = false;
      int64_t c = 1;
      if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        c = number();
        skip();
      }
      Word w;
      int tail = -1;
      while (i < s.size() && s[i] != '+' && s[i] != '-') {
        if (tail >= 0) fail("module generator must be last");
        auto [k, is_mod] = name();
        int64_t e = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          e = number();
        }
        if (is_mod) {
          if (e != 1) fail("module generator cannot be raised to a power");
          tail = k;
        } else {
          w.insert(w.end(), static_cast<size_t>(e), static_cast<Letter>(k));
        }
        skip();
      }
      out.add_term(make_monomial(al, std::move(w), tail), mod_reduce(sign * c, al.q));
    }
    return out;
  }
};

}  // namespace

FreeElt parse(const Alphabet& al, const std::string& text) {
  Parser p{al, text};
  return p.run();
}

}  // namespace freealg
