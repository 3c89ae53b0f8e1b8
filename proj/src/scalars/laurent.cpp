#include "scalars/laurent.hpp"

#include <cctype>
#include <stdexcept>

namespace scalars {

LaurentBi::LaurentBi(long c) {
  if (c != 0) terms_[{0, 0}] = c;
}

LaurentBi LaurentBi::monomial(const mpz_class& c, int64_t s, int64_t t) {
  LaurentBi r;
  if (c != 0) r.terms_[{s, t}] = c;
  return r;
}

mpz_class LaurentBi::coeff(int64_t s, int64_t t) const {
  auto it = terms_.find({s, t});
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void LaurentBi::add_term(const Exp& e, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentBi& LaurentBi::operator+=(const LaurentBi& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}
LaurentBi& LaurentBi::operator-=(const LaurentBi& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}
LaurentBi LaurentBi::operator+(const LaurentBi& o) const {
  LaurentBi r = *this;
  r += o;
  return r;
}
LaurentBi LaurentBi::operator-(const LaurentBi& o) const {
  LaurentBi r = *this;
  r -= o;
  return r;
}
LaurentBi LaurentBi::operator-() const {
  LaurentBi r = *this;
  for (auto& kv : r.terms_) kv.second = -kv.second;
  return r;
}

LaurentBi LaurentBi::operator*(const LaurentBi& o) const {
  LaurentBi r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term({e1.first + e2.first, e1.second + e2.second}, c1 * c2);
  return r;
}

LaurentBi LaurentBi::dagger() const {
  LaurentBi r;
  for (const auto& [e, c] : terms_) r.terms_[{-e.first, e.second}] = c;
  return r;
}

LaurentBi LaurentBi::bar() const {
  LaurentBi r;
  for (const auto& [e, c] : terms_) r.terms_[{e.first, -e.second}] = c;
  return r;
}

LaurentBi LaurentBi::pow(unsigned e) const {
  LaurentBi r(1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

int64_t LaurentBi::max_t() const {
  if (terms_.empty()) throw std::domain_error("max_t of zero");
  int64_t m = terms_.begin()->first.second;
  for (const auto& kv : terms_) m = std::max(m, kv.first.second);
  return m;
}
int64_t LaurentBi::min_t() const {
  if (terms_.empty()) throw std::domain_error("min_t of zero");
  int64_t m = terms_.begin()->first.second;
  for (const auto& kv : terms_) m = std::min(m, kv.first.second);
  return m;
}

namespace {
std::string power(const char* sym, int64_t e) {
  if (e == 1) return sym;
  return std::string(sym) + "^" + std::to_string(e);
}
}  // namespace

std::string LaurentBi::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    mpz_class a = abs(c);
    bool neg = c < 0;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    std::string mono;
    if (e.first != 0) mono += power("v'", e.first);
    if (e.second != 0) mono += (mono.empty() ? "" : "*") + power("v", e.second);
    if (mono.empty())
      out += a.get_str();
    else if (a == 1)
      out += mono;
    else
      out += a.get_str() + "*" + mono;
  }
  return out;
}

// Grammar: term (('+'|'-') term)*, term = [int '*'] factor ('*' factor)* | int,
// factor = "v'" ['^' int] | "v" ['^' int].  Whitespace ignored.
LaurentBi LaurentBi::parse(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty Laurent polynomial");
  size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("cannot parse Laurent polynomial '" + text + "': " + why);
  };
  auto read_int = [&]() -> std::string {
    size_t j = i;
    if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
    size_t k = j;
    while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
    if (k == j) fail("expected integer at position " + std::to_string(i));
    std::string r = s.substr(i, k - i);
    i = k;
    return r;
  };
  LaurentBi out;
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      fail("expected sign at position " + std::to_string(i));
    }
    first = false;
    mpz_class c = 1;
    int64_t es = 0, et = 0;
    bool any = false;
    while (i < s.size() && s[i] != '+' && s[i] != '-') {
      if (any) {
        if (s[i] != '*') fail("expected '*' at position " + std::to_string(i));
        ++i;
      }
      any = true;
      if (std::isdigit(static_cast<unsigned char>(s[i]))) {
        c *= mpz_class(read_int());
      } else if (s[i] == 'v') {
        ++i;
        bool primed = i < s.size() && s[i] == '\'';
        if (primed) ++i;
        int64_t e = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          e = std::stoll(read_int());
        }
        (primed ? es : et) += e;
      } else {
        fail("unexpected character '" + std::string(1, s[i]) + "'");
      }
    }
    if (!any) fail("empty term");
    out.add_term({es, et}, sign * c);
  }
  return out;
}

std::vector<LaurentBi::Record> LaurentBi::records() const {
  std::vector<Record> r;
  for (const auto& [e, c] : terms_) r.push_back({e.first, e.second, c.get_str()});
  return r;
}

LaurentBi laurent_mul(const LaurentBi& f, const LaurentBi& g) { return f * g; }

LaurentBi laurent_involution(const LaurentBi& f, Involution kind) {
  return kind == Involution::dagger ? f.dagger() : f.bar();
}

}  // namespace scalars
