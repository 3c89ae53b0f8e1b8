#pragma once
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "freealg/freealg.hpp"

namespace gs {

using freealg::Alphabet;
using freealg::FreeElt;
using freealg::Monomial;

enum class Origin { ring, module };

// Monic relation f read as pattern -> pattern - f.
struct Rule {
  FreeElt f;
  Monomial pattern;
  Origin origin = Origin::ring;

  FreeElt replacement() const;
};
Rule make_rule(const FreeElt& f);  // throws on zero

struct GSPair {
  Alphabet alphabet;
  std::vector<Rule> S;  // ring rules
  std::vector<Rule> T;  // module rules
  bool complete = false;

  static GSPair from(const Alphabet& al, const std::vector<FreeElt>& ring, const std::vector<FreeElt>& module = {});
  std::vector<const Rule*> rules() const;  // S then T
};

enum class Strategy { rightmost, leftmost };

// One rewrite of the largest reducible monomial, or nullopt if f is already reduced.
std::optional<FreeElt> reduce_step(const FreeElt& f, const GSPair& pair, Strategy strategy = Strategy::rightmost);
FreeElt reduce(const FreeElt& f, const GSPair& pair, Strategy strategy = Strategy::rightmost);
bool is_reducible(const Monomial& m, const GSPair& pair);

struct Composition {
  enum Kind { overlap, inclusion };
  Monomial w;
  FreeElt elt;
  Kind kind = overlap;
};
// Compositions with f in the left slot: overlaps f-bar V = W g-bar and inclusions W f-bar V = g-bar.
std::vector<Composition> compositions(const FreeElt& f, const FreeElt& g, const Alphabet& al);

struct Certificate {
  FreeElt f, g;
  Monomial w;
  FreeElt normal_form;
};
struct GSCheck {
  bool ok = true;
  std::optional<Certificate> failure;
  size_t checked = 0;
};
GSCheck is_gs_pair(const GSPair& pair);

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One rule added during completion: the reduced composition of arena rules left and right at w.
struct CompletionStep {
  size_t left = 0, right = 0;
  Monomial w;
  FreeElt composition;
  FreeElt rule;
  std::vector<size_t> active_before;
};
struct Completion {
  GSPair pair;
  std::vector<FreeElt> arena;  // every rule ever held, by id
  std::vector<CompletionStep> log;
  size_t compositions_processed = 0;
};
Completion complete_logged(const GSPair& pair, uint32_t weight_cap);
GSPair complete(const GSPair& pair, uint32_t weight_cap);

struct Scope {
  enum Kind { ring, module, all_modules };
  Kind kind = ring;
  int module_index = 0;
  static Scope of_ring() { return {ring, 0}; }
  static Scope of_module(int j) { return {module, j}; }
  static Scope of_all_modules() { return {all_modules, 0}; }
};
// Monomials avoiding every pattern, by increasing order; throws CapExceeded past element_cap.
std::vector<Monomial> standard_monomials(const GSPair& pair, Scope scope, size_t element_cap = 2000000);

std::vector<std::string> to_strings(const GSPair& pair);

}  // namespace gs
