#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fdrep/module.hpp"
#include "gs/engine.hpp"

namespace hodges {

// Polynomial over F_p, coefficients from low to high degree, no trailing zeros.
using Poly = std::vector<uint32_t>;

Poly poly_trim(Poly f);
Poly poly_mul(const Poly& f, const Poly& g, uint32_t p);
Poly poly_add(const Poly& f, const Poly& g, uint32_t p);
Poly poly_shift(const Poly& f, int64_t c, uint32_t p);  // f(z + c)
uint32_t poly_eval(const Poly& f, int64_t z, uint32_t p);
std::string poly_to_string(const Poly& f, uint32_t p, const std::string& var = "z");

struct HodgesData {
  uint32_t n = 2;
  uint32_t p = 3;
  std::vector<uint32_t> r;  // r_1 .. r_{n-1}

  static HodgesData make(uint32_t n, uint32_t p, std::vector<uint32_t> r);
  uint32_t r0() const;
  uint32_t r_at(size_t i) const;  // r_i for 0 <= i < n, r_0 derived
  std::vector<uint32_t> roots() const;  // r_1 + ... + r_i mod p, i = 0..n-1
  bool is_root(int64_t x) const;
  Poly v() const;
  std::string label() const;  // "(n=3,p=5,r=(1,2))"
};

// v_(i) for i > 0, v_(-|i|) for i < 0.
Poly shifted_product(const HodgesData& d, int i);

enum class Level { T, frakT, t };
Level parse_level(const std::string& s);
std::string level_name(Level l);

// Letters a (weight 1) < b (weight 2n-1) < h (weight 1); one module generator Y.
freealg::Alphabet alphabet(const HodgesData& d);
// f(h + c) as a ring element.
freealg::FreeElt poly_in_h(const freealg::Alphabet& al, const Poly& f, int64_t c = 0);

std::vector<freealg::FreeElt> relations(const HodgesData& d, Level level);
gs::GSPair relation_pair(const HodgesData& d, Level level);
// The explicit Groebner-Shirshov basis of the level frakT quotient.
std::vector<freealg::FreeElt> expected_basis(const HodgesData& d);
uint32_t default_weight_cap(const HodgesData& d);

struct ShirshovReport {
  bool match = false;
  bool expected_is_gs = false;
  std::vector<std::string> computed;
  std::vector<std::string> expected;
  std::optional<std::string> difference;
  size_t basis_size = 0;      // standard monomials of the frakT quotient
  size_t basis_size_t = 0;    // standard monomials of the t quotient
  size_t compositions = 0;
  double seconds = 0;
};
ShirshovReport verify_shirshov(const HodgesData& d, std::optional<uint32_t> weight_cap = std::nullopt);

// Completes the relations of a level and counts standard monomials.
size_t quotient_dim(const HodgesData& d, Level level);

// Evaluates a ring element on matrices for a, b, h.
fdrep::Mat evaluate(const freealg::FreeElt& f, const fdrep::FDModule& m);
// True if every defining relation of the level acts as zero.
bool satisfies_relations(const fdrep::FDModule& m, const HodgesData& d, Level level);

enum class Variant { plain, primed };

struct VermaModule {
  bool zero = true;
  int64_t lambda = 0;
  Variant variant = Variant::plain;
  fdrep::FDModule module;  // generators a, b, h; graded
};
// Also certifies the module presentation as a Groebner-Shirshov pair and checks the
// explicit action against normal forms.  Throws std::logic_error if either check fails.
VermaModule baby_verma(const HodgesData& d, int64_t lambda, Variant variant);

fdrep::FDModule shift(const fdrep::FDModule& m, const HodgesData& d, int64_t i);  // M[i]

struct LayerInfo {
  size_t simple = 0;      // index i of L_i
  int64_t shift = 0;      // j in L_i[j]
  size_t multiplicity = 0;
};

struct StructureReport {
  HodgesData data;
  std::vector<size_t> present;          // i with r_{n-1-i} != 0
  std::vector<int64_t> lambda;          // lambda_i = r_1 + ... + r_{n-1-i}
  std::vector<fdrep::FDModule> V, Vp;   // V_i, V'_i (empty module when omitted)
  std::vector<fdrep::FDModule> L;       // simples (empty module when omitted)
  std::vector<fdrep::FDModule> T;       // kernels of V_i + V'_i -> L_i
  std::vector<std::vector<std::vector<LayerInfo>>> v_layers, vp_layers;
  std::vector<size_t> dim_L, dim_T;
  size_t weighted_sum = 0;  // sum of dim T_i * dim L_i
  size_t dim_t = 0;         // dimension of t(v) from the GS basis
};
StructureReport structure_report(const HodgesData& d);

// dims Ext^1(L_i, L_j) over present indices, read off the second radical layer of T_i.
std::vector<std::vector<size_t>> ext1_quiver(const StructureReport& s);
std::vector<std::vector<size_t>> ext1_quiver(const HodgesData& d);

// Unique (i, j) with V(lambda) ~ V_i[j]; searches j within +-range.
std::vector<std::pair<size_t, int64_t>> verma_matches(const StructureReport& s, int64_t lambda, int64_t range = 4);

}  // namespace hodges
