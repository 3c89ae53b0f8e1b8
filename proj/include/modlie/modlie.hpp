#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fdrep/module.hpp"

namespace modlie {

using fdrep::FDModule;
using fdrep::Mat;

// chi(E_{j+1,j}) = 1 for 1 <= j <= n-2, zero on every other matrix unit.
struct SubregChi {
  uint32_t n = 3, p = 5;
  Mat table;  // table.at(i, j) = chi(E_{i+1,j+1})

  uint32_t operator()(const Mat& x) const;  // chi of an n x n matrix
};
SubregChi make_chi(uint32_t n, uint32_t p);  // rejects p <= n and composite p

// Basis of F_{j,alpha}: v_1..v_{j-1}, v_j + alpha v_n, v_n, v_{j+1}..v_{n-1}, as columns.
// j = 0 gives v_n, v_1, .., v_{n-1}.
Mat flag_basis(uint32_t n, uint32_t p, uint32_t j, uint32_t alpha);

struct FlagBorel {
  uint32_t k = 0, alpha = 0;
  Mat g, ginv;  // b = g b_+ g^-1, det g = 1
  // g e_i = scale[i] e_{perm[i]} when g is monomial (alpha = 0).
  std::optional<std::vector<uint32_t>> perm;
};
// (0,0) is b_+; otherwise the stabiliser of F_{n-k,alpha}.
FlagBorel flag_borel(const SubregChi& chi, uint32_t k, uint32_t alpha);
// The Lie algebra stabilising the flag with columns g, as a basis of n x n matrices (flattened rows).
Mat stabiliser(const Mat& g);
// nu(tau) F_{j,alpha} = F_{j,tau^-n alpha} for every tau in F_p^*.
bool torus_moves_flags(uint32_t n, uint32_t p, uint32_t j, uint32_t alpha);

struct WeightData {
  uint32_t n = 3, p = 5;
  std::vector<uint32_t> r;  // r_1 .. r_{n-1}

  uint32_t r0() const;
  bool regular() const;
  std::vector<int64_t> rho_shifted() const;  // lambda + rho in epsilon coordinates, last entry 0
  std::vector<int64_t> mu() const;           // lambda in epsilon coordinates, last entry 0
  std::string label() const;
};
WeightData make_weight(uint32_t n, uint32_t p, std::vector<uint32_t> r);

// Weights w . lambda for every permutation, in epsilon coordinates.
std::vector<std::vector<int64_t>> dot_orbit(const WeightData& w);

// Generators E_ij (i != j) named "Eij", then "Hi" = E_ii - E_{i+1,i+1}.
std::vector<std::string> generator_names(uint32_t n);
// The traceless matrix behind a generator name.
Mat generator_matrix(uint32_t n, uint32_t p, size_t index);

struct LieVerma {
  FDModule module;              // graded when the flag is monomial
  std::vector<int64_t> weight;  // gl_n weight of 1 (x) 1 under b_+ after untwisting
  std::vector<Mat> gl_action;   // untwisted action of E_ab, index a*n+b
};
// U_chi (x)_{U(b)} K_weight on the PBW basis of the opposite nilradical.
LieVerma baby_verma_weight(const SubregChi& chi, const std::vector<int64_t>& weight, const FlagBorel& bor);
FDModule baby_verma_lie(const SubregChi& chi, const WeightData& w, const FlagBorel& bor);

// Action of an arbitrary traceless matrix.
Mat act(const FDModule& m, const Mat& x);

struct RelationCheck {
  bool brackets = true;
  bool p_powers = true;
  size_t checked = 0;
  bool ok() const { return brackets && p_powers; }
};
RelationCheck check_relations(const FDModule& m, const SubregChi& chi);

// Dimension of the weight-lambda b-eigenspace, which is dim End(Z(b)).
size_t end_dim_at_flag(const SubregChi& chi, const WeightData& w, const FlagBorel& bor);

struct LayerInfo {
  size_t simple = 0;
  size_t dim = 0;
  size_t multiplicity = 0;
  int64_t degree_offset = 0;  // relative to the head of the module
  int64_t shift = 0;          // degree_offset / p
  bool integral = true;       // degree_offset divisible by p
};

// Uniserial chain at b_+ for a regular weight.
struct ChainData {
  WeightData weight;
  SubregChi chi;
  std::vector<std::vector<int64_t>> orbit_weight;  // weight used for V_i
  std::vector<FDModule> V, L;                      // graded
  std::vector<size_t> dim_L;
  std::vector<std::vector<LayerInfo>> layers;      // radical layers of V_i
  size_t orbit_classes = 0;
};
ChainData chain(const SubregChi& chi, const WeightData& w);

struct VermaReport {
  uint32_t k = 0, alpha = 0;
  size_t dim = 0;
  std::vector<size_t> multiplicities;   // against the chain simples
  size_t end_dim = 0;
  RelationCheck relations;
  std::vector<LayerInfo> layers;        // b_+ (alpha = 0, graded) only
};
VermaReport verma_report(const ChainData& c, const FlagBorel& bor);

}  // namespace modlie
