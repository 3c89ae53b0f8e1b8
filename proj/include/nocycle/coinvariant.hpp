#pragma once
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fdrep/matrix.hpp"
#include "nocycle/nocycle.hpp"

namespace nocycle {

// F_q[X,Y]/(X^n, XY, Y^n) * <g>, with g X g^-1 = zeta X and g Y g^-1 = zeta^-1 Y.
struct SkewCoinvariant {
  uint32_t n = 1, q = 2, zeta = 1;
  // Basis monomial * g^power; mono 0 is 1, +s is X^s, -s is Y^s.
  struct Basis {
    int mono = 0;
    uint32_t power = 0;
  };
  std::vector<Basis> basis;
  std::vector<std::string> names;
  std::vector<std::pair<int64_t, int64_t>> bidegree;  // deg X = (1,1), deg Y = (-1,1)

  size_t dim() const { return basis.size(); }
  size_t index_of(int mono, uint32_t power) const;
  fdrep::Vec multiply(const fdrep::Vec& x, const fdrep::Vec& y) const;
  fdrep::Vec element(size_t i) const;
};

SkewCoinvariant build_coinvariant(uint32_t n, uint32_t q);

struct UpsilonReport {
  uint32_t n = 1, q = 2, zeta = 1;
  size_t dim_c = 0, dim_n = 0;
  bool relations_ok = false;     // images satisfy the defining relations
  bool multiplicative = false;   // images of basis products match products of images
  bool unital = false;
  size_t rank = 0;
  bool bijective = false;
  bool grading_ok = false;       // first degree of C(n) goes to the grading of N(n)
  std::vector<fdrep::Vec> images;  // coordinates in N(n) of each basis element of C(n)
  bool ok() const { return relations_ok && multiplicative && unital && bijective && grading_ok; }
};

// X -> sum b_k, Y -> sum a_k, g -> sum zeta^(n-k) e_k.  Throws if q != 1 mod n.
UpsilonReport coinvariant_upsilon(uint32_t n, uint32_t q);

}  // namespace nocycle
