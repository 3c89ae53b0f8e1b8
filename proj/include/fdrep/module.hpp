#pragma once
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fdrep/matrix.hpp"

namespace fdrep {

// Finite-dimensional module: one dim x dim matrix per named generator, acting on column vectors.
// Optional integer grading of the standard basis.
struct FDModule {
  uint32_t q = 2;
  size_t dim = 0;
  std::vector<std::string> names;
  std::vector<Mat> gens;
  std::optional<std::vector<int64_t>> grading;

  FDModule() = default;
  FDModule(uint32_t field, size_t dimension, std::vector<std::string> gen_names);

  size_t index(const std::string& name) const;  // throws when absent
  Mat& gen(const std::string& name) { return gens[index(name)]; }
  const Mat& gen(const std::string& name) const { return gens[index(name)]; }
  bool graded() const { return grading.has_value(); }
  void validate() const;
};

// Degree-preserving maps M -> N<shift>, where N<shift> has every degree raised by shift.
// With no shift the maps are ungraded module homomorphisms.  Each map is dim N x dim M.
std::vector<Mat> hom(const FDModule& m, const FDModule& n, std::optional<int64_t> shift = std::nullopt);
size_t hom_dim(const FDModule& m, const FDModule& n, std::optional<int64_t> shift = std::nullopt);

FDModule direct_sum(const FDModule& a, const FDModule& b);
FDModule shifted(const FDModule& m, int64_t by);

// Submodule spanned by the rows of basis (must be invariant); basis vectors become the new basis.
FDModule submodule(const FDModule& m, const Mat& basis);

struct Quotient {
  FDModule module;
  Mat projection;  // dim Q x dim M
  Mat lift;        // rows: standard basis vectors of M chosen as a complement
};
Quotient quotient(const FDModule& m, const Mat& sub_basis);

// Re-expresses a graded subspace in a basis of homogeneous vectors; throws if not graded.
Mat homogeneous_basis(const FDModule& m, const Mat& u);

// Span of the images (resp. common kernel) of maps, as echelonised rows.
Mat image_span(const std::vector<Mat>& maps, size_t target_dim, uint32_t q);
Mat common_kernel(const std::vector<Mat>& maps, size_t source_dim, uint32_t q);

bool is_indecomposable(const FDModule& m);
bool is_isomorphic(const FDModule& a, const FDModule& b, std::optional<int64_t> shift = std::nullopt);

// Against a complete list of pairwise non-isomorphic simples.
Mat radical(const FDModule& m, const std::vector<FDModule>& simples);
Mat socle(const FDModule& m, const std::vector<FDModule>& simples);
std::vector<size_t> composition_multiplicities(const FDModule& m, const std::vector<FDModule>& simples);

struct LayerPart {
  size_t simple = 0;
  size_t multiplicity = 0;
  std::optional<int64_t> shift;  // layer part ~ simple<shift>, graded case only
};
struct Layer {
  size_t dim = 0;
  std::vector<LayerPart> parts;
};
enum class Series { radical, socle };

// Radical series is head first; socle series is socle first.
std::vector<Layer> loewy_series(const FDModule& m, const std::vector<FDModule>& simples,
                                Series series = Series::radical);

// Raised when a module has a composition factor outside the supplied list.
struct UnknownFactor : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fdrep
