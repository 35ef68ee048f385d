#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "manirep/gmodules.hpp"
#include "manirep/groups.hpp"

namespace manirep {

enum class ManifoldFamily {
  GrReal,
  GrComplex,
  GrQuaternionic,
  GrSpReal,
  GrSpComplex,
  GrComplexLocus,
  SLGr,
  LGrC,
  SLGrStarH,
  SOGrC,
  IGr,
  GrIndefinite,
  FlReal,
  FlComplex,
  FlQuaternionic,
  IFlEven,
  IFlOdd,
  FlSpReal,
  FlSpComplex,
  LFl,
  StNoncompactReal,
  StNoncompactComplex,
  StiefelReal,
  StiefelComplex,
  StiefelQuaternionic,
};

constexpr int kManifoldFamilyCount = 25;

/// Sizes follow the row conventions: n is the half size for the
/// quaternionic, symplectic and Lagrangian rows (the matrices are 2n x 2n).
/// GrIndefinite uses (p, q, m, n) with the group SO_{m,n}; IFlOdd uses p for
/// the trailing zero block.
///
/// Spectrum layout: {lambda, mu} for Grassmannians, {lambda', mu'} for the
/// indefinite one, {lambda} for IGr, one value per flag part otherwise.
/// Empty means the default integer spectrum.
struct ManifoldDescriptor {
  ManifoldFamily family = ManifoldFamily::GrReal;
  int n = 0;
  int k = 0;
  std::vector<int> flag;  // k_1 < ... < k_m
  int p = 0, q = 0, m = 0;
  std::vector<double> spectrum;
};

struct EmbeddedPoint {
  ManifoldDescriptor manifold;
  Mat value;
  ModuleDescriptor module;
  bool minimality_advisory = false;  // size below the minimality thresholds
};

struct ManifoldData {
  GroupDescriptor group;
  ActionKind action;
  ModuleDescriptor module;
};

std::string manifold_family_name(ManifoldFamily f);
ManifoldFamily manifold_family_from_name(const std::string& s);
std::vector<ManifoldFamily> all_manifold_families();

/// Smallest legal descriptor of a family, with the default spectrum.
ManifoldDescriptor smallest_manifold(ManifoldFamily f);

/// Throws InvalidDescriptor for bad sizes, InvalidSpectrum for bad spectra.
void validate(const ManifoldDescriptor& m);
/// The spectrum with defaults filled in.
std::vector<double> resolved_spectrum(const ManifoldDescriptor& m);

ManifoldData manifold_data(const ManifoldDescriptor& m);
bool minimality_advisory(const ManifoldDescriptor& m);

EmbeddedPoint base_point(const ManifoldDescriptor& m);
EmbeddedPoint embed(const ManifoldDescriptor& m, const Mat& g);
/// Group element whose first k columns are the orthonormal frame Y
/// (GrReal, GrComplex, StiefelReal, StiefelComplex).
Mat lift_frame(const ManifoldDescriptor& m, const Mat& Y);

double check_equivariance(const ManifoldDescriptor& m, int trials, std::uint64_t seed);
int tangent_dim(const ManifoldDescriptor& m);
int mp_dimension(const ManifoldDescriptor& m);

enum class CartanType { AI, AII, AIII, BDI, DIII, CI, CII };

struct CartanResult {
  bool identical = false;
  Mat right_factor;
  double residual = 0.0;
  int trials = 0;
};

std::string cartan_type_name(CartanType t);
CartanType cartan_type_from_name(const std::string& s);

/// n is the size (half size for AII, DIII, CI, CII); k is used by AIII, BDI, CII.
CartanResult cartan_compare(CartanType t, int n, int k, int trials, std::uint64_t seed);

}  // namespace manirep
