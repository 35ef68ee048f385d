#pragma once

#include <optional>
#include <string>
#include <vector>

#include "manirep/embeddings.hpp"
#include "manirep/stabilizers.hpp"
#include "manirep/weyl.hpp"

namespace manirep {

/// Multiplicities of the low-dimensional modules. SL types use (b, c, d, e);
/// SO and Sp types use (b, c, d); compact Sp uses (c, d); SU_n has the single
/// target e = 1.
struct TargetSpec {
  GroupDescriptor group;
  int b = 0, c = 0, d = 0, e = 0;
};

struct AdmissibilityReport {
  bool admissible = false;
  bool in_range = false;
  Rational inequality_value;
  BigInt module_dim_total;
  std::vector<ModuleDescriptor> modules;
  std::vector<ActionKind> actions;  // one per module
};

/// How the target's modules are realized as matrix spaces, one entry per factor.
struct TargetModules {
  std::vector<ModuleDescriptor> modules;
  std::vector<ActionKind> actions;
};

TargetModules target_modules(const TargetSpec& s);
AdmissibilityReport admissible(const TargetSpec& s);
std::vector<TargetSpec> enumerate_admissible(const GroupDescriptor& g);

struct FactorStabilizer {
  ModuleDescriptor module;
  ActionKind action;
  /// GL stabilizer of X (LeftMult), of X (congruence) or of B X (similarity
  /// on form-twisted modules). The G-stabilizer is G intersected with it, up
  /// to inverse transpose in the form-twisted case.
  std::optional<BlockParabolic> parabolic;
  std::optional<ToeplitzBlockDescriptor> toeplitz;
  std::optional<ProductGroup> unitary_blocks;  // S(U_k1 x ... ) for su_n witnesses
  int dim_in_group = 0;
};

struct StabilizerForm {
  std::vector<FactorStabilizer> factors;
  int dim = 0;  // dim H = dim of the intersection in G
};

StabilizerForm stabilizer_form(const TargetSpec& s, const std::vector<Mat>& witnesses);

struct MinimalityReport {
  int module_dim = 0;
  int mp_dim = 0;
  int group_dim = 0;
  int stabilizer_dim = 0;    // dim H
  int candidates_checked = 0;
  bool advisory = false;     // below the lemma thresholds
  bool certified = false;
};

MinimalityReport minimality_certificate(const ManifoldDescriptor& m, std::uint64_t seed = 1);

}  // namespace manirep
