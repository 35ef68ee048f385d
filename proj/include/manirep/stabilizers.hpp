#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "manirep/gmodules.hpp"
#include "manirep/groups.hpp"

namespace manirep {

/// Q P(G1, G2) Q^{-1}: block upper triangular matrices [[A1, C], [0, A2]]
/// with A1 in the top group (or the identity), A2 in the bottom group and C free.
struct BlockParabolic {
  Mat conjugator;
  Field field = Field::R;
  int n = 0;
  int top_size = 0;
  std::optional<GroupDescriptor> top;     // empty means Identity(top_size)
  std::optional<GroupDescriptor> bottom;  // GL_{n - top_size}(F); empty when that size is 0
  int off_rows = 0, off_cols = 0;

  int dim() const;
};

/// A random element of the described subgroup.
Mat sample(const BlockParabolic& P, std::uint64_t seed, double scale = 0.5);

struct EigenClass {
  cplx eig;             // representative; Im > 0 for a conjugate pair
  bool pair = false;    // complex-conjugate pair over R
  std::vector<int> blocks;  // Jordan sizes, descending
};

struct ToeplitzBlockDescriptor {
  Field field = Field::C;
  int n = 0;
  std::vector<EigenClass> classes;
  int commutant_dim = 0;
};

enum class SimilarityMode { ExactRational, Numeric };

BlockParabolic stabilizer_left_mult(const Mat& X, Field f, const Tolerance& tol = {});
BlockParabolic stabilizer_congruence_skew(const Mat& X, Field f, const Tolerance& tol = {});
BlockParabolic stabilizer_congruence_sym(const Mat& X, Field f, const Tolerance& tol = {});
ToeplitzBlockDescriptor stabilizer_similarity(const Mat& X, SimilarityMode mode, Field f,
                                              const Tolerance& tol = {});
/// Field defaults to R for real X.
ToeplitzBlockDescriptor stabilizer_similarity(const Mat& X,
                                              SimilarityMode mode = SimilarityMode::ExactRational,
                                              const Tolerance& tol = {});

/// dim sum_{same class} min(a, b), weighted by the number of roots per class.
int commutant_dim(const std::vector<EigenClass>& classes);

/// Kernel dimension of Z -> d/dt act(exp(tZ), X) on Lie(g).
int stabilizer_dim_in_group(const GroupDescriptor& g, const ModuleDescriptor& m, ActionKind a,
                            const Mat& X);

struct ModulePoint {
  ModuleDescriptor module;
  ActionKind action;
  Mat X;
};

/// Dimension of the joint stabilizer of several points.
int intersect_stabilizer_dim(const GroupDescriptor& g, const std::vector<ModulePoint>& points);

/// The stacked linearized map on Lie(g), realified when g is real.
RMat linearized_map_real(const GroupDescriptor& g, const std::vector<ModulePoint>& points);

}  // namespace manirep
