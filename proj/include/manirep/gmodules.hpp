#pragma once

#include <optional>
#include <string>
#include <vector>

#include "manirep/groups.hpp"
#include "manirep/numkit.hpp"

namespace manirep {

enum class ModuleKind {
  RectNK,
  Alt2,
  Sym2,
  Sym2Traceless,
  SLnTraceless,
  SUAlgebra,
  UAlgebra,
  HermTraceless,
  Alt2Form,
  Sym2TracelessForm,
  SpAlgebra,          // compact sp_{2n} = Alt2(C^{2n}; J) cap u_{2n}
  SymTracelessCapSU,  // Sym2_0(C^{2n}; J) cap su_{2n}
};

enum class ActionKind { LeftMult, RightMultInv, Equivalence, Congruence, Similarity, CongruenceStar };

struct ModuleDescriptor {
  ModuleKind kind = ModuleKind::RectNK;
  int n = 0;  // ambient size
  Field field = Field::R;
  std::optional<Mat> form;
  std::optional<int> k;  // RectNK width

  static ModuleDescriptor rect(int n, int k, Field f) { return {ModuleKind::RectNK, n, f, {}, k}; }
  static ModuleDescriptor of(ModuleKind kind, int n, Field f) { return {kind, n, f, {}, {}}; }
  static ModuleDescriptor with_form(ModuleKind kind, const Mat& B, Field f) {
    return {kind, static_cast<int>(B.rows()), f, B, {}};
  }
};

std::string module_kind_name(ModuleKind k);
ModuleKind module_kind_from_name(const std::string& s);
std::string action_name(ActionKind a);
ActionKind action_from_name(const std::string& s);

/// Kinds whose elements are complex matrices forming a real subspace
/// (su, u, Hermitian, compact sp, ...); their dimension counts over R.
bool is_real_structure(ModuleKind k);
/// Whether the module is a real-linear (as opposed to complex-linear) space.
bool is_real_space(const ModuleDescriptor& m);

void validate(const ModuleDescriptor& m);
int module_rows(const ModuleDescriptor& m);
int module_cols(const ModuleDescriptor& m);

int module_dim(const ModuleDescriptor& m);
/// C(n, k): dimension of Alt^k(F^n). No other support for k >= 3.
long long alt_power_dim(int n, int k);

/// Spanning basis of the defining linear conditions (a basis over R for real spaces).
std::vector<Mat> module_basis(const ModuleDescriptor& m);

bool contains(const ModuleDescriptor& m, const Mat& X, const Tolerance& tol = {});
/// Frobenius-orthogonal projection onto the module.
Mat project(const ModuleDescriptor& m, const Mat& X);

/// The matrix-multiplication action. When a module is given the result is
/// checked against it (ModuleNotPreserved).
Mat act(const GroupDescriptor& g, ActionKind a, const Mat& A, const Mat& X,
        const std::optional<ModuleDescriptor>& m = std::nullopt, const Tolerance& tol = {});
/// (A1, A2, X) -> A1 X A2^{-1}; the single-group Equivalence above uses A1 = A2 = A.
Mat act_equivalence(const Mat& A1, const Mat& A2, const Mat& X);
/// Derivative at t = 0 of act(exp(tZ), X).
Mat linearized_action(ActionKind a, const Mat& Z, const Mat& X);
/// The action formula without membership checks.
Mat apply_action(ActionKind a, const Mat& A, const Mat& X);

}  // namespace manirep
