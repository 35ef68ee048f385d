#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "manirep/gmodules.hpp"
#include "manirep/groups.hpp"

namespace manirep {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Algebra { SL, SO, SP };

/// kappa has length rank(algebra, n): n-1 for SL, floor(n/2) for SO, n for SP.
/// For SP, n is half the matrix size.
struct HighestWeight {
  Algebra algebra = Algebra::SL;
  int n = 0;
  std::vector<int> kappa;

  bool operator==(const HighestWeight& o) const {
    return algebra == o.algebra && n == o.n && kappa == o.kappa;
  }
};

struct WeightDim {
  HighestWeight weight;
  BigInt dim;
};

/// Standard modules whose weights the catalog knows. For SP, Alt2 is the
/// adjoint Alt2(F^{2n}; Omega) and Sym2Traceless is Sym2_0(F^{2n}; Omega).
enum class Catalog { Trivial, Vector, Alt2, Sym2, Sym2Traceless, Adjoint };

struct LowDimResult {
  std::vector<ModuleDescriptor> modules;
  bool advisory = false;         // n below the lemma's range
  bool cross_validated = false;  // dims agree with enumerate_irreps_below
};

std::string algebra_name(Algebra a);
Algebra algebra_from_name(const std::string& s);
int weyl_rank(Algebra a, int n);
void validate(const HighestWeight& w);

BigInt weyl_dim(const HighestWeight& w);

std::vector<WeightDim> enumerate_irreps_below(Algebra a, int n, const BigInt& bound);

/// Highest weights of the irreducible summands of a catalog module.
std::vector<HighestWeight> catalog_weights(Algebra a, int n, Catalog c);
/// Highest weight from epsilon coordinates of the dominant weight.
HighestWeight weight_from_epsilon(Algebra a, int n, const std::vector<int>& eps);

int lemma_threshold(Algebra a);
LowDimResult low_dim_classification(Algebra a, int n);

/// Whether W_kappa is the complexification of a real module of g.
bool real_form_admissible(const GroupDescriptor& g, const HighestWeight& w);

}  // namespace manirep
