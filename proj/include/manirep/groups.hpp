#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "manirep/numkit.hpp"

namespace manirep {

// GL, U and O are auxiliary families used for stabilizer blocks and S(...)
// products. The last four are the omitted real forms; they exist only so
// callers can be told they are unsupported.
enum class Family { SL, SO, Sp, SU, SOpq, SpCompact, GL, U, O, SOStar, SUpq, Sppq, SUStar };

struct GroupDescriptor {
  Family family = Family::SL;
  int n = 0;  // matrix size; even for the Sp families
  Field field = Field::R;
  std::optional<std::pair<int, int>> signature;
  std::optional<Mat> form;

  static GroupDescriptor sl(int n, Field f) { return {Family::SL, n, f, {}, {}}; }
  static GroupDescriptor so(int n, Field f) { return {Family::SO, n, f, {}, {}}; }
  static GroupDescriptor sp(int n, Field f) { return {Family::Sp, n, f, {}, {}}; }
  static GroupDescriptor su(int n) { return {Family::SU, n, Field::C, {}, {}}; }
  static GroupDescriptor sopq(int p, int q) {
    return {Family::SOpq, p + q, Field::R, std::make_pair(p, q), {}};
  }
  static GroupDescriptor sp_compact(int n) { return {Family::SpCompact, n, Field::C, {}, {}}; }
  static GroupDescriptor gl(int n, Field f) { return {Family::GL, n, f, {}, {}}; }
  static GroupDescriptor u(int n) { return {Family::U, n, Field::C, {}, {}}; }
  static GroupDescriptor o(int n, Field f) { return {Family::O, n, f, {}, {}}; }
  static GroupDescriptor with_form(Family fam, const Mat& form, Field f);
};

struct LieAlgebraBasis {
  GroupDescriptor group;
  std::vector<Mat> basis;
};

/// A block-diagonal product of groups, used for S(G1 x ... x Gk).
struct ProductGroup {
  std::vector<GroupDescriptor> factors;
};

std::string family_name(Family f);
Family family_from_name(const std::string& s);

/// Throws InvalidDescriptor on malformed input, UnsupportedGroup for the
/// omitted real forms.
void validate(const GroupDescriptor& g);

/// True for descriptors whose dimension is counted over C.
bool is_complex_group(const GroupDescriptor& g);
/// Matrices of the group have complex entries.
bool has_complex_entries(const GroupDescriptor& g);

/// The defining form: B for SO/O/SOpq, Omega for Sp/SpCompact, identity otherwise.
Mat defining_form(const GroupDescriptor& g);

int group_dim(const GroupDescriptor& g);
bool contains(const GroupDescriptor& g, const Mat& A, const Tolerance& tol = {});
LieAlgebraBasis lie_algebra_basis(const GroupDescriptor& g);
/// Membership of Z in the Lie algebra.
bool algebra_contains(const GroupDescriptor& g, const Mat& Z, const Tolerance& tol = {});
Mat sample(const GroupDescriptor& g, std::uint64_t seed, double scale = 1.0);
/// Random element of the Lie algebra with unit-scale Gaussian coefficients.
Mat sample_algebra(const GroupDescriptor& g, std::uint64_t seed, double scale = 1.0);

int special_subgroup_dim(const GroupDescriptor& g);
int special_subgroup_dim(const ProductGroup& g);

}  // namespace manirep
