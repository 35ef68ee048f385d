#pragma once

#include "json.hpp"

#include "manirep/classify.hpp"
#include "manirep/embeddings.hpp"
#include "manirep/stabilizers.hpp"
#include "manirep/weyl.hpp"

namespace manirep {

using json = nlohmann::json;

std::string to_decimal(const BigInt& x);
std::string to_decimal(const Rational& x);

/// {"rows":n,"cols":k,"field":"R"|"C","data":[[re,im],...]} row-major.
json to_json(const Mat& A, Field f);
json to_json(const Mat& A);  // field R when every entry is real
Mat matrix_from_json(const json& j);

json to_json(const GroupDescriptor& g);
GroupDescriptor group_from_json(const json& j);
json to_json(const ModuleDescriptor& m);
json to_json(const HighestWeight& w);
json to_json(const BlockParabolic& P);
json to_json(const ToeplitzBlockDescriptor& T);
json to_json(const ManifoldDescriptor& m);
json to_json(const EmbeddedPoint& p);
json to_json(const AdmissibilityReport& r, const TargetSpec& s);
json to_json(const CartanResult& r, CartanType t);
json to_json(const MinimalityReport& r);
json to_json(const LowDimResult& r);
json to_json(const Error& e);

}  // namespace manirep
