#include "manirep/serialize.hpp"

#include <sstream>

namespace manirep {

std::string to_decimal(const BigInt& x) { return x.str(); }

std::string to_decimal(const Rational& x) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(x);
  if (boost::multiprecision::denominator(x) != 1) os << "/" << boost::multiprecision::denominator(x);
  return os.str();
}

static const char* field_name(Field f) { return f == Field::R ? "R" : "C"; }

static Field field_from(const json& j) {
  const std::string s = j.get<std::string>();
  if (s == "R") return Field::R;
  if (s == "C") return Field::C;
  fail(ErrorKind::InvalidDescriptor, "field must be R or C");
}

json to_json(const Mat& A, Field f) {
  json data = json::array();
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j) data.push_back({A(i, j).real(), A(i, j).imag()});
  return {{"rows", A.rows()}, {"cols", A.cols()}, {"field", field_name(f)}, {"data", data}};
}

json to_json(const Mat& A) { return to_json(A, is_real(A) ? Field::R : Field::C); }

Mat matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
    fail(ErrorKind::InvalidDescriptor, "matrix JSON needs rows, cols and data");
  const int r = j.at("rows").get<int>(), c = j.at("cols").get<int>();
  const auto& d = j.at("data");
  if (r < 0 || c < 0 || !d.is_array() || static_cast<int>(d.size()) != r * c)
    fail(ErrorKind::SizeMismatch, "matrix data length does not match rows * cols");
  Mat A(r, c);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < c; ++k) {
      const auto& e = d[static_cast<size_t>(i * c + k)];
      if (e.is_number()) {
        A(i, k) = e.get<double>();
      } else if (e.is_array() && e.size() == 2) {
        A(i, k) = cplx(e[0].get<double>(), e[1].get<double>());
      } else {
        fail(ErrorKind::InvalidDescriptor, "matrix entries are numbers or [re, im] pairs");
      }
    }
  if (j.contains("field") && field_from(j.at("field")) == Field::R && !is_real(A))
    fail(ErrorKind::InvalidDescriptor, "real matrix with complex entries");
  return A;
}

json to_json(const GroupDescriptor& g) {
  json j{{"family", family_name(g.family)}, {"n", g.n}, {"field", field_name(g.field)}};
  j["signature"] = g.signature ? json::array({g.signature->first, g.signature->second}) : json(nullptr);
  j["form"] = g.form ? to_json(*g.form) : json(nullptr);
  return j;
}

GroupDescriptor group_from_json(const json& j) {
  GroupDescriptor g;
  g.family = family_from_name(j.at("family").get<std::string>());
  g.n = j.at("n").get<int>();
  g.field = j.contains("field") ? field_from(j.at("field")) : Field::R;
  if (j.contains("signature") && !j.at("signature").is_null())
    g.signature = std::make_pair(j.at("signature")[0].get<int>(), j.at("signature")[1].get<int>());
  if (j.contains("form") && !j.at("form").is_null()) g.form = matrix_from_json(j.at("form"));
  validate(g);
  return g;
}

json to_json(const ModuleDescriptor& m) {
  json j{{"kind", module_kind_name(m.kind)}, {"n", m.n}, {"field", field_name(m.field)}};
  j["form"] = m.form ? to_json(*m.form) : json(nullptr);
  j["k"] = m.k ? json(*m.k) : json(nullptr);
  return j;
}

json to_json(const HighestWeight& w) {
  return {{"algebra", algebra_name(w.algebra)}, {"n", w.n}, {"kappa", w.kappa}, {"dim", to_decimal(weyl_dim(w))}};
}

json to_json(const BlockParabolic& P) {
  json j;
  j["conjugator"] = to_json(P.conjugator, P.field);
  j["top"] = P.top ? to_json(*P.top) : json{{"identity", P.top_size}};
  j["bottom"] = P.bottom ? to_json(*P.bottom) : json(nullptr);
  j["off_block"] = {P.off_rows, P.off_cols};
  j["dim"] = P.dim();
  return j;
}

json to_json(const ToeplitzBlockDescriptor& T) {
  json cls = json::array();
  for (const auto& c : T.classes) {
    json e{{"eig", {c.eig.real(), c.eig.imag()}}, {"blocks", c.blocks}};
    if (c.pair) e["conjugate_pair"] = true;
    cls.push_back(e);
  }
  return {{"field", field_name(T.field)}, {"classes", cls}, {"commutant_dim", T.commutant_dim}};
}

json to_json(const ManifoldDescriptor& m) {
  json j{{"family", manifold_family_name(m.family)}, {"n", m.n}};
  if (m.k) j["k"] = m.k;
  if (!m.flag.empty()) j["flag"] = m.flag;
  if (m.family == ManifoldFamily::GrIndefinite) {
    j["m"] = m.m;
    j["p"] = m.p;
    j["q"] = m.q;
  } else if (m.family == ManifoldFamily::IFlOdd) {
    j["p"] = m.p;
  }
  j["spectrum"] = resolved_spectrum(m);
  return j;
}

json to_json(const EmbeddedPoint& p) {
  json j{{"manifold", to_json(p.manifold)}, {"value", to_json(p.value)}, {"module", to_json(p.module)}};
  if (p.minimality_advisory) j["advisory"] = "embedding valid, minimality advisory";
  return j;
}

json to_json(const AdmissibilityReport& r, const TargetSpec& s) {
  json mult{{"b", s.b}, {"c", s.c}, {"d", s.d}};
  if (s.group.family == Family::SL || s.group.family == Family::SU) mult["e"] = s.e;
  if (s.group.family == Family::SpCompact) mult = {{"c", s.c}, {"d", s.d}};
  json mods = json::array();
  for (const auto& m : r.modules) mods.push_back(to_json(m));
  return {{"group", to_json(s.group)},
          {"multiplicities", mult},
          {"admissible", r.admissible},
          {"inequality_value", to_decimal(r.inequality_value)},
          {"dim_total", to_decimal(r.module_dim_total)},
          {"modules", mods}};
}

json to_json(const CartanResult& r, CartanType t) {
  json j{{"type", cartan_type_name(t)}, {"identical", r.identical}, {"residual", r.residual}, {"trials", r.trials}};
  if (!r.identical) j["right_factor"] = to_json(r.right_factor);
  return j;
}

json to_json(const MinimalityReport& r) {
  return {{"module_dim", r.module_dim},         {"mp_dim", r.mp_dim},
          {"group_dim", r.group_dim},           {"stabilizer_dim", r.stabilizer_dim},
          {"candidates_checked", r.candidates_checked}, {"advisory", r.advisory},
          {"certified", r.certified}};
}

json to_json(const LowDimResult& r) {
  json mods = json::array();
  for (const auto& m : r.modules) {
    json e = to_json(m);
    e["dim"] = module_dim(m);
    mods.push_back(e);
  }
  json j{{"modules", mods}, {"cross_validated", r.cross_validated}};
  if (r.advisory) j["advisory"] = to_string(ErrorKind::OutOfLemmaRange);
  return j;
}

json to_json(const Error& e) { return {{"error", to_string(e.kind())}, {"message", e.what()}}; }

}  // namespace manirep
