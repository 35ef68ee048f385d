#include "manirep/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "manirep/serialize.hpp"

namespace manirep {

std::string manifold_cli_name(int family_index) {
  const std::string camel = manifold_family_name(static_cast<ManifoldFamily>(family_index));
  std::string out;
  for (size_t i = 0; i < camel.size(); ++i) {
    const char ch = camel[i];
    if (i > 0 && std::isupper(static_cast<unsigned char>(ch)) &&
        std::islower(static_cast<unsigned char>(camel[i - 1])))
      out.push_back('-');
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  }
  return out;
}

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ManifoldFamily parse_manifold(const std::string& s) {
  for (int i = 0; i < kManifoldFamilyCount; ++i)
    if (s == manifold_cli_name(i) || s == manifold_family_name(static_cast<ManifoldFamily>(i)))
      return static_cast<ManifoldFamily>(i);
  throw UsageError("unknown manifold '" + s + "'");
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t pos = 0;
      out.push_back(std::stoi(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("expected a comma-separated integer list, got '" + s + "'");
    }
  }
  return out;
}

std::vector<double> parse_double_list(const std::string& s) {
  std::vector<double> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t pos = 0;
      out.push_back(std::stod(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("expected a comma-separated number list, got '" + s + "'");
    }
  }
  return out;
}

Field parse_field(const std::string& s) {
  if (s == "R" || s == "r") return Field::R;
  if (s == "C" || s == "c") return Field::C;
  throw UsageError("field must be R or C");
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorKind::InvalidDescriptor, std::string("malformed JSON in '") + path + "': " + e.what());
  }
}

struct Common {
  bool pretty = false;
  std::string out;
  std::string seed;
};

void add_common(CLI::App* sub, Common& c, bool seeded) {
  sub->add_flag("--pretty", c.pretty, "indent the JSON output");
  sub->add_option("--out", c.out, "write the JSON document to this file");
  if (seeded) sub->add_option("--seed", c.seed, "random seed (falls back to MANIREP_SEED)");
}

std::uint64_t resolve_seed(const Common& c) {
  std::string s = c.seed;
  if (s.empty()) {
    const char* env = std::getenv("MANIREP_SEED");
    if (env && *env) s = env;
  }
  if (s.empty()) return 1;
  try {
    size_t pos = 0;
    unsigned long long v = std::stoull(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError("seed must be a nonnegative integer, got '" + s + "'");
  }
}

struct ManifoldArgs {
  std::string name;
  int n = -1, k = -1, m = -1, p = -1, q = -1;
  std::string flag, spectrum;
};

void add_manifold_args(CLI::App* sub, ManifoldArgs& a, bool required) {
  auto* opt = sub->add_option("--manifold", a.name, "manifold family, e.g. gr-real");
  if (required) opt->required();
  sub->add_option("--n", a.n, "size");
  sub->add_option("--k", a.k, "subspace or frame size");
  sub->add_option("--m", a.m, "first signature index (gr-indefinite)");
  sub->add_option("--p", a.p, "p (gr-indefinite, ifl-odd)");
  sub->add_option("--q", a.q, "q (gr-indefinite)");
  sub->add_option("--flag", a.flag, "flag signature k1,...,km");
  sub->add_option("--spectrum", a.spectrum, "comma-separated spectrum");
}

ManifoldDescriptor build_manifold(const ManifoldArgs& a, ManifoldFamily f) {
  ManifoldDescriptor m = smallest_manifold(f);
  if (a.n >= 0) m.n = a.n;
  if (a.k >= 0) m.k = a.k;
  if (a.m >= 0) m.m = a.m;
  if (a.p >= 0) m.p = a.p;
  if (a.q >= 0) m.q = a.q;
  if (!a.flag.empty()) m.flag = parse_int_list(a.flag);
  m.spectrum = parse_double_list(a.spectrum);
  return m;
}

GroupDescriptor build_group(const std::string& fam, int n, const std::string& field, int p, int q) {
  const Family f = family_from_name(fam);
  GroupDescriptor g;
  g.family = f;
  g.field = field.empty() ? Field::C : parse_field(field);
  g.n = n;
  if (f == Family::SOpq) {
    if (p < 0 || q < 0) throw UsageError("SOpq needs --p and --q");
    g = GroupDescriptor::sopq(p, q);
  } else if (n < 1) {
    throw UsageError("--n is required");
  }
  if (f == Family::SU || f == Family::SpCompact || f == Family::U) g.field = Field::C;
  if (f == Family::SOpq) g.field = Field::R;
  validate(g);
  return g;
}

std::optional<Algebra> lemma_algebra(const GroupDescriptor& g, int& size) {
  switch (g.family) {
    case Family::SL:
    case Family::SU: size = g.n; return Algebra::SL;
    case Family::SO:
    case Family::SOpq: size = g.n; return Algebra::SO;
    case Family::Sp:
    case Family::SpCompact: size = g.n / 2; return Algebra::SP;
    default: return std::nullopt;
  }
}

bool same_group(const GroupDescriptor& a, const GroupDescriptor& b) {
  return a.family == b.family && a.n == b.n && a.field == b.field && a.signature == b.signature;
}

// Embedding rows acting through g, at the smallest extra parameters.
std::vector<ManifoldDescriptor> rows_for_group(const GroupDescriptor& g) {
  std::vector<ManifoldDescriptor> out;
  const int N = g.n;
  for (ManifoldFamily f : all_manifold_families()) {
    std::vector<ManifoldDescriptor> tries;
    for (int n : {N, N / 2, (N - 1) / 2}) {
      ManifoldDescriptor m = smallest_manifold(f);
      m.n = n;
      if (!m.flag.empty()) m.flag = {1};
      if (f == ManifoldFamily::IFlOdd) m.p = N - 2 * n;
      if (f == ManifoldFamily::GrIndefinite && g.signature) {
        m.m = g.signature->first;
        m.n = g.signature->second;
        m.p = m.m > 0 ? 1 : 0;
        m.q = m.m > 0 ? 0 : 1;
      }
      tries.push_back(m);
    }
    for (const auto& m : tries) {
      try {
        if (same_group(manifold_data(m).group, g)) {
          out.push_back(m);
          break;
        }
      } catch (const Error&) {
      }
    }
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"manirep: faithful matrix representations of homogeneous spaces"};
  app.require_subcommand(1, 1);
  Common common;

  std::string algebra, kappa, bound;
  int an = -1;
  auto* dims = app.add_subcommand("dims", "Weyl dimension of a highest weight");
  dims->add_option("--algebra", algebra, "SL, SO or SP")->required();
  dims->add_option("--n", an, "defining size (half size for SP)")->required();
  dims->add_option("--kappa", kappa, "comma-separated highest weight")->required();
  add_common(dims, common, false);

  auto* irreps = app.add_subcommand("irreps", "irreducible modules up to a dimension bound");
  irreps->add_option("--algebra", algebra, "SL, SO or SP")->required();
  irreps->add_option("--n", an, "defining size (half size for SP)")->required();
  irreps->add_option("--bound", bound, "dimension bound")->required();
  add_common(irreps, common, false);

  std::string gfam, gfield;
  int gn = -1, gp = -1, gq = -1;
  int mb = 0, mc = 0, md = 0, me = 0;
  bool enumerate = false;
  auto* classify = app.add_subcommand("classify", "admissibility of module multiplicities");
  classify->add_option("--group", gfam, "group family")->required();
  classify->add_option("--n", gn, "matrix size");
  classify->add_option("--field", gfield, "R or C");
  classify->add_option("--p", gp, "SOpq signature p");
  classify->add_option("--q", gq, "SOpq signature q");
  classify->add_option("--b", mb, "multiplicity b");
  classify->add_option("--c", mc, "multiplicity c");
  classify->add_option("--d", md, "multiplicity d");
  classify->add_option("--e", me, "multiplicity e");
  classify->add_flag("--enumerate", enumerate, "list every admissible target");
  add_common(classify, common, false);

  std::string action, matrix_file, sfield, mode = "exact";
  auto* stab = app.add_subcommand("stabilizer", "structured stabilizer of a matrix");
  stab->add_option("--action", action, "left-mult, congruence-skew, congruence-sym or similarity")->required();
  stab->add_option("--matrix", matrix_file, "matrix JSON file")->required();
  stab->add_option("--field", sfield, "R or C (default: from the matrix)");
  stab->add_option("--mode", mode, "exact or numeric (similarity)");
  add_common(stab, common, false);

  ManifoldArgs margs;
  std::string element_file;
  auto* emb = app.add_subcommand("embed", "embedded point of a manifold");
  add_manifold_args(emb, margs, true);
  emb->add_option("--element", element_file, "group element JSON file (default: base point)");
  add_common(emb, common, false);

  int trials = -1;
  auto* ver = app.add_subcommand("verify", "equivariance residuals");
  add_manifold_args(ver, margs, true);
  ver->add_option("--trials", trials, "number of random trials");
  add_common(ver, common, true);

  std::string ctype;
  auto* cart = app.add_subcommand("cartan", "compare a Cartan embedding with the minimal one");
  cart->add_option("--type", ctype, "AI, AII, AIII, BDI, DIII, CI or CII")->required();
  cart->add_option("--n", margs.n, "size (half size for AII, DIII, CI, CII)")->required();
  cart->add_option("--k", margs.k, "block size for AIII, BDI, CII");
  cart->add_option("--trials", trials, "number of random trials");
  add_common(cart, common, true);

  bool certify = false;
  auto* census = app.add_subcommand("census", "modules, targets and manifolds of a group");
  census->add_option("--group", gfam, "group family")->required();
  census->add_option("--n", gn, "matrix size");
  census->add_option("--field", gfield, "R or C");
  census->add_option("--p", gp, "SOpq signature p");
  census->add_option("--q", gq, "SOpq signature q");
  census->add_flag("--certify", certify, "run the minimality sweep for each row");
  add_common(census, common, true);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, eo;
    const int code = app.exit(e, o, eo);
    out << o.str();
    err << eo.str();
    return code == 0 ? 0 : 2;
  }

  json result;
  try {
    if (*dims) {
      HighestWeight w{algebra_from_name(algebra), an, parse_int_list(kappa)};
      result = to_json(w);
    } else if (*irreps) {
      BigInt b;
      try {
        b = BigInt(bound);
      } catch (const std::exception&) {
        throw UsageError("bound must be an integer");
      }
      const Algebra a = algebra_from_name(algebra);
      json list = json::array();
      for (const auto& wd : enumerate_irreps_below(a, an, b))
        list.push_back({{"kappa", wd.weight.kappa}, {"dim", to_decimal(wd.dim)}});
      result = {{"algebra", algebra_name(a)}, {"n", an}, {"bound", to_decimal(b)}, {"irreps", list}};
    } else if (*classify) {
      GroupDescriptor g = build_group(gfam, gn, gfield, gp, gq);
      if (enumerate) {
        json list = json::array();
        for (const auto& s : enumerate_admissible(g)) list.push_back(to_json(admissible(s), s));
        result = {{"group", to_json(g)}, {"admissible", list}};
      } else {
        TargetSpec s{g, mb, mc, md, me};
        result = to_json(admissible(s), s);
      }
    } else if (*stab) {
      Mat X = matrix_from_json(read_json_file(matrix_file));
      const Field f = sfield.empty() ? (is_real(X) ? Field::R : Field::C) : parse_field(sfield);
      if (action == "left-mult") {
        result = to_json(stabilizer_left_mult(X, f));
      } else if (action == "congruence-skew") {
        result = to_json(stabilizer_congruence_skew(X, f));
      } else if (action == "congruence-sym") {
        result = to_json(stabilizer_congruence_sym(X, f));
      } else if (action == "similarity") {
        SimilarityMode sm;
        if (mode == "exact")
          sm = SimilarityMode::ExactRational;
        else if (mode == "numeric")
          sm = SimilarityMode::Numeric;
        else
          throw UsageError("mode must be exact or numeric");
        result = to_json(stabilizer_similarity(X, sm, f));
      } else {
        throw UsageError("unknown action '" + action + "'");
      }
    } else if (*emb) {
      ManifoldDescriptor m = build_manifold(margs, parse_manifold(margs.name));
      if (element_file.empty()) {
        result = to_json(base_point(m));
      } else {
        result = to_json(embed(m, matrix_from_json(read_json_file(element_file))));
      }
    } else if (*ver) {
      const std::uint64_t seed = resolve_seed(common);
      const int t = trials < 0 ? 100 : trials;
      if (t < 1) throw UsageError("--trials must be positive");
      if (margs.name == "all") {
        json list = json::array();
        double worst = 0;
        for (ManifoldFamily f : all_manifold_families()) {
          ManifoldDescriptor m = smallest_manifold(f);
          const double r = check_equivariance(m, t, seed);
          worst = std::max(worst, r);
          list.push_back({{"manifold", to_json(m)}, {"residual", r}});
        }
        result = {{"residual", worst}, {"trials", t}, {"seed", seed}, {"families", list}};
      } else {
        ManifoldDescriptor m = build_manifold(margs, parse_manifold(margs.name));
        result = {{"manifold", to_json(m)}, {"residual", check_equivariance(m, t, seed)},
                  {"trials", t}, {"seed", seed}};
      }
    } else if (*cart) {
      const CartanType ty = cartan_type_from_name(ctype);
      const int t = trials < 0 ? 10 : trials;
      const int k = margs.k < 0 ? 1 : margs.k;
      result = to_json(cartan_compare(ty, margs.n, k, t, resolve_seed(common)), ty);
      result["n"] = margs.n;
      if (ty == CartanType::AIII || ty == CartanType::BDI || ty == CartanType::CII) result["k"] = k;
    } else if (*census) {
      GroupDescriptor g = build_group(gfam, gn, gfield, gp, gq);
      const std::uint64_t seed = resolve_seed(common);
      result["group"] = to_json(g);
      int size = 0;
      if (auto a = lemma_algebra(g, size)) {
        json ld = to_json(low_dim_classification(*a, size));
        ld["algebra"] = algebra_name(*a);
        ld["n"] = size;
        result["low_dim"] = ld;
      }
      json targets = json::array();
      for (const auto& s : enumerate_admissible(g)) targets.push_back(to_json(admissible(s), s));
      result["admissible"] = targets;
      json rows = json::array();
      for (const auto& m : rows_for_group(g)) {
        ManifoldData d = manifold_data(m);
        json r{{"manifold", to_json(m)},
               {"module", to_json(d.module)},
               {"module_dim", module_dim(d.module)},
               {"mp_dimension", mp_dimension(m)},
               {"tangent_dim", tangent_dim(m)},
               {"advisory", minimality_advisory(m)}};
        if (certify) {
          try {
            r["certificate"] = to_json(minimality_certificate(m, seed));
          } catch (const Error& e) {
            r["certificate"] = to_json(e);
          }
        }
        rows.push_back(r);
      }
      result["manifolds"] = rows;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    out << to_json(e).dump(common.pretty ? 2 : -1) << "\n";
    return 1;
  } catch (const std::exception& e) {
    out << json{{"error", "InternalError"}, {"message", e.what()}}.dump(common.pretty ? 2 : -1) << "\n";
    return 1;
  }

  const std::string text = result.dump(common.pretty ? 2 : -1) + "\n";
  if (!common.out.empty()) {
    std::ofstream f(common.out);
    if (!f) {
      err << "usage error: cannot write '" << common.out << "'\n";
      return 2;
    }
    f << text;
  } else {
    out << text;
  }
  return 0;
}

}  // namespace manirep
