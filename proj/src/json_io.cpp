#include "gradings/json_io.hpp"

#include <algorithm>

#include "gradings/error.hpp"

namespace gradings {

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) fail(std::string("expected an object with key \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing key \"") + key + "\"");
  return *it;
}

long as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<long>();
}

std::size_t as_size(const Json& j, const char* what) {
  const long v = as_int(j, what);
  if (v < 0) fail(std::string(what) + " must be nonnegative");
  return static_cast<std::size_t>(v);
}

const Json& as_array(const Json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array");
  return j;
}

std::vector<int> int_list(const Json& j, const char* what) {
  std::vector<int> out;
  for (const auto& v : as_array(j, what)) out.push_back(static_cast<int>(as_int(v, what)));
  return out;
}

std::string rational_string(const Rational& q) { return q.get_str(); }

Rational rational_from(const Json& j) {
  if (!j.is_string()) fail("rational coefficients must be strings \"p/q\"");
  const std::string s = j.get<std::string>();
  if (s.empty() || s.find_first_not_of("-0123456789/") != std::string::npos) fail("bad rational \"" + s + "\"");
  Rational q;
  try {
    q = Rational(s);
  } catch (const std::invalid_argument&) {
    fail("bad rational \"" + s + "\"");
  }
  if (q.get_den() == 0) fail("zero denominator in \"" + s + "\"");
  q.canonicalize();
  return q;
}

Json coeff_list(const CycNum& x, int conductor) {
  const CycNum lifted = x.lift(conductor);
  Json out = Json::array();
  for (const auto& c : lifted.coeffs()) out.push_back(rational_string(c));
  return out;
}

CycNum coeffs_from(const Json& j, int conductor) {
  std::vector<Rational> coeffs;
  for (const auto& c : as_array(j, "coeffs")) coeffs.push_back(rational_from(c));
  if (coeffs.size() != static_cast<std::size_t>(euler_phi(conductor))) {
    fail("expected " + std::to_string(euler_phi(conductor)) + " coefficients for conductor " +
         std::to_string(conductor));
  }
  return CycNum::from_coeffs(conductor, std::move(coeffs));
}

int conductor_from(const Json& j) {
  const long n = as_int(field(j, "conductor"), "conductor");
  if (n < 1 || n > 100000) fail("conductor out of range");
  return static_cast<int>(n);
}

}  // namespace

Json to_json(const FinAbGroup& g) { return Json{{"factors", g.factors()}}; }

Json to_json(const GroupElem& g) { return Json{{"exponents", g.exponents()}}; }

Json to_json(const Character& c) { return Json{{"exponents", c.exponents()}}; }

Json to_json(const CycNum& x) {
  const CycNum y = descend(x);
  return Json{{"conductor", y.conductor()}, {"coeffs", coeff_list(y, y.conductor())}};
}

Json to_json(const Mat& m) {
  std::vector<CycNum> xs;
  int conductor = 1;
  for (const auto& x : m.entries()) {
    xs.push_back(descend(x));
    conductor = lcm_conductor(conductor, xs.back().conductor());
  }
  Json entries = Json::array();
  for (const auto& x : xs) entries.push_back(coeff_list(x, conductor));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"conductor", conductor}, {"entries", entries}};
}

Json to_json(const Involution& inv) {
  return Json{{"phi", to_json(inv.phi)}, {"symkind", std::string(symkind_name(inv.symkind))}};
}

Json to_json(const SignFunction& s) {
  Json out = Json::array();
  for (const auto& [t, v] : s.values) out.push_back(Json{{"element", to_json(t)}, {"sign", v}});
  return out;
}

Json to_json(const Grading& g) {
  Json comps = Json::array();
  for (const auto& [x, s] : g.components()) {
    Json basis = Json::array();
    for (const auto& m : g.basis_matrices(x)) basis.push_back(to_json(m));
    comps.push_back(Json{{"element", to_json(x)}, {"basis", basis}});
  }
  return Json{{"group", to_json(g.group())},
              {"n", g.n()},
              {"kind", std::string(kind_name(g.kind()))},
              {"components", comps}};
}

Json to_json(const InvolutionGrading& d) {
  Json out = to_json(d.grading.with_kind(GradingKind::Involution));
  out["involution"] = to_json(d.involution);
  if (d.signs) out["signs"] = to_json(*d.signs);
  return out;
}

Json to_json(const VerificationReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    Json w{{"kind", v.kind}, {"i", v.i}, {"j", v.j}, {"detail", v.detail}};
    if (v.g) w["g"] = to_json(*v.g);
    if (v.h) w["h"] = to_json(*v.h);
    violations.push_back(w);
  }
  return Json{{"passed", r.passed()},
              {"pairs_checked", r.pairs_checked},
              {"products_checked", r.products_checked},
              {"violations", violations}};
}

Json to_json(const ObstructionReport& r) {
  Json sols = Json::array();
  for (const auto& [k, l] : r.solutions) sols.push_back(Json::array({k, l}));
  return Json{{"n", r.n}, {"pairs_checked", r.pairs_checked}, {"solvable", r.solvable()}, {"solutions", sols}};
}

FinAbGroup group_from_json(const Json& j) {
  const auto factors = int_list(field(j, "factors"), "factors");
  for (int n : factors)
    if (n < 1) fail("group factors must be >= 1");
  return FinAbGroup(factors);
}

GroupElem elem_from_json(const FinAbGroup& g, const Json& j) {
  const auto e = int_list(field(j, "exponents"), "exponents");
  if (e.size() != g.rank()) fail("element " + j.dump() + " does not fit group " + g.to_string());
  return GroupElem(g, e);
}

Character character_from_json(const FinAbGroup& g, const Json& j) {
  const auto e = int_list(field(j, "exponents"), "exponents");
  if (e.size() != g.rank()) fail("character " + j.dump() + " does not fit group " + g.to_string());
  return Character(g, e);
}

CycNum cycnum_from_json(const Json& j) { return coeffs_from(field(j, "coeffs"), conductor_from(j)); }

Mat mat_from_json(const Json& j) {
  const std::size_t rows = as_size(field(j, "rows"), "rows");
  const std::size_t cols = as_size(field(j, "cols"), "cols");
  const int conductor = conductor_from(j);
  const Json& entries = as_array(field(j, "entries"), "entries");
  if (entries.size() != rows * cols) fail("matrix entry count does not match rows * cols");
  std::vector<CycNum> xs;
  xs.reserve(entries.size());
  for (const auto& e : entries) xs.push_back(coeffs_from(e, conductor));
  return Mat(rows, cols, std::move(xs));
}

Involution involution_from_json(const Json& j) {
  const Involution inv = make_involution(mat_from_json(field(j, "phi")));
  if (j.contains("symkind")) {
    const Json& s = j.at("symkind");
    if (!s.is_string()) fail("symkind must be a string");
    const std::string name = s.get<std::string>();
    if (name != "symmetric" && name != "skew") fail("unknown symkind \"" + name + "\"");
    if (parse_symkind(name) != inv.symkind) {
      throw GradingError(ErrorCode::MixedSymmetry, "symkind does not match the form");
    }
  }
  return inv;
}

Grading grading_from_json(const Json& j) {
  const FinAbGroup group = group_from_json(field(j, "group"));
  const std::size_t n = as_size(field(j, "n"), "n");
  const Json& kind_json = field(j, "kind");
  if (!kind_json.is_string()) fail("kind must be a string");
  const std::string kind = kind_json.get<std::string>();
  if (kind != "associative" && kind != "lie" && kind != "involution") fail("unknown kind \"" + kind + "\"");
  std::map<GroupElem, Subspace> comps;
  for (const auto& c : as_array(field(j, "components"), "components")) {
    const GroupElem g = elem_from_json(group, field(c, "element"));
    if (comps.count(g)) fail("duplicate component " + g.to_string());
    std::vector<Mat> basis;
    for (const auto& m : as_array(field(c, "basis"), "basis")) {
      Mat x = mat_from_json(m);
      if (x.rows() != n || x.cols() != n) fail("basis matrix of component " + g.to_string() + " is not n x n");
      basis.push_back(std::move(x));
    }
    const Subspace s = span_matrices(n, basis);
    if (s.dim() != basis.size()) fail("basis of component " + g.to_string() + " is linearly dependent");
    if (!s.is_zero()) comps.emplace(g, s);
  }
  return Grading(group, n, parse_kind(kind), std::move(comps));
}

InvolutionGrading involution_grading_from_json(const Json& j) {
  Grading g = grading_from_json(j);
  if (g.kind() != GradingKind::Involution) {
    throw GradingError(ErrorCode::KindMismatch, "expected an involution grading, got kind " +
                                                    std::string(kind_name(g.kind())));
  }
  if (!j.contains("involution")) fail("involution grading without an \"involution\" key");
  Involution inv = involution_from_json(j.at("involution"));
  if (inv.n != g.n()) throw GradingError(ErrorCode::DimensionMismatch, "involution order does not match n");
  std::optional<SignFunction> signs;
  if (j.contains("signs")) {
    SignFunction s{g.group(), {}, {}};
    for (const auto& e : as_array(j.at("signs"), "signs")) {
      const GroupElem t = elem_from_json(g.group(), field(e, "element"));
      const long v = as_int(field(e, "sign"), "sign");
      if (v != 1 && v != -1) fail("signs must be +1 or -1");
      const auto basis = g.basis_matrices(t);
      if (basis.size() != 1) fail("sign given for a component of dimension != 1");
      s.values[t] = static_cast<int>(v);
      s.basis.emplace(t, basis.front());
    }
    signs = std::move(s);
  }
  return InvolutionGrading{std::move(g), std::move(inv), std::move(signs)};
}

namespace {

bool is_leaf_array(const Json& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
}

void write_pretty(const Json& j, std::string& out, std::size_t indent) {
  const std::string pad(indent + 2, ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t k = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++k) {
      out += pad + Json(it.key()).dump() + ": ";
      write_pretty(it.value(), out, indent + 2);
      out += k + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "}";
  } else if (j.is_array() && !j.empty() && !is_leaf_array(j)) {
    out += "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      out += pad;
      write_pretty(j[k], out, indent + 2);
      out += k + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "]";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string dump_canonical(const Json& j) {
  std::string out;
  write_pretty(j, out, 0);
  return out + "\n";
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace gradings
