#include "gradings/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "gradings/error.hpp"
#include "gradings/json_io.hpp"

namespace gradings {

namespace {

struct Options {
  std::string what;
  std::string group;
  std::optional<std::size_t> n;
  std::string tuple;
  std::string cases;
  std::string marker;
  std::vector<std::string> inputs;
  std::string out;
  std::string kind;
  std::string flavor = "transpose";
  std::optional<std::size_t> pairs;
  std::string embedding;
  std::string subgroup;
  std::string phi;
};

class BadSpec : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<int> int_list(const std::string& text, const char* flag) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::replace(s.begin(), s.end(), ';', ' ');
  std::istringstream in(s);
  std::vector<int> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw BadSpec(std::string(flag) + ": \"" + tok + "\" is not an integer");
    out.push_back(v);
  }
  return out;
}

FinAbGroup group_of(const Options& o) {
  if (o.group.empty()) throw BadSpec("--group is required");
  return FinAbGroup(int_list(o.group, "--group"));
}

std::vector<GroupElem> elements_of(const FinAbGroup& g, const std::string& text, const char* flag) {
  const auto flat = int_list(text, flag);
  const std::size_t r = g.rank();
  if (r == 0) {
    if (!flat.empty()) throw BadSpec(std::string(flag) + ": the trivial group has no exponents");
    return {};
  }
  if (flat.size() % r != 0) {
    throw BadSpec(std::string(flag) + ": " + std::to_string(flat.size()) + " exponents do not split into elements of " +
                  g.to_string());
  }
  std::vector<GroupElem> out;
  for (std::size_t i = 0; i < flat.size(); i += r) out.emplace_back(g, std::vector<int>(flat.begin() + i, flat.begin() + i + r));
  return out;
}

GroupElem marker_of(const FinAbGroup& g, const Options& o) {
  if (o.marker.empty()) throw BadSpec("--marker is required");
  if (g.rank() == 0) return GroupElem::identity(g);
  const auto es = elements_of(g, o.marker, "--marker");
  if (es.size() != 1) throw BadSpec("--marker must be a single element");
  return es.front();
}

std::vector<int> cases_of(const Options& o) {
  if (o.cases.empty()) throw BadSpec("--case is required");
  return int_list(o.cases, "--case");
}

GroupHom embedding_of(const FinAbGroup& g, std::size_t k, const Options& o) {
  const FinAbGroup t = fine_support_group(std::vector<std::size_t>(k, 2));
  std::vector<GroupElem> images;
  if (o.embedding.empty()) {
    if (g.rank() < 2 * k) throw BadSpec("the group has fewer than " + std::to_string(2 * k) + " generators for T");
    for (std::size_t i = 0; i < 2 * k; ++i) images.push_back(GroupElem::generator(g, i));
  } else {
    images = elements_of(g, o.embedding, "--embedding");
    if (images.size() != 2 * k) throw BadSpec("--embedding needs " + std::to_string(2 * k) + " images");
  }
  for (const auto& x : images)
    if (elem_order(x) > 2) throw GradingError(ErrorCode::BadEmbedding, "image " + x.to_string() + " has order > 2");
  return GroupHom(t, g, images);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json input_json(const Options& o, std::size_t i = 0) {
  if (o.inputs.size() <= i) throw BadSpec("--in is required");
  return parse_json_text(read_file(o.inputs[i]));
}

bool is_involution_json(const Json& j) { return j.is_object() && j.contains("involution"); }

InvolutionFlavor flavor_of(const Options& o) {
  if (o.flavor != "transpose" && o.flavor != "symplectic") throw BadSpec("--flavor must be transpose or symplectic");
  return parse_flavor(o.flavor);
}

Json coarsen_json(const Options& o) {
  const Json j = input_json(o);
  const Grading g = grading_from_json(j);
  if (o.subgroup.empty()) throw BadSpec("--subgroup is required");
  const auto gens = elements_of(g.group(), o.subgroup, "--subgroup");
  const Grading c = coarsen(g, subgroup_generated(g.group(), gens));
  if (g.kind() == GradingKind::Involution && is_involution_json(j)) {
    return to_json(InvolutionGrading{c, involution_from_json(j.at("involution")), std::nullopt});
  }
  return to_json(c);
}

Json recover_json(const Options& o) {
  const Grading factor = grading_from_json(input_json(o));
  const FinAbGroup g = group_of(o);
  const GroupElem h = marker_of(g, o);
  if (o.phi.empty()) throw BadSpec("--phi is required");
  const Json pj = parse_json_text(read_file(o.phi));
  const Involution inv = involution_from_json(pj);
  std::optional<Character> chi;
  if (pj.contains("character")) {
    chi = character_from_json(g, pj.at("character"));
  } else {
    for (const auto& c : dual_group(g))
      if (char_order(c) <= 2 && char_eval(c, h) == CycNum(-1)) {
        chi = c;
        break;
      }
    if (!chi) throw GradingError(ErrorCode::BadMarker, "no character of order 2 takes the value -1 at the marker");
  }
  return to_json(recover_from_factor(factor, [&](const Mat& x) { return outer_action(inv, x); }, *chi, g, h));
}

Json build_json(const Options& o) {
  const std::string& w = o.what;
  if (w == "elementary") {
    const FinAbGroup g = group_of(o);
    const auto tuple = elements_of(g, o.tuple, "--tuple");
    if (o.n && *o.n != tuple.size()) throw BadSpec("--n does not match the tuple length");
    return to_json(elementary_grading(g, tuple.size(), tuple));
  }
  if (w == "epsilon") {
    if (!o.n) throw BadSpec("--n is required");
    return to_json(epsilon_grading(*o.n));
  }
  if (w == "tensor") {
    if (o.inputs.size() != 2) throw BadSpec("tensor needs exactly two --in files");
    return to_json(tensor_grading(grading_from_json(input_json(o, 0)), grading_from_json(input_json(o, 1))));
  }
  if (w == "involution-elementary") {
    const FinAbGroup g = group_of(o);
    return to_json(elementary_involution_grading(g, elements_of(g, o.tuple, "--tuple"), flavor_of(o), o.pairs).data);
  }
  if (w == "L6-case") {
    const auto c = cases_of(o);
    if (c.size() != 1) throw BadSpec("L6-case takes a single --case");
    return to_json(canonical_L6(c.front()));
  }
  if (w == "involution-tensor") {
    if (o.inputs.empty()) throw BadSpec("involution-tensor needs --in files");
    std::vector<InvolutionGrading> parts;
    for (std::size_t i = 0; i < o.inputs.size(); ++i) parts.push_back(involution_grading_from_json(input_json(o, i)));
    return to_json(involution_tensor(parts));
  }
  if (w == "type1") {
    const Grading g = grading_from_json(input_json(o));
    return to_json(type1(g.kind() == GradingKind::Involution ? g.with_kind(GradingKind::Associative) : g));
  }
  if (w == "type2") {
    const InvolutionGrading d = involution_grading_from_json(input_json(o));
    return to_json(type2(d, marker_of(d.grading.group(), o)));
  }
  if (w == "fine-outer") {
    const FinAbGroup g = group_of(o);
    const auto c = cases_of(o);
    return to_json(fine_outer(c, g, marker_of(g, o), embedding_of(g, c.size(), o)));
  }
  if (w == "mixed-type2") {
    const FinAbGroup g = group_of(o);
    const auto c = o.cases.empty() ? std::vector<int>{} : cases_of(o);
    return to_json(mixed_type2(g, elements_of(g, o.tuple, "--tuple"), flavor_of(o), c,
                               embedding_of(g, c.size(), o), marker_of(g, o), o.pairs));
  }
  if (w == "coarsen") return coarsen_json(o);
  if (w == "recover") return recover_json(o);
  throw BadSpec("unknown build target \"" + w + "\"");
}

int verify_cmd(const Options& o, std::ostream& out) {
  const Json j = input_json(o);
  const Grading g = grading_from_json(j);
  if (!o.kind.empty()) {
    if (o.kind != "associative" && o.kind != "lie" && o.kind != "involution") {
      throw BadSpec("--kind must be associative, lie or involution");
    }
    if (parse_kind(o.kind) != g.kind()) {
      throw GradingError(ErrorCode::KindMismatch, "file has kind " + std::string(kind_name(g.kind())) +
                                                      ", --kind says " + o.kind);
    }
  }
  VerificationReport r;
  switch (g.kind()) {
    case GradingKind::Associative: r = verify_assoc(g); break;
    case GradingKind::Lie: r = verify_lie(g); break;
    case GradingKind::Involution: {
      if (!is_involution_json(j)) throw ParseError("involution grading without an \"involution\" key");
      r = verify_involution_grading(g, involution_from_json(j.at("involution")));
      break;
    }
  }
  out << dump_canonical(to_json(r));
  return r.passed() ? kExitPass : kExitVerifyFail;
}

std::string elem_label(const GroupElem& g) {
  std::string s = "(";
  for (std::size_t i = 0; i < g.exponents().size(); ++i) s += (i ? "," : "") + std::to_string(g.exponents()[i]);
  return s + ")";
}

int dims_cmd(const Options& o, std::ostream& out) {
  const Grading g = grading_from_json(input_json(o));
  std::size_t total = 0;
  for (const auto& [x, s] : g.components()) {
    out << elem_label(x) << '\t' << s.dim() << '\n';
    total += s.dim();
  }
  out << "total\t" << total << "\texpected\t" << g.expected_total_dim() << '\n';
  return kExitPass;
}

int support_cmd(const Options& o, std::ostream& out) {
  const Grading g = grading_from_json(input_json(o));
  for (const auto& x : support(g)) out << elem_label(x) << '\n';
  return kExitPass;
}

void emit(const Json& j, const Options& o, std::ostream& out) {
  const std::string text = dump_canonical(j);
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw BadSpec("cannot write " + o.out);
  f << text;
}

void error_object(std::ostream& err, const std::string& code, const std::string& message) {
  err << Json{{"error", code}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Group gradings of M_n and sl(n) over exact cyclotomic fields"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--group", o.group, "cyclic factor orders, e.g. 2,2");
    c->add_option("--n", o.n, "matrix order");
    c->add_option("--tuple", o.tuple, "element tuple as a flat exponent list");
    c->add_option("--case", o.cases, "L6 case number(s) 1..4");
    c->add_option("--marker", o.marker, "order-2 marker element h");
    c->add_option("--in", o.inputs, "input JSON file(s)");
    c->add_option("--out", o.out, "output file (default stdout)");
    c->add_option("--kind", o.kind, "associative | lie | involution");
    c->add_option("--flavor", o.flavor, "transpose | symplectic");
    c->add_option("--pairs", o.pairs, "number of antidiagonal pairs (transpose flavor)");
    c->add_option("--embedding", o.embedding, "images of the generators of T as a flat exponent list");
    c->add_option("--subgroup", o.subgroup, "generators of H as a flat exponent list");
    c->add_option("--phi", o.phi, "JSON file {\"phi\": Mat, \"character\": {...}}");
  };

  auto* build = app.add_subcommand("build", "build a grading and print it as JSON");
  build->add_option("what", o.what, "elementary | epsilon | tensor | involution-elementary | L6-case | "
                                    "involution-tensor | type1 | type2 | fine-outer | mixed-type2 | coarsen | recover")
      ->required();
  add_common(build);
  auto* verify = app.add_subcommand("verify", "verify a grading file");
  add_common(verify);
  auto* dims = app.add_subcommand("dims", "component dimensions");
  add_common(dims);
  auto* supp = app.add_subcommand("support", "support elements");
  add_common(supp);
  auto* coars = app.add_subcommand("coarsen", "factor grading by a subgroup");
  add_common(coars);
  auto* recov = app.add_subcommand("recover", "recover a grading from its factor by <h>");
  add_common(recov);
  auto* obst = app.add_subcommand("obstruction", "Z_2 Type I dimension obstruction");
  add_common(obst);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    error_object(err, "BadSpec", e.what());
    return kExitBadSpec;
  }

  try {
    if (build->parsed()) {
      emit(build_json(o), o, out);
      return kExitPass;
    }
    if (verify->parsed()) return verify_cmd(o, out);
    if (dims->parsed()) return dims_cmd(o, out);
    if (supp->parsed()) return support_cmd(o, out);
    if (coars->parsed()) {
      emit(coarsen_json(o), o, out);
      return kExitPass;
    }
    if (recov->parsed()) {
      emit(recover_json(o), o, out);
      return kExitPass;
    }
    if (obst->parsed()) {
      if (!o.n) throw BadSpec("--n is required");
      out << dump_canonical(to_json(type1_obstruction(*o.n)));
      return kExitPass;
    }
  } catch (const ParseError& e) {
    error_object(err, "ParseError", e.what());
    return kExitParseError;
  } catch (const GradingError& e) {
    error_object(err, std::string(error_code_name(e.code())), e.what());
    return kExitBadSpec;
  } catch (const BadSpec& e) {
    error_object(err, "BadSpec", e.what());
    return kExitBadSpec;
  }
  return kExitBadSpec;
}

}  // namespace gradings
