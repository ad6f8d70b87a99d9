// rectrep: command-line front end for the rectrep library.
//
// Exit codes: 0 success, 1 verification failure or internal error,
// 2 usage error or malformed JSON, 3 semantically invalid input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rectrep/error.hpp"
#include "rectrep/evaluate.hpp"
#include "rectrep/forcing.hpp"
#include "rectrep/io.hpp"
#include "rectrep/permutation.hpp"
#include "rectrep/rational.hpp"
#include "rectrep/sequence_pair.hpp"
#include "rectrep/suites.hpp"
#include "rectrep/svg.hpp"

namespace {

using namespace rectrep;
using Json = nlohmann::ordered_json;

constexpr int kExitFailure = 1;
constexpr int kExitMalformed = 2;
constexpr int kExitInvalid = 3;

// "-" reads stdin, an existing path reads the file, and anything starting
// with '[' or '{' is taken as inline JSON.
std::string read_input(const std::string& source) {
  if (source == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream file(source, std::ios::binary);
  if (file) {
    return std::string(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (source[first] == '[' || source[first] == '{')) return source;
  throw ParseError("cannot read input \"" + source + "\"");
}

void write_output(const std::string& target, const std::string& text) {
  if (target == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(target, std::ios::binary);
  if (!file || !(file << text)) throw std::runtime_error("cannot write \"" + target + "\"");
}

struct CheckPermArgs {
  std::string input;
  bool biplane = false;
};

int run_check_perm(const CheckPermArgs& args) {
  const Permutation perm = io::parse_permutation(read_input(args.input));
  if (args.biplane) {
    std::cout << (is_biplane(perm) ? "biplane" : "not-biplane") << "\n";
  } else {
    std::cout << (is_plane(perm) ? "plane" : "not-plane") << "\n";
  }
  return 0;
}

struct EnumArgs {
  std::string cls;
  int n = 0;
  bool count_only = false;
  bool pruned = false;
};

int run_enum(const EnumArgs& args) {
  const PermutationClass cls = args.cls == "plane" ? PermutationClass::kPlane : PermutationClass::kBiplane;
  if (args.count_only) {
    const std::uint64_t count = args.pruned ? count_class_pruned(args.n, cls) : count_class(args.n, cls);
    std::cout << args.n << "\t" << count << "\n";
    return 0;
  }
  const std::vector<Permutation> perms =
      args.pruned ? enumerate_pruned(args.n, cls)
                  : (cls == PermutationClass::kPlane ? enumerate_plane(args.n) : enumerate_biplane(args.n));
  std::string out;
  for (const Permutation& p : perms) out += io::to_json(p);
  std::cout << out;
  return 0;
}

struct ExtractArgs {
  std::string input;
  bool classic = false;
  bool dump_graphs = false;
};

int run_extract(const ExtractArgs& args) {
  const Placement placement = io::parse_placement(read_input(args.input));
  const bool restricted = !args.classic;
  if (args.dump_graphs) {
    const auto [g1, g2] = build_constraint_graphs(placement, restricted);
    for (const ConstraintGraph* g : {&g1, &g2}) {
      std::cerr << "# " << to_string(g->label) << "\n" << io::arc_list(g->arcs);
    }
  }
  std::cout << io::to_json(extract_sequence_pair(placement, restricted));
  return 0;
}

struct BadQuartetArgs {
  std::string input;
  bool extreme = false;
};

int run_badquartet(const BadQuartetArgs& args) {
  const SequencePair sp = io::parse_sequence_pair(read_input(args.input));
  const auto quartet = args.extreme ? find_extreme_bad_quartet(sp) : find_bad_quartet(sp);
  std::cout << (quartet ? io::to_json(*quartet) : "none\n");
  return 0;
}

struct ConstructArgs {
  std::string input;
  std::string cert;
};

int run_construct(const ConstructArgs& args) {
  const Permutation pi = io::parse_permutation(read_input(args.input));
  const ForcingCertificate certificate = construct_forcing_placement(pi);
  const std::string cert_json = io::certificate_json(certificate);
  if (args.cert.empty()) {
    std::cerr << cert_json;
  } else {
    write_output(args.cert, cert_json);
  }
  std::cout << io::to_json(certificate.placement);
  return 0;
}

struct VerifyArgs {
  std::string suite = "all";
  suites::Options options;
};

int run_verify(const VerifyArgs& args) {
  bool passed = true;
  if (args.suite == "upper" || args.suite == "all") {
    std::cout << "== upper-bound suite\n";
    const suites::Report report = suites::run_upper(args.options);
    report.print(std::cout);
    passed = passed && report.passed();
  }
  if (args.suite == "lower" || args.suite == "all") {
    std::cout << "== lower-bound suite\n";
    const suites::Report report = suites::run_lower(args.options);
    report.print(std::cout);
    passed = passed && report.passed();
  }
  return passed ? 0 : kExitFailure;
}

struct CompactArgs {
  std::string seqpair;
  std::string dims;
};

int run_compact(const CompactArgs& args) {
  const SequencePair sp = io::parse_sequence_pair(read_input(args.seqpair));
  const Dimensions dims = io::parse_dimensions(read_input(args.dims));
  std::cout << io::to_json(compact(sp, dims));
  return 0;
}

Json rational_json(const Rational& value) {
  if (is_integer(value) && value.get_num().fits_slong_p()) return Json(value.get_num().get_si());
  return Json(format_rational(value));
}

struct SolveArgs {
  std::string dims;
  std::string nets;
  std::string objective = "area";
  bool full = false;
  int limit = kDefaultExhaustiveLimit;
};

int run_solve(const SolveArgs& args) {
  const Dimensions dims = io::parse_dimensions(read_input(args.dims));
  const Netlist netlist = args.nets.empty() ? Netlist{} : io::parse_netlist(read_input(args.nets));
  const Objective objective = args.objective == "area" ? Objective::kArea : Objective::kHpwl;
  if (objective == Objective::kHpwl && netlist.nets.empty()) {
    throw InvalidInput("the hpwl objective needs a netlist");
  }
  const OptimumResult result = exhaustive_optimum(dims, netlist, objective, !args.full, args.limit);
  const Placement placement = compact(result.best, dims);
  const BoxSize box = bounding_box(placement);

  Json report;
  report["objective"] = args.objective;
  report["mode"] = args.full ? "full" : "restricted";
  report["evaluated"] = result.evaluated;
  report["value"] = rational_json(result.value);
  report["best"] = Json::parse(io::to_json(result.best));
  report["bounding_box"] = {{"width", rational_json(box.width)}, {"height", rational_json(box.height)}};
  report["placement"] = Json::parse(io::to_json(placement));
  std::cout << report.dump(2) << "\n";
  return 0;
}

struct RenderArgs {
  std::string input;
  std::string output;
};

int run_render(const RenderArgs& args) {
  const std::string text = read_input(args.input);
  switch (io::sniff(text)) {
    case io::DocumentKind::kPlacement:
      write_output(args.output, svg::render_placement(io::parse_placement(text)));
      return 0;
    case io::DocumentKind::kPermutation:
      write_output(args.output, svg::render_natural_embedding(io::parse_permutation(text)));
      return 0;
    default:
      throw ParseError("render expects a placement or a permutation");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rectangle placement representations: sequence pairs and forcing placements"};
  app.require_subcommand(1);

  CheckPermArgs check_perm;
  auto* check_perm_cmd = app.add_subcommand("check-perm", "Test a permutation for the plane or biplane property");
  check_perm_cmd->add_option("perm", check_perm.input, "Permutation JSON (path, - or inline)")->required();
  check_perm_cmd->add_flag("--biplane", check_perm.biplane, "Test both the permutation and its negation");

  EnumArgs enumerate;
  auto* enum_cmd = app.add_subcommand("enum", "Enumerate plane or biplane permutations of size n");
  enum_cmd->add_option("class", enumerate.cls, "plane or biplane")
      ->required()
      ->check(CLI::IsMember({"plane", "biplane"}));
  enum_cmd->add_option("--n", enumerate.n, "Permutation size")->required()->check(CLI::Range(0, 12));
  enum_cmd->add_flag("--count-only", enumerate.count_only, "Print n and the count, tab separated");
  enum_cmd->add_flag("--pruned", enumerate.pruned, "Use the pruned backtracking generator");

  ExtractArgs extract;
  auto* extract_cmd = app.add_subcommand("extract", "Sequence pair representing a feasible placement");
  extract_cmd->add_option("placement", extract.input, "Placement JSON")->required();
  extract_cmd->add_flag("--classic", extract.classic, "Use G1/G2 instead of the augmented graphs");
  extract_cmd->add_flag("--dump-graphs", extract.dump_graphs, "Print the constraint graph arcs to stderr");

  BadQuartetArgs bad;
  auto* bad_cmd = app.add_subcommand("badquartet", "Find a bad quartet of a sequence pair");
  bad_cmd->add_option("seqpair", bad.input, "Sequence pair JSON")->required();
  bad_cmd->add_flag("--extreme", bad.extreme, "Report an extreme bad quartet");

  ConstructArgs construct;
  auto* construct_cmd = app.add_subcommand("construct", "Forcing placement for a biplane permutation");
  construct_cmd->add_option("perm", construct.input, "Permutation JSON")->required();
  construct_cmd->add_option("--cert", construct.cert, "Write the certificate here instead of stderr");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run the randomized and exhaustive property suites");
  verify_cmd->add_option("--suite", verify.suite, "upper, lower or all")
      ->check(CLI::IsMember({"upper", "lower", "all"}));
  verify_cmd->add_option("--n", verify.options.max_n, "Largest size checked")->check(CLI::Range(1, 9));
  verify_cmd->add_option("--samples", verify.options.samples, "Random placements sampled")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--seed", verify.options.seed, "Random seed");
  verify_cmd->add_option("--orders", verify.options.orders_per_sample,
                         "Topological order pairs drawn per placement")
      ->check(CLI::NonNegativeNumber);

  CompactArgs compact_args;
  auto* compact_cmd = app.add_subcommand("compact", "Left/bottom compaction of a sequence pair");
  compact_cmd->add_option("seqpair", compact_args.seqpair, "Sequence pair JSON")->required();
  compact_cmd->add_option("dims", compact_args.dims, "Dimensions JSON")->required();

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Exhaustive optimum over sequence pairs");
  solve_cmd->add_option("dims", solve.dims, "Dimensions JSON")->required();
  solve_cmd->add_option("nets", solve.nets, "Netlist JSON");
  solve_cmd->add_option("--objective", solve.objective, "area or hpwl")
      ->check(CLI::IsMember({"area", "hpwl"}));
  solve_cmd->add_flag("--full", solve.full, "Search all (n!)^2 pairs instead of the restricted set");
  solve_cmd->add_option("--limit", solve.limit, "Largest n accepted")->check(CLI::Range(1, 8));

  RenderArgs render;
  auto* render_cmd = app.add_subcommand("render", "SVG of a placement or a permutation's natural embedding");
  render_cmd->add_option("input", render.input, "Placement or permutation JSON")->required();
  render_cmd->add_option("-o,--output", render.output, "SVG file, - for stdout")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitMalformed;
  }

  try {
    if (*check_perm_cmd) return run_check_perm(check_perm);
    if (*enum_cmd) return run_enum(enumerate);
    if (*extract_cmd) return run_extract(extract);
    if (*bad_cmd) return run_badquartet(bad);
    if (*construct_cmd) return run_construct(construct);
    if (*verify_cmd) return run_verify(verify);
    if (*compact_cmd) return run_compact(compact_args);
    if (*solve_cmd) return run_solve(solve);
    if (*render_cmd) return run_render(render);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitMalformed;
}
