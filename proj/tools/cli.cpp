#include "cli.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include <CLI11.hpp>

#include "freelie/automaton.hpp"
#include "freelie/errors.hpp"
#include "freelie/free_finder.hpp"
#include "freelie/json_io.hpp"
#include "freelie/props.hpp"
#include "freelie/verifier.hpp"

namespace freelie::cli {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Options {
  bool pretty = false;
  bool serial = false;
  std::string input, output, cert;

  std::size_t n = 2;
  std::string gap_convention = "relations";
  std::size_t max_len = 10;
  bool hilbert = false;
  std::size_t cap = kDefaultCandidateCap;
  std::size_t degree = 5;
  std::string method = "leading-terms";
  std::size_t max_word_len = 4;
  std::optional<std::size_t> truncation;
  std::optional<std::size_t> relations;
  std::string suite = "all";
  std::uint64_t seed = 1;

  Execution execution() const { return serial ? Execution::Serial : Execution::Parallel; }
  ExpansionMethod expansion() const {
    return method == "full-expansion" ? ExpansionMethod::FullExpansion : ExpansionMethod::LeadingTerms;
  }
};

void emit(const Options& o, std::ostream& out, const Json& j) {
  if (o.output.empty())
    out << dump(j, o.pretty);
  else
    write_json_file(o.output, j);
}

int family(const Options& o, std::ostream& out) {
  const auto conv = o.gap_convention == "prose" ? GapConvention::Prose : GapConvention::Relations;
  emit(o, out, to_json(family_A(o.n, conv)));
  return kOk;
}

int build(const Options& o, std::ostream& out) {
  emit(o, out, to_json(automaton_from_json(read_json_file(o.input))));
  return kOk;
}

int growth(const Options& o, std::ostream& out) {
  const auto aut = automaton_from_json(read_json_file(o.input));
  emit(o, out, to_json(growth_report(aut, o.max_len, o.hilbert), aut));
  return kOk;
}

int find_free(const Options& o, std::ostream& out) {
  const auto aut = automaton_from_json(read_json_file(o.input));
  emit(o, out, to_json(find_regular_pair(aut, o.cap, o.execution()), aut));
  return kOk;
}

int verify_lie(const Options& o, std::ostream& out) {
  const auto aut = automaton_from_json(read_json_file(o.input));
  const auto cert = certificate_from_json(read_json_file(o.cert), aut);
  const auto report = verify_lie_freeness(aut, cert, o.degree, o.expansion(), o.execution());
  emit(o, out, to_json(report, aut));
  return report.verified ? kOk : kFailed;
}

int verify_group(const Options& o, std::ostream& out) {
  const auto aut = automaton_from_json(read_json_file(o.input));
  const auto cert = certificate_from_json(read_json_file(o.cert), aut);
  Json j = Json::object();
  bool ok = true;
  if (o.relations) {
    const std::size_t N = o.truncation.value_or(std::max<std::size_t>(8, *o.relations + 2));
    const auto rel = verify_group_relations(*o.relations, TruncationDegree(N), 500, o.execution());
    ok = ok && rel.verified;
    j["relations"] = to_json(rel);
  }
  const auto free = verify_free_subgroup(aut, cert, o.max_word_len, o.truncation, o.expansion(), o.execution());
  ok = ok && free.verified;
  j["free_subgroup"] = to_json(free, aut);
  Json out_json{{"verdict", ok ? "Verified" : "Refuted"}};
  out_json.update(j);
  emit(o, out, out_json);
  return ok ? kOk : kFailed;
}

int props(const Options& o, std::ostream& out, std::ostream& err) {
  const auto suite = parse_suite(o.suite);
  err << "seed: " << o.seed << "\n";
  const auto report = run_suite(*suite, o.seed, o.execution());
  for (const auto& p : report.properties)
    for (const auto& c : p.counterexamples) err << "counterexample [" << p.name << "]: " << c << "\n";
  emit(o, out, to_json(report));
  return report.passed() ? kOk : kFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Free subalgebras and subgroups of automaton monomial algebras", "freelie"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--pretty", o.pretty, "Indent JSON output");
  app.add_flag("--serial", o.serial, "Disable OpenMP parallel kernels");

  const auto method_check = CLI::IsMember({"leading-terms", "full-expansion"});

  auto* fam = app.add_subcommand("family", "Write the presentation of A_{n+2}");
  fam->add_option("--n", o.n, "Family parameter")->required()->check(CLI::PositiveNumber);
  fam->add_option("-o,--output", o.output, "Output file (stdout if omitted)");
  fam->add_option("--gap-convention", o.gap_convention, "Zero-word length bound")
      ->check(CLI::IsMember({"relations", "prose"}));

  auto* bld = app.add_subcommand("build", "Write the deterministic automaton of a presentation or graph");
  bld->add_option("-i,--input", o.input)->required();
  bld->add_option("-o,--output", o.output);

  auto* gro = app.add_subcommand("growth", "Word counts, growth type and Hilbert series");
  gro->add_option("-i,--input", o.input)->required();
  gro->add_option("--max-len", o.max_len)->check(CLI::PositiveNumber);
  gro->add_flag("--hilbert", o.hilbert);

  auto* ff = app.add_subcommand("find-free", "Search for a free pair certificate");
  ff->add_option("-i,--input", o.input)->required();
  ff->add_option("--cap", o.cap)->check(CLI::PositiveNumber);
  ff->add_option("-o,--output", o.output);

  auto* vl = app.add_subcommand("verify-lie", "Check the Hall basis images through a degree");
  vl->add_option("-i,--input", o.input)->required();
  vl->add_option("--cert", o.cert)->required();
  vl->add_option("--degree", o.degree)->check(CLI::PositiveNumber);
  vl->add_option("--method", o.method)->check(method_check);

  auto* vg = app.add_subcommand("verify-group", "Check that no short group word is trivial");
  vg->add_option("-i,--input", o.input)->required();
  vg->add_option("--cert", o.cert)->required();
  vg->add_option("--max-word-len", o.max_word_len)->required()->check(CLI::PositiveNumber);
  vg->add_option("--truncation", o.truncation)->check(CLI::PositiveNumber);
  vg->add_option("--relations", o.relations, "Also check the group relations for this n")->check(CLI::Range(3, 16));
  vg->add_option("--method", o.method)->check(method_check);

  auto* pr = app.add_subcommand("props", "Run property suites on words");
  pr->add_option("--suite", o.suite)->check(CLI::IsMember({"overlap", "switching", "regular", "bracketing", "all"}));
  pr->add_option("--seed", o.seed);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*fam) return family(o, out);
    if (*bld) return build(o, out);
    if (*gro) return growth(o, out);
    if (*ff) return find_free(o, out);
    if (*vl) return verify_lie(o, out);
    if (*vg) return verify_group(o, out);
    if (*pr) return props(o, out, err);
  } catch (const CapExceeded& e) {
    err << "alarm: " << e.what() << "\n";
    return kFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}

}  // namespace freelie::cli
