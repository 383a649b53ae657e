#include "poslab/cli.hpp"

#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "poslab/errors.hpp"
#include "poslab/io.hpp"
#include "poslab/oracle.hpp"

namespace poslab {

namespace {

std::string slurp(const std::string& arg) {
  if (arg != "-") return arg;
  std::ostringstream buf;
  buf << std::cin.rdbuf();
  return buf.str();
}

// Everything funnels through the decorated permutation; matrices and raw
// basis lists must pass the positroid reconstruction to get in.
DecoratedPermutation read_decorated(const std::string& form, const std::string& raw) {
  const std::string text = slurp(raw);
  if (form == "decorated") return parse_decorated(text);
  if (form == "necklace") return decorated_perm_from_necklace(necklace_from_json(text));
  if (form == "interval") return decorated_perm_from_interval(interval_from_json(text));
  const Positroid M =
      form == "bases"
          ? bases_from_json(text)
          : [&] {
              const auto bases = matroid_of_matrix(matrix_from_json(text));
              Positroid P;
              P.n = bases.front().n();
              P.k = bases.front().k();
              P.bases = bases;
              return P;
            }();
  const GrassmannNecklace N = necklace_from_positroid(M);
  const DecoratedPermutation w = decorated_perm_from_necklace(N);
  if (positroid_from_necklace(N) != M)
    throw invariant_error("basis family is not a positroid");
  return w;
}

Positroid positroid_of(const DecoratedPermutation& w) {
  return positroid_from_necklace(grassmann_necklace(w));
}

void add_from_option(CLI::App* cmd, std::string& from, bool with_matrix) {
  std::vector<std::string> forms = {"decorated", "necklace", "interval", "bases"};
  if (with_matrix) forms.push_back("matrix");
  cmd->add_option("--from", from, "input form (never sniffed)")
      ->check(CLI::IsMember(forms));
}

int dispatch(int argc, const char* const* argv) {
  CLI::App app{"exact positroid-variety toolkit"};
  app.require_subcommand(1);

  // convert
  auto* convert = app.add_subcommand("convert", "translate between index forms");
  std::string cv_input, cv_from = "decorated", cv_to;
  convert->add_option("input", cv_input, "value, or - for stdin")->required();
  add_from_option(convert, cv_from, true);
  convert->add_option("--to", cv_to, "target form")
      ->required()
      ->check(CLI::IsMember({"decorated", "necklace", "interval", "bases"}));

  // smooth
  auto* smooth = app.add_subcommand("smooth", "smoothness report; exit 1 when singular");
  std::string sm_input, sm_from = "decorated", sm_criterion = "all";
  bool sm_certify = false;
  smooth->add_option("input", sm_input, "value, or - for stdin")->required();
  add_from_option(smooth, sm_from, true);
  smooth->add_option("--criterion", sm_criterion, "which test decides the exit code")
      ->check(CLI::IsMember({"all", "degree", "regular", "crossed", "spirograph"}));
  smooth->add_flag("--certify", sm_certify,
                   "re-derive every tangent codimension from the Jacobian");

  // census
  auto* census = app.add_subcommand("census", "count smooth classes for all of [n]");
  int cs_n = 0, cs_jobs = 1;
  std::string cs_criterion = "crossed";
  census->add_option("--n", cs_n, "ground set size")->required();
  census->add_option("--criterion", cs_criterion, "smoothness test to apply")
      ->check(CLI::IsMember({"degree", "regular", "crossed", "spirograph"}));
  census->add_option("--jobs", cs_jobs, "worker threads; never changes the output");

  // emit
  auto* emit = app.add_subcommand("emit", "diagram and graph artifacts");
  std::string em_input, em_from = "decorated";
  bool em_dot = false, em_svg = false;
  emit->add_option("input", em_input, "value, or - for stdin")->required();
  add_from_option(emit, em_from, true);
  auto* dot_flag = emit->add_flag("--johnson-dot", em_dot, "basis-exchange graph as DOT");
  auto* svg_flag = emit->add_flag("--chord-svg", em_svg, "chord diagram as SVG");
  dot_flag->excludes(svg_flag);

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exact Jacobian ranks at fixed points");
  std::string or_input, or_from = "decorated", or_at;
  bool or_all = false;
  oracle->add_option("input", or_input, "value, or - for stdin")->required();
  add_from_option(oracle, or_from, true);
  auto* at_opt = oracle->add_option("--at", or_at, "one basis, e.g. {2,6}");
  auto* all_flag = oracle->add_flag("--all", or_all, "every basis, one line each");
  at_opt->excludes(all_flag);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return 0;
  }

  if (convert->parsed()) {
    const DecoratedPermutation w = read_decorated(cv_from, cv_input);
    if (cv_to == "decorated")
      std::cout << to_string(w) << '\n';
    else if (cv_to == "necklace")
      std::cout << necklace_to_json(grassmann_necklace(w));
    else if (cv_to == "interval")
      std::cout << interval_to_json(interval_from_decorated_perm(w));
    else
      std::cout << bases_to_json(positroid_of(w));
    return 0;
  }

  if (smooth->parsed()) {
    const DecoratedPermutation w = read_decorated(sm_from, sm_input);
    SmoothnessReport report = smoothness_report(w);
    if (sm_certify) {
      for (size_t i = 0; i < report.M.bases.size(); ++i) {
        const int rank = jacobian_rank_at(report.M, report.M.bases[i]);
        if (rank != report.tangent_codims[i])
          throw invariant_error("Jacobian rank disagrees with the tangent count");
        report.jacobian_ranks.push_back(rank);
      }
    }
    std::cout << report_to_json(report, sm_criterion, sm_certify);
    bool verdict = report.smooth;
    if (sm_criterion != "all") verdict = is_smooth(w, parse_criterion(sm_criterion));
    return verdict ? 0 : 1;
  }

  if (census->parsed()) {
    const Criterion c = parse_criterion(cs_criterion);
    std::cout << census_tsv(smoothness_census(cs_n, c, cs_jobs), c);
    return 0;
  }

  if (emit->parsed()) {
    if (em_dot == em_svg)
      throw CLI::ValidationError("emit", "pass exactly one of --johnson-dot / --chord-svg");
    const DecoratedPermutation w = read_decorated(em_from, em_input);
    if (em_dot)
      std::cout << johnson_dot(johnson_graph(positroid_of(w)));
    else
      std::cout << chord_svg(w);
    return 0;
  }

  const DecoratedPermutation w = read_decorated(or_from, or_input);
  const Positroid M = positroid_of(w);
  if (!or_all && or_at.empty())
    throw CLI::ValidationError("oracle", "pass --at {…} or --all");
  if (or_all) {
    for (const KSubset& J : M.bases)
      std::cout << to_string(J) << '\t' << jacobian_rank_at(M, J) << '\t'
                << tangent_codim(M, J) << '\n';
  } else {
    std::cout << jacobian_rank_at(M, parse_subset(or_at, M.n)) << '\n';
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  try {
    return dispatch(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const invariant_error& e) {
    std::cerr << "invariant error: " << e.what() << '\n';
    return 3;
  } catch (const guard_error& e) {
    std::cerr << "guard refusal: " << e.what() << '\n';
    return 4;
  }
}

}  // namespace poslab
