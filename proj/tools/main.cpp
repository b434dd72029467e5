#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "app/app.hpp"

#ifndef FPRLAB_DATA_DIR
#define FPRLAB_DATA_DIR "data/tables"
#endif

using namespace fprlab;
using namespace fprlab::app;

int main(int argc, char** argv) {
  CLI::App cli{"fprlab: fixed point ratios, spread, genus and bases of permutation groups"};
  cli.require_subcommand(1);
  cli.fallthrough();

  std::optional<std::uint64_t> seed;
  std::optional<std::string> config_file;
  std::string format;
  std::vector<std::string> settings;
  cli.add_option("--seed", seed, "Master seed (overrides FPRLAB_SEED and the config file)");
  cli.add_option("--config", config_file, "key=value config file")->check(CLI::ExistingFile);
  cli.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  cli.add_option("--set", settings, "Override one config key (key=value); repeatable");

  std::string spec;
  auto add_spec = [&](CLI::App* sub) { sub->add_option("spec", spec, "group@action")->required(); };

  auto* classes = cli.add_subcommand("classes", "Conjugacy classes of the acting group");
  add_spec(classes);

  std::vector<std::string> elements;
  auto* fpr = cli.add_subcommand("fpr", "Fixed point ratios of every class");
  add_spec(fpr);
  fpr->add_option("--element", elements, "Also report fpr of this element (cycle notation); repeatable");

  auto* mu = cli.add_subcommand("mu", "Minimal degree, fixity and derangements");
  add_spec(mu);

  bool chromatic = false;
  auto* graph = cli.add_subcommand("graph", "Generating graph invariants");
  add_spec(graph);
  graph->add_flag("--chromatic", chromatic, "Also compute the chromatic number");

  auto* spread = cli.add_subcommand("spread", "Exact spread and uniform spread");
  add_spec(spread);

  std::string y;
  std::uint64_t k = 1;
  std::optional<std::string> overgroups;
  auto* uspread = cli.add_subcommand("uspread", "Uniform spread certificate for the class of y");
  add_spec(uspread);
  uspread->add_option("--y", y, "Element y (cycle notation)")->required();
  uspread->add_option("--k", k, "Target k")->check(CLI::PositiveNumber);
  uspread->add_option("--overgroups", overgroups, "File of maximal overgroups of y, one per line")->check(CLI::ExistingFile);

  std::uint64_t samples = 0;
  auto* pgen2 = cli.add_subcommand("pgen2", "Probability that two random elements generate");
  add_spec(pgen2);
  pgen2->add_option("--samples", samples, "Monte Carlo samples when the group is above the graph cap");

  std::int64_t g = 0;
  bool insoluble_filter = false;
  std::uint64_t max_k = 8;
  auto* screen = cli.add_subcommand("genus-screen", "Screen signatures of genus-g generating tuples");
  add_spec(screen);
  screen->add_option("--g", g, "Target genus")->check(CLI::NonNegativeNumber);
  screen->add_flag("--insoluble-filter", insoluble_filter, "Apply the 85/42 angle filter (G insoluble, not Alt(5))");
  screen->add_option("--max-k", max_k, "Largest tuple length")->check(CLI::Range(2, 16));

  std::string tuple;
  auto* genus_of = cli.add_subcommand("genus-of", "Genus of a generating product-one tuple");
  add_spec(genus_of);
  genus_of->add_option("--tuple", tuple, "File with one permutation per line")->required()->check(CLI::ExistingFile);

  auto* ind_table = cli.add_subcommand("ind-table", "Minimal index for each element order");
  add_spec(ind_table);

  bool exact = false, prob = false, use_qhat = false;
  std::uint64_t c = 0, trials = 10000;
  auto* base = cli.add_subcommand("base", "Base size, random base probability, or the Qhat certificate");
  add_spec(base);
  auto* exact_flag = base->add_flag("--exact", exact, "Exact minimal base size (default)");
  auto* prob_flag = base->add_flag("--prob", prob, "Estimate the probability that a random c-tuple is a base");
  auto* qhat_flag = base->add_flag("--qhat", use_qhat, "Sum over prime order classes of size * fpr^c");
  exact_flag->excludes(prob_flag)->excludes(qhat_flag);
  prob_flag->excludes(qhat_flag);
  base->add_option("--c", c, "Tuple length");
  base->add_option("--trials", trials, "Monte Carlo trials")->check(CLI::PositiveNumber);

  std::string which = "all";
  // Source-tree tables, or the installed copy next to the binary.
  std::string data_dir = FPRLAB_DATA_DIR;
  if (const auto installed = std::filesystem::path(argv[0]).parent_path() / ".." / "share" / "fprlab" / "tables";
      !std::filesystem::is_directory(data_dir) && std::filesystem::is_directory(installed))
    data_dir = installed.string();
  auto* reproduce = cli.add_subcommand("reproduce", "Recompute the stored expected-value tables and diff");
  reproduce->add_option("which", which, "Table name or 'all'");
  reproduce->add_option("--data", data_dir, "Table directory")->check(CLI::ExistingDirectory);
  bool list = false;
  reproduce->add_flag("--list", list, "List table names");

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return cli.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    RunConfig config;
    if (config_file) config = load_config(*config_file, config);
    apply_environment(config);
    for (const auto& s : settings) {
      const auto eq = s.find('=');
      if (eq == std::string::npos) throw InvalidArgument("--set expects key=value");
      set_config_value(config, s.substr(0, eq), s.substr(eq + 1));
    }
    if (seed) config.seed = *seed;
    if (!format.empty()) set_config_value(config, "format", format);

    Report report;
    if (*classes) report = cmd_classes(spec, config);
    else if (*fpr) report = cmd_fpr(spec, config, elements);
    else if (*mu) report = cmd_mu(spec, config);
    else if (*graph) report = cmd_graph(spec, config, chromatic);
    else if (*spread) report = cmd_spread(spec, config);
    else if (*uspread) report = cmd_uspread(spec, config, y, k, overgroups);
    else if (*pgen2) report = cmd_pgen2(spec, config, samples);
    else if (*screen) report = cmd_genus_screen(spec, config, g, insoluble_filter, max_k);
    else if (*genus_of) report = cmd_genus_of(spec, config, tuple);
    else if (*ind_table) report = cmd_ind_table(spec, config);
    else if (*base) {
      const BaseMode mode = prob ? BaseMode::kProb : use_qhat ? BaseMode::kQhat : BaseMode::kExact;
      if (mode != BaseMode::kExact && c == 0) throw InvalidArgument("--prob and --qhat need --c");
      report = cmd_base(spec, config, mode, c, trials);
    } else if (*reproduce) {
      if (list) {
        for (const auto& name : table_names(data_dir)) std::cout << name << '\n';
        return kOk;
      }
      report = cmd_reproduce(which, config, data_dir);
    }
    std::cout << render(report, config);
    return report.exit_code;
  } catch (const CapExceeded& e) {
    std::cerr << "fprlab: cap exceeded: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const std::exception& e) {
    std::cerr << "fprlab: " << e.what() << '\n';
    return kUsage;
  }
}
