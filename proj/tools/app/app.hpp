#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fprlab/spec.hpp"

namespace fprlab::app {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "fprlab/1";

/// Stable exit-code contract.
enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2, kCapExceeded = 3 };

enum class Format { kJson, kCsv };

struct RunConfig {
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t degree_cap = 1'000'000;
  std::uint64_t order_cap = 10'000'000;  // class tables
  std::uint64_t class_cap = 10'000'000;  // single class enumeration
  std::uint64_t spread_cap = 600;
  std::uint64_t graph_cap = 2000;
  /// Node budget for the NP-hard searches.
  std::uint64_t budget = 50'000'000;
  Format format = Format::kJson;
};

/// Reads `key = value` lines ('#' starts a comment) on top of `base`. Keys:
/// seed, degree_cap, order_cap, class_cap, spread_cap, graph_cap, budget,
/// format. Throws InvalidArgument for unknown keys, bad values or zero caps.
RunConfig load_config(const std::filesystem::path& file, RunConfig base = {});
void set_config_value(RunConfig& config, const std::string& key, const std::string& value);
/// Applies FPRLAB_SEED when set.
void apply_environment(RunConfig& config);
Json config_json(const RunConfig& config);

/// A command's outcome: the payload plus its exit code (kMismatch for a
/// failed reproduction).
struct Report {
  std::string command;
  std::optional<std::string> spec;
  Json result;
  int exit_code = kOk;
};

/// The full document: schema, command, canonical spec, config, result.
Json to_json(const Report& report, const RunConfig& config);

/// CSV flattening: a "key,value" header, then one line per JSON leaf in
/// document order. Keys are dotted paths with array indices as components
/// ("result.rows.0.fpr"); empty arrays and objects appear as "[]" and "{}".
std::string to_csv(const Json& document);

/// Serialized output in the configured format, newline terminated.
std::string render(const Report& report, const RunConfig& config);

RealizedSpec realize(const std::string& spec, const RunConfig& config);

Report cmd_classes(const std::string& spec, const RunConfig& config);
Report cmd_fpr(const std::string& spec, const RunConfig& config, const std::vector<std::string>& elements);
Report cmd_mu(const std::string& spec, const RunConfig& config);
Report cmd_graph(const std::string& spec, const RunConfig& config, bool chromatic);
Report cmd_spread(const std::string& spec, const RunConfig& config);
/// `overgroups`: one subgroup per line, its generators in cycle notation
/// separated by commas; blank lines and '#' comments are skipped.
Report cmd_uspread(const std::string& spec, const RunConfig& config, const std::string& y, std::uint64_t k,
                   const std::optional<std::filesystem::path>& overgroups);
Report cmd_pgen2(const std::string& spec, const RunConfig& config, std::uint64_t samples);
Report cmd_genus_screen(const std::string& spec, const RunConfig& config, std::int64_t g, bool insoluble_filter,
                        std::uint64_t max_k);
/// `tuple`: one permutation per line.
Report cmd_genus_of(const std::string& spec, const RunConfig& config, const std::filesystem::path& tuple);
Report cmd_ind_table(const std::string& spec, const RunConfig& config);

enum class BaseMode { kExact, kProb, kQhat };
Report cmd_base(const std::string& spec, const RunConfig& config, BaseMode mode, std::uint64_t c,
                std::uint64_t trials);

/// Recomputes the expected-value tables in `data_dir` ("all" or one table
/// name) and diffs them; exit code kMismatch on any difference.
Report cmd_reproduce(const std::string& which, const RunConfig& config, const std::filesystem::path& data_dir);

/// Names of the tables in `data_dir`, sorted.
std::vector<std::string> table_names(const std::filesystem::path& data_dir);

/// One permutation in 1-indexed cycle notation.
std::string cycles(const Permutation& p);

}  // namespace fprlab::app
