#include "app.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <set>
#include <sstream>

#include "fprlab/bases.hpp"
#include "fprlab/classes.hpp"
#include "fprlab/fpr.hpp"
#include "fprlab/genspread.hpp"
#include "fprlab/genus.hpp"

namespace fprlab::app {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size() || value.front() == '-')
    throw InvalidArgument("config value for " + key + " is not a non-negative integer: '" + value + "'");
  return v;
}

// BigInt as a JSON number when it fits, else as a decimal string.
Json big(const BigInt& n) {
  if (n >= 0 && n < BigInt(std::numeric_limits<std::int64_t>::max())) return static_cast<std::uint64_t>(n);
  return to_string(n);
}

Json rat(const Rational& r) { return to_string(r); }

Json perm_list(const std::vector<Permutation>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(cycles(p));
  return out;
}

Json points(const std::vector<Point>& pts) {
  Json out = Json::array();
  for (Point p : pts) out.push_back(p + 1);
  return out;
}

Json bound(const Bound& b) {
  if (b.exact()) return b.lower;
  return Json{{"lower", b.lower}, {"upper", b.upper}};
}

ClassOptions class_options(const RunConfig& config) {
  ClassOptions o;
  o.order_cap = config.order_cap;
  o.class_size_cap = config.class_cap;
  o.seed = config.seed;
  return o;
}

GraphOptions graph_options(const RunConfig& config) {
  GraphOptions o;
  o.order_cap = config.graph_cap;
  o.seed = config.seed;
  return o;
}

SpreadOptions spread_options(const RunConfig& config) {
  SpreadOptions o;
  o.order_cap = config.spread_cap;
  o.node_budget = config.budget;
  o.seed = config.seed;
  return o;
}

Json group_json(const RealizedSpec& r) {
  Json g;
  g["degree"] = r.group.degree();
  g["order"] = big(r.group.order());
  g["transitive"] = r.group.is_transitive();
  if (r.socle) g["socle"] = *r.socle;
  return g;
}

Json fpr_json(const FprReport& rep) {
  Json j;
  j["degree"] = rep.degree;
  j["group_order"] = big(rep.group_order);
  Json rows = Json::array();
  for (const auto& row : rep.rows)
    rows.push_back({{"class", row.class_index + 1},
                    {"order", row.order},
                    {"size", big(row.size)},
                    {"fix", row.fix},
                    {"fpr", rat(row.fpr)},
                    {"rep", cycles(row.rep)}});
  j["rows"] = rows;
  j["max_fpr"] = rat(rep.max_fpr);
  j["min_fpr"] = rat(rep.min_fpr);
  j["max_prime_fpr"] = rat(rep.max_prime_fpr);
  j["mu"] = rep.mu;
  j["fixity"] = rep.fixity;
  j["involution_fixity"] = rep.has_involutions ? Json(rep.involution_fixity) : Json(nullptr);
  j["derangement_class"] = rep.derangement_witness ? Json(rep.rows[*rep.derangement_witness].class_index + 1) : Json(nullptr);
  return j;
}

std::vector<std::string> read_lines(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw InvalidArgument("cannot read " + file.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

Report make_report(std::string command, const std::optional<std::string>& spec, Json result) {
  return Report{std::move(command), spec, std::move(result), kOk};
}

}  // namespace

std::string cycles(const Permutation& p) { return p.to_cycle_string(); }

void set_config_value(RunConfig& config, const std::string& key, const std::string& value) {
  if (key == "format") {
    if (value == "json") config.format = Format::kJson;
    else if (value == "csv") config.format = Format::kCsv;
    else throw InvalidArgument("format must be json or csv, not '" + value + "'");
    return;
  }
  const std::uint64_t v = parse_u64(key, value);
  if (key == "seed") {
    config.seed = v;
    return;
  }
  if (v == 0) throw InvalidArgument("config value for " + key + " must be positive");
  if (key == "degree_cap") config.degree_cap = v;
  else if (key == "order_cap") config.order_cap = v;
  else if (key == "class_cap") config.class_cap = v;
  else if (key == "spread_cap") config.spread_cap = v;
  else if (key == "graph_cap") config.graph_cap = v;
  else if (key == "budget") config.budget = v;
  else throw InvalidArgument("unknown config key '" + key + "'");
}

RunConfig load_config(const std::filesystem::path& file, RunConfig base) {
  std::ifstream in(file);
  if (!in) throw InvalidArgument("cannot read config file " + file.string());
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw InvalidArgument(file.string() + ":" + std::to_string(number) + ": expected key = value");
    set_config_value(base, trim(std::string_view(line).substr(0, eq)), trim(std::string_view(line).substr(eq + 1)));
  }
  return base;
}

void apply_environment(RunConfig& config) {
  if (const char* seed = std::getenv("FPRLAB_SEED"); seed && *seed) set_config_value(config, "seed", seed);
}

Json config_json(const RunConfig& c) {
  return Json{{"seed", c.seed},           {"degree_cap", c.degree_cap}, {"order_cap", c.order_cap},
              {"class_cap", c.class_cap}, {"spread_cap", c.spread_cap}, {"graph_cap", c.graph_cap},
              {"budget", c.budget}};
}

Json to_json(const Report& report, const RunConfig& config) {
  Json doc;
  doc["schema"] = kSchema;
  doc["command"] = report.command;
  if (report.spec) doc["spec"] = *report.spec;
  doc["config"] = config_json(config);
  doc["result"] = report.result;
  return doc;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void flatten(const Json& j, const std::string& path, std::string& out) {
  if (j.is_object() && !j.empty()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, out);
  } else if (j.is_array() && !j.empty()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "." + std::to_string(i), out);
  } else {
    const std::string value = j.is_string() ? j.get<std::string>() : j.dump();
    out += csv_field(path) + "," + csv_field(value) + "\n";
  }
}

}  // namespace

std::string to_csv(const Json& document) {
  std::string out = "key,value\n";
  flatten(document, "", out);
  return out;
}

std::string render(const Report& report, const RunConfig& config) {
  const Json doc = to_json(report, config);
  if (config.format == Format::kCsv) return to_csv(doc);
  return doc.dump(2) + "\n";
}

RealizedSpec realize(const std::string& spec, const RunConfig& config) {
  RealizeOptions options;
  options.degree_cap = config.degree_cap;
  options.require_transitive = false;
  return realize_spec(parse_spec(spec), options, config.seed);
}

Report cmd_classes(const std::string& spec, const RunConfig& config) {
  const auto r = realize(spec, config);
  const auto table = ClassTable::build(r.group, class_options(config));
  Json rows = Json::array();
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& c = table[i];
    rows.push_back({{"class", i + 1},
                    {"order", c.order},
                    {"size", big(c.size)},
                    {"centralizer_order", big(c.centralizer_order)},
                    {"fix", c.rep.num_fixed_points()},
                    {"rep", cycles(c.rep)}});
  }
  Json result = group_json(r);
  result["class_count"] = table.size();
  result["classes"] = rows;
  return make_report("classes", print_spec(r.spec), result);
}

Report cmd_fpr(const std::string& spec, const RunConfig& config, const std::vector<std::string>& elements) {
  const auto r = realize(spec, config);
  const auto table = ClassTable::build(r.group, class_options(config));
  const auto report = fpr_report(table);
  Json result = group_json(r);
  result["fpr"] = fpr_json(report);
  if (r.socle && r.q && r.group.is_transitive()) {
    const auto check = check_43q(report, *r.q, *r.socle);
    result["bound_4_over_3q"] = {{"q", *r.q},
                                 {"socle", *r.socle},
                                 {"bound", rat(check.bound)},
                                 {"max_fpr", rat(check.max_fpr)},
                                 {"holds", check.bound_holds},
                                 {"exempt", check.exempt},
                                 {"ok", check.ok}};
  }
  Json els = Json::array();
  for (const auto& text : elements) {
    const auto x = r.parse_element(text);
    els.push_back({{"element", cycles(x)},
                   {"class", table.class_index(x) + 1},
                   {"fix", x.num_fixed_points()},
                   {"fpr", rat(fpr_direct(r.group, x))}});
  }
  if (!elements.empty()) result["elements"] = els;
  return make_report("fpr", print_spec(r.spec), result);
}

Report cmd_mu(const std::string& spec, const RunConfig& config) {
  const auto r = realize(spec, config);
  const auto report = fpr_report(ClassTable::build(r.group, class_options(config)));
  Json result = group_json(r);
  result["mu"] = report.mu;
  result["fixity"] = report.fixity;
  result["involution_fixity"] = report.has_involutions ? Json(report.involution_fixity) : Json(nullptr);
  result["has_derangement"] = report.has_derangement;
  if (report.derangement_witness) result["derangement"] = cycles(report.rows[*report.derangement_witness].rep);
  return make_report("mu", print_spec(r.spec), result);
}

Report cmd_graph(const std::string& spec, const RunConfig& config, bool chromatic) {
  const auto r = realize(spec, config);
  const auto graph = build_graph(r.group, graph_options(config));
  const auto stats = graph_stats(graph, config.budget);
  Json result = group_json(r);
  result["vertices"] = stats.vertices;
  result["edges"] = stats.edges;
  result["prob_gen2"] = rat(prob_gen2(graph));
  result["connected"] = stats.connected;
  result["diameter"] = stats.diameter ? Json(*stats.diameter) : Json(nullptr);
  result["clique_number"] = bound(stats.clique);
  result["coclique_number"] = bound(stats.coclique);
  result["min_degree"] = stats.degree_sequence.empty() ? 0 : stats.degree_sequence.front();
  result["max_degree"] = stats.degree_sequence.empty() ? 0 : stats.degree_sequence.back();
  result["posa"] = posa_check(stats.degree_sequence);
  if (chromatic) result["chromatic_number"] = bound(chromatic_number(graph, config.budget));
  result["search_nodes"] = stats.nodes;
  return make_report("graph", print_spec(r.spec), result);
}

Report cmd_spread(const std::string& spec, const RunConfig& config) {
  const auto r = realize(spec, config);
  const auto cert = spread_exact(r.group, spread_options(config));
  Json result = group_json(r);
  result["method"] = cert.method;
  result["s"] = cert.s ? Json(*cert.s) : Json("infinite");
  result["u"] = cert.u ? Json(*cert.u) : Json("infinite");
  result["witness_class"] = cert.witness_class ? Json(*cert.witness_class + 1) : Json(nullptr);
  result["s_failing"] = perm_list(cert.s_failing);
  Json covers = Json::array();
  for (const auto& c : cert.class_covers)
    covers.push_back({{"class", c.class_index + 1},
                      {"rep", cycles(c.rep)},
                      {"cover_size", c.size ? Json(*c.size) : Json(nullptr)},
                      {"cover", perm_list(c.cover)}});
  result["class_covers"] = covers;
  result["search_nodes"] = cert.nodes;
  return make_report("spread", print_spec(r.spec), result);
}

Report cmd_uspread(const std::string& spec, const RunConfig& config, const std::string& y_text, std::uint64_t k,
                   const std::optional<std::filesystem::path>& overgroups_file) {
  const auto r = realize(spec, config);
  const auto y = r.parse_element(y_text);
  std::optional<std::vector<PermGroup>> overgroups;
  if (overgroups_file) {
    overgroups.emplace();
    for (const auto& line : read_lines(*overgroups_file)) {
      std::vector<Permutation> gens;
      for (const auto& p : parse_permutation_list(r.group.degree(), line)) gens.push_back(p);
      overgroups->emplace_back(r.group.degree(), gens, config.seed);
    }
  }
  USpreadOptions options;
  options.classes = class_options(config);
  const auto cert = uspread_certify(r.group, y, k, overgroups, options);
  Json result = group_json(r);
  result["y"] = cycles(cert.y);
  result["k"] = cert.k;
  Json orders = Json::array();
  for (const auto& o : cert.overgroup_orders) orders.push_back(big(o));
  result["overgroup_orders"] = orders;
  Json gens = Json::array();
  for (const auto& g : cert.overgroup_generators) gens.push_back(perm_list(g));
  result["overgroup_generators"] = gens;
  Json rows = Json::array();
  for (const auto& row : cert.rows) {
    Json summands = Json::array();
    for (const auto& s : row.summands) summands.push_back({{"overgroup", s.overgroup + 1}, {"fpr", rat(s.fpr)}});
    rows.push_back({{"x", cycles(row.x)},
                    {"order", row.order},
                    {"class_size", big(row.class_size)},
                    {"summands", summands},
                    {"total", rat(row.total)}});
  }
  result["rows"] = rows;
  result["max_total"] = rat(cert.max_total);
  result["bound"] = rat(Rational(1, static_cast<long long>(k)));
  result["certified"] = cert.certified;
  result["vacuous"] = cert.vacuous;
  result["trust_note"] = cert.trust_note ? Json(*cert.trust_note) : Json(nullptr);
  return make_report("uspread", print_spec(r.spec), result);
}

Report cmd_pgen2(const std::string& spec, const RunConfig& config, std::uint64_t samples) {
  const auto r = realize(spec, config);
  const auto p = prob_gen2(r.group, graph_options(config), samples);
  Json result = group_json(r);
  result["value"] = rat(p.value);
  result["decimal"] = to_decimal(p.value);
  result["exact"] = p.exact;
  if (!p.exact) {
    result["samples"] = p.samples;
    std::ostringstream err;
    err.precision(6);
    err << p.std_error;
    result["std_error"] = err.str();
  }
  return make_report("pgen2", print_spec(r.spec), result);
}

namespace {

Json tuple_json(const GenTuple& t) {
  return Json{{"elements", perm_list(t.elements)}, {"indices", t.indices}, {"genus", t.genus}};
}

Json index_map(const std::map<std::uint64_t, std::uint64_t>& m) {
  Json j = Json::object();
  for (const auto& [d, v] : m) j[std::to_string(d)] = v;
  return j;
}

}  // namespace

Report cmd_genus_screen(const std::string& spec, const RunConfig& config, std::int64_t g, bool insoluble_filter,
                        std::uint64_t max_k) {
  const auto r = realize(spec, config);
  GenusScreenOptions options;
  options.max_k = max_k;
  options.insoluble_filter = insoluble_filter;
  options.witness_budget = config.budget;
  options.classes = class_options(config);
  const auto screen = genus_screen(r.group, g, options);
  Json result = group_json(r);
  result["genus"] = screen.genus;
  result["target_index_sum"] = screen.target;
  result["insoluble_filter"] = insoluble_filter;
  result["max_k"] = max_k;
  result["min_index"] = index_map(screen.min_index);
  result["refuted_by_index"] = screen.refuted_by_index;
  Json sigs = Json::array();
  for (const auto& s : screen.signatures) {
    Json j{{"orders", s.orders},
           {"min_index_sum", s.min_index_sum},
           {"angle_sum", rat(s.angle_sum)},
           {"status", to_string(s.status)}};
    if (s.witness) j["witness"] = tuple_json(*s.witness);
    j["search_nodes"] = s.nodes;
    sigs.push_back(j);
  }
  result["signatures"] = sigs;
  Json survivors = Json::array();
  for (const auto* s : screen.survivors()) survivors.push_back(s->orders);
  result["survivors"] = survivors;
  return make_report("genus-screen", print_spec(r.spec), result);
}

Report cmd_genus_of(const std::string& spec, const RunConfig& config, const std::filesystem::path& tuple_file) {
  const auto r = realize(spec, config);
  std::vector<Permutation> tuple;
  for (const auto& line : read_lines(tuple_file)) tuple.push_back(r.parse_element(line));
  const auto t = genus_of(r.group, tuple);
  Json result = group_json(r);
  result["tuple"] = tuple_json(t);
  return make_report("genus-of", print_spec(r.spec), result);
}

Report cmd_ind_table(const std::string& spec, const RunConfig& config) {
  const auto r = realize(spec, config);
  const auto table = ClassTable::build(r.group, class_options(config));
  Json result = group_json(r);
  result["min_index"] = index_map(min_index_table(table));
  Json rows = Json::array();
  for (std::size_t i = 0; i < table.size(); ++i)
    rows.push_back({{"class", i + 1}, {"order", table[i].order}, {"ind", ind(table[i].rep)}, {"rep", cycles(table[i].rep)}});
  result["classes"] = rows;
  return make_report("ind-table", print_spec(r.spec), result);
}

Report cmd_base(const std::string& spec, const RunConfig& config, BaseMode mode, std::uint64_t c,
                std::uint64_t trials) {
  const auto r = realize(spec, config);
  Json result = group_json(r);
  switch (mode) {
    case BaseMode::kExact: {
      BaseOptions options;
      options.node_budget = config.budget;
      const auto b = base_size_exact(r.group, options);
      result["b"] = b.exact() ? Json(b.upper) : Json{{"lower", b.lower}, {"upper", b.upper}};
      result["exact"] = b.exact();
      result["witness"] = points(b.witness);
      result["witness_verified"] = is_base(r.group, b.witness);
      result["search_nodes"] = b.nodes;
      if (r.group.is_transitive() && r.group.order() <= config.order_cap) {
        const auto report = fpr_report(ClassTable::build(r.group, class_options(config)));
        const auto bc = bounds_check(r.group, b.upper, report.mu);
        std::ostringstream lr, l2;
        lr.precision(6);
        l2.precision(6);
        lr << bc.log_ratio;
        l2 << bc.log2_order;
        result["bounds"] = {{"mu", bc.mu},
                            {"log_order_over_log_n", lr.str()},
                            {"log2_order", l2.str()},
                            {"sandwich_holds", bc.sandwich_holds},
                            {"b_times_mu_at_least_n", bc.coupling_holds}};
      }
      break;
    }
    case BaseMode::kProb: {
      const auto est = random_base_prob(r.group, c, trials, config.seed);
      result["c"] = est.c;
      result["trials"] = est.trials;
      result["bases"] = est.bases;
      result["seed"] = est.seed;
      result["estimate"] = rat(est.estimate);
      result["decimal"] = to_decimal(est.estimate);
      break;
    }
    case BaseMode::kQhat: {
      const auto q = qhat(ClassTable::build(r.group, class_options(config)), c);
      result["c"] = c;
      result["qhat"] = rat(q);
      result["certifies_b_at_most_c"] = q < 1;
      break;
    }
  }
  return make_report("base", print_spec(r.spec), result);
}

// ---------------------------------------------------------------------------
// Expected-value tables.

namespace {

Json fpr_by_order(const RealizedSpec& r, const RunConfig& config) {
  const auto report = fpr_report(ClassTable::build(r.group, class_options(config)));
  std::map<std::uint64_t, std::set<Rational>> by_order;
  for (const auto& row : report.rows)
    if (row.order > 1) by_order[row.order].insert(row.fpr);
  Json got = Json::object();
  for (const auto& [d, values] : by_order) {
    if (values.size() == 1) {
      got[std::to_string(d)] = rat(*values.begin());
    } else {
      Json arr = Json::array();
      for (const auto& v : values) arr.push_back(rat(v));
      got[std::to_string(d)] = arr;
    }
  }
  return got;
}

Permutation select_element(const RealizedSpec& r, const Json& entry) {
  if (entry.contains("element")) return r.parse_element(entry["element"].get<std::string>());
  if (entry.contains("matrix")) {
    if (!r.matrix_action) throw InvalidArgument("'matrix' needs a matrix group");
    const auto rows = entry["matrix"].get<std::vector<std::vector<FieldElem>>>();
    return r.matrix_action->induce(FFMatrix::from_rows(Field::get(*r.q), rows));
  }
  if (entry.contains("class_order") && entry.contains("class_size")) {
    const auto table = ClassTable::build(r.group);
    for (const auto& c : table.classes())
      if (c.order == entry["class_order"].get<std::uint64_t>() && c.size == entry["class_size"].get<std::uint64_t>())
        return c.rep;
    throw InvalidArgument("no class of the given order and size");
  }
  throw InvalidArgument("entry selects no element");
}

Json class_entry(const RealizedSpec& r, const Json& entry, const RunConfig& config) {
  const auto x = select_element(r, entry);
  const auto c = class_of(r.group, x, class_options(config));
  Json got{{"degree", r.group.degree()},
           {"class_size", big(c.size)},
           {"fix", x.num_fixed_points()},
           {"fpr", rat(fpr_direct(r.group, x))}};
  if (r.group.is_transitive()) {
    const auto H = r.group.point_stabilizer(0);
    got["fusion"] = fusion_count(r.group, H, c, class_options(config));
    got["fpr_fusion"] = rat(fpr_fusion(r.group, H, c, class_options(config)));
  }
  return got;
}

Json compute_entry(const Json& entry, const RunConfig& config) {
  const std::string kind = entry.at("kind").get<std::string>();
  const auto r = realize(entry.at("spec").get<std::string>(), config);
  if (kind == "fpr-by-order") return fpr_by_order(r, config);
  if (kind == "class") return class_entry(r, entry, config);
  if (kind == "min-index") return index_map(min_index_table(ClassTable::build(r.group, class_options(config))));
  if (kind == "qhat") {
    const auto table = ClassTable::build(r.group, class_options(config));
    Json got = Json::object();
    for (std::uint64_t c : entry.at("c").get<std::vector<std::uint64_t>>()) got[std::to_string(c)] = rat(qhat(table, c));
    return got;
  }
  if (kind == "base-size") {
    BaseOptions options;
    options.node_budget = config.budget;
    const auto b = base_size_exact(r.group, options);
    if (!b.exact()) return Json{{"b", Json{{"lower", b.lower}, {"upper", b.upper}}}};
    return Json{{"b", b.upper}};
  }
  if (kind == "pgen2") return Json{{"value", rat(prob_gen2(r.group, graph_options(config)).value)}};
  if (kind == "graph") {
    const auto graph = build_graph(r.group, graph_options(config));
    const auto stats = graph_stats(graph, config.budget);
    return Json{{"vertices", stats.vertices},
                {"edges", stats.edges},
                {"connected", stats.connected},
                {"diameter", stats.diameter ? Json(*stats.diameter) : Json(nullptr)},
                {"clique_number", bound(stats.clique)},
                {"coclique_number", bound(stats.coclique)},
                {"posa", posa_check(stats.degree_sequence)}};
  }
  if (kind == "spread") {
    const auto cert = spread_exact(r.group, spread_options(config));
    return Json{{"s", cert.s ? Json(*cert.s) : Json("infinite")}, {"u", cert.u ? Json(*cert.u) : Json("infinite")}};
  }
  if (kind == "uspread") {
    USpreadOptions options;
    options.classes = class_options(config);
    const auto cert = uspread_certify(r.group, r.parse_element(entry.at("y").get<std::string>()),
                                      entry.at("k").get<std::uint64_t>(), std::nullopt, options);
    return Json{{"overgroups", cert.overgroup_orders.size()},
                {"max_total", rat(cert.max_total)},
                {"certified", cert.certified}};
  }
  if (kind == "genus-screen") {
    GenusScreenOptions options;
    options.insoluble_filter = entry.value("insoluble_filter", false);
    options.witness_budget = config.budget;
    options.classes = class_options(config);
    const auto screen = genus_screen(r.group, entry.value("g", 0), options);
    std::uint64_t realized = 0;
    for (const auto& s : screen.signatures) realized += s.status == SignatureStatus::kRealized;
    return Json{{"survivors", screen.survivors().size()}, {"realized", realized}};
  }
  throw InvalidArgument("unknown table entry kind '" + kind + "'");
}

Json load_table(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw InvalidArgument("cannot read table " + file.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(file.string() + ": " + e.what());
  }
}

}  // namespace

std::vector<std::string> table_names(const std::filesystem::path& data_dir) {
  std::vector<std::string> names;
  if (!std::filesystem::is_directory(data_dir)) throw InvalidArgument("no table directory " + data_dir.string());
  for (const auto& e : std::filesystem::directory_iterator(data_dir))
    if (e.path().extension() == ".json") names.push_back(e.path().stem().string());
  std::sort(names.begin(), names.end());
  return names;
}

Report cmd_reproduce(const std::string& which, const RunConfig& config, const std::filesystem::path& data_dir) {
  std::vector<std::string> names;
  if (which == "all") {
    names = table_names(data_dir);
  } else {
    const auto known = table_names(data_dir);
    if (std::find(known.begin(), known.end(), which) == known.end())
      throw InvalidArgument("unknown table '" + which + "'");
    names = {which};
  }

  struct Job {
    std::string table;
    std::size_t entry = 0;
    Json spec;
    std::future<Json> got;
  };
  std::vector<Job> jobs;
  for (const auto& name : names) {
    const Json table = load_table(data_dir / (name + ".json"));
    const Json& entries = table.at("entries");
    for (std::size_t i = 0; i < entries.size(); ++i) {
      Job job{name, i, entries[i], {}};
      job.got = std::async(std::launch::async, [e = entries[i], config] { return compute_entry(e, config); });
      jobs.push_back(std::move(job));
    }
  }

  Json tables = Json::array();
  std::size_t cells = 0, mismatches = 0;
  Json current;
  for (auto& job : jobs) {
    if (current.empty() || current["name"] != job.table) {
      if (!current.empty()) tables.push_back(current);
      current = Json{{"name", job.table}, {"entries", Json::array()}, {"pass", true}};
    }
    const Json got = job.got.get();
    Json cells_json = Json::array();
    bool pass = true;
    for (const auto& [key, expected] : job.spec.at("expected").items()) {
      ++cells;
      const Json actual = got.contains(key) ? got[key] : Json(nullptr);
      const bool ok = actual == expected;
      if (!ok) ++mismatches, pass = false;
      cells_json.push_back({{"key", key}, {"expected", expected}, {"got", actual}, {"pass", ok}});
    }
    current["entries"].push_back({{"spec", job.spec.at("spec")}, {"kind", job.spec.at("kind")}, {"cells", cells_json}, {"pass", pass}});
    if (!pass) current["pass"] = false;
  }
  if (!current.empty()) tables.push_back(current);

  Json result{{"tables", tables}, {"cells", cells}, {"mismatches", mismatches}, {"pass", mismatches == 0}};
  Report report = make_report("reproduce", std::nullopt, result);
  report.exit_code = mismatches == 0 ? kOk : kMismatch;
  return report;
}

}  // namespace fprlab::app
