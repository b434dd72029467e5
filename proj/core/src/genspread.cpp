#include "fprlab/genspread.hpp"

#include <algorithm>
#include <cmath>
#include <future>

#include "fprlab/fpr.hpp"
#include "fprlab/rng.hpp"
#include "fprlab/subgroups.hpp"

namespace fprlab {

bool generates(const PermGroup& G, std::span<const Permutation> elements) {
  for (const auto& g : elements)
    if (!G.contains(g)) throw NotAMember("element is not in the group");
  StabilizerChain::Options options;
  options.seed = G.seed();
  options.known_order = G.order();
  return StabilizerChain::build(G.degree(), elements, options).order() == G.order();
}

bool generates(const PermGroup& G, const Permutation& x, const Permutation& y) {
  const Permutation pair[] = {x, y};
  return generates(G, pair);
}

// ---------------------------------------------------------------------------
// CayleyTable

CayleyTable CayleyTable::build(const PermGroup& G, std::uint64_t cap) {
  const BigInt order = G.order();
  if (order > cap) throw CapExceeded("group order " + order.str() + " exceeds the table cap " + std::to_string(cap));
  CayleyTable t(G);
  const auto& chain = G.chain();
  t.n_ = static_cast<std::uint32_t>(order);
  const std::uint32_t n = t.n_;
  t.elements_.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) t.elements_.push_back(chain.element_at(i));

  std::vector<Permutation> gens;
  for (const auto& s : small_generating_set(G, G.seed()))
    if (!s.is_identity()) gens.push_back(s);

  // right[s][i] = index of element_i * gen_s.
  std::vector<std::vector<std::uint32_t>> right(gens.size(), std::vector<std::uint32_t>(n));
  for (std::size_t s = 0; s < gens.size(); ++s)
    for (std::uint32_t i = 0; i < n; ++i) right[s][i] = static_cast<std::uint32_t>(*chain.index_of(t.elements_[i] * gens[s]));

  // Spanning tree: element_j = element_parent[j] * gen_via[j].
  std::vector<std::uint32_t> parent(n, 0), via(n, 0), order_bfs{0};
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t k = 0; k < order_bfs.size(); ++k)
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const std::uint32_t j = right[s][order_bfs[k]];
      if (seen[j]) continue;
      seen[j] = true;
      parent[j] = order_bfs[k];
      via[j] = static_cast<std::uint32_t>(s);
      order_bfs.push_back(j);
    }
  if (order_bfs.size() != n) throw Error("internal: generating set does not reach every element");

  t.table_.assign(std::size_t(n) * n, 0);
  t.inverse_.assign(n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    std::uint32_t* row = &t.table_[std::size_t(i) * n];
    row[0] = i;
    for (std::size_t k = 1; k < order_bfs.size(); ++k) {
      const std::uint32_t j = order_bfs[k];
      row[j] = right[via[j]][row[parent[j]]];
    }
    for (std::uint32_t j = 0; j < n; ++j)
      if (row[j] == 0) t.inverse_[i] = j;
  }
  t.stamp_.assign(n, 0);
  t.queue_.reserve(n);
  return t;
}

std::uint32_t CayleyTable::index(const Permutation& g) const {
  const auto idx = group_.chain().index_of(g);
  if (!idx) throw NotAMember("element is not in the group");
  return static_cast<std::uint32_t>(*idx);
}

bool CayleyTable::generates(std::uint32_t a, std::uint32_t b) const {
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  queue_.clear();
  queue_.push_back(0);
  stamp_[0] = epoch_;
  const std::uint32_t gens[2] = {a, b};
  for (std::size_t k = 0; k < queue_.size(); ++k) {
    if (2 * queue_.size() > n_) return true;
    for (std::uint32_t s : gens) {
      const std::uint32_t j = mul(queue_[k], s);
      if (stamp_[j] == epoch_) continue;
      stamp_[j] = epoch_;
      queue_.push_back(j);
    }
  }
  return 2 * queue_.size() > n_;
}

Bitset CayleyTable::closure(std::span<const std::uint32_t> gens) const {
  Bitset in(n_);
  std::vector<std::uint32_t> queue{0};
  in.set(0);
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (std::uint32_t s : gens) {
      const std::uint32_t j = mul(queue[k], s);
      if (in[j]) continue;
      in.set(j);
      queue.push_back(j);
    }
  return in;
}

// ---------------------------------------------------------------------------
// Generating graph

std::uint64_t GeneratingGraph::edge_count() const {
  std::uint64_t total = 0;
  for (const auto& row : adjacency_) total += row.count();
  return total / 2;
}

Bitset GeneratingGraph::non_generators(std::uint32_t v) const {
  const std::uint32_t n = table_->size();
  const std::uint32_t x = v + 1;
  Bitset out(n);
  for (std::uint32_t y = 1; y < n; ++y)
    if (!adjacency_[v][y - 1]) out.set(y);
  // Loops and the identity are not edges; decide them directly.
  if (table_->generates(x, x)) out.reset(x);
  if (!table_->generates(x, 0)) out.set(0);
  return out;
}

GeneratingGraph build_graph(const PermGroup& G, const GraphOptions& options) {
  GeneratingGraph graph;
  auto table = std::make_shared<CayleyTable>(CayleyTable::build(G, options.order_cap));
  ClassOptions class_options;
  class_options.seed = options.seed;
  auto classes = std::make_shared<ClassTable>(ClassTable::build(G, class_options));
  const std::uint32_t n = table->size();
  const std::uint32_t V = n - 1;
  graph.adjacency_.assign(V, Bitset(V));

  std::vector<std::uint32_t> gens;
  for (const auto& s : small_generating_set(G, options.seed))
    if (!s.is_identity()) gens.push_back(table->index(s));

  std::vector<bool> seen(n, false);
  for (std::size_t c = 0; c < classes->size(); ++c) {
    const std::uint32_t r = table->index((*classes)[c].rep);
    if (r == 0) continue;
    graph.rep_vertices_.push_back(r - 1);
    Bitset nr(V);
    for (std::uint32_t y = 1; y < n; ++y)
      if (y != r && table->generates(r, y)) nr.set(y - 1);
    // Walk the class; x = g^-1 r g and N(x) = g^-1 N(r) g.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> queue{{r, 0}};
    seen[r] = true;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      const auto [x, g] = queue[k];
      Bitset& row = graph.adjacency_[x - 1];
      for (auto y = nr.find_first(); y != Bitset::npos; y = nr.find_next(y))
        row.set(table->conj(static_cast<std::uint32_t>(y + 1), g) - 1);
      for (std::uint32_t s : gens) {
        const std::uint32_t xs = table->conj(x, s);
        if (seen[xs]) continue;
        seen[xs] = true;
        queue.emplace_back(xs, table->mul(g, s));
      }
    }
  }
  graph.table_ = std::move(table);
  graph.classes_ = std::move(classes);
  return graph;
}

// ---------------------------------------------------------------------------
// P(G, 2)

namespace {

// Ordered pairs (x, y) with <x, y> = G, counted over class representatives.
BigInt generating_pairs(const CayleyTable& table, const ClassTable& classes) {
  BigInt total = 0;
  for (const auto& c : classes.classes()) {
    const std::uint32_t r = table.index(c.rep);
    std::uint64_t count = 0;
    for (std::uint32_t y = 0; y < table.size(); ++y)
      if (table.generates(r, y)) ++count;
    total += c.size * count;
  }
  return total;
}

}  // namespace

ProbGen2 prob_gen2(const PermGroup& G, const GraphOptions& options, std::uint64_t estimate_samples) {
  ProbGen2 result;
  const BigInt order = G.order();
  if (order <= options.order_cap) {
    const auto table = CayleyTable::build(G, options.order_cap);
    ClassOptions class_options;
    class_options.seed = options.seed;
    const auto classes = ClassTable::build(G, class_options);
    result.value = Rational(generating_pairs(table, classes), order * order);
    return result;
  }
  if (estimate_samples == 0)
    throw CapExceeded("group order " + order.str() + " exceeds the exact cap " + std::to_string(options.order_cap) +
                      "; request an estimate");
  auto rng = make_rng(options.seed, Stream::kMonteCarlo, 0);
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < estimate_samples; ++i) {
    const auto x = G.random_element(rng);
    const auto y = G.random_element(rng);
    if (generates(G, x, y)) ++hits;
  }
  result.exact = false;
  result.samples = estimate_samples;
  result.value = Rational(BigInt(hits), BigInt(estimate_samples));
  const double p = static_cast<double>(hits) / static_cast<double>(estimate_samples);
  result.std_error = std::sqrt(p * (1 - p) / static_cast<double>(estimate_samples));
  return result;
}

Rational prob_gen2(const GeneratingGraph& graph) {
  const CayleyTable& table = graph.table();
  const BigInt n = table.size();
  if (n == 1) return 1;
  // Edges count unordered pairs of distinct non-identity elements; add the
  // pairs (x, x), (x, 1), (1, x), which only occur for cyclic groups.
  BigInt pairs = 2 * BigInt(graph.edge_count());
  for (std::uint32_t v = 0; v < graph.vertex_count(); ++v)
    if (table.generates(v + 1, v + 1)) pairs += 3;
  return Rational(pairs, n * n);
}

// ---------------------------------------------------------------------------
// Graph statistics

namespace {

// Number of colours in a greedy colouring of `R`.
std::uint64_t greedy_colours(const std::vector<Bitset>& adj, Bitset R) {
  std::uint64_t colours = 0;
  while (R.any()) {
    ++colours;
    Bitset Q = R;
    for (auto v = Q.find_first(); v != Bitset::npos; v = Q.find_first()) {
      Q.reset(v);
      R.reset(v);
      Q -= adj[v];
    }
  }
  return colours;
}

// Maximum clique by branch and bound with greedy colouring bounds.
struct CliqueSearch {
  const std::vector<Bitset>& adj;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::uint64_t best = 0;
  bool cut = false;

  void expand(Bitset R, std::uint64_t size) {
    if (++nodes > budget) {
      cut = true;
      return;
    }
    std::vector<std::uint32_t> order, colour;
    Bitset uncoloured = R;
    std::uint32_t c = 0;
    while (uncoloured.any()) {
      ++c;
      Bitset Q = uncoloured;
      for (auto v = Q.find_first(); v != Bitset::npos; v = Q.find_first()) {
        Q.reset(v);
        uncoloured.reset(v);
        Q -= adj[v];
        order.push_back(static_cast<std::uint32_t>(v));
        colour.push_back(c);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (size + colour[i] <= best) return;
      const std::uint32_t v = order[i];
      Bitset next = R & adj[v];
      if (next.none()) {
        best = std::max(best, size + 1);
      } else {
        expand(std::move(next), size + 1);
        if (cut) return;
      }
      R.reset(v);
    }
  }
};

// Clique number of a vertex-transitive-on-classes graph: every clique is
// conjugate to one through a class representative.
Bound clique_bound(const std::vector<Bitset>& adj, const std::vector<std::uint32_t>& reps, std::uint64_t budget,
                   std::uint64_t& nodes) {
  Bound b;
  if (adj.empty()) return b;
  CliqueSearch search{adj, budget};
  search.best = 1;
  std::uint64_t upper = 1;
  for (std::uint32_t r : reps) {
    if (!search.cut) {
      search.expand(adj[r], 1);
      if (!search.cut) continue;
    }
    upper = std::max(upper, 1 + greedy_colours(adj, adj[r]));
  }
  nodes += std::min(search.nodes, budget);
  b.lower = search.best;
  b.upper = std::max(upper, search.best);
  return b;
}

}  // namespace

GraphStats graph_stats(const GeneratingGraph& graph, std::uint64_t node_budget) {
  GraphStats stats;
  const std::uint32_t V = graph.vertex_count();
  stats.vertices = V;
  stats.edges = graph.edge_count();
  for (std::uint32_t v = 0; v < V; ++v) stats.degree_sequence.push_back(graph.degree(v));
  std::sort(stats.degree_sequence.begin(), stats.degree_sequence.end());

  // Conjugation is an automorphism, so eccentricities are class functions.
  stats.connected = true;
  std::uint64_t diameter = 0;
  for (std::uint32_t r : graph.class_rep_vertices()) {
    Bitset visited(V), frontier(V);
    visited.set(r);
    frontier.set(r);
    std::uint64_t depth = 0;
    while (true) {
      Bitset next(V);
      for (auto v = frontier.find_first(); v != Bitset::npos; v = frontier.find_next(v)) next |= graph.neighbors(v);
      next -= visited;
      if (next.none()) break;
      visited |= next;
      frontier = std::move(next);
      ++depth;
    }
    if (visited.count() != V) {
      stats.connected = false;
      break;
    }
    diameter = std::max(diameter, depth);
  }
  if (stats.connected) stats.diameter = diameter;

  std::vector<Bitset> adj(V), comp(V);
  for (std::uint32_t v = 0; v < V; ++v) {
    adj[v] = graph.neighbors(v);
    comp[v] = ~adj[v];
    comp[v].reset(v);
  }
  const auto& reps = graph.class_rep_vertices();
  stats.clique = clique_bound(adj, reps, node_budget / 2, stats.nodes);
  stats.coclique = clique_bound(comp, reps, node_budget / 2, stats.nodes);
  return stats;
}

namespace {

struct DSatur {
  const std::vector<Bitset>& adj;
  std::uint64_t budget;
  std::uint32_t V;
  std::uint64_t lower;
  std::uint64_t best;  // colours in the best colouring found
  std::uint64_t nodes = 0;
  bool cut = false;
  std::vector<std::int32_t> colour{};
  std::vector<std::uint32_t> forbid{};  // V x best_cap
  std::vector<std::uint32_t> saturation{};
  std::vector<std::uint64_t> degree{};

  std::uint32_t& forbidden(std::uint32_t v, std::uint32_t c) { return forbid[std::size_t(v) * best_cap + c]; }
  std::uint64_t best_cap = 0;

  void assign(std::uint32_t v, std::uint32_t c, int delta) {
    colour[v] = delta > 0 ? static_cast<std::int32_t>(c) : -1;
    for (auto u = adj[v].find_first(); u != Bitset::npos; u = adj[v].find_next(u)) {
      auto& f = forbidden(static_cast<std::uint32_t>(u), c);
      if (delta > 0) {
        if (f++ == 0) ++saturation[u];
      } else if (--f == 0) {
        --saturation[u];
      }
    }
  }

  void search(std::uint32_t coloured, std::uint32_t used) {
    if (cut || best == lower) return;
    if (++nodes > budget) {
      cut = true;
      return;
    }
    if (coloured == V) {
      best = used;
      return;
    }
    std::uint32_t v = 0;
    std::int64_t key = -1;
    for (std::uint32_t u = 0; u < V; ++u) {
      if (colour[u] >= 0) continue;
      const std::int64_t k = std::int64_t(saturation[u]) * (V + 1) + std::int64_t(degree[u]);
      if (k > key) key = k, v = u;
    }
    for (std::uint32_t c = 0; c <= used && c + 1 < best; ++c) {
      if (forbidden(v, c)) continue;
      assign(v, c, +1);
      search(coloured + 1, std::max(used, c + 1));
      assign(v, c, -1);
      if (cut || best == lower) return;
    }
  }
};

}  // namespace

Bound chromatic_number(const GeneratingGraph& graph, std::uint64_t node_budget) {
  const std::uint32_t V = graph.vertex_count();
  if (V == 0) return {};
  std::vector<Bitset> adj(V);
  for (std::uint32_t v = 0; v < V; ++v) adj[v] = graph.neighbors(v);
  std::uint64_t nodes = 0;
  const Bound clique = clique_bound(adj, graph.class_rep_vertices(), node_budget / 4, nodes);
  Bitset all(V);
  all.set();
  const std::uint64_t greedy = greedy_colours(adj, all);

  DSatur d{adj, node_budget, V, clique.lower, greedy + 1};
  d.best_cap = greedy + 1;
  d.colour.assign(V, -1);
  d.forbid.assign(std::size_t(V) * d.best_cap, 0);
  d.saturation.assign(V, 0);
  for (std::uint32_t v = 0; v < V; ++v) d.degree.push_back(adj[v].count());
  d.search(0, 0);
  const std::uint64_t upper = std::min(greedy, d.best);
  if (!d.cut) return {upper, upper};
  return {clique.lower, upper};
}

bool posa_check(std::vector<std::uint64_t> degrees) {
  std::sort(degrees.begin(), degrees.end());
  const std::size_t m = degrees.size();
  for (std::size_t k = 1; 2 * k < m; ++k)
    if (degrees[k - 1] < k + 1) return false;
  return true;
}

bool posa_check(const GeneratingGraph& graph) {
  std::vector<std::uint64_t> degrees;
  for (std::uint32_t v = 0; v < graph.vertex_count(); ++v) degrees.push_back(graph.degree(v));
  return posa_check(std::move(degrees));
}

// ---------------------------------------------------------------------------
// Spread

namespace {

// Minimum cover of `universe` by the sets nongen[x] (x != identity), by
// iterative deepening. The first set ranges over class representatives
// only; later levels branch on the uncovered element with fewest
// candidate sets (nongen is symmetric, so its candidates are nongen[e]).
struct CoverSearch {
  const std::vector<Bitset>& nongen;
  const Bitset& universe;
  const std::vector<std::uint32_t>& first_level;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<std::uint64_t> candidates;  // per element
  std::uint64_t max_set = 0;
  std::vector<std::uint32_t> chosen;

  CoverSearch(const std::vector<Bitset>& ng, const Bitset& u, const std::vector<std::uint32_t>& first, std::uint64_t b)
      : nongen(ng), universe(u), first_level(first), budget(b) {
    candidates.resize(ng.size());
    for (std::size_t e = 0; e < ng.size(); ++e) candidates[e] = ng[e].count() - (ng[e][0] ? 1 : 0);
    for (std::size_t x = 1; x < ng.size(); ++x) max_set = std::max<std::uint64_t>(max_set, (ng[x] & u).count());
  }

  bool coverable() const {
    for (auto e = universe.find_first(); e != Bitset::npos; e = universe.find_next(e))
      if (candidates[e] == 0) return false;
    return true;
  }

  bool dfs(const Bitset& covered, std::uint64_t depth_left) {
    if (++nodes > budget) throw CapExceeded("set-cover search exceeded its node budget of " + std::to_string(budget));
    const Bitset uncovered = universe - covered;
    if (uncovered.none()) return true;
    if (depth_left == 0) return false;
    if (uncovered.count() > depth_left * max_set) return false;
    auto try_set = [&](std::uint32_t x) {
      chosen.push_back(x);
      if (dfs(covered | (nongen[x] & universe), depth_left - 1)) return true;
      chosen.pop_back();
      return false;
    };
    if (chosen.empty()) {
      for (std::uint32_t x : first_level)
        if (try_set(x)) return true;
      return false;
    }
    std::size_t e = uncovered.find_first();
    for (auto f = uncovered.find_next(e); f != Bitset::npos; f = uncovered.find_next(f))
      if (candidates[f] < candidates[e]) e = f;
    const Bitset& options = nongen[e];
    for (auto x = options.find_next(0); x != Bitset::npos; x = options.find_next(x))
      if (try_set(static_cast<std::uint32_t>(x))) return true;
    return false;
  }

  // Size of a minimum cover, or nullopt if none exists.
  std::optional<std::uint64_t> solve() {
    if (!coverable()) return std::nullopt;
    const Bitset none(universe.size());
    for (std::uint64_t depth = 1;; ++depth) {
      chosen.clear();
      if (dfs(none, depth)) return depth;
    }
  }
};

}  // namespace

SpreadCert spread_exact(const PermGroup& G, const SpreadOptions& options) {
  const BigInt order = G.order();
  if (order > options.order_cap)
    throw CapExceeded("group order " + order.str() + " exceeds the spread cap " + std::to_string(options.order_cap));
  GraphOptions graph_options;
  graph_options.order_cap = options.order_cap;
  graph_options.seed = options.seed;
  return spread_exact(build_graph(G, graph_options), options);
}

SpreadCert spread_exact(const GeneratingGraph& graph, const SpreadOptions& options) {
  const CayleyTable& table = graph.table();
  const ClassTable& classes = graph.classes();
  if (table.size() > options.order_cap)
    throw CapExceeded("group order " + std::to_string(table.size()) + " exceeds the spread cap " +
                      std::to_string(options.order_cap));
  const std::uint32_t n = table.size();
  SpreadCert cert;
  if (n == 1) return cert;  // trivial group: no non-identity elements; s and u are infinite

  std::vector<Bitset> nongen(n);
  nongen[0] = Bitset(n);
  for (std::uint32_t y = 0; y < n; ++y)
    if (!table.generates(0, y)) nongen[0].set(y);
  for (std::uint32_t v = 0; v < graph.vertex_count(); ++v) nongen[v + 1] = graph.non_generators(v);

  std::vector<std::uint32_t> reps;
  for (std::uint32_t r : graph.class_rep_vertices()) reps.push_back(r + 1);

  Bitset everything(n);
  everything.set();
  {
    CoverSearch search(nongen, everything, reps, options.node_budget);
    const auto size = search.solve();
    cert.nodes += search.nodes;
    if (size) {
      cert.s = *size - 1;
      for (std::uint32_t x : search.chosen) cert.s_failing.push_back(table.element(x));
    }
  }

  std::vector<std::size_t> class_ids;
  for (std::size_t c = 0; c < classes.size(); ++c)
    if (classes[c].order > 1) class_ids.push_back(c);
  std::vector<Bitset> members(classes.size(), Bitset(n));
  for (std::uint32_t i = 0; i < n; ++i) members[classes.class_index_of_element(i)].set(i);

  auto solve_class = [&](std::size_t c) {
    CoverSearch search(nongen, members[c], reps, options.node_budget);
    ClassCover cover;
    cover.class_index = c;
    cover.rep = classes[c].rep;
    cover.size = search.solve();
    if (cover.size)
      for (std::uint32_t x : search.chosen) cover.cover.push_back(table.element(x));
    return std::make_pair(std::move(cover), search.nodes);
  };
  std::vector<std::pair<ClassCover, std::uint64_t>> results;
  if (options.parallel) {
    std::vector<std::future<std::pair<ClassCover, std::uint64_t>>> futures;
    for (std::size_t c : class_ids) futures.push_back(std::async(std::launch::async, solve_class, c));
    for (auto& f : futures) results.push_back(f.get());
  } else {
    for (std::size_t c : class_ids) results.push_back(solve_class(c));
  }

  bool infinite = false;
  std::uint64_t best = 0;
  for (auto& [cover, nodes] : results) {
    cert.nodes += nodes;
    if (!infinite) {
      if (!cover.size) {
        infinite = true;
        cert.witness_class = cover.class_index;
      } else if (!cert.witness_class || *cover.size > best) {
        best = *cover.size;
        cert.witness_class = cover.class_index;
      }
    }
    cert.class_covers.push_back(std::move(cover));
  }
  if (!infinite && cert.witness_class) cert.u = best - 1;
  return cert;
}

// ---------------------------------------------------------------------------
// Uniform spread certificate

USpreadCertificate uspread_certify(const PermGroup& G, const Permutation& y, std::uint64_t k,
                                   const std::optional<std::vector<PermGroup>>& overgroups,
                                   const USpreadOptions& options) {
  if (k == 0) throw InvalidArgument("k must be positive");
  if (!G.contains(y)) throw NotAMember("y is not an element of G");
  USpreadCertificate cert;
  cert.y = y;
  cert.k = k;

  std::vector<PermGroup> maximal;
  if (overgroups) {
    maximal = maximal_overgroups(G, y, *overgroups);
    cert.trust_note =
        "conditional on supplied overgroups: the list is assumed to contain every maximal subgroup of G containing y";
  } else {
    const BigInt order = G.order();
    if (order > options.overgroup_cap)
      throw CapExceeded("maximal overgroups unavailable: group order " + order.str() + " exceeds the cap " +
                        std::to_string(options.overgroup_cap) + "; supply them explicitly");
    SubgroupSearchOptions search;
    search.order_cap = options.overgroup_cap;
    maximal = maximal_overgroups(G, y, search);
  }
  for (const auto& H : maximal) {
    cert.overgroup_orders.push_back(H.order());
    cert.overgroup_generators.push_back(H.generators());
  }

  const auto table = ClassTable::build(G, options.classes);
  for (std::size_t i : table.prime_order_indices()) {
    const ConjClass& c = table[i];
    USpreadRow row;
    row.x = c.rep;
    row.order = c.order;
    row.class_size = c.size;
    for (std::size_t h = 0; h < maximal.size(); ++h) {
      const Rational f = fpr_fusion(G, maximal[h], c, options.classes);
      row.summands.push_back({h, f});
      row.total += f;
    }
    cert.max_total = std::max(cert.max_total, row.total);
    cert.rows.push_back(std::move(row));
  }
  cert.vacuous = maximal.empty();
  cert.certified = cert.vacuous || cert.max_total < Rational(1, static_cast<long long>(k));
  return cert;
}

}  // namespace fprlab
