#include "fprlab/bases.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <set>

#include <boost/dynamic_bitset.hpp>

#include "fprlab/rng.hpp"

namespace fprlab {

bool is_base(const PermGroup& G, std::span<const Point> points) { return G.pointwise_stabilizer_order(points) == 1; }

std::vector<Point> greedy_base(const PermGroup& G) {
  std::vector<Point> base;
  PermGroup H = G;
  while (!H.is_trivial()) {
    std::size_t best = 0;
    Point pick = 0;
    for (const auto& orbit : H.orbits())
      if (orbit.size() > best) best = orbit.size(), pick = orbit.front();
    base.push_back(pick);
    H = H.point_stabilizer(pick);
  }
  return base;
}

namespace {

struct BudgetExhausted {};

struct BaseSearch {
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<Point> chosen{};

  bool dfs(const PermGroup& H, std::uint64_t left) {
    if (++nodes > budget) throw BudgetExhausted{};
    if (H.is_trivial()) return true;
    if (left == 0) return false;
    auto orbits = H.orbits();
    std::stable_sort(orbits.begin(), orbits.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    if (orbits.front().size() == 1) return false;
    BigInt reach = 1;
    for (std::uint64_t i = 0; i < left; ++i) reach *= orbits.front().size();
    if (reach < H.order()) return false;
    for (const auto& orbit : orbits) {
      if (orbit.size() == 1) break;
      chosen.push_back(orbit.front());
      if (dfs(H.point_stabilizer(orbit.front()), left - 1)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

BaseSize base_size_exact(const PermGroup& G, const BaseOptions& options) {
  BaseSize result;
  result.witness = greedy_base(G);
  result.upper = result.witness.size();
  BaseSearch search{options.node_budget};
  try {
    for (std::uint64_t depth = 0; depth < result.upper; ++depth) {
      search.chosen.clear();
      if (search.dfs(G, depth)) {
        result.witness = search.chosen;
        result.upper = depth;
        break;
      }
      result.lower = depth + 1;
    }
    result.lower = result.upper;
  } catch (const BudgetExhausted&) {
  }
  result.nodes = std::min(search.nodes, options.node_budget);
  return result;
}

Rational qhat(const ClassTable& table, std::uint64_t c) {
  const long long n = static_cast<long long>(table.group().degree());
  Rational total = 0;
  for (std::size_t i : table.prime_order_indices()) {
    const auto& cls = table[i];
    const Rational f(static_cast<long long>(cls.rep.num_fixed_points()), n);
    Rational power = 1;
    for (std::uint64_t k = 0; k < c; ++k) power *= f;
    total += Rational(cls.size) * power;
  }
  return total;
}

namespace {

using Bits = boost::dynamic_bitset<std::uint64_t>;

// fixers[a] has bit i set iff element i of G fixes point a.
std::vector<Bits> fixer_sets(const PermGroup& G) {
  const std::size_t n = G.degree();
  const std::uint64_t order = G.order_u64();
  std::vector<Bits> fixers(n, Bits(order));
  std::uint64_t i = 0;
  G.chain().for_each_element([&](const Permutation& g) {
    for (Point a = 0; a < n; ++a)
      if (g[a] == a) fixers[a].set(i);
    ++i;
  });
  return fixers;
}

constexpr std::uint64_t kFixerCap = 50'000'000;  // bits

class TupleTester {
 public:
  explicit TupleTester(const PermGroup& G) : G_(G) {
    if (G.order() * G.degree() <= kFixerCap) fixers_ = fixer_sets(G);
  }

  bool is_base(const std::vector<Point>& tuple) const {
    if (fixers_.empty()) return fprlab::is_base(G_, tuple);
    if (tuple.empty()) return G_.is_trivial();
    Bits common = fixers_[tuple[0]];
    for (std::size_t i = 1; i < tuple.size(); ++i) common &= fixers_[tuple[i]];
    return common.count() == 1;
  }

 private:
  const PermGroup& G_;
  std::vector<Bits> fixers_;
};

}  // namespace

RandomBaseEstimate random_base_prob(const PermGroup& G, std::uint64_t c, std::uint64_t trials, std::uint64_t seed) {
  if (trials == 0) throw InvalidArgument("trials must be at least 1");
  const TupleTester tester(G);
  const std::size_t n = G.degree();
  constexpr std::uint64_t kChunks = 8;
  auto run_chunk = [&](std::uint64_t chunk) {
    auto rng = make_rng(seed, Stream::kMonteCarlo, chunk);
    const std::uint64_t begin = trials * chunk / kChunks, end = trials * (chunk + 1) / kChunks;
    std::uint64_t hits = 0;
    std::vector<Point> tuple(c);
    for (std::uint64_t t = begin; t < end; ++t) {
      for (auto& p : tuple) p = static_cast<Point>(uniform_below(rng, n));
      if (tester.is_base(tuple)) ++hits;
    }
    return hits;
  };
  std::vector<std::future<std::uint64_t>> futures;
  for (std::uint64_t k = 0; k < kChunks; ++k) futures.push_back(std::async(std::launch::async, run_chunk, k));
  RandomBaseEstimate est;
  est.c = c;
  est.trials = trials;
  est.seed = seed;
  for (auto& f : futures) est.bases += f.get();
  est.estimate = Rational(BigInt(est.bases), BigInt(trials));
  return est;
}

Rational exact_base_tuple_fraction(const PermGroup& G, std::uint64_t c) {
  const std::size_t n = G.degree();
  BigInt total = 1;
  for (std::uint64_t i = 0; i < c; ++i) total *= n;
  if (total > 10'000'000) throw CapExceeded("too many tuples to enumerate: " + total.str());
  const TupleTester tester(G);
  std::vector<Point> tuple(c, 0);
  std::uint64_t bases = 0;
  while (true) {
    if (tester.is_base(tuple)) ++bases;
    std::size_t i = 0;
    while (i < c && ++tuple[i] == n) tuple[i++] = 0;
    if (i == c) break;
  }
  return Rational(BigInt(bases), total);
}

BoundsCheck bounds_check(const PermGroup& G, std::uint64_t b, std::uint64_t mu) {
  BoundsCheck r;
  r.n = G.degree();
  r.order = G.order();
  r.b = b;
  r.mu = mu;
  const double log_order = std::log(static_cast<double>(r.order));
  r.log2_order = log_order / std::log(2.0);
  r.log_ratio = r.n >= 2 ? log_order / std::log(static_cast<double>(r.n)) : 0.0;
  BigInt n_pow = 1, two_pow = 1;
  for (std::uint64_t i = 0; i < b; ++i) n_pow *= r.n, two_pow *= 2;
  r.sandwich_holds = r.order <= n_pow && two_pow <= r.order;
  r.coupling_holds = b * mu >= r.n;
  return r;
}

}  // namespace fprlab
