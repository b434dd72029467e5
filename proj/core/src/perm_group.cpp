#include "fprlab/perm_group.hpp"

#include <algorithm>
#include <numeric>

namespace fprlab {

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators, std::uint64_t seed)
    : degree_(degree), generators_(std::move(generators)), seed_(seed), cache_(std::make_shared<ChainCache>()) {
  if (degree == 0) throw InvalidArgument("permutation groups need positive degree");
  for (const auto& g : generators_)
    if (g.degree() != degree) throw DegreeMismatch("generator degree differs from group degree");
  if (generators_.empty()) generators_.emplace_back(degree);
}

PermGroup PermGroup::trivial(std::size_t degree, std::uint64_t seed) { return PermGroup(degree, {}, seed); }

const StabilizerChain& PermGroup::chain() const {
  std::call_once(cache_->once, [this] {
    cache_->chain = std::make_unique<StabilizerChain>(build_chain(*this, seed_));
  });
  return *cache_->chain;
}

StabilizerChain build_chain(const PermGroup& group, std::uint64_t seed) {
  StabilizerChain::Options options;
  options.seed = seed;
  return StabilizerChain::build(group.degree(), group.generators(), options);
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) throw DegreeMismatch("membership test with wrong degree");
  return chain().contains(g);
}

bool PermGroup::is_trivial() const {
  return std::all_of(generators_.begin(), generators_.end(), [](const Permutation& g) { return g.is_identity(); });
}

std::vector<Point> PermGroup::orbit(Point alpha) const {
  if (alpha >= degree_) throw InvalidArgument("orbit point outside the domain");
  std::vector<Point> result{alpha};
  std::vector<bool> seen(degree_, false);
  seen[alpha] = true;
  for (std::size_t k = 0; k < result.size(); ++k) {
    for (const auto& g : generators_) {
      const Point b = g.image(result[k]);
      if (!seen[b]) {
        seen[b] = true;
        result.push_back(b);
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  std::vector<bool> seen(degree_, false);
  std::vector<std::vector<Point>> result;
  for (Point a = 0; a < degree_; ++a) {
    if (seen[a]) continue;
    auto o = orbit(a);
    for (Point b : o) seen[b] = true;
    result.push_back(std::move(o));
  }
  return result;
}

bool PermGroup::is_transitive() const { return orbit(0).size() == degree_; }

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), Point{0}); }
  Point find(Point a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  bool unite(Point a, Point b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
  std::vector<Point> parent;
};

}  // namespace

bool PermGroup::is_primitive() const {
  if (!is_transitive()) throw NotTransitive("primitivity is only defined for transitive groups");
  if (degree_ <= 2) return true;
  // For each beta, the finest G-invariant partition joining 0 and beta.
  // G is primitive iff every such partition is the trivial one-block one.
  for (Point beta = 1; beta < degree_; ++beta) {
    UnionFind uf(degree_);
    std::vector<std::pair<Point, Point>> queue{{0, beta}};
    uf.unite(0, beta);
    for (std::size_t k = 0; k < queue.size(); ++k) {
      const auto [a, b] = queue[k];
      for (const auto& g : generators_) {
        const Point ga = g.image(a);
        const Point gb = g.image(b);
        if (uf.unite(ga, gb)) queue.emplace_back(ga, gb);
      }
    }
    std::size_t block_size = 0;
    const Point root = uf.find(0);
    for (Point a = 0; a < degree_; ++a)
      if (uf.find(a) == root) ++block_size;
    if (block_size < degree_) return false;
  }
  return true;
}

PermGroup PermGroup::pointwise_stabilizer(std::span<const Point> points) const {
  StabilizerChain::Options options;
  options.seed = seed_;
  options.base_prefix.assign(points.begin(), points.end());
  options.known_order = order();
  auto rebased = StabilizerChain::build(degree_, generators_, options);
  // Depth of the stabilizer: number of distinct prefix points.
  std::vector<Point> distinct;
  for (Point p : points)
    if (std::find(distinct.begin(), distinct.end(), p) == distinct.end()) distinct.push_back(p);
  const std::size_t depth = distinct.size();
  if (depth >= rebased.levels().size()) return PermGroup::trivial(degree_, seed_);
  return PermGroup(degree_, rebased.levels()[depth].generators, seed_);
}

BigInt PermGroup::pointwise_stabilizer_order(std::span<const Point> points) const {
  StabilizerChain::Options options;
  options.seed = seed_;
  options.base_prefix.assign(points.begin(), points.end());
  options.known_order = order();
  auto rebased = StabilizerChain::build(degree_, generators_, options);
  std::size_t depth = 0;
  std::vector<Point> distinct;
  for (Point p : points)
    if (std::find(distinct.begin(), distinct.end(), p) == distinct.end()) distinct.push_back(p);
  depth = distinct.size();
  return rebased.stabilizer_order(depth);
}

PermGroup PermGroup::point_stabilizer(Point alpha) const {
  const Point pts[] = {alpha};
  return pointwise_stabilizer(pts);
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (other.degree() != degree_) return false;
  return std::all_of(generators_.begin(), generators_.end(),
                     [&other](const Permutation& g) { return other.contains(g); });
}

std::vector<Permutation> PermGroup::elements(std::uint64_t cap) const {
  const BigInt ord = order();
  if (ord > cap) throw CapExceeded("group order " + ord.str() + " exceeds element enumeration cap " + std::to_string(cap));
  std::vector<Permutation> result;
  result.reserve(static_cast<std::size_t>(ord));
  chain().for_each_element([&result](const Permutation& g) { result.push_back(g); });
  return result;
}

PermGroup PermGroup::join(const Permutation& extra) const {
  auto gens = generators_;
  gens.push_back(extra);
  return PermGroup(degree_, std::move(gens), seed_);
}

PermGroup symmetric_group(std::size_t n) {
  if (n <= 1) return PermGroup::trivial(std::max<std::size_t>(n, 1));
  std::vector<Point> cycle(n);
  std::iota(cycle.begin(), cycle.end(), Point{0});
  std::vector<Permutation> gens{Permutation::from_cycle_list(n, {{0, 1}})};
  if (n > 2) gens.push_back(Permutation::from_cycle_list(n, {cycle}));
  return PermGroup(n, std::move(gens));
}

PermGroup alternating_group(std::size_t n) {
  if (n <= 2) return PermGroup::trivial(std::max<std::size_t>(n, 1));
  std::vector<Permutation> gens{Permutation::from_cycle_list(n, {{0, 1, 2}})};
  if (n > 3) {
    std::vector<Point> cycle;
    // (1..n) is even for odd n; for even n use (2..n).
    for (Point a = (n % 2 == 1) ? 0 : 1; a < n; ++a) cycle.push_back(a);
    gens.push_back(Permutation::from_cycle_list(n, {cycle}));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup cyclic_group(std::size_t n) {
  if (n <= 1) return PermGroup::trivial(1);
  std::vector<Point> cycle(n);
  std::iota(cycle.begin(), cycle.end(), Point{0});
  return PermGroup(n, {Permutation::from_cycle_list(n, {cycle})});
}

PermGroup dihedral_group(std::size_t order) {
  if (order < 2 || order % 2 != 0) throw InvalidArgument("dihedral group order must be even and at least 2");
  const std::size_t m = order / 2;
  if (m == 1) return PermGroup(2, {Permutation::from_cycle_list(2, {{0, 1}})});
  if (m == 2) {
    // Klein four-group on 4 points (regular).
    return PermGroup(4, {Permutation::from_cycle_list(4, {{0, 1}, {2, 3}}),
                         Permutation::from_cycle_list(4, {{0, 2}, {1, 3}})});
  }
  std::vector<Point> rotation(m), reflection(m);
  for (std::size_t a = 0; a < m; ++a) {
    rotation[a] = static_cast<Point>((a + 1) % m);
    reflection[a] = static_cast<Point>((m - a) % m);
  }
  return PermGroup(m, {Permutation(rotation), Permutation(reflection)});
}

PermGroup wreath_product_imprimitive(const PermGroup& inner, const PermGroup& outer) {
  const std::size_t m = inner.degree();
  const std::size_t r = outer.degree();
  const std::size_t n = m * r;
  std::vector<Permutation> gens;
  for (const auto& x : inner.generators()) {
    if (x.is_identity()) continue;
    std::vector<Point> img(n);
    std::iota(img.begin(), img.end(), Point{0});
    for (std::size_t a = 0; a < m; ++a) img[a] = x.image(static_cast<Point>(a));
    gens.emplace_back(std::move(img));
  }
  for (const auto& pi : outer.generators()) {
    if (pi.is_identity()) continue;
    std::vector<Point> img(n);
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t a = 0; a < m; ++a) img[j * m + a] = static_cast<Point>(pi.image(static_cast<Point>(j)) * m + a);
    gens.emplace_back(std::move(img));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup wreath_product_product_action(const PermGroup& inner, const PermGroup& outer) {
  const std::size_t m = inner.degree();
  const std::size_t r = outer.degree();
  std::size_t n = 1;
  for (std::size_t i = 0; i < r; ++i) n *= m;
  auto decode = [m, r](std::size_t code) {
    std::vector<std::size_t> t(r);
    for (std::size_t i = 0; i < r; ++i) {
      t[i] = code % m;
      code /= m;
    }
    return t;
  };
  auto encode = [m, r](const std::vector<std::size_t>& t) {
    std::size_t code = 0;
    for (std::size_t i = r; i-- > 0;) code = code * m + t[i];
    return static_cast<Point>(code);
  };
  std::vector<Permutation> gens;
  for (const auto& x : inner.generators()) {
    if (x.is_identity()) continue;
    std::vector<Point> img(n);
    for (std::size_t c = 0; c < n; ++c) {
      auto t = decode(c);
      t[0] = x.image(static_cast<Point>(t[0]));
      img[c] = encode(t);
    }
    gens.emplace_back(std::move(img));
  }
  for (const auto& pi : outer.generators()) {
    if (pi.is_identity()) continue;
    std::vector<Point> img(n);
    for (std::size_t c = 0; c < n; ++c) {
      auto t = decode(c);
      std::vector<std::size_t> u(r);
      for (std::size_t i = 0; i < r; ++i) u[pi.image(static_cast<Point>(i))] = t[i];
      img[c] = encode(u);
    }
    gens.emplace_back(std::move(img));
  }
  return PermGroup(n, std::move(gens));
}

}  // namespace fprlab
