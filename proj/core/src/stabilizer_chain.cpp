#include "fprlab/stabilizer_chain.hpp"

#include <algorithm>
#include <set>

#include "fprlab/rng.hpp"

namespace fprlab {

namespace {

constexpr std::size_t kRandomPhaseQuietRounds = 24;
constexpr std::size_t kRandomPhaseMaxRounds = 4000;

// Product-replacement generator of pseudo-random group elements.
class ProductReplacement {
 public:
  ProductReplacement(std::span<const Permutation> gens, std::size_t degree, std::uint64_t seed)
      : rng_(seed), accumulator_(degree) {
    const std::size_t slots = std::max<std::size_t>(10, gens.size() + 1);
    for (std::size_t i = 0; i < slots; ++i) slots_.push_back(gens[i % gens.size()]);
    for (int i = 0; i < 50; ++i) next();
  }

  Permutation next() {
    const std::size_t n = slots_.size();
    const std::size_t i = uniform_below(rng_, n);
    std::size_t j = uniform_below(rng_, n - 1);
    if (j >= i) ++j;
    if (uniform_below(rng_, 2) == 0) {
      slots_[i] = slots_[i] * slots_[j];
    } else {
      slots_[i] = slots_[i] * slots_[j].inverse();
    }
    accumulator_ = accumulator_ * slots_[i];
    return accumulator_;
  }

 private:
  std::mt19937_64 rng_;
  std::vector<Permutation> slots_;
  Permutation accumulator_;
};

std::optional<Point> first_moved_point(const Permutation& p, const std::vector<ChainLevel>& levels) {
  for (Point a = 0; a < p.degree(); ++a) {
    if (p.image(a) == a) continue;
    const bool in_base = std::any_of(levels.begin(), levels.end(),
                                     [a](const ChainLevel& l) { return l.base_point == a; });
    if (!in_base) return a;
  }
  return std::nullopt;
}

}  // namespace

class ChainBuilder {
 public:
  ChainBuilder(std::size_t degree, std::vector<ChainLevel>& levels) : degree_(degree), levels_(levels) {}

  void append_level(Point base_point) {
    ChainLevel level;
    level.base_point = base_point;
    levels_.push_back(std::move(level));
    recompute_orbit(levels_.size() - 1);
  }

  void recompute_orbit(std::size_t i) {
    ChainLevel& level = levels_[i];
    level.orbit.assign(1, level.base_point);
    level.orbit_position.assign(degree_, -1);
    level.orbit_position[level.base_point] = 0;
    level.transversal.assign(1, Permutation(degree_));
    for (std::size_t k = 0; k < level.orbit.size(); ++k) {
      const Point beta = level.orbit[k];
      for (const Permutation& s : level.generators) {
        const Point gamma = s.image(beta);
        if (level.orbit_position[gamma] >= 0) continue;
        level.orbit_position[gamma] = static_cast<std::int32_t>(level.orbit.size());
        level.orbit.push_back(gamma);
        level.transversal.push_back(level.transversal[k] * s);
      }
    }
    level.inverse_transversal.clear();
    level.inverse_transversal.reserve(level.transversal.size());
    for (const auto& u : level.transversal) level.inverse_transversal.push_back(u.inverse());
  }

  std::pair<Permutation, std::size_t> strip(Permutation h, std::size_t start) const {
    for (std::size_t l = start; l < levels_.size(); ++l) {
      const ChainLevel& level = levels_[l];
      const std::int32_t pos = level.orbit_position[h.image(level.base_point)];
      if (pos < 0) return {std::move(h), l};
      h = h * level.inverse_transversal[static_cast<std::size_t>(pos)];
    }
    return {std::move(h), levels_.size()};
  }

  // Adds y (which fixes the first `to` base points) to levels from..to,
  // creating a new level when `to` runs past the current base.
  void add_strong_generator(const Permutation& y, std::size_t from, std::size_t to) {
    if (to == levels_.size()) {
      auto point = first_moved_point(y, levels_);
      // y fixes every base point, so it must move some other point.
      append_level(*point);
    }
    for (std::size_t l = from; l <= to; ++l) levels_[l].generators.push_back(y);
    for (std::size_t l = from; l <= to; ++l) recompute_orbit(l);
  }

  BigInt current_order() const {
    BigInt order = 1;
    for (const auto& level : levels_) order *= level.orbit.size();
    return order;
  }

  // Deterministic Schreier-Sims completion: every Schreier generator at
  // every level must strip to the identity through the levels below it.
  void verify_and_complete() {
    if (levels_.empty()) return;
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
    while (i >= 0) {
      bool restarted = false;
      const std::size_t li = static_cast<std::size_t>(i);
      for (std::size_t k = 0; k < levels_[li].orbit.size() && !restarted; ++k) {
        for (std::size_t g = 0; g < levels_[li].generators.size(); ++g) {
          const ChainLevel& level = levels_[li];
          const Point beta = level.orbit[k];
          const Permutation& s = level.generators[g];
          const Point gamma = s.image(beta);
          const auto gamma_pos = static_cast<std::size_t>(level.orbit_position[gamma]);
          Permutation h = level.transversal[k] * s * level.inverse_transversal[gamma_pos];
          if (h.is_identity()) continue;
          auto [y, j] = strip(std::move(h), li + 1);
          if (j < levels_.size() || !y.is_identity()) {
            add_strong_generator(y, li + 1, j);
            i = static_cast<std::ptrdiff_t>(j);
            restarted = true;
            break;
          }
        }
      }
      if (!restarted) --i;
    }
  }

 private:
  std::size_t degree_;
  std::vector<ChainLevel>& levels_;
};

StabilizerChain StabilizerChain::build(std::size_t degree, std::span<const Permutation> generators,
                                       const Options& options) {
  StabilizerChain chain;
  chain.degree_ = degree;
  ChainBuilder builder(degree, chain.levels_);

  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    if (g.degree() != degree) throw DegreeMismatch("generator degree differs from group degree");
    if (!g.is_identity() && std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  }

  for (Point b : options.base_prefix) {
    if (b >= degree) throw InvalidArgument("base point outside the domain");
    const bool dup = std::any_of(chain.levels_.begin(), chain.levels_.end(),
                                 [b](const ChainLevel& l) { return l.base_point == b; });
    if (!dup) builder.append_level(b);
  }
  if (gens.empty()) {
    chain.finalize();
    return chain;
  }

  // Every generator must move some base point.
  for (const auto& g : gens) {
    const bool moves_base = std::any_of(chain.levels_.begin(), chain.levels_.end(),
                                        [&g](const ChainLevel& l) { return g.image(l.base_point) != l.base_point; });
    if (!moves_base) builder.append_level(*first_moved_point(g, chain.levels_));
  }
  for (const auto& g : gens) {
    for (std::size_t l = 0; l < chain.levels_.size(); ++l) {
      chain.levels_[l].generators.push_back(g);
      if (g.image(chain.levels_[l].base_point) != chain.levels_[l].base_point) break;
    }
  }
  for (std::size_t l = 0; l < chain.levels_.size(); ++l) builder.recompute_orbit(l);

  // Randomised phase.
  bool complete = false;
  {
    ProductReplacement random(gens, degree, substream_seed(options.seed, static_cast<std::uint64_t>(Stream::kChain)));
    std::size_t quiet = 0;
    for (std::size_t round = 0; round < kRandomPhaseMaxRounds && quiet < kRandomPhaseQuietRounds; ++round) {
      if (options.known_order && builder.current_order() >= *options.known_order) {
        complete = true;
        break;
      }
      auto [y, j] = builder.strip(random.next(), 0);
      if (j < chain.levels_.size() || !y.is_identity()) {
        builder.add_strong_generator(y, 0, j);
        quiet = 0;
      } else {
        ++quiet;
      }
    }
    if (options.known_order && builder.current_order() >= *options.known_order) complete = true;
  }

  if (!complete) builder.verify_and_complete();
  chain.finalize();
  return chain;
}

void StabilizerChain::finalize() {
  strides_.assign(levels_.size(), 1);
  // Strides are only meaningful when the order fits in 64 bits; index
  // functions check that before use.
  if (order() > BigInt(std::numeric_limits<std::int64_t>::max())) return;
  std::uint64_t stride = 1;
  for (std::size_t l = levels_.size(); l-- > 0;) {
    strides_[l] = stride;
    stride *= levels_[l].orbit.size();
  }
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> b;
  for (const auto& l : levels_) b.push_back(l.base_point);
  return b;
}

BigInt StabilizerChain::order() const { return stabilizer_order(0); }

BigInt StabilizerChain::stabilizer_order(std::size_t depth) const {
  BigInt order = 1;
  for (std::size_t l = depth; l < levels_.size(); ++l) order *= levels_[l].orbit.size();
  return order;
}

std::uint64_t StabilizerChain::order_u64() const {
  const BigInt o = order();
  if (o > BigInt(std::numeric_limits<std::int64_t>::max())) throw CapExceeded("group order exceeds 2^63");
  return static_cast<std::uint64_t>(o);
}

StabilizerChain::SiftResult StabilizerChain::sift(const Permutation& g) const {
  if (g.degree() != degree_) throw DegreeMismatch("sifted element has wrong degree");
  Permutation h = g;
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    const ChainLevel& level = levels_[l];
    const std::int32_t pos = level.orbit_position[h.image(level.base_point)];
    if (pos < 0) return {std::move(h), l};
    h = h * level.inverse_transversal[static_cast<std::size_t>(pos)];
  }
  return {std::move(h), levels_.size()};
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) throw DegreeMismatch("membership test with wrong degree");
  auto r = sift(g);
  return r.depth == levels_.size() && r.residue.is_identity();
}

std::optional<std::uint64_t> StabilizerChain::index_of(const Permutation& g) const {
  if (g.degree() != degree_) throw DegreeMismatch("index_of with wrong degree");
  (void)order_u64();
  // Work on a raw buffer: this is the innermost loop of class and graph
  // enumeration.
  std::vector<Point> h(g.images().begin(), g.images().end());
  std::uint64_t index = 0;
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    const ChainLevel& level = levels_[l];
    const std::int32_t pos = level.orbit_position[h[level.base_point]];
    if (pos < 0) return std::nullopt;
    index += strides_[l] * static_cast<std::uint64_t>(pos);
    const auto& inv = level.inverse_transversal[static_cast<std::size_t>(pos)].images();
    for (auto& a : h) a = inv[a];
  }
  for (std::size_t a = 0; a < h.size(); ++a)
    if (h[a] != a) return std::nullopt;
  return index;
}

Permutation StabilizerChain::element_at(std::uint64_t index) const {
  const std::uint64_t total = order_u64();
  if (index >= total) throw InvalidArgument("element index out of range");
  Permutation g(degree_);
  for (std::size_t l = levels_.size(); l-- > 0;) {
    const std::uint64_t digit = (index / strides_[l]) % levels_[l].orbit.size();
    g = g * levels_[l].transversal[digit];
  }
  return g;
}

void StabilizerChain::for_each_element(const std::function<void(const Permutation&)>& visit) const {
  (void)order_u64();
  // Elements are u_k ... u_1 with u_1 from level 0; building the product
  // by left multiplication from level 0 outward keeps index order and
  // costs one multiplication per element.
  std::vector<Permutation> partial(levels_.size() + 1, Permutation(degree_));
  std::function<void(std::size_t)> descend = [&](std::size_t l) {
    if (l == levels_.size()) {
      visit(partial[l]);
      return;
    }
    for (const auto& u : levels_[l].transversal) {
      partial[l + 1] = u * partial[l];
      descend(l + 1);
    }
  };
  descend(0);
}

Permutation StabilizerChain::random_element(std::mt19937_64& rng) const {
  Permutation g(degree_);
  for (std::size_t l = levels_.size(); l-- > 0;) {
    const auto& t = levels_[l].transversal;
    g = g * t[uniform_below(rng, t.size())];
  }
  return g;
}

std::vector<Permutation> StabilizerChain::strong_generators() const {
  std::vector<Permutation> result;
  std::set<Permutation> seen;
  for (const auto& level : levels_)
    for (const auto& g : level.generators)
      if (seen.insert(g).second) result.push_back(g);
  return result;
}

}  // namespace fprlab
