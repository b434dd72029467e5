#include "fprlab/classes.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "fprlab/rng.hpp"

namespace fprlab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<Permutation> small_generating_set(const PermGroup& G, std::uint64_t seed) {
  std::vector<Permutation> gens;
  for (const auto& g : G.generators())
    if (!g.is_identity()) gens.push_back(g);
  if (gens.size() <= 2) return gens.empty() ? G.generators() : gens;
  const BigInt order = G.order();
  auto rng = make_rng(seed, Stream::kGenerators, 0);
  StabilizerChain::Options options;
  options.seed = seed;
  options.known_order = order;
  for (int attempt = 0; attempt < 40; ++attempt) {
    std::vector<Permutation> pair{G.random_element(rng), G.random_element(rng)};
    if (StabilizerChain::build(G.degree(), pair, options).order() == order) return pair;
  }
  return gens;
}

namespace {

void check_cap(const BigInt& value, std::uint64_t cap, const char* what) {
  if (value > cap)
    throw CapExceeded(std::string(what) + " " + value.str() + " exceeds cap " + std::to_string(cap));
}

}  // namespace

ClassTable ClassTable::build(const PermGroup& G, const ClassOptions& options) {
  check_cap(G.order(), options.order_cap, "group order");
  ClassTable table(G);
  const auto& chain = G.chain();
  const std::uint64_t order = chain.order_u64();
  const auto gens = small_generating_set(G, options.seed);
  std::vector<Permutation> inverses;
  for (const auto& s : gens) inverses.push_back(s.inverse());

  constexpr std::uint32_t kUnset = ~0u;
  table.class_id_.assign(order, kUnset);
  std::vector<ConjClass> found;
  std::vector<Permutation> queue;
  for (std::uint64_t idx = 0; idx < order; ++idx) {
    if (table.class_id_[idx] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(found.size());
    queue.clear();
    queue.push_back(chain.element_at(idx));
    table.class_id_[idx] = id;
    std::size_t least = 0;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      if (queue[k] < queue[least]) least = k;
      for (std::size_t s = 0; s < gens.size(); ++s) {
        Permutation c = inverses[s] * queue[k] * gens[s];
        const std::uint64_t ci = *chain.index_of(c);
        if (table.class_id_[ci] != kUnset) continue;
        table.class_id_[ci] = id;
        queue.push_back(std::move(c));
      }
    }
    ConjClass cls;
    cls.rep = queue[least];
    cls.order = cls.rep.order();
    cls.size = queue.size();
    cls.centralizer_order = order / queue.size();
    found.push_back(std::move(cls));
  }

  std::vector<std::uint32_t> perm(found.size());
  std::iota(perm.begin(), perm.end(), 0u);
  std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (found[a].order != found[b].order) return found[a].order < found[b].order;
    if (found[a].size != found[b].size) return found[a].size < found[b].size;
    return found[a].rep < found[b].rep;
  });
  std::vector<std::uint32_t> rank(found.size());
  for (std::uint32_t i = 0; i < perm.size(); ++i) {
    rank[perm[i]] = i;
    table.classes_.push_back(std::move(found[perm[i]]));
    if (is_prime(table.classes_.back().order)) table.prime_order_.push_back(i);
  }
  for (auto& id : table.class_id_) id = rank[id];
  return table;
}

std::size_t ClassTable::class_index(const Permutation& x) const {
  const auto idx = group_.chain().index_of(x);
  if (!idx) throw NotAMember("element is not in the group of this class table");
  return class_id_[*idx];
}

std::vector<Permutation> class_elements(const PermGroup& G, const Permutation& x, const ClassOptions& options) {
  if (!G.contains(x)) throw NotAMember("element is not in the group");
  const auto gens = small_generating_set(G, options.seed);
  std::vector<Permutation> inverses;
  for (const auto& s : gens) inverses.push_back(s.inverse());
  std::unordered_set<Permutation, PermutationHash> seen{x};
  std::vector<Permutation> queue{x};
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Permutation c = inverses[s] * queue[k] * gens[s];
      if (!seen.insert(c).second) continue;
      queue.push_back(std::move(c));
      if (queue.size() > options.class_size_cap)
        throw CapExceeded("conjugacy class exceeds cap " + std::to_string(options.class_size_cap));
    }
  return queue;
}

ConjClass class_of(const PermGroup& G, const Permutation& x, const ClassOptions& options) {
  const auto elems = class_elements(G, x, options);
  ConjClass cls;
  cls.rep = *std::min_element(elems.begin(), elems.end());
  cls.order = x.order();
  cls.size = elems.size();
  cls.centralizer_order = G.order() / elems.size();
  return cls;
}

std::uint64_t fusion_count(const PermGroup& G, const PermGroup& H, const ConjClass& C, const ClassOptions& options) {
  if (!H.is_subgroup_of(G)) throw InvalidArgument("H is not a subgroup of G");
  const auto elems = class_elements(G, C.rep, options);
  const std::unordered_set<Permutation, PermutationHash> members(elems.begin(), elems.end());
  const auto type = C.rep.cycle_type();
  std::uint64_t count = 0;
  H.chain().for_each_element([&](const Permutation& h) {
    if (h.order() != C.order || h.cycle_type() != type) return;
    if (members.contains(h)) ++count;
  });
  return count;
}

std::vector<std::uint64_t> fusion_counts(const ClassTable& table, const PermGroup& H) {
  const PermGroup& G = table.group();
  if (!H.is_subgroup_of(G)) throw InvalidArgument("H is not a subgroup of G");
  std::vector<std::uint64_t> counts(table.size(), 0);
  const auto& chain = G.chain();
  H.chain().for_each_element([&](const Permutation& h) {
    ++counts[table.class_index_of_element(*chain.index_of(h))];
  });
  return counts;
}

}  // namespace fprlab
