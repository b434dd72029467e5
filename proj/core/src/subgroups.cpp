#include "fprlab/subgroups.hpp"

#include <algorithm>
#include <unordered_map>

namespace fprlab {

namespace {

std::size_t hash_indices(const std::vector<std::uint64_t>& v) {
  std::size_t h = 1469598103934665603ull;
  for (auto x : v) h = (h ^ x) * 1099511628211ull;
  return h;
}

// Elements of <gens> as sorted chain indices of G, by closure under right
// multiplication. `seed` lists elements already known to lie in the group.
std::vector<std::uint64_t> closure_indices(const StabilizerChain& chain, std::uint64_t order,
                                           const std::vector<Permutation>& gens,
                                           const std::vector<Permutation>& seed) {
  std::vector<bool> seen(order, false);
  std::vector<Permutation> queue;
  std::vector<std::uint64_t> result;
  auto push = [&](Permutation g) {
    const auto idx = chain.index_of(g);
    if (!idx) throw NotAMember("generator outside the ambient group");
    if (seen[*idx]) return;
    seen[*idx] = true;
    result.push_back(*idx);
    queue.push_back(std::move(g));
  };
  push(Permutation(chain.degree()));
  for (const auto& s : seed) push(s);
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (const auto& s : gens) push(queue[k] * s);
  std::sort(result.begin(), result.end());
  return result;
}

struct Node {
  std::vector<Permutation> generators;
  std::vector<std::uint64_t> fingerprint;
};

}  // namespace

std::vector<std::uint64_t> subgroup_fingerprint(const PermGroup& G, const PermGroup& H) {
  const auto& chain = G.chain();
  return closure_indices(chain, G.order_u64(), H.generators(), {});
}

std::vector<PermGroup> subgroups_containing(const PermGroup& G, const Permutation& y,
                                            const SubgroupSearchOptions& options) {
  if (!G.contains(y)) throw NotAMember("y is not an element of G");
  const BigInt big_order = G.order();
  if (big_order > options.order_cap)
    throw CapExceeded("group order " + big_order.str() + " exceeds the subgroup search cap " +
                      std::to_string(options.order_cap));
  const auto order = static_cast<std::uint64_t>(big_order);
  const auto& chain = G.chain();

  std::vector<Node> nodes;
  std::unordered_multimap<std::size_t, std::size_t> by_hash;
  auto intern = [&](std::vector<Permutation> gens, std::vector<std::uint64_t> fp) {
    const std::size_t h = hash_indices(fp);
    auto [lo, hi] = by_hash.equal_range(h);
    for (auto it = lo; it != hi; ++it)
      if (nodes[it->second].fingerprint == fp) return;
    by_hash.emplace(h, nodes.size());
    nodes.push_back({std::move(gens), std::move(fp)});
  };

  intern({y}, closure_indices(chain, order, {y}, {}));
  StabilizerChain::Options chain_options;
  chain_options.seed = G.seed();
  chain_options.known_order = big_order;

  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (nodes[k].fingerprint.size() == order) continue;
    const std::vector<Permutation> h_gens = nodes[k].generators;
    std::vector<Permutation> h_elems;
    h_elems.reserve(nodes[k].fingerprint.size());
    std::vector<bool> done(order, false);
    for (auto idx : nodes[k].fingerprint) {
      done[idx] = true;
      h_elems.push_back(chain.element_at(idx));
    }
    for (std::uint64_t idx = 0; idx < order; ++idx) {
      if (done[idx]) continue;
      const Permutation g = chain.element_at(idx);
      // <H,g> depends only on the double coset HgH.
      for (const auto& a : h_elems) {
        const Permutation ag = a * g;
        for (const auto& b : h_elems) done[*chain.index_of(ag * b)] = true;
      }
      auto gens = h_gens;
      gens.push_back(g);
      if (StabilizerChain::build(G.degree(), gens, chain_options).order() == big_order) {
        continue;
      }
      auto fp = closure_indices(chain, order, gens, h_elems);
      intern(std::move(gens), std::move(fp));
    }
  }
  // G itself is never interned above unless <y> = G; intern() dedups.
  intern(G.generators(), closure_indices(chain, order, G.generators(), {}));

  std::vector<std::size_t> perm(nodes.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    const auto& fa = nodes[a].fingerprint;
    const auto& fb = nodes[b].fingerprint;
    if (fa.size() != fb.size()) return fa.size() < fb.size();
    return fa < fb;
  });
  std::vector<PermGroup> result;
  for (auto i : perm) {
    if (nodes[i].fingerprint.size() == order)
      result.push_back(G);
    else
      result.emplace_back(G.degree(), nodes[i].generators, G.seed());
  }
  return result;
}

std::vector<PermGroup> maximal_overgroups(const PermGroup& G, const Permutation& y,
                                          const SubgroupSearchOptions& options) {
  auto all = subgroups_containing(G, y, options);
  const BigInt order = G.order();
  std::vector<std::vector<std::uint64_t>> fps;
  std::vector<PermGroup> proper;
  for (auto& H : all) {
    if (H.order() == order) continue;
    fps.push_back(subgroup_fingerprint(G, H));
    proper.push_back(std::move(H));
  }
  std::vector<PermGroup> result;
  for (std::size_t i = 0; i < proper.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < proper.size() && maximal; ++j) {
      if (fps[j].size() <= fps[i].size()) continue;
      if (std::includes(fps[j].begin(), fps[j].end(), fps[i].begin(), fps[i].end())) maximal = false;
    }
    if (maximal) result.push_back(proper[i]);
  }
  return result;
}

std::vector<PermGroup> maximal_overgroups(const PermGroup& G, const Permutation& y,
                                          const std::vector<PermGroup>& candidates) {
  if (!G.contains(y)) throw NotAMember("y is not an element of G");
  const BigInt order = G.order();
  std::vector<PermGroup> proper;
  for (const auto& H : candidates) {
    if (H.degree() != G.degree()) throw DegreeMismatch("candidate overgroup has the wrong degree");
    if (!H.is_subgroup_of(G)) throw InvalidArgument("candidate overgroup is not a subgroup of G");
    if (H.order() == order || !H.contains(y)) continue;
    proper.push_back(H);
  }
  std::vector<PermGroup> result;
  for (std::size_t i = 0; i < proper.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < proper.size() && keep; ++j) {
      if (i == j || !proper[i].is_subgroup_of(proper[j])) continue;
      // Strictly smaller, or an equal duplicate listed earlier.
      if (proper[i].order() < proper[j].order() || j < i) keep = false;
    }
    if (keep) result.push_back(proper[i]);
  }
  return result;
}

}  // namespace fprlab
