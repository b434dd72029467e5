#include "fprlab/genus.hpp"

#include <algorithm>
#include <numeric>

#include "fprlab/genspread.hpp"

namespace fprlab {

std::uint64_t ind(const Permutation& x) { return x.degree() - x.num_cycles(); }

std::uint64_t ind(const Permutation& x, std::size_t n) {
  if (x.degree() != n) throw DegreeMismatch("element degree " + std::to_string(x.degree()) + " differs from " + std::to_string(n));
  return ind(x);
}

GenTuple genus_of(const PermGroup& G, const std::vector<Permutation>& tuple) {
  if (tuple.empty()) throw InvalidArgument("empty tuple");
  const std::size_t n = G.degree();
  Permutation product(n);
  GenTuple result;
  std::uint64_t sum = 0;
  for (const auto& x : tuple) {
    if (x.degree() != n) throw DegreeMismatch("tuple element has degree " + std::to_string(x.degree()));
    if (!G.contains(x)) throw NotAMember("tuple element " + x.to_cycle_string() + " is not in the group");
    product = product * x;
    result.indices.push_back(ind(x));
    sum += result.indices.back();
  }
  if (!product.is_identity()) throw InvalidArgument("the product of the tuple is " + product.to_cycle_string() + ", not 1");
  if (!PermGroup(n, tuple).is_transitive()) throw IntransitiveTuple("the tuple generates an intransitive group");
  if (!generates(G, tuple)) throw InvalidArgument("the tuple does not generate the group");
  if (sum % 2 != 0) throw InvalidArgument("odd index sum " + std::to_string(sum));
  result.elements = tuple;
  result.genus = static_cast<std::int64_t>(sum / 2) - static_cast<std::int64_t>(n) + 1;
  if (result.genus < 0) throw InvalidArgument("negative genus");
  return result;
}

std::map<std::uint64_t, std::uint64_t> min_index_table(const ClassTable& table) {
  std::map<std::uint64_t, std::uint64_t> out;
  for (const auto& c : table.classes()) {
    if (c.order == 1) continue;
    const std::uint64_t i = ind(c.rep);
    auto [it, fresh] = out.emplace(c.order, i);
    if (!fresh) it->second = std::min(it->second, i);
  }
  return out;
}

std::string to_string(SignatureStatus status) {
  switch (status) {
    case SignatureStatus::kRefutedBy85Over42: return "refuted-by-85/42";
    case SignatureStatus::kRealized: return "realized";
    case SignatureStatus::kRefutedBySearch: return "refuted-by-search";
    case SignatureStatus::kUndecided: return "undecided";
  }
  return "unknown";
}

std::vector<const Signature*> GenusScreen::survivors() const {
  std::vector<const Signature*> out;
  for (const auto& s : signatures)
    if (s.status != SignatureStatus::kRefutedBy85Over42) out.push_back(&s);
  return out;
}

namespace {

std::uint64_t multiset_count(std::uint64_t kinds, std::uint64_t size) {
  // C(kinds + size - 1, size)
  BigInt c = 1;
  for (std::uint64_t i = 1; i <= size; ++i) c = c * (kinds + size - i) / i;
  return static_cast<std::uint64_t>(c);
}

struct BudgetExhausted {};

class WitnessSearch {
 public:
  WitnessSearch(const PermGroup& G, const ClassTable& table, std::uint64_t target, std::uint64_t budget)
      : G_(G), table_(table), target_(target), budget_(budget) {
    for (const auto& c : table.classes()) {
      const std::uint64_t i = ind(c.rep);
      auto [lo, fresh] = min_.emplace(c.order, i);
      if (!fresh) lo->second = std::min(lo->second, i);
      auto [hi, fresh2] = max_.emplace(c.order, i);
      if (!fresh2) hi->second = std::max(hi->second, i);
    }
  }

  // Returns the witness, nullopt after an exhaustive failure; throws
  // BudgetExhausted.
  std::optional<std::vector<Permutation>> run(const std::vector<std::uint64_t>& orders) {
    orders_ = orders;
    const std::size_t k = orders.size();
    rest_min_.assign(k + 1, 0);
    rest_max_.assign(k + 1, 0);
    for (std::size_t p = k; p-- > 0;) {
      rest_min_[p] = rest_min_[p + 1] + min_.at(orders[p]);
      rest_max_[p] = rest_max_[p + 1] + max_.at(orders[p]);
    }
    nodes = 0;
    tuple_.assign(k, Permutation(G_.degree()));
    if (dfs(0, Permutation(G_.degree()), 0)) return tuple_;
    return std::nullopt;
  }

  std::uint64_t nodes = 0;

 private:
  const std::vector<Permutation>& of_order(std::uint64_t d) {
    auto it = by_order_.find(d);
    if (it != by_order_.end()) return it->second;
    std::vector<Permutation> elems;
    const auto& chain = G_.chain();
    const std::uint64_t order = chain.order_u64();
    for (std::uint64_t idx = 0; idx < order; ++idx)
      if (table_[table_.class_index_of_element(idx)].order == d) elems.push_back(chain.element_at(idx));
    return by_order_.emplace(d, std::move(elems)).first->second;
  }

  bool dfs(std::size_t pos, const Permutation& product, std::uint64_t sum) {
    if (++nodes > budget_) throw BudgetExhausted{};
    const std::size_t k = orders_.size();
    if (pos + 1 == k) {
      Permutation last = product.inverse();
      if (last.order() != orders_[pos] || sum + ind(last) != target_) return false;
      tuple_[pos] = std::move(last);
      return generates(G_, tuple_);
    }
    auto visit = [&](const Permutation& x) {
      const std::uint64_t s = sum + ind(x);
      if (s + rest_min_[pos + 1] > target_ || s + rest_max_[pos + 1] < target_) return false;
      tuple_[pos] = x;
      return dfs(pos + 1, product * x, s);
    };
    if (pos == 0) {
      // Up to simultaneous conjugation, x_1 is a class representative.
      for (const auto& c : table_.classes())
        if (c.order == orders_[0] && visit(c.rep)) return true;
      return false;
    }
    for (const auto& x : of_order(orders_[pos]))
      if (visit(x)) return true;
    return false;
  }

  const PermGroup& G_;
  const ClassTable& table_;
  std::uint64_t target_;
  std::uint64_t budget_;
  std::map<std::uint64_t, std::uint64_t> min_, max_;
  std::map<std::uint64_t, std::vector<Permutation>> by_order_;
  std::vector<std::uint64_t> orders_;
  std::vector<std::uint64_t> rest_min_, rest_max_;
  std::vector<Permutation> tuple_;
};

}  // namespace

GenusScreen genus_screen(const PermGroup& G, std::int64_t g, const GenusScreenOptions& options) {
  if (g < 0) throw InvalidArgument("genus must be non-negative");
  if (!G.is_transitive()) throw NotTransitive("genus screening needs a transitive group");
  GenusScreen screen;
  screen.degree = G.degree();
  screen.genus = g;
  screen.target = 2 * (static_cast<std::uint64_t>(G.degree()) + static_cast<std::uint64_t>(g) - 1);
  const auto table = ClassTable::build(G, options.classes);
  screen.min_index = min_index_table(table);

  std::vector<std::uint64_t> orders, mins;
  for (const auto& [d, m] : screen.min_index) orders.push_back(d), mins.push_back(m);
  const std::size_t D = orders.size();
  std::vector<std::uint64_t> suffix_min(D + 1, ~0ull);
  for (std::size_t i = D; i-- > 0;) suffix_min[i] = std::min(suffix_min[i + 1], mins[i]);

  std::vector<std::uint64_t> current;
  auto enumerate = [&](auto&& self, std::size_t k, std::size_t start, std::uint64_t sum) -> void {
    const std::uint64_t r = k - current.size();
    if (r > 0 && start < D && sum + r * suffix_min[start] > screen.target) {
      screen.refuted_by_index += multiset_count(D - start, r);
      return;
    }
    if (r == 0) {
      if (sum > screen.target) {
        ++screen.refuted_by_index;
        return;
      }
      Signature s;
      s.orders = current;
      s.min_index_sum = sum;
      for (auto d : current) s.angle_sum += Rational(static_cast<long long>(d) - 1, static_cast<long long>(d));
      screen.signatures.push_back(std::move(s));
      return;
    }
    for (std::size_t i = start; i < D; ++i) {
      current.push_back(orders[i]);
      self(self, k, i, sum + mins[i]);
      current.pop_back();
    }
  };
  for (std::uint64_t k = 2; k <= options.max_k; ++k) enumerate(enumerate, k, 0, 0);

  WitnessSearch search(G, table, screen.target, options.witness_budget);
  for (auto& s : screen.signatures) {
    if (options.insoluble_filter && s.angle_sum < Rational(85, 42)) {
      s.status = SignatureStatus::kRefutedBy85Over42;
      continue;
    }
    if (!options.search_witnesses) continue;
    try {
      auto found = search.run(s.orders);
      if (found) {
        s.witness = genus_of(G, *found);
        s.status = SignatureStatus::kRealized;
      } else {
        s.status = SignatureStatus::kRefutedBySearch;
      }
    } catch (const BudgetExhausted&) {
      s.status = SignatureStatus::kUndecided;
    }
    s.nodes = search.nodes;
  }
  return screen;
}

bool orbit_count_identity_check(const Permutation& x) {
  const std::uint64_t d = x.order();
  std::uint64_t fixed = 0;
  Permutation y(x.degree());
  for (std::uint64_t i = 0; i < d; ++i) {
    fixed += y.num_fixed_points();
    y = y * x;
  }
  // (n/d) * sum fix(y)/n = sum fix(y) / d.
  return Rational(static_cast<long long>(fixed), static_cast<long long>(d)) ==
         Rational(static_cast<long long>(x.num_cycles()));
}

std::vector<Permutation> random_product_one_tuple(const PermGroup& G, std::size_t k, std::mt19937_64& rng) {
  if (k == 0) return {};
  std::vector<Permutation> tuple;
  Permutation product(G.degree());
  for (std::size_t i = 0; i + 1 < k; ++i) {
    tuple.push_back(G.random_element(rng));
    product = product * tuple.back();
  }
  tuple.push_back(product.inverse());
  return tuple;
}

}  // namespace fprlab
