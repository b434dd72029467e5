#include "fprlab/actions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace fprlab {

std::string to_string(ActionKind kind) {
  switch (kind) {
    case ActionKind::kNatural: return "natural";
    case ActionKind::kKSets: return "ksets";
    case ActionKind::kOrderedTuples: return "tuples";
    case ActionKind::kCosets: return "cosets";
    case ActionKind::kProduct: return "product";
    case ActionKind::kProjective: return "projective";
    case ActionKind::kVectors: return "vectors";
    case ActionKind::kSubspaces: return "subspaces";
    case ActionKind::kQuadraticForms: return "forms";
  }
  return "unknown";
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

namespace {

std::string key_of(const std::vector<Point>& v) {
  return std::string(reinterpret_cast<const char*>(v.data()), v.size() * sizeof(Point));
}

std::string describe(const std::vector<Point>& pts, char open, char close) {
  std::string s(1, open);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(pts[i] + 1);
  }
  s += close;
  return s;
}

void check_cap(std::uint64_t degree, const RealizeOptions& options) {
  if (degree > options.degree_cap)
    throw CapExceeded("action degree " + std::to_string(degree) + " exceeds degree cap " +
                      std::to_string(options.degree_cap));
}

}  // namespace

std::string PermAction::label(Point omega) const {
  if (omega >= degree()) throw InvalidArgument("point outside the action domain");
  switch (kind_) {
    case ActionKind::kKSets: return describe(descriptions_[omega], '{', '}');
    case ActionKind::kOrderedTuples:
    case ActionKind::kProduct: return describe(descriptions_[omega], '(', ')');
    case ActionKind::kCosets: return "H*" + coset_reps_[omega].to_cycle_string();
    default: return std::to_string(omega + 1);
  }
}

Point PermAction::point_index(const std::vector<Point>& description) const {
  if (kind_ == ActionKind::kNatural) return description.at(0);
  std::vector<Point> d = description;
  if (kind_ == ActionKind::kKSets) std::sort(d.begin(), d.end());
  auto it = index_.find(key_of(d));
  if (it == index_.end()) throw InvalidArgument("no such point in the action domain");
  return it->second;
}

Permutation PermAction::canonical_coset_rep(const Permutation& g) const {
  // Walk down H's chain choosing, at each level, the transversal element
  // that minimises the image of the base point; the result is the unique
  // element of Hg with lexicographically least base image sequence.
  Permutation x = g;
  for (const ChainLevel& level : subgroup_->chain().levels()) {
    std::size_t best = 0;
    Point best_image = x.image(level.orbit[0]);
    for (std::size_t k = 1; k < level.orbit.size(); ++k) {
      const Point image = x.image(level.orbit[k]);
      if (image < best_image) {
        best_image = image;
        best = k;
      }
    }
    if (best != 0) x = level.transversal[best] * x;
  }
  return x;
}

Permutation PermAction::induce(const Permutation& g) const {
  if (g.degree() != source_.degree()) throw DegreeMismatch("element degree differs from the source group");
  // The realized group may not exist yet (induce builds its generators).
  const std::size_t n = kind_ == ActionKind::kCosets ? coset_reps_.size()
                        : kind_ == ActionKind::kNatural ? g.degree()
                                                          : descriptions_.size();
  std::vector<Point> img(n);
  switch (kind_) {
    case ActionKind::kNatural: return g;
    case ActionKind::kKSets:
    case ActionKind::kOrderedTuples: {
      std::vector<Point> moved;
      for (Point omega = 0; omega < n; ++omega) {
        moved.clear();
        for (Point a : descriptions_[omega]) moved.push_back(g.image(a));
        if (kind_ == ActionKind::kKSets) std::sort(moved.begin(), moved.end());
        img[omega] = index_.at(key_of(moved));
      }
      return Permutation(std::move(img));
    }
    case ActionKind::kCosets: {
      for (Point omega = 0; omega < n; ++omega) {
        auto it = coset_index_.find(canonical_coset_rep(coset_reps_[omega] * g));
        if (it == coset_index_.end()) throw NotAMember("element does not normalise the coset space");
        img[omega] = it->second;
      }
      return Permutation(std::move(img));
    }
    case ActionKind::kProduct: {
      // Decompose g from the imprimitive wreath product into the block
      // permutation pi and per-block permutations x_j.
      const std::size_t m = inner_degree_;
      const std::size_t r = factors_;
      std::vector<std::size_t> pi(r);
      std::vector<std::vector<Point>> x(r, std::vector<Point>(m));
      for (std::size_t j = 0; j < r; ++j) {
        pi[j] = g.image(static_cast<Point>(j * m)) / m;
        for (std::size_t a = 0; a < m; ++a) x[j][a] = static_cast<Point>(g.image(static_cast<Point>(j * m + a)) % m);
      }
      std::vector<Point> moved(r);
      for (Point omega = 0; omega < n; ++omega) {
        const auto& t = descriptions_[omega];
        for (std::size_t i = 0; i < r; ++i) moved[pi[i]] = x[i][t[i]];
        img[omega] = index_.at(key_of(moved));
      }
      return Permutation(std::move(img));
    }
    default: break;
  }
  throw InvalidArgument("action kind not realizable from a permutation group");
}

PermAction realize(const PermGroup& group, const ActionSpec& spec, const RealizeOptions& options) {
  const std::size_t n = group.degree();
  switch (spec.kind) {
    case ActionKind::kNatural: {
      check_cap(n, options);
      PermAction action(group, group);
      action.kind_ = ActionKind::kNatural;
      action.transitive_ = group.is_transitive();
      if (options.require_transitive && !action.transitive_) throw NotTransitive("natural action is intransitive");
      return action;
    }
    case ActionKind::kKSets:
    case ActionKind::kOrderedTuples: {
      const std::size_t k = spec.k;
      if (k == 0 || k >= n + (spec.kind == ActionKind::kOrderedTuples ? 1 : 0))
        throw InvalidArgument("k must satisfy 1 <= k < n for k-sets (k <= n for tuples)");
      std::uint64_t degree = binomial(n, k);
      if (spec.kind == ActionKind::kOrderedTuples) {
        degree = 1;
        for (std::size_t i = 0; i < k; ++i) degree *= (n - i);
      }
      check_cap(degree, options);
      PermAction action(group, PermGroup::trivial(1));
      action.kind_ = spec.kind;
      action.k_ = k;
      // Enumerate subsets (or tuples) in lexicographic order.
      std::vector<Point> current(k);
      std::function<void(std::size_t, Point)> subsets = [&](std::size_t pos, Point start) {
        if (pos == k) {
          action.index_.emplace(key_of(current), static_cast<Point>(action.descriptions_.size()));
          action.descriptions_.push_back(current);
          return;
        }
        for (Point a = start; a < n; ++a) {
          current[pos] = a;
          subsets(pos + 1, a + 1);
        }
      };
      std::vector<bool> used(n, false);
      std::function<void(std::size_t)> tuples = [&](std::size_t pos) {
        if (pos == k) {
          action.index_.emplace(key_of(current), static_cast<Point>(action.descriptions_.size()));
          action.descriptions_.push_back(current);
          return;
        }
        for (Point a = 0; a < n; ++a) {
          if (used[a]) continue;
          used[a] = true;
          current[pos] = a;
          tuples(pos + 1);
          used[a] = false;
        }
      };
      if (spec.kind == ActionKind::kKSets) subsets(0, 0); else tuples(0);
      std::vector<Permutation> gens;
      for (const auto& g : group.generators()) gens.push_back(action.induce(g));
      action.group_ = PermGroup(action.descriptions_.size(), std::move(gens), group.seed());
      action.transitive_ = action.group_.is_transitive();
      if (options.require_transitive && !action.transitive_)
        throw NotTransitive("the group is not transitive on " + to_string(spec.kind));
      return action;
    }
    case ActionKind::kCosets: {
      auto subgroup = std::make_shared<PermGroup>(n, spec.subgroup_generators, group.seed());
      if (!subgroup->is_subgroup_of(group)) throw InvalidArgument("coset subgroup is not contained in the group");
      const BigInt index = group.order() / subgroup->order();
      if (index > options.degree_cap)
        throw CapExceeded("coset action degree " + index.str() + " exceeds degree cap " +
                          std::to_string(options.degree_cap));
      PermAction action(group, PermGroup::trivial(1));
      action.kind_ = ActionKind::kCosets;
      action.subgroup_ = subgroup;
      const Permutation start = action.canonical_coset_rep(Permutation(n));
      action.coset_reps_.push_back(start);
      action.coset_index_.emplace(start, 0);
      for (std::size_t c = 0; c < action.coset_reps_.size(); ++c) {
        for (const auto& s : group.generators()) {
          Permutation rep = action.canonical_coset_rep(action.coset_reps_[c] * s);
          if (action.coset_index_.contains(rep)) continue;
          action.coset_index_.emplace(rep, static_cast<Point>(action.coset_reps_.size()));
          action.coset_reps_.push_back(std::move(rep));
        }
      }
      std::vector<Permutation> gens;
      for (const auto& g : group.generators()) gens.push_back(action.induce(g));
      action.group_ = PermGroup(action.coset_reps_.size(), std::move(gens), group.seed());
      action.transitive_ = true;
      return action;
    }
    default:
      throw InvalidArgument("action '" + to_string(spec.kind) + "' needs a matrix group or wreath product");
  }
}

PermAction realize_product_action(const PermGroup& inner, const PermGroup& outer, const RealizeOptions& options) {
  const std::size_t m = inner.degree();
  const std::size_t r = outer.degree();
  BigInt degree = 1;
  for (std::size_t i = 0; i < r; ++i) degree *= m;
  if (degree > options.degree_cap)
    throw CapExceeded("product action degree " + degree.str() + " exceeds degree cap");
  PermAction action(wreath_product_imprimitive(inner, outer), wreath_product_product_action(inner, outer));
  action.kind_ = ActionKind::kProduct;
  action.inner_degree_ = m;
  action.factors_ = r;
  const auto n = static_cast<std::size_t>(degree);
  for (std::size_t code = 0; code < n; ++code) {
    std::vector<Point> t(r);
    std::size_t c = code;
    for (std::size_t i = 0; i < r; ++i) {
      t[i] = static_cast<Point>(c % m);
      c /= m;
    }
    action.index_.emplace(key_of(t), static_cast<Point>(code));
    action.descriptions_.push_back(std::move(t));
  }
  action.transitive_ = action.group_.is_transitive();
  if (options.require_transitive && !action.transitive_) throw NotTransitive("product action is intransitive");
  return action;
}

}  // namespace fprlab
