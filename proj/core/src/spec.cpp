#include "fprlab/spec.hpp"

#include <cctype>

namespace fprlab {

bool GroupSpec::is_matrix() const {
  switch (family) {
    case GroupFamily::kGL:
    case GroupFamily::kSL:
    case GroupFamily::kPGL:
    case GroupFamily::kPSL:
    case GroupFamily::kSp: return true;
    default: return false;
  }
}

bool operator==(const ParsedSpec& a, const ParsedSpec& b) {
  return a.group == b.group && a.regular == b.regular && a.action.kind == b.action.kind && a.action.k == b.action.k &&
         a.action.subgroup_generators == b.action.subgroup_generators && a.action.form_type == b.action.form_type;
}

namespace {

struct FamilyName {
  GroupFamily family;
  const char* name;
};

constexpr FamilyName kFamilies[] = {
    {GroupFamily::kSym, "sym"},   {GroupFamily::kAlt, "alt"},   {GroupFamily::kCyclic, "cyclic"},
    {GroupFamily::kDihedral, "dihedral"}, {GroupFamily::kWreath, "wreath-product"}, {GroupFamily::kPerm, "perm"},
    {GroupFamily::kGL, "gl"},     {GroupFamily::kSL, "sl"},     {GroupFamily::kPGL, "pgl"},
    {GroupFamily::kPSL, "psl"},   {GroupFamily::kSp, "sp"},
};

const char* family_name(GroupFamily f) {
  for (const auto& e : kFamilies)
    if (e.family == f) return e.name;
  return "?";
}

bool is_named_family(GroupFamily f) {
  return f == GroupFamily::kSym || f == GroupFamily::kAlt || f == GroupFamily::kCyclic || f == GroupFamily::kDihedral;
}

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

  bool done() const { return i_ == text_.size(); }
  std::size_t position() const { return offset_ + i_; }
  std::string_view rest() const { return text_.substr(i_); }
  void skip_all() { i_ = text_.size(); }

  std::string word() {
    const std::size_t start = i_;
    while (i_ < text_.size() && (std::islower(static_cast<unsigned char>(text_[i_])) || text_[i_] == '-')) ++i_;
    if (start == i_) throw ParseError("expected a name", offset_ + start);
    return std::string(text_.substr(start, i_ - start));
  }

  std::uint64_t number() {
    const std::size_t start = i_;
    std::uint64_t value = 0;
    while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
      value = value * 10 + static_cast<std::uint64_t>(text_[i_] - '0');
      if (value > 1'000'000'000) throw ParseError("number too large", offset_ + start);
      ++i_;
    }
    if (start == i_) throw ParseError("expected a number", offset_ + start);
    return value;
  }

  void expect(char c) {
    if (i_ >= text_.size() || text_[i_] != c) throw ParseError(std::string("expected '") + c + "'", position());
    ++i_;
  }

  void expect_end() {
    if (!done()) throw ParseError("unexpected trailing text", position());
  }

 private:
  std::string_view text_;
  std::size_t offset_;
  std::size_t i_ = 0;
};

std::vector<Permutation> parse_generators(std::size_t degree, std::string_view text, std::size_t offset) {
  try {
    return parse_permutation_list(degree, text);
  } catch (const ParseError& e) {
    std::string message = e.what();
    const auto cut = message.rfind(" (at position");
    if (cut != std::string::npos) message.resize(cut);
    throw ParseError(message, offset + e.position());
  }
}

GroupFamily lookup_family(const std::string& name, std::size_t position) {
  for (const auto& e : kFamilies)
    if (name == e.name) return e.family;
  throw ParseError("unknown group family '" + name + "'", position);
}

GroupSpec parse_group(std::string_view text) {
  Cursor c(text, 0);
  GroupSpec g;
  const std::size_t name_pos = c.position();
  g.family = lookup_family(c.word(), name_pos);
  c.expect(':');
  switch (g.family) {
    case GroupFamily::kSym:
    case GroupFamily::kAlt:
    case GroupFamily::kCyclic: {
      const auto pos = c.position();
      g.n = c.number();
      if (g.n < 1) throw ParseError("degree must be at least 1", pos);
      break;
    }
    case GroupFamily::kDihedral: {
      const auto pos = c.position();
      g.n = c.number();
      if (g.n < 2 || g.n % 2 != 0) throw ParseError("dihedral order must be even and at least 2", pos);
      break;
    }
    case GroupFamily::kWreath:
      for (int i = 0; i < 2; ++i) {
        if (i == 1) c.expect(':');
        const auto pos = c.position();
        const GroupFamily f = lookup_family(c.word(), pos);
        if (!is_named_family(f)) throw ParseError("wreath factors must be sym, alt, cyclic or dihedral", pos);
        c.expect(':');
        const auto npos = c.position();
        const std::size_t n = c.number();
        if (n < 1 || (f == GroupFamily::kDihedral && (n < 2 || n % 2 != 0)))
          throw ParseError("invalid wreath factor parameter", npos);
        g.factors.emplace_back(f, n);
      }
      break;
    case GroupFamily::kPerm: {
      const auto pos = c.position();
      g.n = c.number();
      if (g.n < 1) throw ParseError("degree must be at least 1", pos);
      c.expect(':');
      g.generators = parse_generators(g.n, c.rest(), c.position());
      c.skip_all();
      break;
    }
    default: {
      const auto npos = c.position();
      g.n = c.number();
      if (g.n < 1) throw ParseError("dimension must be at least 1", npos);
      c.expect(':');
      const auto qpos = c.position();
      const auto q = c.number();
      if (q < 2 || q > 256) throw ParseError("field size must be a prime power in [2, 256]", qpos);
      g.q = static_cast<std::uint32_t>(q);
      break;
    }
  }
  c.expect_end();
  return g;
}

void parse_action(ParsedSpec& spec, std::string_view text, std::size_t offset) {
  Cursor c(text, offset);
  const std::size_t pos = c.position();
  const std::string name = c.word();
  ActionSpec& a = spec.action;
  auto number_param = [&] {
    c.expect(':');
    return static_cast<std::size_t>(c.number());
  };
  if (name == "natural") {
    a.kind = ActionKind::kNatural;
  } else if (name == "regular") {
    a.kind = ActionKind::kCosets;
    spec.regular = true;
  } else if (name == "ksets") {
    a.kind = ActionKind::kKSets;
    a.k = number_param();
  } else if (name == "tuples") {
    a.kind = ActionKind::kOrderedTuples;
    a.k = number_param();
  } else if (name == "cosets") {
    a.kind = ActionKind::kCosets;
    c.expect(':');
    if (spec.group.is_matrix() || spec.group.family == GroupFamily::kWreath)
      throw InvalidArgument("coset actions take generators in the group's own degree; use perm, sym, alt, cyclic or dihedral");
    const std::size_t degree = build_group(spec.group).degree();
    a.subgroup_generators = parse_generators(degree, c.rest(), c.position());
    c.skip_all();
  } else if (name == "product") {
    a.kind = ActionKind::kProduct;
  } else if (name == "projective") {
    a.kind = ActionKind::kProjective;
  } else if (name == "vectors") {
    a.kind = ActionKind::kVectors;
  } else if (name == "subspaces") {
    a.kind = ActionKind::kSubspaces;
    a.k = number_param();
  } else if (name == "forms") {
    a.kind = ActionKind::kQuadraticForms;
    c.expect(':');
    const std::size_t tpos = c.position();
    a.form_type = c.word();
    if (a.form_type != "minus" && a.form_type != "plus") throw ParseError("form type must be minus or plus", tpos);
  } else {
    throw ParseError("unknown action '" + name + "'", pos);
  }
  c.expect_end();
}

void check_semantics(const ParsedSpec& spec) {
  const GroupSpec& g = spec.group;
  const ActionSpec& a = spec.action;
  const bool matrix_action = a.kind == ActionKind::kProjective || a.kind == ActionKind::kVectors ||
                             a.kind == ActionKind::kSubspaces || a.kind == ActionKind::kQuadraticForms;
  if (g.is_matrix() != matrix_action)
    throw InvalidArgument(std::string("action ") + to_string(a.kind) + " does not apply to " + family_name(g.family) +
                          " groups");
  if (a.kind == ActionKind::kProduct && g.family != GroupFamily::kWreath)
    throw InvalidArgument("the product action needs a wreath product");
  if (g.family == GroupFamily::kSp && g.n % 2 != 0) throw InvalidArgument("symplectic groups need even dimension");
  if (g.is_matrix()) {
    Field::get(g.q);  // rejects non-prime-powers
    if (a.kind == ActionKind::kSubspaces && (a.k < 1 || a.k >= g.n))
      throw InvalidArgument("subspace dimension must satisfy 1 <= k < n");
    if (a.kind == ActionKind::kQuadraticForms && (g.family != GroupFamily::kSp || g.q % 2 != 0))
      throw InvalidArgument("quadratic forms need sp over a field of even order");
    return;
  }
  const std::size_t n = build_group(g).degree();
  if (a.kind == ActionKind::kKSets && (a.k < 1 || a.k >= n)) throw InvalidArgument("k-sets need 1 <= k < n");
  if (a.kind == ActionKind::kOrderedTuples && (a.k < 1 || a.k > n)) throw InvalidArgument("tuples need 1 <= k <= n");
}

}  // namespace

ParsedSpec parse_spec(std::string_view text) {
  ParsedSpec spec;
  const auto at = text.find('@');
  spec.group = parse_group(text.substr(0, at));
  if (at == std::string_view::npos) {
    spec.action.kind = spec.group.is_matrix()
                           ? (spec.group.family == GroupFamily::kPGL || spec.group.family == GroupFamily::kPSL
                                  ? ActionKind::kProjective
                                  : ActionKind::kVectors)
                           : ActionKind::kNatural;
  } else {
    parse_action(spec, text.substr(at + 1), at + 1);
  }
  check_semantics(spec);
  return spec;
}

namespace {

std::string join_generators(const std::vector<Permutation>& gens) {
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ',';
    out += gens[i].to_cycle_string();
  }
  return out;
}

}  // namespace

std::string print_spec(const ParsedSpec& spec) {
  const GroupSpec& g = spec.group;
  std::string out = family_name(g.family);
  out += ':';
  switch (g.family) {
    case GroupFamily::kWreath:
      out += std::string(family_name(g.factors[0].first)) + ":" + std::to_string(g.factors[0].second) + ":" +
             family_name(g.factors[1].first) + ":" + std::to_string(g.factors[1].second);
      break;
    case GroupFamily::kPerm: out += std::to_string(g.n) + ":" + join_generators(g.generators); break;
    default:
      out += std::to_string(g.n);
      if (g.is_matrix()) out += ":" + std::to_string(g.q);
  }
  out += '@';
  const ActionSpec& a = spec.action;
  switch (a.kind) {
    case ActionKind::kNatural: out += "natural"; break;
    case ActionKind::kKSets: out += "ksets:" + std::to_string(a.k); break;
    case ActionKind::kOrderedTuples: out += "tuples:" + std::to_string(a.k); break;
    case ActionKind::kCosets: out += spec.regular ? "regular" : "cosets:" + join_generators(a.subgroup_generators); break;
    case ActionKind::kProduct: out += "product"; break;
    case ActionKind::kProjective: out += "projective"; break;
    case ActionKind::kVectors: out += "vectors"; break;
    case ActionKind::kSubspaces: out += "subspaces:" + std::to_string(a.k); break;
    case ActionKind::kQuadraticForms: out += "forms:" + a.form_type; break;
  }
  return out;
}

namespace {

PermGroup named_group(GroupFamily f, std::size_t n) {
  switch (f) {
    case GroupFamily::kSym: return symmetric_group(n);
    case GroupFamily::kAlt: return alternating_group(n);
    case GroupFamily::kCyclic: return cyclic_group(n);
    case GroupFamily::kDihedral: return dihedral_group(n);
    default: throw InvalidArgument("not a named family");
  }
}

ClassicalKind classical_kind(GroupFamily f) {
  switch (f) {
    case GroupFamily::kGL: return ClassicalKind::kGL;
    case GroupFamily::kSL: return ClassicalKind::kSL;
    case GroupFamily::kPGL: return ClassicalKind::kPGL;
    case GroupFamily::kPSL: return ClassicalKind::kPSL;
    case GroupFamily::kSp: return ClassicalKind::kSp;
    default: throw InvalidArgument("not a matrix family");
  }
}

}  // namespace

PermGroup build_group(const GroupSpec& spec, std::uint64_t seed) {
  switch (spec.family) {
    case GroupFamily::kWreath:
      return wreath_product_imprimitive(named_group(spec.factors[0].first, spec.factors[0].second),
                                        named_group(spec.factors[1].first, spec.factors[1].second));
    case GroupFamily::kPerm: return PermGroup(spec.n, spec.generators, seed);
    default:
      if (spec.is_matrix()) throw InvalidArgument("matrix groups have no permutation form before an action");
      return named_group(spec.family, spec.n);
  }
}

Permutation RealizedSpec::to_acting(const Permutation& x) const {
  if (perm_action && x.degree() == source->degree()) return perm_action->induce(x);
  if (x.degree() != group.degree())
    throw DegreeMismatch("element of degree " + std::to_string(x.degree()) + " for an action of degree " +
                         std::to_string(group.degree()));
  return x;
}

Permutation RealizedSpec::parse_element(std::string_view text) const {
  if (perm_action) {
    try {
      return perm_action->induce(Permutation::from_cycles(source->degree(), text));
    } catch (const ParseError&) {
      // Fall through: maybe written on Omega.
    }
  }
  return Permutation::from_cycles(group.degree(), text);
}

RealizedSpec realize_spec(const ParsedSpec& spec, const RealizeOptions& options, std::uint64_t seed) {
  const GroupSpec& g = spec.group;
  if (g.is_matrix()) {
    const auto kind = classical_kind(g.family);
    auto action = act_on(build_classical(kind, g.n, g.q), spec.action, options, seed);
    RealizedSpec r{spec, action.group(), std::nullopt, std::nullopt, action, std::nullopt, g.q};
    r.socle = std::string(kind == ClassicalKind::kSp ? "PSp" : "PSL") + std::to_string(g.n) + "(" + std::to_string(g.q) + ")";
    return r;
  }
  if (spec.action.kind == ActionKind::kProduct) {
    auto action = realize_product_action(named_group(g.factors[0].first, g.factors[0].second),
                                         named_group(g.factors[1].first, g.factors[1].second), options);
    return RealizedSpec{spec, action.group(), action.source(), action, std::nullopt, std::nullopt, std::nullopt};
  }
  PermGroup source = build_group(g, seed);
  if (source.degree() > options.degree_cap)
    throw CapExceeded("degree " + std::to_string(source.degree()) + " exceeds cap " + std::to_string(options.degree_cap));
  if (spec.action.kind == ActionKind::kNatural) {
    if (options.require_transitive && !source.is_transitive()) throw NotTransitive("the natural action is not transitive");
    return RealizedSpec{spec, source, source, std::nullopt, std::nullopt, std::nullopt, std::nullopt};
  }
  auto action = realize(source, spec.action, options);
  return RealizedSpec{spec, action.group(), source, action, std::nullopt, std::nullopt, std::nullopt};
}

}  // namespace fprlab
