#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fprlab/actions.hpp"
#include "fprlab/classical.hpp"

namespace fprlab {

// Group and action specification strings.
//
//   spec    := group [ "@" action ]
//   group   := "sym:" N | "alt:" N | "cyclic:" N | "dihedral:" ORDER
//            | "wreath-product:" family ":" N ":" family ":" N
//            | "perm:" N ":" generators
//            | ("gl" | "sl" | "pgl" | "psl" | "sp") ":" N ":" Q
//   family  := "sym" | "alt" | "cyclic" | "dihedral"
//   action  := "natural" | "regular" | "ksets:" K | "tuples:" K
//            | "cosets:" generators | "product"
//            | "projective" | "vectors" | "subspaces:" K | "forms:" ("minus" | "plus")
//
// Generators are 1-indexed permutations in disjoint-cycle notation,
// separated by commas, e.g. "(1,2,3,4,5),(1,2)(3,5)". The default action is
// "natural" for permutation groups, "projective" for pgl/psl and "vectors"
// for gl/sl/sp.

enum class GroupFamily { kSym, kAlt, kCyclic, kDihedral, kWreath, kPerm, kGL, kSL, kPGL, kPSL, kSp };

struct GroupSpec {
  GroupFamily family = GroupFamily::kSym;
  /// Degree (sym, alt, cyclic, perm), order (dihedral), or dimension.
  std::size_t n = 0;
  std::uint32_t q = 0;
  std::vector<Permutation> generators;  // perm
  /// Wreath factors: inner then outer, each a named family with parameter.
  std::vector<std::pair<GroupFamily, std::size_t>> factors;

  bool is_matrix() const;
  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

struct ParsedSpec {
  GroupSpec group;
  ActionSpec action;
  /// The action kind "regular" is stored as cosets of the trivial group.
  bool regular = false;
};

bool operator==(const ParsedSpec& a, const ParsedSpec& b);

/// Throws ParseError (with position) for syntax errors and InvalidArgument
/// for well-formed but meaningless specs (k-sets with k >= n, an action the
/// group family cannot have, ...).
ParsedSpec parse_spec(std::string_view text);

/// Canonical text; parse_spec(print_spec(s)) == s.
std::string print_spec(const ParsedSpec& spec);

/// The permutation group a spec describes before any action is applied.
/// Only for permutation-group families.
PermGroup build_group(const GroupSpec& spec, std::uint64_t seed = kDefaultSeed);

/// A spec turned into a permutation action.
struct RealizedSpec {
  ParsedSpec spec;
  /// The acting permutation group on Omega.
  PermGroup group;
  /// For permutation-group families: the group before the action, and the
  /// action itself (unset for the natural action).
  std::optional<PermGroup> source;
  std::optional<PermAction> perm_action;
  std::optional<MatrixAction> matrix_action;
  /// Socle name in the style of check_43q ("PSL3(3)", "PSp6(2)") and the
  /// field size, for matrix groups.
  std::optional<std::string> socle;
  std::optional<std::uint32_t> q;

  /// Maps an element of the source group (degree of the source) into the
  /// acting group; elements already of the acting degree pass through.
  Permutation to_acting(const Permutation& x) const;
  /// Parses one element in cycle notation, interpreted like to_acting.
  Permutation parse_element(std::string_view text) const;
};

RealizedSpec realize_spec(const ParsedSpec& spec, const RealizeOptions& options = {},
                          std::uint64_t seed = kDefaultSeed);

}  // namespace fprlab
