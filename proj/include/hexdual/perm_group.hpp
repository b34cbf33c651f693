#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hexdual/permutation.hpp"

namespace hexdual {

/// Isomorphism type of a small group, recognized from order, element orders,
/// and commutativity. Enough to tell apart everything that arises on carriers
/// of two dozen points.
struct GroupClass {
  enum class Kind { Trivial, Cyclic, Dihedral, Symmetric, Other };

  Kind kind = Kind::Other;
  /// Group order for Cyclic/Dihedral/Other, symbol count for Symmetric.
  int parameter = 0;

  static GroupClass trivial() { return {Kind::Trivial, 1}; }
  static GroupClass cyclic(int order) { return {Kind::Cyclic, order}; }
  static GroupClass dihedral(int order) { return {Kind::Dihedral, order}; }
  static GroupClass symmetric(int symbols) { return {Kind::Symmetric, symbols}; }
  static GroupClass other(int order) { return {Kind::Other, order}; }

  std::string to_string() const;

  friend bool operator==(const GroupClass&, const GroupClass&) = default;
};

/// A finite permutation group on a fixed carrier: the full element list plus
/// the generators it was built from. Immutable once constructed; construction
/// verifies the group axioms.
class PermGroup {
public:
  static PermGroup trivial(CarrierPtr carrier);

  /// Breadth-first closure of the generators. Every element is labelled with
  /// the first word found for it, which BFS makes shortest-in-generators.
  /// Throws std::length_error if the closure exceeds max_order.
  static PermGroup generate(CarrierPtr carrier, std::vector<Permutation> generators,
                            std::size_t max_order = 1'000'000);

  /// Wraps an explicit element list, verifying identity membership, closure
  /// under composition, and closure under inverse. When generators is empty
  /// the elements serve as their own generating set.
  static PermGroup from_elements(std::vector<Permutation> elements,
                                 std::vector<Permutation> generators = {});

  const CarrierPtr& carrier() const { return carrier_; }
  /// Sorted by image array; canonical across runs.
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  std::size_t order() const { return elements_.size(); }
  std::size_t degree() const { return carrier_->size(); }

  bool contains(const Permutation& p) const;

  /// Element g with g(from) == to, if any; prefers the shortest word.
  std::optional<Permutation> element_mapping(std::size_t from, std::size_t to) const;

  bool is_subgroup_of(const PermGroup& other) const;

  friend bool operator==(const PermGroup& a, const PermGroup& b);

private:
  PermGroup(CarrierPtr carrier, std::vector<Permutation> elements,
            std::vector<Permutation> generators);

  CarrierPtr carrier_;
  std::vector<Permutation> elements_;
  std::vector<Permutation> generators_;
};

/// Orbit of a point, sorted by carrier index.
std::vector<std::size_t> orbit(const PermGroup& g, std::size_t point);

/// Point-wise stabilizer subgroup.
PermGroup stabilizer(const PermGroup& g, std::size_t point);

/// Subgroup preserving the subset as a set (not necessarily pointwise).
PermGroup setwise_stabilizer(const PermGroup& g, std::vector<std::size_t> subset);

bool is_transitive(const PermGroup& g);

/// Transitive with |G| == |carrier|; equivalently all stabilizers trivial.
bool is_simply_transitive(const PermGroup& g);

inline constexpr std::size_t kBruteCarrierLimit = 8;

/// Centralizer in the full symmetric group by scanning all size! permutations.
/// Throws std::invalid_argument when the carrier has more than 8 points.
PermGroup centralizer_brute(const PermGroup& g);

/// Centralizer in the full symmetric group of a transitive group, by the
/// point-image construction: a commuting permutation is determined by where it
/// sends one base point, so each candidate image is tried and kept only when
/// the induced map is consistent and total. No carrier size bound.
PermGroup centralizer_of_transitive(const PermGroup& g);

/// Point-image algorithm when transitive, brute force otherwise.
PermGroup centralizer_in_sym(const PermGroup& g);

/// Restriction to an invariant subset, as a group on the sub-carrier.
/// Throws std::invalid_argument if some element moves a point out of subset.
PermGroup restrict_to(const PermGroup& g, std::vector<std::size_t> subset);

/// { k h k^-1 : h in g }.
PermGroup conjugate(const PermGroup& g, const Permutation& k);

GroupClass classify(const PermGroup& g);

/// Checks |G| == |stabilizer| * |orbit| and that cosets of the stabilizer
/// biject with the orbit, fiber by fiber.
bool check_orbit_stabilizer(const PermGroup& g, std::size_t point);

struct DualPairReport {
  bool same_carrier = false;
  bool g_simply_transitive = false;
  bool h_simply_transitive = false;
  bool commute = false;  // every element of g commutes with every element of h
  bool g_in_centralizer_of_h = false;
  bool h_in_centralizer_of_g = false;
  bool centralizer_of_g_is_h = false;
  bool centralizer_of_h_is_g = false;

  bool dual() const {
    return same_carrier && g_simply_transitive && h_simply_transitive && commute &&
           g_in_centralizer_of_h && h_in_centralizer_of_g && centralizer_of_g_is_h &&
           centralizer_of_h_is_g;
  }
};

/// Checks the two groups are dual: both simply transitive and each the
/// centralizer of the other.
DualPairReport verify_dual_pair(const PermGroup& g, const PermGroup& h);

struct DoubleCentralizerReport {
  std::size_t centralizer_order = 0;
  bool centralizer_simply_transitive = false;
  bool double_centralizer_is_original = false;

  bool ok() const { return centralizer_simply_transitive && double_centralizer_is_original; }
};

/// For a simply transitive group on a small carrier, brute-forces that C(G)
/// is simply transitive and C(C(G)) == G.
/// Throws std::invalid_argument unless g is simply transitive and the carrier
/// has at most 8 points.
DoubleCentralizerReport verify_double_centralizer(const PermGroup& g);

}  // namespace hexdual
