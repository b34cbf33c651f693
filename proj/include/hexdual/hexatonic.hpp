#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hexdual/perm_group.hpp"
#include "hexdual/triad.hpp"

namespace hexdual {

// --- Standard carriers and actions -----------------------------------------

/// The 24 consonant triads in all_triads() order, labelled by chord name.
CarrierPtr triad_carrier();

/// Z12 with labels "0".."11".
CarrierPtr pitch_class_carrier();

Permutation ti_perm_on_triads(TiOp op);
Permutation ti_perm_on_pitch_classes(TiOp op);

/// 'P', 'L' or 'R' as a permutation of the 24 triads.
Permutation plr_perm(char letter);

/// The full T/I-group acting on the 24 triads (order 24, elements labelled
/// "T0".."I11").
const PermGroup& ti_group_on_triads();

/// The T/I-group acting on the 12 pitch classes.
const PermGroup& ti_group_on_pitch_classes();

/// <P, L>: order 6.
const PermGroup& pl_group();

/// <P, L, R>: order 24.
const PermGroup& plr_group();

/// If the permutation of triads is induced componentwise by some T_n or I_n,
/// return that operation.
std::optional<TiOp> recognize_ti_on_triads(const Permutation& p);

// --- Hexatonic cycles -------------------------------------------------------

/// One of the four maximally smooth 6-cycles of consonant triads. The chord
/// list has 7 entries with chords.front() == chords.back(), alternating P and
/// L transitions starting with P from a major triad.
struct HexCycle {
  int index = 0;               // 0..3
  std::vector<Triad> chords;   // 7 entries

  std::vector<Triad> distinct_chords() const;  // the first six
  PcSet tone_set() const;                      // union of the six chords' tones
  std::vector<std::string> chord_names() const;
};

/// Cycle 0 is Eb, eb, B, b, G, g, Eb; cycle i is its transposition by T_i.
/// Throws std::out_of_range unless 0 <= i <= 3.
HexCycle hex_cycle(int i);

/// All consonant triads whose tones lie inside the given set.
std::vector<Triad> triads_within(PcSet pcs);

/// {2,3,6,7,10,11}: the pitch classes underlying cycle 0.
PcSet hex_pitch_classes();

/// Carrier indices of cycle 0's six chords, ascending.
std::vector<std::size_t> hex_triad_indices();

/// The set-wise stabilizer of the cycle-0 chord set inside the T/I-group,
/// computed by search over all 24 operations (comes out to
/// {T0, T4, T8, I1, I5, I9}, dihedral of order 6).
PermGroup hex_ti_stabilizer();

// --- Words over {P, L} ------------------------------------------------------

/// Applies the word right-to-left: eval_word("PLP", t) = P(L(P(t))).
/// Throws std::invalid_argument on letters outside {P, L}.
Triad eval_word(std::string_view word, const Triad& t);

/// The normal forms: "", "P", "LP", "PLP", "LPLP", "PLPLP".
const std::array<std::string, 6>& canonical_pl_words();

/// Canonical form of a word as a function on the 24 triads, found by
/// evaluating against the six normal forms.
std::string reduce_word(std::string_view word);

// --- Duality verification ---------------------------------------------------

struct HexDualityReport {
  std::size_t pl_order = 0;
  std::size_t h_order = 0;
  bool pl_restriction_faithful = false;  // restricting to Hex keeps all 6 elements
  bool h_restriction_faithful = false;
  bool pl_simply_transitive_on_hex = false;
  bool h_simply_transitive_on_hex = false;
  bool commute = false;
  bool centralizer_algorithms_agree = false;  // brute force vs point-image
  DualPairReport dual;
  GroupClass pl_class;
  GroupClass h_class;
  std::vector<std::pair<std::string, std::string>> h_orbit_of_eb;  // (op, chord)
  std::vector<std::string> pl_cycle_from_eb;                       // chords by word prefixes

  bool ok() const;
};

/// Machine check of hexatonic duality: restricted to the six cycle-0 chords,
/// the PL-group and the stabilizer {T0,T4,T8,I1,I5,I9} are dual groups and
/// both are dihedral of order 6.
HexDualityReport verify_hexatonic_duality();

struct SubDualRow {
  std::string k;                         // "Id", "T1", "T2", "T3"
  std::vector<std::string> hex_triads;   // k applied to cycle 0's chords, in order
  std::vector<std::string> dual_ops;     // conjugates of H's elements, in H's order
  DualPairReport dual;                   // verified on the row's own 6-point carrier
};

/// The four hexatonic systems: for k in {Id, T1, T2, T3} the transported
/// chord set k·Hex and the conjugated stabilizer k·H·k^-1, each pair verified
/// dual on its own carrier.
std::vector<SubDualRow> sub_dual_table();

// --- DOT export --------------------------------------------------------------

/// The 6-node cycle network with alternating P/L edge labels.
std::string hex_cycle_dot(int i);

/// The 4-chord Grail network: Eb -PLP-> b -L-> G -PLP-> eb plus the composite
/// edge Eb -P-> eb.
std::string grail_dot();

}  // namespace hexdual
