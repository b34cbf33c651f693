#pragma once

#include <cstddef>
#include <vector>

#include "hexdual/pitch_class.hpp"

namespace hexdual {

/// A T/I-equivalence class of pitch-class sets, keyed by its prime form: the
/// lexicographically least image (compared as sorted tuples) under all 24
/// transpositions and inversions.
struct SetClass {
  PcSet prime;

  int cardinality() const { return prime.size(); }

  friend bool operator==(const SetClass&, const SetClass&) = default;
};

SetClass set_class_of(PcSet s);

/// Every class exactly once, ordered by (cardinality, prime form). There are
/// 224 of them, the empty and full sets included.
std::vector<SetClass> all_set_classes();

/// The distinct T/I images of the prime form, in tuple order. 24 for an
/// asymmetric set, fewer when the set has T/I symmetry.
std::vector<PcSet> exemplars(const SetClass& c);

/// True iff the two sets have the same size, all tones in common but one,
/// and the odd tone out moves by exactly a semitone.
bool is_ms_transition(PcSet a, PcSet b);

/// Undirected graph on the exemplars of one class with maximally smooth
/// transitions as edges.
struct MsGraph {
  std::vector<PcSet> nodes;
  std::vector<std::vector<int>> adjacency;  // ascending neighbor indices

  std::size_t edge_count() const;
  int degree(int v) const { return static_cast<int>(adjacency[static_cast<std::size_t>(v)].size()); }
};

MsGraph ms_graph(const SetClass& c);

/// A maximally smooth cycle: more than three distinct chords of one set
/// class, consecutive chords in maximally smooth transition, first == last.
struct MsCycle {
  std::vector<PcSet> chords;  // length() + 1 entries

  int length() const { return static_cast<int>(chords.size()) - 1; }
};

/// All simple cycles of length >= 4 in the class's transition graph, each
/// reported once up to rotation and reversal: listed from its least node, in
/// the direction that makes the second node smaller than the last.
std::vector<MsCycle> enumerate_ms_cycles(const SetClass& c);

struct SetClassCycles {
  SetClass set_class;
  int exemplar_count = 0;
  std::vector<int> cycle_lengths;  // ascending, one entry per cycle

  int cycle_count() const { return static_cast<int>(cycle_lengths.size()); }
};

/// Scans every set class of cardinality 1..11 and returns exactly those that
/// support at least one maximally smooth cycle.
std::vector<SetClassCycles> classify_all();

}  // namespace hexdual
