#pragma once

#include <string>
#include <vector>

#include "hexdual/hexatonic.hpp"
#include "hexdual/triad.hpp"

namespace hexdual {

/// A major-scale collection: root + {0,2,4,5,7,9,11}. Twelve exist; scales a
/// fifth apart share six tones and the odd tones out sit a semitone apart.
struct DiatonicSet {
  PitchClass root;
  PcSet tones;

  /// Scale spelling of the root: "C", "Db", ..., "F#", ..., "B".
  std::string root_name() const;
  /// "Eb-major"
  std::string name() const;

  friend bool operator==(const DiatonicSet&, const DiatonicSet&) = default;
};

DiatonicSet major_scale(PitchClass root);
const std::vector<DiatonicSet>& all_major_scales();

/// The scales whose tone set contains the triad: exactly three for every
/// consonant triad. Ordered by the scale degree the chord sits on — majors as
/// I, IV, V (roots r, r-5, r-7), minors as vi, ii, iii (roots m-9, m-2, m-4).
std::vector<DiatonicSet> scales_containing(const Triad& t);

/// Maximally smooth in the same sense as for chords: one tone moves by a
/// semitone. Works out to the roots being a fifth apart.
bool is_ms_scale_transition(const DiatonicSet& a, const DiatonicSet& b);

struct DouthettRow {
  Triad chord;
  DiatonicSet scale;
  bool contained = false;
};

/// The descending whole-step scale sequence Eb, Db, B, A, G, F set against
/// cycle 0's chords, one scale per chord.
struct DouthettReport {
  std::vector<DouthettRow> rows;
  bool all_contained = false;
  bool descends_whole_step = false;

  bool ok() const { return all_contained && descends_whole_step; }
};

DouthettReport douthett_sequence_check();

/// A run of scales, consecutive ones in maximally smooth transition, covering
/// a window of consecutive cycle chords one-to-one and in order.
struct CoveringChain {
  std::vector<DiatonicSet> scales;
  std::vector<Triad> assigned;  // assigned[i]'s tones lie inside scales[i]
  int window_start = 0;         // cycle position of assigned.front()

  std::string chain_string() const;  // "B-E-A-D"
};

/// All covering chains of the given length for the cycle, windows taken
/// cyclically in cycle direction, scales within a chain distinct. Sorted by
/// root sequence. Throws std::invalid_argument when chain_len < 2.
std::vector<CoveringChain> covering_chains(const HexCycle& cycle, int chain_len);

/// Number of unordered maximally smooth scale pairs {a, b} with one scale
/// containing the first chord and the other containing the second.
int ms_transitions_covering(const Triad& from, const Triad& to);

/// Whether any single major scale contains every chord of the cycle.
bool any_scale_contains(const HexCycle& cycle);

}  // namespace hexdual
