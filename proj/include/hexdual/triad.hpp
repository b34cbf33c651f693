#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hexdual/pitch_class.hpp"

namespace hexdual {

enum class Mode { Major, Minor };

/// A consonant triad as an ordered tuple of pitch classes: a major chord is
/// <x, x+4, x+7> and a minor chord is <x+7, x+3, x>. Exactly 24 values exist;
/// anything else is rejected at construction. The component order matters:
/// the P/L/R formulas below read indices out of it.
class Triad {
public:
  /// Throws std::invalid_argument unless the tuple is a consonant triad.
  Triad(PitchClass x1, PitchClass x2, PitchClass x3);

  static Triad major(PitchClass root);  // <x, x+4, x+7>
  static Triad minor(PitchClass root);  // <x+7, x+3, x>

  const std::array<PitchClass, 3>& tones() const { return tones_; }
  PitchClass tone(int i) const { return tones_[static_cast<std::size_t>(i)]; }
  Mode mode() const { return mode_; }
  bool is_major() const { return mode_ == Mode::Major; }

  /// The pitch class that names the chord: tones[0] for majors, tones[2] for minors.
  PitchClass letter_root() const;

  PcSet tone_set() const;

  /// Letter name: uppercase majors ("C", "Eb", "F#"), lowercase minors ("c", "eb", "f#").
  std::string name() const;

  /// "<3,7,10>"
  std::string tuple_string() const;

  /// Accepts both sharp and flat spellings ("Eb" == "D#", "f#" == "gb").
  static std::optional<Triad> parse(std::string_view text);

  friend bool operator==(const Triad&, const Triad&) = default;
  friend auto operator<=>(const Triad&, const Triad&) = default;

private:
  std::array<PitchClass, 3> tones_;
  Mode mode_;
};

/// Componentwise action of a twelve-tone operation. T_n preserves mode, I_n flips it.
Triad apply(TiOp op, const Triad& t);

/// P: I_{x1+x3} componentwise; major <-> parallel minor, same letter.
Triad parallel(const Triad& t);

/// L: I_{x2+x3} componentwise; moves a major root down a semitone, a minor fifth up.
Triad leading_tone_exchange(const Triad& t);

/// R: I_{x1+x2} componentwise; major <-> relative minor.
Triad relative(const Triad& t);

/// Canonical enumeration: majors on roots 0..11, then minors <x+7,x+3,x> for
/// x = 0..11. This ordering is the carrier-index convention for permutations.
const std::vector<Triad>& all_triads();

/// Position of t in all_triads(): major x -> x, minor x -> 12 + x.
std::size_t triad_index(const Triad& t);

/// The unique consonant triad with exactly these tones, if one exists.
std::optional<Triad> triad_from_tone_set(PcSet tones);

}  // namespace hexdual
