#include "hexdual/triad.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace hexdual {

namespace {

constexpr const char* kMajorNames[kSemitones] = {"C",  "C#", "D", "Eb", "E",  "F",
                                                 "F#", "G",  "Ab", "A", "Bb", "B"};

constexpr const char* kMinorNames[kSemitones] = {"c",  "c#", "d", "eb", "e",  "f",
                                                 "f#", "g",  "ab", "a", "bb", "b"};

// Natural pitch classes of the letters A..G.
constexpr int kNaturals[7] = {9, 11, 0, 2, 4, 5, 7};

}  // namespace

Triad::Triad(PitchClass x1, PitchClass x2, PitchClass x3) : tones_{x1, x2, x3} {
  const int d2 = mod12(x2.value() - x1.value());
  const int d3 = mod12(x3.value() - x1.value());
  if (d2 == 4 && d3 == 7) {
    mode_ = Mode::Major;
  } else if (d2 == 8 && d3 == 5) {
    mode_ = Mode::Minor;
  } else {
    std::ostringstream os;
    os << "not a consonant triad: <" << x1.value() << ',' << x2.value() << ',' << x3.value()
       << '>';
    throw std::invalid_argument(os.str());
  }
}

Triad Triad::major(PitchClass root) { return Triad(root, root + 4, root + 7); }

Triad Triad::minor(PitchClass root) { return Triad(root + 7, root + 3, root); }

PitchClass Triad::letter_root() const { return mode_ == Mode::Major ? tones_[0] : tones_[2]; }

PcSet Triad::tone_set() const {
  PcSet s;
  for (PitchClass pc : tones_) s = s.with(pc);
  return s;
}

std::string Triad::name() const {
  const int pc = letter_root().value();
  return mode_ == Mode::Major ? kMajorNames[pc] : kMinorNames[pc];
}

std::string Triad::tuple_string() const {
  std::ostringstream os;
  os << '<' << tones_[0].value() << ',' << tones_[1].value() << ',' << tones_[2].value() << '>';
  return os.str();
}

std::optional<Triad> Triad::parse(std::string_view text) {
  if (text.empty() || text.size() > 2) return std::nullopt;
  const char letter = text[0];
  const char upper = static_cast<char>(std::toupper(static_cast<unsigned char>(letter)));
  if (upper < 'A' || upper > 'G') return std::nullopt;
  int pc = kNaturals[upper - 'A'];
  if (text.size() == 2) {
    if (text[1] == '#') {
      pc += 1;
    } else if (text[1] == 'b') {
      pc -= 1;
    } else {
      return std::nullopt;
    }
  }
  const bool is_major = std::isupper(static_cast<unsigned char>(letter)) != 0;
  return is_major ? Triad::major(PitchClass(pc)) : Triad::minor(PitchClass(pc));
}

Triad apply(TiOp op, const Triad& t) { return Triad(op(t.tone(0)), op(t.tone(1)), op(t.tone(2))); }

Triad parallel(const Triad& t) {
  return apply(reflection_interchanging(t.tone(0), t.tone(2)), t);
}

Triad leading_tone_exchange(const Triad& t) {
  return apply(reflection_interchanging(t.tone(1), t.tone(2)), t);
}

Triad relative(const Triad& t) {
  return apply(reflection_interchanging(t.tone(0), t.tone(1)), t);
}

const std::vector<Triad>& all_triads() {
  static const std::vector<Triad> triads = [] {
    std::vector<Triad> v;
    v.reserve(2 * kSemitones);
    for (int x = 0; x < kSemitones; ++x) v.push_back(Triad::major(PitchClass(x)));
    for (int x = 0; x < kSemitones; ++x) v.push_back(Triad::minor(PitchClass(x)));
    return v;
  }();
  return triads;
}

std::size_t triad_index(const Triad& t) {
  const std::size_t root = static_cast<std::size_t>(t.letter_root().value());
  return t.is_major() ? root : kSemitones + root;
}

std::optional<Triad> triad_from_tone_set(PcSet tones) {
  for (const Triad& t : all_triads()) {
    if (t.tone_set() == tones) return t;
  }
  return std::nullopt;
}

}  // namespace hexdual
