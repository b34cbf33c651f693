#include "hexdual/diatonic.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "hexdual/smoothness.hpp"

namespace hexdual {

namespace {

constexpr int kMajorScaleSteps[7] = {0, 2, 4, 5, 7, 9, 11};

// Scale roots prefer the usual key spellings: Db rather than C#, but F#.
constexpr const char* kScaleNames[kSemitones] = {"C",  "Db", "D", "Eb", "E",  "F",
                                                 "F#", "G",  "Ab", "A", "Bb", "B"};

}  // namespace

std::string DiatonicSet::root_name() const { return kScaleNames[root.value()]; }

std::string DiatonicSet::name() const { return root_name() + "-major"; }

DiatonicSet major_scale(PitchClass root) {
  PcSet tones;
  for (int step : kMajorScaleSteps) tones = tones.with(root + step);
  return DiatonicSet{root, tones};
}

const std::vector<DiatonicSet>& all_major_scales() {
  static const std::vector<DiatonicSet> scales = [] {
    std::vector<DiatonicSet> v;
    for (int pc = 0; pc < kSemitones; ++pc) v.push_back(major_scale(PitchClass(pc)));
    return v;
  }();
  return scales;
}

std::vector<DiatonicSet> scales_containing(const Triad& t) {
  std::vector<DiatonicSet> found;
  for (const DiatonicSet& scale : all_major_scales()) {
    if (t.tone_set().subset_of(scale.tones)) found.push_back(scale);
  }

  // Order by scale-degree convention; anything unexpected goes last.
  const PitchClass r = t.letter_root();
  const std::array<PitchClass, 3> expected =
      t.is_major() ? std::array<PitchClass, 3>{r, r - 5, r - 7}
                   : std::array<PitchClass, 3>{r - 9, r - 2, r - 4};
  auto rank = [&](const DiatonicSet& s) {
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (s.root == expected[i]) return static_cast<int>(i);
    }
    return 3 + s.root.value();
  };
  std::sort(found.begin(), found.end(),
            [&](const DiatonicSet& a, const DiatonicSet& b) { return rank(a) < rank(b); });
  return found;
}

bool is_ms_scale_transition(const DiatonicSet& a, const DiatonicSet& b) {
  return is_ms_transition(a.tones, b.tones);
}

DouthettReport douthett_sequence_check() {
  DouthettReport report;
  const HexCycle cycle = hex_cycle(0);
  const int scale_roots[6] = {3, 1, 11, 9, 7, 5};  // Eb, Db, B, A, G, F

  report.all_contained = true;
  for (int i = 0; i < 6; ++i) {
    DouthettRow row{cycle.chords[static_cast<std::size_t>(i)],
                    major_scale(PitchClass(scale_roots[i])), false};
    row.contained = row.chord.tone_set().subset_of(row.scale.tones);
    report.all_contained = report.all_contained && row.contained;
    report.rows.push_back(std::move(row));
  }

  report.descends_whole_step = true;
  for (int i = 0; i + 1 < 6; ++i) {
    const int delta =
        mod12(report.rows[static_cast<std::size_t>(i + 1)].scale.root.value() -
              report.rows[static_cast<std::size_t>(i)].scale.root.value());
    if (delta != 10) report.descends_whole_step = false;
  }
  return report;
}

std::string CoveringChain::chain_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < scales.size(); ++i) {
    if (i > 0) os << '-';
    os << scales[i].root_name();
  }
  return os.str();
}

std::vector<CoveringChain> covering_chains(const HexCycle& cycle, int chain_len) {
  if (chain_len < 2) throw std::invalid_argument("covering_chains: chain length must be >= 2");
  const std::vector<Triad> chords = cycle.distinct_chords();
  const int n = static_cast<int>(chords.size());

  std::vector<CoveringChain> chains;
  if (chain_len > n) return chains;

  for (int start = 0; start < n; ++start) {
    std::vector<Triad> window;
    std::vector<std::vector<DiatonicSet>> candidates;
    for (int j = 0; j < chain_len; ++j) {
      const Triad& t = chords[static_cast<std::size_t>((start + j) % n)];
      window.push_back(t);
      candidates.push_back(scales_containing(t));
    }

    std::vector<DiatonicSet> chosen;
    std::function<void(int)> pick = [&](int j) {
      if (j == chain_len) {
        chains.push_back(CoveringChain{chosen, window, start});
        return;
      }
      for (const DiatonicSet& s : candidates[static_cast<std::size_t>(j)]) {
        if (std::find(chosen.begin(), chosen.end(), s) != chosen.end()) continue;
        if (j > 0 && !is_ms_scale_transition(chosen.back(), s)) continue;
        chosen.push_back(s);
        pick(j + 1);
        chosen.pop_back();
      }
    };
    pick(0);
  }

  std::sort(chains.begin(), chains.end(), [](const CoveringChain& a, const CoveringChain& b) {
    for (std::size_t i = 0; i < a.scales.size() && i < b.scales.size(); ++i) {
      if (!(a.scales[i].root == b.scales[i].root)) return a.scales[i].root < b.scales[i].root;
    }
    return a.window_start < b.window_start;
  });
  return chains;
}

int ms_transitions_covering(const Triad& from, const Triad& to) {
  int count = 0;
  const auto& scales = all_major_scales();
  for (std::size_t i = 0; i < scales.size(); ++i) {
    for (std::size_t j = i + 1; j < scales.size(); ++j) {
      if (!is_ms_scale_transition(scales[i], scales[j])) continue;
      const bool forward = from.tone_set().subset_of(scales[i].tones) &&
                           to.tone_set().subset_of(scales[j].tones);
      const bool backward = from.tone_set().subset_of(scales[j].tones) &&
                            to.tone_set().subset_of(scales[i].tones);
      if (forward || backward) ++count;
    }
  }
  return count;
}

bool any_scale_contains(const HexCycle& cycle) {
  const PcSet tones = cycle.tone_set();
  for (const DiatonicSet& scale : all_major_scales()) {
    if (tones.subset_of(scale.tones)) return true;
  }
  return false;
}

}  // namespace hexdual
