#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <functional>
#include <set>

#include "hexdual/diatonic.hpp"
#include "hexdual/smoothness.hpp"

using namespace hexdual;

namespace {

std::vector<std::string> root_names(const std::vector<DiatonicSet>& scales) {
  std::vector<std::string> names;
  for (const DiatonicSet& s : scales) names.push_back(s.root_name());
  return names;
}

// Exhaustive reference search: all root tuples of the requested length,
// filtered with first principles only (raw scale masks, containment, single
// semitone difference), windows taken cyclically in cycle direction.
std::vector<std::vector<int>> chain_oracle(const HexCycle& cycle, int len) {
  std::uint16_t scale_mask[12];
  for (int r = 0; r < 12; ++r) {
    std::uint16_t mask = 0;
    for (int step : {0, 2, 4, 5, 7, 9, 11}) mask |= static_cast<std::uint16_t>(1u << ((r + step) % 12));
    scale_mask[r] = mask;
  }
  auto smooth = [&](int a, int b) {
    const std::uint16_t moved = scale_mask[a] ^ scale_mask[b];
    if (__builtin_popcount(moved) != 2) return false;
    int set_bits[2] = {0, 0};
    int k = 0;
    for (int x = 0; x < 12; ++x) {
      if ((moved >> x) & 1u) set_bits[k++] = x;
    }
    const int d = set_bits[1] - set_bits[0];
    return d == 1 || d == 11;
  };

  const auto chords = cycle.distinct_chords();
  std::vector<std::vector<int>> found;
  std::vector<int> roots(static_cast<std::size_t>(len));
  std::function<void(int, int)> search = [&](int start, int j) {
    if (j == len) {
      found.push_back(roots);
      return;
    }
    const std::uint16_t chord_mask = chords[static_cast<std::size_t>((start + j) % 6)].tone_set().bits();
    for (int r = 0; r < 12; ++r) {
      if ((chord_mask & ~scale_mask[r]) != 0) continue;
      if (std::find(roots.begin(), roots.begin() + j, r) != roots.begin() + j) continue;
      if (j > 0 && !smooth(roots[static_cast<std::size_t>(j - 1)], r)) continue;
      roots[static_cast<std::size_t>(j)] = r;
      search(start, j + 1);
    }
  };
  for (int start = 0; start < 6; ++start) search(start, 0);
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

}  // namespace

TEST_CASE("major scales") {
  CHECK(major_scale(PitchClass(0)).tones == PcSet{0, 2, 4, 5, 7, 9, 11});
  CHECK(major_scale(PitchClass(3)).tones == PcSet{3, 5, 7, 8, 10, 0, 2});
  CHECK(major_scale(PitchClass(11)).tones == PcSet{11, 1, 3, 4, 6, 8, 10});
  CHECK(major_scale(PitchClass(3)).name() == "Eb-major");
  CHECK(major_scale(PitchClass(1)).name() == "Db-major");
  CHECK(major_scale(PitchClass(6)).name() == "F#-major");
  CHECK(all_major_scales().size() == 12);
  for (const DiatonicSet& s : all_major_scales()) CHECK(s.tones.size() == 7);
}

TEST_CASE("scales a fifth apart share six tones, a semitone apart") {
  for (const DiatonicSet& a : all_major_scales()) {
    for (const DiatonicSet& b : all_major_scales()) {
      const int diff = mod12(a.root.value() - b.root.value());
      if (diff != 5 && diff != 7) continue;
      CHECK((a.tones & b.tones).size() == 6);
      const auto mine = (a.tones - b.tones).members();
      const auto theirs = (b.tones - a.tones).members();
      REQUIRE(mine.size() == 1);
      REQUIRE(theirs.size() == 1);
      CHECK(circle_distance(mine[0], theirs[0]) == 1);
    }
  }
}

TEST_CASE("scales containing the hexatonic chords") {
  CHECK(root_names(scales_containing(*Triad::parse("Eb"))) ==
        std::vector<std::string>{"Eb", "Bb", "Ab"});
  CHECK(root_names(scales_containing(*Triad::parse("eb"))) ==
        std::vector<std::string>{"F#", "Db", "B"});
  CHECK(root_names(scales_containing(*Triad::parse("B"))) ==
        std::vector<std::string>{"B", "F#", "E"});
  CHECK(root_names(scales_containing(*Triad::parse("b"))) ==
        std::vector<std::string>{"D", "A", "G"});
  CHECK(root_names(scales_containing(*Triad::parse("G"))) ==
        std::vector<std::string>{"G", "D", "C"});
  CHECK(root_names(scales_containing(*Triad::parse("g"))) ==
        std::vector<std::string>{"Bb", "F", "Eb"});
}

TEST_CASE("every consonant triad sits in exactly three scales") {
  for (const Triad& t : all_triads()) {
    const auto scales = scales_containing(t);
    REQUIRE(scales.size() == 3);
    for (const DiatonicSet& s : scales) CHECK(t.tone_set().subset_of(s.tones));
    // No fourth container exists.
    int containers = 0;
    for (const DiatonicSet& s : all_major_scales()) {
      if (t.tone_set().subset_of(s.tones)) ++containers;
    }
    CHECK(containers == 3);
  }
}

TEST_CASE("maximally smooth scale transitions are the fifth-related pairs") {
  CHECK(is_ms_scale_transition(major_scale(PitchClass(11)), major_scale(PitchClass(4))));  // B-E
  CHECK(is_ms_scale_transition(major_scale(PitchClass(3)), major_scale(PitchClass(8))));   // Eb-Ab
  CHECK(!is_ms_scale_transition(major_scale(PitchClass(0)), major_scale(PitchClass(2))));  // C-D

  const auto& scales = all_major_scales();
  for (std::size_t i = 0; i < scales.size(); ++i) {
    for (std::size_t j = i + 1; j < scales.size(); ++j) {
      const int diff = mod12(scales[i].root.value() - scales[j].root.value());
      CHECK(is_ms_scale_transition(scales[i], scales[j]) == (diff == 5 || diff == 7));
    }
  }
}

TEST_CASE("the descending whole-step scale sequence contains the cycle") {
  const DouthettReport report = douthett_sequence_check();
  CHECK(report.ok());
  REQUIRE(report.rows.size() == 6);
  CHECK(report.rows[0].scale.name() == "Eb-major");
  CHECK(report.rows[1].scale.name() == "Db-major");
  CHECK(report.rows[1].chord.name() == "eb");
  CHECK(report.rows[5].scale.name() == "F-major");
  CHECK(report.rows[5].chord.name() == "g");
  for (const DouthettRow& row : report.rows) CHECK(row.contained);
  for (std::size_t i = 0; i + 1 < report.rows.size(); ++i) {
    CHECK(mod12(report.rows[i].scale.root.value() - report.rows[i + 1].scale.root.value()) == 2);
  }
}

TEST_CASE("the three four-scale covering chains") {
  const auto chains = covering_chains(hex_cycle(0), 4);
  REQUIRE(chains.size() == 3);
  CHECK(chains[0].chain_string() == "Eb-Ab-Db-F#");
  CHECK(chains[1].chain_string() == "G-C-F-Bb");
  CHECK(chains[2].chain_string() == "B-E-A-D");

  for (const CoveringChain& chain : chains) {
    REQUIRE(chain.scales.size() == 4);
    REQUIRE(chain.assigned.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(chain.assigned[i].tone_set().subset_of(chain.scales[i].tones));
      if (i > 0) CHECK(is_ms_scale_transition(chain.scales[i - 1], chain.scales[i]));
    }
  }

  // Chains descend the circle of fifths.
  for (const CoveringChain& chain : chains) {
    for (std::size_t i = 0; i + 1 < chain.scales.size(); ++i) {
      CHECK(chain.scales[i + 1].root == chain.scales[i].root + 5);
    }
  }
}

TEST_CASE("the exhaustive chain search agrees with the reference oracle") {
  for (int len : {2, 3, 4, 5, 6}) {
    const auto chains = covering_chains(hex_cycle(0), len);
    std::set<std::vector<int>> got;
    for (const CoveringChain& chain : chains) {
      std::vector<int> roots;
      for (const DiatonicSet& s : chain.scales) roots.push_back(s.root.value());
      got.insert(roots);
    }
    const auto expected_list = chain_oracle(hex_cycle(0), len);
    const std::set<std::vector<int>> expected(expected_list.begin(), expected_list.end());
    CHECK(got == expected);
  }
  CHECK_THROWS_AS(covering_chains(hex_cycle(0), 1), std::invalid_argument);
}

TEST_CASE("no chain covers the whole cycle and no scale contains one") {
  for (int i = 0; i < 4; ++i) {
    CHECK(covering_chains(hex_cycle(i), 6).empty());
    CHECK(!any_scale_contains(hex_cycle(i)));
  }
  CHECK(covering_chains(hex_cycle(0), 7).empty());
}

TEST_CASE("P edges are covered once, L edges three times") {
  for (int c = 0; c < 4; ++c) {
    const auto chords = hex_cycle(c).distinct_chords();
    for (std::size_t i = 0; i < chords.size(); ++i) {
      const Triad& from = chords[i];
      const Triad& to = chords[(i + 1) % chords.size()];
      CHECK(ms_transitions_covering(from, to) == (from.is_major() ? 1 : 3));
    }
  }
}
