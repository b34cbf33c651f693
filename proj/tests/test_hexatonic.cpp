#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <random>
#include <set>

#include "hexdual/hexatonic.hpp"

using namespace hexdual;

namespace {

std::vector<std::string> names_of(const std::vector<Triad>& triads) {
  std::vector<std::string> names;
  for (const Triad& t : triads) names.push_back(t.name());
  return names;
}

std::set<std::string> name_set(const std::vector<Triad>& triads) {
  const auto names = names_of(triads);
  return {names.begin(), names.end()};
}

}  // namespace

TEST_CASE("cycle 0 is the Eb hexatonic cycle in order") {
  const HexCycle cycle = hex_cycle(0);
  CHECK(cycle.chord_names() ==
        std::vector<std::string>{"Eb", "eb", "B", "b", "G", "g", "Eb"});
  CHECK(cycle.chords.front() == cycle.chords.back());
  CHECK(cycle.tone_set() == PcSet{2, 3, 6, 7, 10, 11});
}

TEST_CASE("cycles 1..3 are the transposed chord sets") {
  CHECK(name_set(hex_cycle(1).distinct_chords()) ==
        std::set<std::string>{"E", "e", "C", "c", "Ab", "ab"});
  CHECK(name_set(hex_cycle(2).distinct_chords()) ==
        std::set<std::string>{"F", "f", "C#", "c#", "A", "a"});
  CHECK(name_set(hex_cycle(3).distinct_chords()) ==
        std::set<std::string>{"F#", "f#", "D", "d", "Bb", "bb"});
  CHECK_THROWS_AS(hex_cycle(4), std::out_of_range);
  CHECK_THROWS_AS(hex_cycle(-1), std::out_of_range);
}

TEST_CASE("cycles alternate P and L transitions") {
  for (int i = 0; i < 4; ++i) {
    const HexCycle cycle = hex_cycle(i);
    for (int k = 0; k < 6; ++k) {
      const Triad& from = cycle.chords[static_cast<std::size_t>(k)];
      const Triad& to = cycle.chords[static_cast<std::size_t>(k + 1)];
      CHECK(to == (k % 2 == 0 ? parallel(from) : leading_tone_exchange(from)));
    }
    const auto distinct = cycle.distinct_chords();
    CHECK(std::set<Triad>(distinct.begin(), distinct.end()).size() == 6);
  }
}

TEST_CASE("the four cycles partition the 24 chords") {
  std::set<std::string> seen;
  for (int i = 0; i < 4; ++i) {
    for (const Triad& t : hex_cycle(i).distinct_chords()) seen.insert(t.name());
  }
  CHECK(seen.size() == 24);
}

TEST_CASE("each hexatonic set is the PL-orbit of any member") {
  for (int i = 0; i < 4; ++i) {
    const auto chords = hex_cycle(i).distinct_chords();
    for (const Triad& member : chords) {
      std::set<std::string> orbit_names;
      for (std::size_t target : orbit(pl_group(), triad_index(member))) {
        orbit_names.insert(triad_carrier()->label(target));
      }
      CHECK(orbit_names == name_set(chords));
    }
  }
}

TEST_CASE("triads inside a pitch-class set") {
  CHECK(name_set(triads_within(PcSet{2, 3, 6, 7, 10, 11})) ==
        std::set<std::string>{"Eb", "eb", "B", "b", "G", "g"});
  CHECK(triads_within(PcSet{}).empty());
  CHECK(triads_within(PcSet::full()).size() == 24);

  // Transposed statement for the other cycles.
  for (int i = 1; i < 4; ++i) {
    const HexCycle cycle = hex_cycle(i);
    CHECK(cycle.tone_set().size() == 6);
    CHECK(name_set(triads_within(cycle.tone_set())) == name_set(cycle.distinct_chords()));
  }
}

TEST_CASE("the computed stabilizer is {T0,T4,T8,I1,I5,I9}") {
  const PermGroup h = hex_ti_stabilizer();
  CHECK(h.order() == 6);
  std::set<std::string> names;
  for (const Permutation& e : h.elements()) names.insert(recognize_ti_on_triads(e)->name());
  CHECK(names == std::set<std::string>{"T0", "T4", "T8", "I1", "I5", "I9"});
  CHECK(names.count("I5") == 1);
  CHECK(names.count("I0") == 0);
  CHECK(classify(h) == GroupClass::dihedral(6));

  // T4 lies in H, so conjugating by it fixes H.
  CHECK(conjugate(h, ti_perm_on_triads(TiOp::transposition(4))) == h);
}

TEST_CASE("word evaluation is right to left") {
  const Triad eb = Triad::major(PitchClass(3));
  CHECK(eval_word("PLP", eb).name() == "b");
  CHECK(eval_word("", eb) == eb);
  CHECK(eval_word("L", Triad::minor(PitchClass(11))).name() == "G");
  CHECK_THROWS_AS(eval_word("PXL", eb), std::invalid_argument);
}

TEST_CASE("word prefixes trace the cycle") {
  const Triad eb = Triad::major(PitchClass(3));
  const HexCycle cycle = hex_cycle(0);
  std::string word;
  for (int k = 0; k <= 6; ++k) {
    CHECK(eval_word(word, eb) == cycle.chords[static_cast<std::size_t>(k)]);
    word.insert(word.begin(), k % 2 == 0 ? 'P' : 'L');
  }
}

TEST_CASE("word reduction to normal form") {
  CHECK(reduce_word("PL") == "LPLP");
  CHECK(reduce_word("PP").empty());
  CHECK(reduce_word("LPLPLP").empty());
  CHECK(reduce_word("L") == "PLPLP");
  CHECK(reduce_word("") == "");
}

TEST_CASE("random words reduce to an equivalent normal form") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> length(0, 20);
  std::uniform_int_distribution<int> coin(0, 1);
  const auto& normal_forms = canonical_pl_words();
  for (int trial = 0; trial < 1000; ++trial) {
    std::string word;
    const int n = length(rng);
    for (int i = 0; i < n; ++i) word.push_back(coin(rng) ? 'P' : 'L');

    const std::string reduced = reduce_word(word);
    CHECK(std::find(normal_forms.begin(), normal_forms.end(), reduced) != normal_forms.end());
    for (const Triad& t : all_triads()) {
      CHECK(eval_word(word, t) == eval_word(reduced, t));
    }
  }
}

TEST_CASE("the PL-group is exactly the six normal-form functions") {
  const PermGroup& pl = pl_group();
  REQUIRE(pl.order() == 6);
  std::set<std::vector<std::size_t>> element_images;
  for (const Permutation& e : pl.elements()) element_images.insert(e.images());

  std::set<std::vector<std::size_t>> word_images;
  for (const std::string& word : canonical_pl_words()) {
    word_images.insert(Permutation::from_function(triad_carrier(), [&](std::size_t i) {
                         return triad_index(eval_word(word, all_triads()[i]));
                       }).images());
  }
  CHECK(element_images == word_images);
}

TEST_CASE("hexatonic duality verifies end to end") {
  const HexDualityReport report = verify_hexatonic_duality();
  CHECK(report.ok());
  CHECK(report.pl_order == 6);
  CHECK(report.h_order == 6);
  CHECK(report.dual.dual());
  CHECK(report.pl_class == GroupClass::dihedral(6));
  CHECK(report.h_class == GroupClass::dihedral(6));

  CHECK(report.h_orbit_of_eb ==
        std::vector<std::pair<std::string, std::string>>{{"T0", "Eb"},
                                                         {"T4", "G"},
                                                         {"T8", "B"},
                                                         {"I1", "eb"},
                                                         {"I5", "g"},
                                                         {"I9", "b"}});
  CHECK(report.pl_cycle_from_eb ==
        std::vector<std::string>{"Eb", "eb", "B", "b", "G", "g"});
}

TEST_CASE("sub-dual table matches the expected four rows") {
  const auto rows = sub_dual_table();
  REQUIRE(rows.size() == 4);

  CHECK(rows[0].k == "Id");
  CHECK(rows[0].hex_triads == std::vector<std::string>{"Eb", "eb", "B", "b", "G", "g"});
  CHECK(rows[0].dual_ops == std::vector<std::string>{"T0", "T4", "T8", "I1", "I5", "I9"});

  CHECK(rows[1].k == "T1");
  CHECK(rows[1].hex_triads == std::vector<std::string>{"E", "e", "C", "c", "Ab", "ab"});
  CHECK(rows[1].dual_ops == std::vector<std::string>{"T0", "T4", "T8", "I3", "I7", "I11"});

  CHECK(rows[2].k == "T2");
  CHECK(rows[2].hex_triads == std::vector<std::string>{"F", "f", "C#", "c#", "A", "a"});
  CHECK(rows[2].dual_ops == std::vector<std::string>{"T0", "T4", "T8", "I5", "I9", "I1"});

  CHECK(rows[3].k == "T3");
  CHECK(rows[3].hex_triads == std::vector<std::string>{"F#", "f#", "D", "d", "Bb", "bb"});
  CHECK(rows[3].dual_ops == std::vector<std::string>{"T0", "T4", "T8", "I7", "I11", "I3"});

  for (const SubDualRow& row : rows) CHECK(row.dual.dual());
}

TEST_CASE("DOT export") {
  const std::string cycle_dot = hex_cycle_dot(0);
  CHECK(cycle_dot.rfind("digraph", 0) == 0);
  CHECK(cycle_dot.find("\"Eb\" -> \"eb\" [label=\"P\"]") != std::string::npos);
  CHECK(cycle_dot.find("\"g\" -> \"Eb\" [label=\"L\"]") != std::string::npos);
  CHECK(std::count(cycle_dot.begin(), cycle_dot.end(), '{') ==
        std::count(cycle_dot.begin(), cycle_dot.end(), '}'));

  const std::string grail = grail_dot();
  CHECK(grail.find("\"Eb\" -> \"b\" [label=\"PLP\"]") != std::string::npos);
  CHECK(grail.find("\"b\" -> \"G\" [label=\"L\"]") != std::string::npos);
  CHECK(grail.find("\"G\" -> \"eb\" [label=\"PLP\"]") != std::string::npos);
  CHECK(grail.find("\"Eb\" -> \"eb\" [label=\"P\"") != std::string::npos);

  // The bottom arrow is the composite of the three top arrows.
  const Triad eb = Triad::major(PitchClass(3));
  CHECK(eval_word("PLPLPLP", eb) == parallel(eb));
  CHECK(reduce_word("PLPLPLP") == "P");
}
