#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "hexdual/hexatonic.hpp"
#include "hexdual/smoothness.hpp"
#include "oracles.hpp"

using namespace hexdual;

namespace {

bool cycle_is_valid(const MsCycle& cycle, const SetClass& c) {
  if (cycle.length() < 4) return false;
  if (!(cycle.chords.front() == cycle.chords.back())) return false;
  std::set<std::uint16_t> interior;
  for (int i = 0; i < cycle.length(); ++i) {
    const PcSet chord = cycle.chords[static_cast<std::size_t>(i)];
    if (!interior.insert(chord.bits()).second) return false;
    if (!(set_class_of(chord) == c)) return false;
    if (!is_ms_transition(chord, cycle.chords[static_cast<std::size_t>(i + 1)])) return false;
  }
  return true;
}

const SetClass triad_class() { return set_class_of(PcSet{0, 4, 7}); }

}  // namespace

TEST_CASE("set class membership is T/I equivalence") {
  CHECK(set_class_of(PcSet{3, 7, 10}) == set_class_of(PcSet{3, 6, 10}));  // Eb vs eb
  CHECK(triad_class().prime == PcSet{0, 3, 7});
  CHECK(set_class_of(PcSet{}).prime == PcSet{});
  CHECK(set_class_of(PcSet::full()).prime == PcSet::full());
  for (TiOp op : all_ti_ops()) {
    CHECK(set_class_of(apply(op, PcSet{0, 1, 5, 8})) == set_class_of(PcSet{0, 1, 5, 8}));
  }
}

TEST_CASE("class census matches two independent counts") {
  const auto classes = all_set_classes();
  CHECK(static_cast<long long>(classes.size()) == oracles::burnside_class_count());
  CHECK(classes.size() == 224);

  std::map<int, int> by_cardinality;
  for (const SetClass& c : classes) by_cardinality[c.cardinality()]++;
  for (int k = 0; k <= 12; ++k) {
    CHECK(by_cardinality[k] == oracles::count_classes_of_cardinality(k));
  }
  CHECK(by_cardinality[3] == 12);

  // Each class appears exactly once and is its own prime.
  std::set<std::uint16_t> primes;
  for (const SetClass& c : classes) {
    CHECK(set_class_of(c.prime) == c);
    CHECK(primes.insert(c.prime.bits()).second);
  }
}

TEST_CASE("exemplar counts reflect symmetry") {
  CHECK(exemplars(triad_class()).size() == 24);
  CHECK(exemplars(set_class_of(PcSet{0, 2, 4, 5, 7, 9, 11})).size() == 12);  // diatonic
  CHECK(exemplars(set_class_of(PcSet{0, 2, 4, 6, 8, 10})).size() == 2);      // whole tone
  CHECK(exemplars(set_class_of(PcSet{0, 6})).size() == 6);                   // tritone
  CHECK(exemplars(set_class_of(PcSet{0})).size() == 12);

  // Every exemplar is in the class, and the prime is among them.
  const auto triads = exemplars(triad_class());
  CHECK(std::find(triads.begin(), triads.end(), triad_class().prime) != triads.end());
  for (PcSet exemplar : triads) CHECK(set_class_of(exemplar) == triad_class());
}

TEST_CASE("maximally smooth transition predicate") {
  CHECK(is_ms_transition(PcSet{3, 7, 10}, PcSet{3, 6, 10}));   // Eb -> eb, 7 -> 6
  CHECK(!is_ms_transition(PcSet{3, 7, 10}, PcSet{3, 7, 10}));  // nothing moves
  CHECK(!is_ms_transition(PcSet{3, 7, 10}, PcSet{2, 7, 11}));  // two tones move
  CHECK(is_ms_transition(PcSet{0}, PcSet{11}));                // wraps around
  CHECK(!is_ms_transition(PcSet{0}, PcSet{2}));
  CHECK(!is_ms_transition(PcSet{0, 1}, PcSet{0, 1, 2}));       // sizes differ
  CHECK(is_ms_transition(PcSet{0, 6}, PcSet{1, 6}));

  // Symmetric and irreflexive across random pairs.
  std::mt19937 rng(3131);
  std::uniform_int_distribution<unsigned> bits(0, 4095);
  for (int trial = 0; trial < 2000; ++trial) {
    const PcSet a = PcSet::from_bits(static_cast<std::uint16_t>(bits(rng)));
    const PcSet b = PcSet::from_bits(static_cast<std::uint16_t>(bits(rng)));
    CHECK(is_ms_transition(a, b) == is_ms_transition(b, a));
    CHECK(!is_ms_transition(a, a));
  }
}

TEST_CASE("the consonant-triad transition graph is 24 nodes of degree 2") {
  const MsGraph graph = ms_graph(triad_class());
  REQUIRE(graph.nodes.size() == 24);
  CHECK(graph.edge_count() == 24);
  for (std::size_t v = 0; v < graph.nodes.size(); ++v) {
    CHECK(graph.degree(static_cast<int>(v)) == 2);

    // The two neighbors are exactly the P- and L-images.
    const auto triad = triad_from_tone_set(graph.nodes[v]);
    REQUIRE(triad.has_value());
    std::set<std::uint16_t> expected = {parallel(*triad).tone_set().bits(),
                                        leading_tone_exchange(*triad).tone_set().bits()};
    std::set<std::uint16_t> actual;
    for (int w : graph.adjacency[v]) {
      actual.insert(graph.nodes[static_cast<std::size_t>(w)].bits());
    }
    CHECK(actual == expected);
  }
}

TEST_CASE("other transition graphs") {
  // Singletons: the 12-cycle of semitone neighbors.
  const MsGraph singles = ms_graph(set_class_of(PcSet{0}));
  CHECK(singles.nodes.size() == 12);
  CHECK(singles.edge_count() == 12);
  for (std::size_t v = 0; v < 12; ++v) CHECK(singles.degree(static_cast<int>(v)) == 2);

  // Tritones: no transition stays in the class.
  const MsGraph tritones = ms_graph(set_class_of(PcSet{0, 6}));
  CHECK(tritones.nodes.size() == 6);
  CHECK(tritones.edge_count() == 0);

  // Whole-tone sets: two exemplars, six tones apart.
  CHECK(ms_graph(set_class_of(PcSet{0, 2, 4, 6, 8, 10})).edge_count() == 0);
}

TEST_CASE("transition graphs are T/I invariant") {
  std::mt19937 rng(6060);
  std::uniform_int_distribution<unsigned> bits(1, 4094);
  std::vector<SetClass> classes = {triad_class()};
  for (int i = 0; i < 5; ++i) {
    classes.push_back(set_class_of(PcSet::from_bits(static_cast<std::uint16_t>(bits(rng)))));
  }
  for (const SetClass& c : classes) {
    const MsGraph graph = ms_graph(c);
    std::set<std::pair<std::uint16_t, std::uint16_t>> edges;
    for (std::size_t v = 0; v < graph.nodes.size(); ++v) {
      for (int w : graph.adjacency[v]) {
        edges.emplace(graph.nodes[v].bits(), graph.nodes[static_cast<std::size_t>(w)].bits());
      }
    }
    for (TiOp op : all_ti_ops()) {
      for (const auto& [a, b] : edges) {
        const auto image = std::make_pair(apply(op, PcSet::from_bits(a)).bits(),
                                          apply(op, PcSet::from_bits(b)).bits());
        CHECK(edges.count(image) == 1);
      }
    }
  }
}

TEST_CASE("the four hexatonic cycles are the only triad cycles") {
  const auto cycles = enumerate_ms_cycles(triad_class());
  REQUIRE(cycles.size() == 4);

  std::set<std::set<std::uint16_t>> found;
  for (const MsCycle& cycle : cycles) {
    CHECK(cycle.length() == 6);
    CHECK(cycle_is_valid(cycle, triad_class()));
    std::set<std::uint16_t> chord_sets;
    for (int i = 0; i < cycle.length(); ++i) {
      chord_sets.insert(cycle.chords[static_cast<std::size_t>(i)].bits());
    }
    found.insert(chord_sets);
  }

  std::set<std::set<std::uint16_t>> expected;
  for (int i = 0; i < 4; ++i) {
    std::set<std::uint16_t> chord_sets;
    for (const Triad& t : hex_cycle(i).distinct_chords()) chord_sets.insert(t.tone_set().bits());
    expected.insert(chord_sets);
  }
  CHECK(found == expected);
}

TEST_CASE("triad cycles agree with the PL-orbits chord by chord") {
  for (const MsCycle& cycle : enumerate_ms_cycles(triad_class())) {
    std::vector<Triad> as_triads;
    for (int i = 0; i < cycle.length(); ++i) {
      const auto t = triad_from_tone_set(cycle.chords[static_cast<std::size_t>(i)]);
      REQUIRE(t.has_value());
      as_triads.push_back(*t);
    }
    std::set<std::size_t> orbit_set;
    for (std::size_t target : orbit(pl_group(), triad_index(as_triads[0]))) {
      orbit_set.insert(target);
    }
    std::set<std::size_t> cycle_set;
    for (const Triad& t : as_triads) cycle_set.insert(triad_index(t));
    CHECK(cycle_set == orbit_set);

    // Consecutive chords alternate... each step is P or L on the triad level.
    for (std::size_t i = 0; i + 1 < as_triads.size(); ++i) {
      const Triad& from = as_triads[i];
      const Triad& to = as_triads[i + 1];
      CHECK((to == parallel(from) || to == leading_tone_exchange(from)));
    }
  }
}

TEST_CASE("long cycles: singletons, pentatonic, diatonic, 11-note sets") {
  const auto singles = enumerate_ms_cycles(set_class_of(PcSet{0}));
  REQUIRE(singles.size() == 1);
  CHECK(singles[0].length() == 12);

  const auto pentatonic = enumerate_ms_cycles(set_class_of(PcSet{0, 2, 4, 7, 9}));
  REQUIRE(pentatonic.size() == 1);
  CHECK(pentatonic[0].length() == 12);

  const auto diatonic = enumerate_ms_cycles(set_class_of(PcSet{0, 2, 4, 5, 7, 9, 11}));
  REQUIRE(diatonic.size() == 1);
  CHECK(diatonic[0].length() == 12);

  const auto eleven = enumerate_ms_cycles(set_class_of(PcSet{0}.complement()));
  REQUIRE(eleven.size() == 1);
  CHECK(eleven[0].length() == 12);
}

TEST_CASE("triad complements support the mirrored short cycles") {
  const SetClass complement_class = set_class_of(PcSet{0, 4, 7}.complement());
  const auto cycles = enumerate_ms_cycles(complement_class);
  REQUIRE(cycles.size() == 4);
  for (const MsCycle& cycle : cycles) CHECK(cycle.length() == 6);

  // Complementation is a transition-preserving bijection, so every triad
  // cycle complements to a valid 9-note cycle.
  for (const MsCycle& cycle : enumerate_ms_cycles(triad_class())) {
    MsCycle complemented;
    for (PcSet chord : cycle.chords) complemented.chords.push_back(chord.complement());
    CHECK(cycle_is_valid(complemented, complement_class));
  }
}

TEST_CASE("chromatic clusters support no cycle") {
  const SetClass cluster = set_class_of(PcSet{0, 1, 2});
  CHECK(enumerate_ms_cycles(cluster).empty());

  // Union-find confirms the graph is a forest, so no cycles of any length.
  const MsGraph graph = ms_graph(cluster);
  oracles::UnionFind uf(graph.nodes.size());
  bool acyclic = true;
  for (std::size_t v = 0; v < graph.nodes.size(); ++v) {
    for (int w : graph.adjacency[v]) {
      if (static_cast<std::size_t>(w) > v && !uf.unite(v, static_cast<std::size_t>(w))) {
        acyclic = false;
      }
    }
  }
  CHECK(acyclic);
}

TEST_CASE("every reported cycle is valid and its reversal is too") {
  for (const SetClassCycles& entry : classify_all()) {
    const auto cycles = enumerate_ms_cycles(entry.set_class);
    CHECK(static_cast<int>(cycles.size()) == entry.cycle_count());
    for (const MsCycle& cycle : cycles) {
      CHECK(cycle_is_valid(cycle, entry.set_class));
      MsCycle reversed;
      reversed.chords.assign(cycle.chords.rbegin(), cycle.chords.rend());
      CHECK(cycle_is_valid(reversed, entry.set_class));
    }
  }
}

TEST_CASE("exactly six categories support maximally smooth cycles") {
  const auto supporting = classify_all();
  REQUIRE(supporting.size() == 6);

  std::vector<int> cardinalities;
  for (const SetClassCycles& entry : supporting) {
    cardinalities.push_back(entry.set_class.cardinality());
  }
  CHECK(cardinalities == std::vector<int>{1, 3, 5, 7, 9, 11});

  CHECK(supporting[0].set_class == set_class_of(PcSet{0}));
  CHECK(supporting[1].set_class == triad_class());
  CHECK(supporting[2].set_class == set_class_of(PcSet{0, 2, 4, 7, 9}));
  CHECK(supporting[3].set_class == set_class_of(PcSet{0, 2, 4, 5, 7, 9, 11}));
  CHECK(supporting[4].set_class == set_class_of(PcSet{0, 4, 7}.complement()));
  CHECK(supporting[5].set_class == set_class_of(PcSet{0}.complement()));

  CHECK(supporting[1].cycle_lengths == std::vector<int>{6, 6, 6, 6});
  CHECK(supporting[1].exemplar_count == 24);
  CHECK(supporting[2].cycle_lengths == std::vector<int>{12});
  CHECK(supporting[3].cycle_lengths == std::vector<int>{12});
}
