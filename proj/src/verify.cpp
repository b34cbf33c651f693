#include "hexdual/verify.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "hexdual/diatonic.hpp"
#include "hexdual/hexatonic.hpp"
#include "hexdual/perm_group.hpp"
#include "hexdual/smoothness.hpp"
#include "hexdual/triad.hpp"

namespace hexdual {

namespace {

std::string join(const std::vector<std::string>& items, const std::string& sep = ", ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) os << sep;
    os << items[i];
  }
  return os.str();
}

std::string group_op_names(const PermGroup& g) {
  std::vector<std::string> names;
  for (const Permutation& e : g.elements()) {
    const auto op = recognize_ti_on_triads(e);
    names.push_back(op ? op->name() : e.cycle_string());
  }
  std::sort(names.begin(), names.end());
  return "{" + join(names) + "}";
}

void add(VerificationReport& report, std::string id, std::string statement, bool pass,
         std::string witness) {
  report.claims.push_back(Claim{std::move(id), std::move(statement), pass, std::move(witness)});
}

// --- plr suite --------------------------------------------------------------

VerificationReport suite_plr() {
  VerificationReport report{"plr", {}};

  {
    const Triad eb = Triad::major(PitchClass(3));
    const Triad b_major = Triad::major(PitchClass(11));
    const Triad g_major = Triad::major(PitchClass(7));
    const bool p_ok = parallel(eb) == Triad::minor(PitchClass(3)) &&
                      parallel(b_major) == Triad::minor(PitchClass(11)) &&
                      parallel(g_major) == Triad::minor(PitchClass(7));
    const bool l_ok = leading_tone_exchange(Triad::minor(PitchClass(3))) == b_major &&
                      leading_tone_exchange(Triad::minor(PitchClass(11))) == g_major &&
                      leading_tone_exchange(Triad::minor(PitchClass(7))) == eb;
    std::ostringstream witness;
    witness << "P(Eb)=" << parallel(eb).name()
            << ", L(eb)=" << leading_tone_exchange(Triad::minor(PitchClass(3))).name()
            << ", L(b)=" << leading_tone_exchange(Triad::minor(PitchClass(11))).name()
            << ", L(g)=" << leading_tone_exchange(Triad::minor(PitchClass(7))).name();
    add(report, "pl-network", "P and L trace the Eb hexatonic cycle Eb,eb,B,b,G,g", p_ok && l_ok,
        witness.str());
  }

  {
    bool ok = true;
    for (const Triad& t : all_triads()) {
      ok = ok && parallel(parallel(t)) == t && leading_tone_exchange(leading_tone_exchange(t)) == t &&
           relative(relative(t)) == t;
    }
    add(report, "involutions", "P, L and R are involutions on all 24 triads", ok,
        "checked 24 triads x 3 transformations");
  }

  {
    bool ok = true;
    for (char letter : {'P', 'L', 'R'}) {
      const Permutation x = plr_perm(letter);
      for (TiOp op : all_ti_ops()) {
        if (!x.commutes_with(ti_perm_on_triads(op))) ok = false;
      }
    }
    add(report, "ti-commutation",
        "P, L and R commute with every transposition and inversion on triads", ok,
        "72 commutator checks, all identity");
  }

  {
    const PermGroup& pl = pl_group();
    bool words_ok = pl.order() == 6;
    for (const std::string& word : canonical_pl_words()) {
      Permutation w = Permutation::identity(triad_carrier());
      for (auto it = word.rbegin(); it != word.rend(); ++it) w = plr_perm(*it) * w;
      words_ok = words_ok && pl.contains(w);
    }
    const Permutation lp = plr_perm('L') * plr_perm('P');
    const bool rotation_ok = !lp.is_identity() && (lp * lp * lp).is_identity();
    const bool nonabelian = !plr_perm('P').commutes_with(plr_perm('L'));
    const GroupClass cls = classify(pl);
    std::ostringstream witness;
    witness << "order " << pl.order() << ", (LP)^3 = id, " << cls.to_string();
    add(report, "pl-group",
        "<P,L> is the six functions id, P, LP, PLP, LPLP, PLPLP and is dihedral of order 6",
        words_ok && rotation_ok && nonabelian && cls == GroupClass::dihedral(6), witness.str());
  }

  {
    const std::vector<std::pair<std::string, std::string>> table = {
        {"PL", "LPLP"}, {"PP", ""}, {"LPLPLP", ""}, {"L", "PLPLP"}, {"P", "P"}};
    bool ok = true;
    std::ostringstream witness;
    for (const auto& [input, expected] : table) {
      const std::string got = reduce_word(input);
      if (got != expected) ok = false;
      witness << input << "->" << (got.empty() ? "id" : got) << ' ';
    }
    add(report, "word-reduction", "alternating words reduce to the six normal forms", ok,
        witness.str());
  }

  {
    const PermGroup& ti = ti_group_on_triads();
    const PermGroup& plr = plr_group();
    const PermGroup c_ti = centralizer_of_transitive(ti);
    const PermGroup c_plr = centralizer_of_transitive(plr);
    const DualPairReport dual = verify_dual_pair(ti, plr);
    std::ostringstream witness;
    witness << "|<P,L,R>| = " << plr.order() << ", |C(T/I)| = " << c_ti.order()
            << ", C(T/I) = <P,L,R>: " << (c_ti == plr ? "yes" : "no")
            << ", C(<P,L,R>) = T/I: " << (c_plr == ti ? "yes" : "no");
    add(report, "plr-ti-duality",
        "<P,L,R> has 24 elements and is the centralizer of the T/I-group (and conversely)",
        plr.order() == 24 && c_ti == plr && c_plr == ti && dual.dual(), witness.str());
  }

  {
    const Triad eb = Triad::major(PitchClass(3));
    const Triad b = eval_word("PLP", eb);
    const Triad g = eval_word("L", b);
    const Triad eb_minor = eval_word("PLP", g);
    const bool path_ok = b.name() == "b" && g.name() == "G" && eb_minor.name() == "eb";
    const bool composite_ok =
        eval_word("PLPLPLP", eb) == parallel(eb) && reduce_word("PLPLPLP") == "P";
    std::ostringstream witness;
    witness << "Eb -PLP-> " << b.name() << " -L-> " << g.name() << " -PLP-> " << eb_minor.name()
            << "; composite PLP.L.PLP = P";
    add(report, "grail-network",
        "the Grail chord path Eb, b, G, eb follows PLP, L, PLP with composite P",
        path_ok && composite_ok, witness.str());
  }

  {
    bool ok = true;
    for (const Triad& t : all_triads()) {
      for (char letter : {'P', 'L', 'R'}) {
        const Triad u = letter == 'P'  ? parallel(t)
                        : letter == 'L' ? leading_tone_exchange(t)
                                        : relative(t);
        const PcSet common = t.tone_set() & u.tone_set();
        if (common.size() != 2) ok = false;
        const auto from = (t.tone_set() - u.tone_set()).members();
        const auto to = (u.tone_set() - t.tone_set()).members();
        const int dist = circle_distance(from[0], to[0]);
        if (letter == 'R' ? dist != 2 : dist != 1) ok = false;
      }
    }
    add(report, "voice-leading",
        "P and L move a single tone by a semitone; R moves its tone by a whole step", ok,
        "common tones and moved-tone distances checked on all 24 triads");
  }

  return report;
}

// --- duality suite ----------------------------------------------------------

VerificationReport suite_duality() {
  VerificationReport report{"duality", {}};

  {
    const auto inside = triads_within(hex_pitch_classes());
    std::vector<std::string> names;
    for (const Triad& t : inside) names.push_back(t.name());
    std::sort(names.begin(), names.end());
    const std::vector<std::string> expected = {"B", "Eb", "G", "b", "eb", "g"};
    add(report, "hex-trichords",
        "the only consonant triads inside {2,3,6,7,10,11} are Eb, eb, B, b, G, g",
        names == expected, "found " + join(names));
  }

  const HexDualityReport hex = verify_hexatonic_duality();

  {
    const PermGroup h = hex_ti_stabilizer();
    std::ostringstream witness;
    witness << group_op_names(h) << ", " << classify(h).to_string();
    add(report, "hex-stabilizer",
        "the T/I operations preserving the Eb hexatonic chords are exactly "
        "{T0,T4,T8,I1,I5,I9}, a dihedral group of order 6",
        h.order() == 6 && classify(h) == GroupClass::dihedral(6), witness.str());
  }

  {
    std::vector<std::string> arrows;
    for (const auto& [op, chord] : hex.h_orbit_of_eb) arrows.push_back(op + "->" + chord);
    const std::vector<std::string> expected = {"T0->Eb", "T4->G",  "T8->B",
                                               "I1->eb", "I5->g",  "I9->b"};
    add(report, "stabilizer-orbit",
        "the stabilizer moves Eb to all six chords: T4 to G, T8 to B, I1 to eb, I5 to g, I9 to b",
        arrows == expected && hex.h_simply_transitive_on_hex, join(arrows));
  }

  {
    const std::vector<std::string> expected = {"Eb", "eb", "B", "b", "G", "g"};
    add(report, "pl-orbit",
        "the PL-group reaches the six chords from Eb in cycle order via the word prefixes",
        hex.pl_cycle_from_eb == expected && hex.pl_simply_transitive_on_hex,
        join(hex.pl_cycle_from_eb));
  }

  {
    add(report, "restriction-faithful",
        "restricting either order-6 group to the six chords loses no elements",
        hex.pl_restriction_faithful && hex.h_restriction_faithful,
        "restricted orders 6 and 6");
  }

  {
    std::ostringstream witness;
    witness << "commute: " << (hex.commute ? "yes" : "no")
            << ", C(PL)=H: " << (hex.dual.centralizer_of_g_is_h ? "yes" : "no")
            << ", C(H)=PL: " << (hex.dual.centralizer_of_h_is_g ? "yes" : "no")
            << ", brute force and point-image agree: "
            << (hex.centralizer_algorithms_agree ? "yes" : "no") << ", classes "
            << hex.pl_class.to_string() << " / " << hex.h_class.to_string();
    add(report, "hexatonic-duality",
        "restricted to the six chords, the PL-group and the stabilizer are dual groups, "
        "both dihedral of order 6",
        hex.ok(), witness.str());
  }

  {
    const auto hex_indices = hex_triad_indices();
    const PermGroup pl_bar = restrict_to(pl_group(), hex_indices);
    const PermGroup h_bar = restrict_to(hex_ti_stabilizer(), hex_indices);
    const auto r1 = verify_double_centralizer(pl_bar);
    const auto r2 = verify_double_centralizer(h_bar);
    std::ostringstream witness;
    witness << "|C(PL)| = " << r1.centralizer_order << ", |C(H)| = " << r2.centralizer_order;
    add(report, "double-centralizer",
        "for both order-6 groups, C(G) is simply transitive and C(C(G)) = G by brute force "
        "over Sym(6)",
        r1.ok() && r2.ok(), witness.str());
  }

  return report;
}

// --- orbit-stabilizer suite ---------------------------------------------------

VerificationReport suite_orbit_stabilizer() {
  VerificationReport report{"orbit-stabilizer", {}};

  {
    const PermGroup h = hex_ti_stabilizer();
    const std::size_t eb = triad_index(Triad::major(PitchClass(3)));
    const bool ok = check_orbit_stabilizer(h, eb) && stabilizer(h, eb).order() == 1 &&
                    orbit(h, eb).size() == 6;
    add(report, "stabilizer-counts", "|H| = |stabilizer of Eb| x |orbit of Eb|: 6 = 1 x 6", ok,
        "orbit size 6, stabilizer order 1");
  }

  {
    bool ok = true;
    for (std::size_t point = 0; point < 24; ++point) {
      ok = ok && check_orbit_stabilizer(ti_group_on_triads(), point) &&
           stabilizer(ti_group_on_triads(), point).order() == 1;
    }
    add(report, "ti-free-action",
        "the T/I-group acts on the triads with trivial stabilizers: 24 = 1 x 24 at every chord",
        ok, "checked at all 24 chords");
  }

  {
    const PermGroup& ti12 = ti_group_on_pitch_classes();
    const PermGroup stab = stabilizer(ti12, 0);
    const bool ok = check_orbit_stabilizer(ti12, 0) && stab.order() == 2 &&
                    orbit(ti12, 0).size() == 12;
    add(report, "ti-on-z12",
        "on the 12 pitch classes the stabilizer of 0 is {T0, I0}: 24 = 2 x 12", ok,
        "stabilizer order 2, orbit size 12");
  }

  {
    std::mt19937 rng(20250314);
    std::vector<Permutation> pool;
    for (TiOp op : all_ti_ops()) pool.push_back(ti_perm_on_triads(op));
    for (char letter : {'P', 'L', 'R'}) pool.push_back(plr_perm(letter));

    bool ok = true;
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Permutation> gens;
      std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
      std::uniform_int_distribution<int> count(1, 3);
      const int k = count(rng);
      for (int i = 0; i < k; ++i) gens.push_back(pool[pick(rng)]);
      const PermGroup g = PermGroup::generate(triad_carrier(), gens);
      std::uniform_int_distribution<std::size_t> point(0, 23);
      if (!check_orbit_stabilizer(g, point(rng))) ok = false;
    }
    add(report, "random-subgroups",
        "the coset-orbit bijection holds for 100 random subgroups of the triad action", ok,
        "generators drawn from T/I ops and P, L, R; seed 20250314");
  }

  {
    std::mt19937 rng(424242);
    CarrierPtr six = make_carrier({"0", "1", "2", "3", "4", "5"});
    bool ok = true;
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<Permutation> gens;
      std::uniform_int_distribution<int> count(1, 3);
      const int k = count(rng);
      for (int i = 0; i < k; ++i) {
        std::vector<std::size_t> images = {0, 1, 2, 3, 4, 5};
        std::shuffle(images.begin(), images.end(), rng);
        gens.emplace_back(six, images);
      }
      const PermGroup g = PermGroup::generate(six, gens);

      const bool transitive = is_transitive(g);
      bool stabilizers_trivial = true;
      for (std::size_t p = 0; p < 6; ++p) {
        if (stabilizer(g, p).order() != 1) stabilizers_trivial = false;
      }
      const bool same_size = g.order() == 6;
      const int held = int(transitive) + int(stabilizers_trivial) + int(same_size);
      if (held >= 2 && !(held == 3 && is_simply_transitive(g))) ok = false;
      if (is_simply_transitive(g) && held != 3) ok = false;
    }
    add(report, "two-of-three",
        "for random subgroups of Sym(6), any two of {transitive, trivial stabilizers, "
        "|G| = |S|} imply the third and simple transitivity",
        ok, "50 random subgroups; seed 424242");
  }

  {
    // Every transitive subgroup of a simply transitive group is the whole
    // group; checked over all subgroups of the two restricted order-6 groups.
    const auto hex_indices = hex_triad_indices();
    bool ok = true;
    for (const PermGroup& big :
         {restrict_to(pl_group(), hex_indices), restrict_to(hex_ti_stabilizer(), hex_indices)}) {
      const auto& elements = big.elements();
      const std::size_t n = elements.size();
      for (std::size_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<Permutation> gens;
        for (std::size_t i = 0; i < n; ++i) {
          if ((mask >> i) & 1u) gens.push_back(elements[i]);
        }
        const PermGroup sub = PermGroup::generate(big.carrier(), gens);
        if (is_transitive(sub) && !(sub == big)) ok = false;
      }
    }
    add(report, "transitive-subgroup",
        "a transitive subgroup of a simply transitive group is the whole group "
        "(all subgroups of both order-6 groups)",
        ok, "2 x 64 generated subgroups checked");
  }

  return report;
}

// --- table2 suite -------------------------------------------------------------

VerificationReport suite_table2() {
  VerificationReport report{"table2", {}};

  struct Expected {
    const char* k;
    std::vector<std::string> hex;
    std::vector<std::string> ops;
  };
  const std::vector<Expected> expected = {
      {"Id", {"Eb", "eb", "B", "b", "G", "g"}, {"T0", "T4", "T8", "I1", "I5", "I9"}},
      {"T1", {"E", "e", "C", "c", "Ab", "ab"}, {"T0", "T4", "T8", "I3", "I7", "I11"}},
      {"T2", {"F", "f", "C#", "c#", "A", "a"}, {"T0", "T4", "T8", "I5", "I9", "I1"}},
      {"T3", {"F#", "f#", "D", "d", "Bb", "bb"}, {"T0", "T4", "T8", "I7", "I11", "I3"}},
  };

  const auto rows = sub_dual_table();
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const bool match = i < rows.size() && rows[i].k == expected[i].k &&
                       rows[i].hex_triads == expected[i].hex &&
                       rows[i].dual_ops == expected[i].ops;
    const bool dual = i < rows.size() && rows[i].dual.dual();
    std::ostringstream witness;
    if (i < rows.size()) {
      witness << "k" << rows[i].k << "Hex = {" << join(rows[i].hex_triads) << "}, dual group {"
              << join(rows[i].dual_ops) << "}, dual pair verified: " << (dual ? "yes" : "no");
    }
    add(report, "row-" + std::string(expected[i].k),
        "hexatonic system " + std::string(expected[i].k) +
            ": transported chords and conjugated stabilizer form a dual pair",
        match && dual, witness.str());
  }

  {
    std::vector<bool> seen(24, false);
    bool disjoint = true;
    for (int k = 0; k < 4; ++k) {
      for (const Triad& t : hex_cycle(k).distinct_chords()) {
        const std::size_t index = triad_index(t);
        if (seen[index]) disjoint = false;
        seen[index] = true;
      }
    }
    const bool all = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    add(report, "partition", "the four transported chord sets partition the 24 triads",
        disjoint && all, "24 chords covered exactly once");
  }

  return report;
}

// --- diatonic suite --------------------------------------------------------------

VerificationReport suite_diatonic() {
  VerificationReport report{"diatonic", {}};

  {
    bool three_each = true;
    for (const Triad& t : all_triads()) {
      if (scales_containing(t).size() != 3) three_each = false;
    }
    const std::vector<std::pair<std::string, std::vector<std::string>>> expected = {
        {"Eb", {"Eb", "Bb", "Ab"}}, {"eb", {"F#", "Db", "B"}}, {"B", {"B", "F#", "E"}},
        {"b", {"D", "A", "G"}},     {"G", {"G", "D", "C"}},    {"g", {"Bb", "F", "Eb"}},
    };
    bool table_ok = true;
    std::ostringstream witness;
    for (const auto& [chord, scales] : expected) {
      std::vector<std::string> got;
      for (const DiatonicSet& s : scales_containing(*Triad::parse(chord))) {
        got.push_back(s.root_name());
      }
      if (got != scales) table_ok = false;
      witness << chord << ":[" << join(got, " ") << "] ";
    }
    add(report, "scales-per-triad",
        "every consonant triad sits in exactly three major scales, matching the hexatonic "
        "containment table",
        three_each && table_ok, witness.str());
  }

  {
    bool ok = true;
    const auto& scales = all_major_scales();
    for (std::size_t i = 0; i < scales.size(); ++i) {
      for (std::size_t j = i + 1; j < scales.size(); ++j) {
        const bool ms = is_ms_scale_transition(scales[i], scales[j]);
        const int diff = mod12(scales[i].root.value() - scales[j].root.value());
        const bool fifth = diff == 5 || diff == 7;
        if (ms != fifth) ok = false;
      }
    }
    add(report, "scale-transitions",
        "two major scales are one smooth move apart exactly when their roots are a fifth apart",
        ok, "all 66 scale pairs checked");
  }

  {
    const DouthettReport d = douthett_sequence_check();
    std::vector<std::string> names;
    for (const DouthettRow& row : d.rows) names.push_back(row.scale.root_name());
    add(report, "douthett-sequence",
        "the scale sequence Eb, Db, B, A, G, F contains cycle 0 chord by chord and descends "
        "by a whole step",
        d.ok(), join(names, "-"));
  }

  {
    const auto chains = covering_chains(hex_cycle(0), 4);
    std::vector<std::string> got;
    for (const CoveringChain& chain : chains) got.push_back(chain.chain_string());
    const std::vector<std::string> expected = {"Eb-Ab-Db-F#", "G-C-F-Bb", "B-E-A-D"};
    add(report, "covering-chains",
        "exactly three smooth four-scale chains cover four consecutive cycle chords: "
        "B-E-A-D, G-C-F-Bb, Eb-Ab-Db-F#",
        got == expected, join(got));
  }

  {
    bool ok = true;
    std::ostringstream witness;
    for (int c = 0; c < 4; ++c) {
      const auto chords = hex_cycle(c).distinct_chords();
      for (std::size_t i = 0; i < chords.size(); ++i) {
        const Triad& from = chords[i];
        const Triad& to = chords[(i + 1) % chords.size()];
        const int count = ms_transitions_covering(from, to);
        const int expected_count = from.is_major() ? 1 : 3;  // P edge vs L edge
        if (count != expected_count) ok = false;
        if (c == 0) witness << from.name() << "->" << to.name() << ":" << count << ' ';
      }
    }
    add(report, "edge-coverage",
        "each P transition is covered by exactly one smooth scale move, each L transition "
        "by exactly three",
        ok, witness.str());
  }

  {
    bool contained = false;
    for (int c = 0; c < 4; ++c) contained = contained || any_scale_contains(hex_cycle(c));
    add(report, "no-single-scale", "no hexatonic cycle fits inside a single major scale",
        !contained, "checked 4 cycles x 12 scales");
  }

  return report;
}

}  // namespace

bool VerificationReport::pass() const {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass; });
}

std::size_t VerificationReport::failed_count() const {
  return static_cast<std::size_t>(
      std::count_if(claims.begin(), claims.end(), [](const Claim& c) { return !c.pass; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"duality", "plr", "orbit-stabilizer", "table2",
                                                 "diatonic"};
  return names;
}

VerificationReport run_suite(const std::string& name) {
  if (name == "plr") return suite_plr();
  if (name == "duality") return suite_duality();
  if (name == "orbit-stabilizer") return suite_orbit_stabilizer();
  if (name == "table2") return suite_table2();
  if (name == "diatonic") return suite_diatonic();
  if (name == "all") {
    VerificationReport report{"all", {}};
    for (const std::string& suite : suite_names()) {
      for (Claim& claim : run_suite(suite).claims) {
        claim.id = suite + "/" + claim.id;
        report.claims.push_back(std::move(claim));
      }
    }
    return report;
  }
  throw std::invalid_argument("unknown suite: " + name);
}

void print_report(const VerificationReport& report, std::ostream& out) {
  out << "suite: " << report.suite << '\n';
  for (const Claim& claim : report.claims) {
    out << "  [" << (claim.pass ? " ok " : "FAIL") << "] " << std::left << std::setw(24)
        << claim.id << " " << claim.statement << '\n';
    if (!claim.witness.empty()) out << "           " << claim.witness << '\n';
  }
  out << (report.pass() ? "PASS" : "FAIL") << " (" << report.claims.size() - report.failed_count()
      << "/" << report.claims.size() << " claims)" << '\n';
}

std::string to_json_string(const VerificationReport& report) {
  nlohmann::json j;
  j["suite"] = report.suite;
  j["pass"] = report.pass();
  j["claims"] = nlohmann::json::array();
  for (const Claim& claim : report.claims) {
    j["claims"].push_back({{"id", claim.id},
                           {"statement", claim.statement},
                           {"pass", claim.pass},
                           {"witness", claim.witness}});
  }
  return j.dump(2);
}

VerificationReport report_from_json_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("bad report JSON: ") + e.what());
  }
  VerificationReport report;
  try {
    report.suite = j.at("suite").get<std::string>();
    for (const auto& c : j.at("claims")) {
      report.claims.push_back(Claim{c.at("id").get<std::string>(),
                                    c.at("statement").get<std::string>(),
                                    c.at("pass").get<bool>(), c.at("witness").get<std::string>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad report JSON: ") + e.what());
  }
  return report;
}

}  // namespace hexdual
