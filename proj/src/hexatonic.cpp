#include "hexdual/hexatonic.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hexdual {

namespace {

Permutation triad_map_perm(CarrierPtr carrier, Triad (*f)(const Triad&), std::string word) {
  return Permutation::from_function(
      std::move(carrier), [&](std::size_t i) { return triad_index(f(all_triads()[i])); },
      std::move(word));
}

}  // namespace

CarrierPtr triad_carrier() {
  static const CarrierPtr carrier = [] {
    std::vector<std::string> labels;
    for (const Triad& t : all_triads()) labels.push_back(t.name());
    return make_carrier(std::move(labels));
  }();
  return carrier;
}

CarrierPtr pitch_class_carrier() {
  static const CarrierPtr carrier = [] {
    std::vector<std::string> labels;
    for (int pc = 0; pc < kSemitones; ++pc) labels.push_back(std::to_string(pc));
    return make_carrier(std::move(labels));
  }();
  return carrier;
}

Permutation ti_perm_on_triads(TiOp op) {
  return Permutation::from_function(
      triad_carrier(), [&](std::size_t i) { return triad_index(apply(op, all_triads()[i])); },
      op.name());
}

Permutation ti_perm_on_pitch_classes(TiOp op) {
  return Permutation::from_function(
      pitch_class_carrier(),
      [&](std::size_t i) { return static_cast<std::size_t>(op(PitchClass(static_cast<int>(i))).value()); },
      op.name());
}

Permutation plr_perm(char letter) {
  switch (letter) {
    case 'P':
      return triad_map_perm(triad_carrier(), &parallel, "P");
    case 'L':
      return triad_map_perm(triad_carrier(), &leading_tone_exchange, "L");
    case 'R':
      return triad_map_perm(triad_carrier(), &relative, "R");
    default:
      throw std::invalid_argument(std::string("unknown transformation letter: ") + letter);
  }
}

const PermGroup& ti_group_on_triads() {
  static const PermGroup group = [] {
    std::vector<Permutation> elements;
    for (TiOp op : all_ti_ops()) elements.push_back(ti_perm_on_triads(op));
    std::vector<Permutation> gens = {ti_perm_on_triads(TiOp::transposition(1)),
                                     ti_perm_on_triads(TiOp::inversion(0))};
    return PermGroup::from_elements(std::move(elements), std::move(gens));
  }();
  return group;
}

const PermGroup& ti_group_on_pitch_classes() {
  static const PermGroup group = [] {
    std::vector<Permutation> elements;
    for (TiOp op : all_ti_ops()) elements.push_back(ti_perm_on_pitch_classes(op));
    std::vector<Permutation> gens = {ti_perm_on_pitch_classes(TiOp::transposition(1)),
                                     ti_perm_on_pitch_classes(TiOp::inversion(0))};
    return PermGroup::from_elements(std::move(elements), std::move(gens));
  }();
  return group;
}

const PermGroup& pl_group() {
  static const PermGroup group =
      PermGroup::generate(triad_carrier(), {plr_perm('P'), plr_perm('L')});
  return group;
}

const PermGroup& plr_group() {
  static const PermGroup group =
      PermGroup::generate(triad_carrier(), {plr_perm('P'), plr_perm('L'), plr_perm('R')});
  return group;
}

std::optional<TiOp> recognize_ti_on_triads(const Permutation& p) {
  static const std::map<std::vector<std::size_t>, TiOp> table = [] {
    std::map<std::vector<std::size_t>, TiOp> m;
    for (TiOp op : all_ti_ops()) m.emplace(ti_perm_on_triads(op).images(), op);
    return m;
  }();
  const auto it = table.find(p.images());
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::vector<Triad> HexCycle::distinct_chords() const {
  return {chords.begin(), chords.end() - 1};
}

PcSet HexCycle::tone_set() const {
  PcSet s;
  for (const Triad& t : distinct_chords()) s = s | t.tone_set();
  return s;
}

std::vector<std::string> HexCycle::chord_names() const {
  std::vector<std::string> names;
  for (const Triad& t : chords) names.push_back(t.name());
  return names;
}

HexCycle hex_cycle(int i) {
  if (i < 0 || i > 3) throw std::out_of_range("hex_cycle: index must be 0..3");

  HexCycle cycle;
  cycle.index = i;
  Triad chord = Triad::major(PitchClass(3));  // Eb
  cycle.chords.push_back(chord);
  for (int k = 0; k < 6; ++k) {
    chord = (k % 2 == 0) ? parallel(chord) : leading_tone_exchange(chord);
    cycle.chords.push_back(chord);
  }
  if (!(cycle.chords.front() == cycle.chords.back())) {
    throw std::logic_error("hex_cycle: alternating P/L walk failed to close");
  }

  // Cycles 1..3 are transpositions of cycle 0; T_i commutes with P and L, so
  // the alternation survives.
  const TiOp shift = TiOp::transposition(i);
  for (Triad& t : cycle.chords) t = apply(shift, t);
  return cycle;
}

std::vector<Triad> triads_within(PcSet pcs) {
  std::vector<Triad> out;
  for (const Triad& t : all_triads()) {
    if (t.tone_set().subset_of(pcs)) out.push_back(t);
  }
  return out;
}

PcSet hex_pitch_classes() { return hex_cycle(0).tone_set(); }

std::vector<std::size_t> hex_triad_indices() {
  std::vector<std::size_t> indices;
  for (const Triad& t : hex_cycle(0).distinct_chords()) indices.push_back(triad_index(t));
  std::sort(indices.begin(), indices.end());
  return indices;
}

PermGroup hex_ti_stabilizer() {
  PermGroup h = setwise_stabilizer(ti_group_on_triads(), hex_triad_indices());

  // Sanity-check the computed stabilizer against the six expected operations.
  static const char* kExpected[] = {"T0", "T4", "T8", "I1", "I5", "I9"};
  std::vector<std::string> names;
  for (const Permutation& e : h.elements()) {
    const auto op = recognize_ti_on_triads(e);
    if (!op) throw std::logic_error("hex_ti_stabilizer: element is not a T/I operation");
    names.push_back(op->name());
  }
  std::sort(names.begin(), names.end());
  std::vector<std::string> expected(std::begin(kExpected), std::end(kExpected));
  std::sort(expected.begin(), expected.end());
  if (names != expected) {
    throw std::logic_error("hex_ti_stabilizer: computed stabilizer is not {T0,T4,T8,I1,I5,I9}");
  }
  return h;
}

Triad eval_word(std::string_view word, const Triad& t) {
  Triad result = t;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    switch (*it) {
      case 'P':
        result = parallel(result);
        break;
      case 'L':
        result = leading_tone_exchange(result);
        break;
      default:
        throw std::invalid_argument(std::string("word letter must be P or L, got ") + *it);
    }
  }
  return result;
}

const std::array<std::string, 6>& canonical_pl_words() {
  static const std::array<std::string, 6> words = {"", "P", "LP", "PLP", "LPLP", "PLPLP"};
  return words;
}

std::string reduce_word(std::string_view word) {
  for (const std::string& canonical : canonical_pl_words()) {
    bool same = true;
    for (const Triad& t : all_triads()) {
      if (!(eval_word(word, t) == eval_word(canonical, t))) {
        same = false;
        break;
      }
    }
    if (same) return canonical;
  }
  throw std::logic_error("reduce_word: word does not match any normal form");
}

bool HexDualityReport::ok() const {
  return pl_order == 6 && h_order == 6 && pl_restriction_faithful && h_restriction_faithful &&
         pl_simply_transitive_on_hex && h_simply_transitive_on_hex && commute &&
         centralizer_algorithms_agree && dual.dual() && pl_class == GroupClass::dihedral(6) &&
         h_class == GroupClass::dihedral(6);
}

HexDualityReport verify_hexatonic_duality() {
  HexDualityReport report;

  const PermGroup& pl = pl_group();
  const PermGroup h = hex_ti_stabilizer();
  const auto hex = hex_triad_indices();

  report.pl_order = pl.order();
  report.h_order = h.order();

  const PermGroup pl_bar = restrict_to(pl, hex);
  const PermGroup h_bar = restrict_to(h, hex);
  report.pl_restriction_faithful = (pl_bar.order() == pl.order());
  report.h_restriction_faithful = (h_bar.order() == h.order());

  report.pl_simply_transitive_on_hex = is_simply_transitive(pl_bar);
  report.h_simply_transitive_on_hex = is_simply_transitive(h_bar);

  report.commute = true;
  for (const Permutation& a : pl_bar.elements()) {
    for (const Permutation& b : h_bar.elements()) {
      if (!a.commutes_with(b)) report.commute = false;
    }
  }

  report.centralizer_algorithms_agree =
      centralizer_brute(pl_bar) == centralizer_of_transitive(pl_bar) &&
      centralizer_brute(h_bar) == centralizer_of_transitive(h_bar);

  report.dual = verify_dual_pair(pl_bar, h_bar);
  report.pl_class = classify(pl_bar);
  report.h_class = classify(h_bar);

  // Orbit of Eb under the unrestricted stabilizer, element by element.
  const std::size_t eb = triad_index(Triad::major(PitchClass(3)));
  std::vector<std::pair<TiOp, std::string>> by_op;
  for (const Permutation& e : h.elements()) {
    const auto op = recognize_ti_on_triads(e);
    by_op.emplace_back(*op, triad_carrier()->label(e(eb)));
  }
  std::sort(by_op.begin(), by_op.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [op, chord] : by_op) report.h_orbit_of_eb.emplace_back(op.name(), chord);

  // The PL-orbit of Eb in cycle order, via the word prefixes.
  const Triad eb_triad = Triad::major(PitchClass(3));
  for (const std::string& word : canonical_pl_words()) {
    report.pl_cycle_from_eb.push_back(eval_word(word, eb_triad).name());
  }

  return report;
}

std::vector<SubDualRow> sub_dual_table() {
  const PermGroup h = hex_ti_stabilizer();
  const PermGroup& pl = pl_group();

  // H's elements in the conventional listing order.
  std::vector<Permutation> h_listed;
  for (const char* name : {"T0", "T4", "T8", "I1", "I5", "I9"}) {
    h_listed.push_back(ti_perm_on_triads(*TiOp::parse(name)));
  }

  std::vector<SubDualRow> rows;
  for (int k = 0; k < 4; ++k) {
    SubDualRow row;
    row.k = (k == 0) ? "Id" : "T" + std::to_string(k);

    const HexCycle cycle = hex_cycle(k);
    for (const Triad& t : cycle.distinct_chords()) row.hex_triads.push_back(t.name());

    const Permutation k_perm = ti_perm_on_triads(TiOp::transposition(k));
    const Permutation k_inv = k_perm.inverse();
    for (const Permutation& e : h_listed) {
      const auto op = recognize_ti_on_triads(k_perm * e * k_inv);
      if (!op) throw std::logic_error("sub_dual_table: conjugate left the T/I-group");
      row.dual_ops.push_back(op->name());
    }

    std::vector<std::size_t> indices;
    for (const Triad& t : cycle.distinct_chords()) indices.push_back(triad_index(t));
    std::sort(indices.begin(), indices.end());
    const PermGroup conj = conjugate(h, k_perm);
    row.dual = verify_dual_pair(restrict_to(pl, indices), restrict_to(conj, indices));

    rows.push_back(std::move(row));
  }
  return rows;
}

std::string hex_cycle_dot(int i) {
  const HexCycle cycle = hex_cycle(i);
  std::ostringstream os;
  os << "digraph hexcycle" << i << " {\n";
  os << "  rankdir=LR;\n";
  for (int k = 0; k < 6; ++k) {
    os << "  \"" << cycle.chords[k].name() << "\" -> \"" << cycle.chords[k + 1].name()
       << "\" [label=\"" << (k % 2 == 0 ? 'P' : 'L') << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string grail_dot() {
  const Triad eb = Triad::major(PitchClass(3));
  const Triad b = eval_word("PLP", eb);
  const Triad g = eval_word("L", b);
  const Triad eb_minor = eval_word("PLP", g);

  std::ostringstream os;
  os << "digraph grail {\n";
  os << "  rankdir=LR;\n";
  os << "  \"" << eb.name() << "\" -> \"" << b.name() << "\" [label=\"PLP\"];\n";
  os << "  \"" << b.name() << "\" -> \"" << g.name() << "\" [label=\"L\"];\n";
  os << "  \"" << g.name() << "\" -> \"" << eb_minor.name() << "\" [label=\"PLP\"];\n";
  os << "  \"" << eb.name() << "\" -> \"" << eb_minor.name()
     << "\" [label=\"P\", style=dashed];\n";
  os << "}\n";
  return os.str();
}

}  // namespace hexdual
