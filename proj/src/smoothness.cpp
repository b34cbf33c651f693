#include "hexdual/smoothness.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace hexdual {

SetClass set_class_of(PcSet s) {
  PcSet best = s;
  for (TiOp op : all_ti_ops()) {
    const PcSet image = apply(op, s);
    if (tuple_less(image, best)) best = image;
  }
  return SetClass{best};
}

std::vector<SetClass> all_set_classes() {
  std::set<std::uint16_t> primes;
  for (std::uint16_t bits = 0; bits < (1u << kSemitones); ++bits) {
    primes.insert(set_class_of(PcSet::from_bits(bits)).prime.bits());
  }
  std::vector<SetClass> classes;
  classes.reserve(primes.size());
  for (std::uint16_t bits : primes) classes.push_back(SetClass{PcSet::from_bits(bits)});
  std::sort(classes.begin(), classes.end(), [](const SetClass& a, const SetClass& b) {
    if (a.cardinality() != b.cardinality()) return a.cardinality() < b.cardinality();
    return tuple_less(a.prime, b.prime);
  });
  return classes;
}

std::vector<PcSet> exemplars(const SetClass& c) {
  std::set<std::uint16_t> seen;
  for (TiOp op : all_ti_ops()) seen.insert(apply(op, c.prime).bits());
  std::vector<PcSet> out;
  out.reserve(seen.size());
  for (std::uint16_t bits : seen) out.push_back(PcSet::from_bits(bits));
  std::sort(out.begin(), out.end(), tuple_less);
  return out;
}

bool is_ms_transition(PcSet a, PcSet b) {
  if (a.size() != b.size()) return false;
  if ((a & b).size() != a.size() - 1) return false;
  const auto moved_from = (a - b).members();
  const auto moved_to = (b - a).members();
  if (moved_from.size() != 1 || moved_to.size() != 1) return false;
  return circle_distance(moved_from[0], moved_to[0]) == 1;
}

std::size_t MsGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& neighbors : adjacency) twice += neighbors.size();
  return twice / 2;
}

MsGraph ms_graph(const SetClass& c) {
  MsGraph graph;
  graph.nodes = exemplars(c);
  const std::size_t n = graph.nodes.size();
  graph.adjacency.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (is_ms_transition(graph.nodes[i], graph.nodes[j])) {
        graph.adjacency[i].push_back(static_cast<int>(j));
        graph.adjacency[j].push_back(static_cast<int>(i));
      }
    }
  }
  for (auto& neighbors : graph.adjacency) std::sort(neighbors.begin(), neighbors.end());
  return graph;
}

std::vector<MsCycle> enumerate_ms_cycles(const SetClass& c) {
  const MsGraph graph = ms_graph(c);
  const int n = static_cast<int>(graph.nodes.size());

  std::vector<MsCycle> cycles;
  std::vector<int> path;
  std::vector<bool> on_path(static_cast<std::size_t>(n), false);

  // Each simple cycle is emitted exactly once: the start is the least node
  // on it, extensions use only larger nodes, and of the two directions we
  // keep the one where the second node is smaller than the last.
  std::function<void(int, int)> extend = [&](int start, int current) {
    for (int next : graph.adjacency[static_cast<std::size_t>(current)]) {
      if (next == start && path.size() >= 4 && path[1] < path.back()) {
        MsCycle cycle;
        for (int v : path) cycle.chords.push_back(graph.nodes[static_cast<std::size_t>(v)]);
        cycle.chords.push_back(graph.nodes[static_cast<std::size_t>(start)]);
        cycles.push_back(std::move(cycle));
      }
      if (next <= start || on_path[static_cast<std::size_t>(next)]) continue;
      path.push_back(next);
      on_path[static_cast<std::size_t>(next)] = true;
      extend(start, next);
      on_path[static_cast<std::size_t>(next)] = false;
      path.pop_back();
    }
  };

  for (int start = 0; start < n; ++start) {
    path = {start};
    on_path[static_cast<std::size_t>(start)] = true;
    extend(start, start);
    on_path[static_cast<std::size_t>(start)] = false;
  }
  return cycles;
}

std::vector<SetClassCycles> classify_all() {
  std::vector<SetClassCycles> supporting;
  for (const SetClass& c : all_set_classes()) {
    if (c.cardinality() < 1 || c.cardinality() > 11) continue;
    const auto cycles = enumerate_ms_cycles(c);
    if (cycles.empty()) continue;
    SetClassCycles entry;
    entry.set_class = c;
    entry.exemplar_count = static_cast<int>(exemplars(c).size());
    for (const MsCycle& cycle : cycles) entry.cycle_lengths.push_back(cycle.length());
    std::sort(entry.cycle_lengths.begin(), entry.cycle_lengths.end());
    supporting.push_back(std::move(entry));
  }
  return supporting;
}

}  // namespace hexdual
