#include "hexdual/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hexdual {

namespace {

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

void sort_canonically(std::vector<Permutation>& elements) {
  std::sort(elements.begin(), elements.end());
}

bool word_shorter(const Permutation& a, const Permutation& b) {
  if (a.word().size() != b.word().size()) return a.word().size() < b.word().size();
  return a.word() < b.word();
}

}  // namespace

std::string GroupClass::to_string() const {
  switch (kind) {
    case Kind::Trivial:
      return "trivial";
    case Kind::Cyclic:
      return "cyclic of order " + std::to_string(parameter);
    case Kind::Dihedral:
      return "dihedral of order " + std::to_string(parameter);
    case Kind::Symmetric:
      return "Sym(" + std::to_string(parameter) + ")";
    case Kind::Other:
      return "other of order " + std::to_string(parameter);
  }
  return "?";
}

PermGroup::PermGroup(CarrierPtr carrier, std::vector<Permutation> elements,
                     std::vector<Permutation> generators)
    : carrier_(std::move(carrier)),
      elements_(std::move(elements)),
      generators_(std::move(generators)) {}

PermGroup PermGroup::trivial(CarrierPtr carrier) {
  auto id = Permutation::identity(carrier);
  return PermGroup(std::move(carrier), {id}, {id});
}

PermGroup PermGroup::generate(CarrierPtr carrier, std::vector<Permutation> generators,
                              std::size_t max_order) {
  for (const Permutation& g : generators) {
    if (!same_carrier(g.carrier(), carrier)) {
      throw std::invalid_argument("generator carrier mismatch");
    }
  }

  std::map<std::vector<std::size_t>, std::size_t> seen;
  std::vector<Permutation> elements;
  std::deque<std::size_t> queue;

  auto add = [&](Permutation p) {
    auto [it, inserted] = seen.emplace(p.images(), elements.size());
    if (!inserted) return;
    elements.push_back(std::move(p));
    queue.push_back(it->second);
    if (elements.size() > max_order) {
      throw std::length_error("group closure exceeded bound of " + std::to_string(max_order));
    }
  };

  add(Permutation::identity(carrier));
  while (!queue.empty()) {
    const std::size_t index = queue.front();
    queue.pop_front();
    for (const Permutation& g : generators) {
      // Left-multiplying keeps words reading right-to-left: the new factor
      // is applied last, so its letter goes on the left.
      Permutation next = (g * elements[index]).with_word(g.word() + elements[index].word());
      add(std::move(next));
    }
  }

  sort_canonically(elements);
  return PermGroup(std::move(carrier), std::move(elements), std::move(generators));
}

PermGroup PermGroup::from_elements(std::vector<Permutation> elements,
                                   std::vector<Permutation> generators) {
  if (elements.empty()) throw std::invalid_argument("group needs at least the identity");
  // Copy, not a reference: the elements are moved out of below.
  const CarrierPtr carrier = elements.front().carrier();
  for (const Permutation& e : elements) {
    if (!same_carrier(e.carrier(), carrier)) {
      throw std::invalid_argument("element carrier mismatch");
    }
  }

  // Deduplicate, preferring the shortest word for each mapping.
  std::map<std::vector<std::size_t>, Permutation> unique;
  for (Permutation& e : elements) {
    auto it = unique.find(e.images());
    if (it == unique.end()) {
      unique.emplace(e.images(), std::move(e));
    } else if (word_shorter(e, it->second)) {
      it->second = std::move(e);
    }
  }

  std::vector<Permutation> sorted;
  sorted.reserve(unique.size());
  std::set<std::vector<std::size_t>> image_set;
  for (auto& [images, perm] : unique) {
    image_set.insert(images);
    sorted.push_back(std::move(perm));
  }

  const std::size_t n = carrier->size();
  if (!image_set.count(Permutation::identity(carrier).images())) {
    throw std::invalid_argument("element set lacks the identity");
  }
  std::vector<std::size_t> scratch(n);
  for (const Permutation& a : sorted) {
    for (std::size_t i = 0; i < n; ++i) scratch[a(i)] = i;
    if (!image_set.count(scratch)) {
      throw std::invalid_argument("element set not closed under inverse");
    }
    for (const Permutation& b : sorted) {
      for (std::size_t i = 0; i < n; ++i) scratch[i] = a(b(i));
      if (!image_set.count(scratch)) {
        throw std::invalid_argument("element set not closed under composition");
      }
    }
  }

  if (generators.empty()) generators = sorted;
  return PermGroup(carrier, std::move(sorted), std::move(generators));
}

bool PermGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::optional<Permutation> PermGroup::element_mapping(std::size_t from, std::size_t to) const {
  std::optional<Permutation> best;
  for (const Permutation& e : elements_) {
    if (e(from) != to) continue;
    if (!best || word_shorter(e, *best)) best = e;
  }
  return best;
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (!same_carrier(carrier_, other.carrier_)) return false;
  for (const Permutation& e : elements_) {
    if (!other.contains(e)) return false;
  }
  return true;
}

bool operator==(const PermGroup& a, const PermGroup& b) {
  if (!same_carrier(a.carrier_, b.carrier_)) return false;
  if (a.elements_.size() != b.elements_.size()) return false;
  for (std::size_t i = 0; i < a.elements_.size(); ++i) {
    if (!(a.elements_[i] == b.elements_[i])) return false;
  }
  return true;
}

std::vector<std::size_t> orbit(const PermGroup& g, std::size_t point) {
  if (point >= g.degree()) throw std::out_of_range("orbit: point outside carrier");
  std::set<std::size_t> out;
  for (const Permutation& e : g.elements()) out.insert(e(point));
  return {out.begin(), out.end()};
}

PermGroup stabilizer(const PermGroup& g, std::size_t point) {
  if (point >= g.degree()) throw std::out_of_range("stabilizer: point outside carrier");
  std::vector<Permutation> fixing;
  for (const Permutation& e : g.elements()) {
    if (e(point) == point) fixing.push_back(e);
  }
  return PermGroup::from_elements(std::move(fixing));
}

PermGroup setwise_stabilizer(const PermGroup& g, std::vector<std::size_t> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  std::vector<bool> in_subset(g.degree(), false);
  for (std::size_t p : subset) {
    if (p >= g.degree()) throw std::out_of_range("setwise_stabilizer: point outside carrier");
    in_subset[p] = true;
  }

  std::vector<Permutation> preserving;
  for (const Permutation& e : g.elements()) {
    bool preserves = true;
    for (std::size_t p : subset) {
      if (!in_subset[e(p)]) {
        preserves = false;
        break;
      }
    }
    if (preserves) preserving.push_back(e);
  }
  return PermGroup::from_elements(std::move(preserving));
}

bool is_transitive(const PermGroup& g) { return orbit(g, 0).size() == g.degree(); }

bool is_simply_transitive(const PermGroup& g) {
  return is_transitive(g) && g.order() == g.degree();
}

PermGroup centralizer_brute(const PermGroup& g) {
  const std::size_t n = g.degree();
  if (n > kBruteCarrierLimit) {
    throw std::invalid_argument("centralizer_brute: carrier larger than " +
                                std::to_string(kBruteCarrierLimit) + " points");
  }

  // Commuting with the generators suffices: it extends to the whole group.
  const std::vector<Permutation>& gens =
      g.generators().empty() ? g.elements() : g.generators();

  std::vector<std::size_t> candidate(n);
  std::iota(candidate.begin(), candidate.end(), 0);
  std::vector<Permutation> commuting;
  do {
    bool ok = true;
    for (const Permutation& e : gens) {
      for (std::size_t i = 0; i < n; ++i) {
        if (candidate[e(i)] != e(candidate[i])) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) commuting.emplace_back(g.carrier(), candidate);
  } while (std::next_permutation(candidate.begin(), candidate.end()));

  return PermGroup::from_elements(std::move(commuting));
}

PermGroup centralizer_of_transitive(const PermGroup& g) {
  if (!is_transitive(g)) {
    throw std::invalid_argument("centralizer_of_transitive: group is not transitive");
  }
  const std::size_t n = g.degree();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  std::vector<Permutation> commuting;
  for (std::size_t target = 0; target < n; ++target) {
    // Try sigma with sigma(base) = target, where base = 0: transitivity
    // forces sigma(e(0)) = e(target) for every element e, so the whole map
    // is pinned down; keep it only if the assignments never clash.
    std::vector<std::size_t> images(n, kUnset);
    bool consistent = true;
    for (const Permutation& e : g.elements()) {
      const std::size_t from = e(0);
      const std::size_t to = e(target);
      if (images[from] == kUnset) {
        images[from] = to;
      } else if (images[from] != to) {
        consistent = false;
        break;
      }
    }
    if (!consistent) continue;

    std::vector<bool> hit(n, false);
    bool bijective = true;
    for (std::size_t img : images) {
      if (img == kUnset || hit[img]) {
        bijective = false;
        break;
      }
      hit[img] = true;
    }
    if (bijective) commuting.emplace_back(g.carrier(), std::move(images));
  }

  return PermGroup::from_elements(std::move(commuting));
}

PermGroup centralizer_in_sym(const PermGroup& g) {
  if (is_transitive(g)) return centralizer_of_transitive(g);
  if (g.degree() <= kBruteCarrierLimit) return centralizer_brute(g);
  throw std::invalid_argument(
      "centralizer_in_sym: non-transitive group on a carrier too large for brute force");
}

PermGroup restrict_to(const PermGroup& g, std::vector<std::size_t> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  if (subset.empty()) throw std::invalid_argument("restrict_to: empty subset");

  std::vector<std::size_t> position(g.degree(), static_cast<std::size_t>(-1));
  for (std::size_t j = 0; j < subset.size(); ++j) {
    if (subset[j] >= g.degree()) throw std::out_of_range("restrict_to: point outside carrier");
    position[subset[j]] = j;
  }

  std::vector<std::string> labels;
  labels.reserve(subset.size());
  for (std::size_t p : subset) labels.push_back(g.carrier()->label(p));
  CarrierPtr sub_carrier = make_carrier(std::move(labels));

  // Iterate in word order so merged restrictions keep the shortest label.
  std::vector<Permutation> by_word = g.elements();
  std::stable_sort(by_word.begin(), by_word.end(), word_shorter);

  std::vector<Permutation> restricted;
  for (const Permutation& e : by_word) {
    std::vector<std::size_t> images(subset.size());
    for (std::size_t j = 0; j < subset.size(); ++j) {
      const std::size_t image = e(subset[j]);
      if (position[image] == static_cast<std::size_t>(-1)) {
        throw std::invalid_argument("restrict_to: subset is not invariant under the group");
      }
      images[j] = position[image];
    }
    restricted.emplace_back(sub_carrier, std::move(images), e.word());
  }

  std::vector<Permutation> restricted_gens;
  for (const Permutation& gen : g.generators()) {
    std::vector<std::size_t> images(subset.size());
    for (std::size_t j = 0; j < subset.size(); ++j) images[j] = position[gen(subset[j])];
    restricted_gens.emplace_back(sub_carrier, std::move(images), gen.word());
  }

  return PermGroup::from_elements(std::move(restricted), std::move(restricted_gens));
}

PermGroup conjugate(const PermGroup& g, const Permutation& k) {
  if (!same_carrier(g.carrier(), k.carrier())) {
    throw std::invalid_argument("conjugate: carrier mismatch");
  }
  const Permutation k_inv = k.inverse();
  std::vector<Permutation> elements;
  elements.reserve(g.order());
  for (const Permutation& e : g.elements()) elements.push_back(k * e * k_inv);
  std::vector<Permutation> gens;
  for (const Permutation& e : g.generators()) gens.push_back(k * e * k_inv);
  return PermGroup::from_elements(std::move(elements), std::move(gens));
}

GroupClass classify(const PermGroup& g) {
  const std::size_t n = g.order();
  if (n == 1) return GroupClass::trivial();

  std::vector<int> orders;
  orders.reserve(n);
  for (const Permutation& e : g.elements()) orders.push_back(e.order());

  for (int o : orders) {
    if (static_cast<std::size_t>(o) == n) return GroupClass::cyclic(static_cast<int>(n));
  }

  if (n % 2 == 0) {
    const std::size_t m = n / 2;
    for (std::size_t i = 0; i < n; ++i) {
      const Permutation& r = g.elements()[i];
      if (static_cast<std::size_t>(orders[i]) != m) continue;
      // Collect <r> and look for an inverting involution outside it.
      std::set<std::vector<std::size_t>> rotation;
      Permutation power = Permutation::identity(g.carrier());
      for (std::size_t k = 0; k < m; ++k) {
        rotation.insert(power.images());
        power = r * power;
      }
      const Permutation r_inv = r.inverse();
      for (std::size_t j = 0; j < n; ++j) {
        const Permutation& t = g.elements()[j];
        if (orders[j] != 2 || rotation.count(t.images())) continue;
        if (t * r * t == r_inv) return GroupClass::dihedral(static_cast<int>(n));
      }
    }
  }

  if (g.degree() <= kBruteCarrierLimit && n == factorial(g.degree())) {
    return GroupClass::symmetric(static_cast<int>(g.degree()));
  }

  return GroupClass::other(static_cast<int>(n));
}

bool check_orbit_stabilizer(const PermGroup& g, std::size_t point) {
  const auto orb = orbit(g, point);
  const PermGroup stab = stabilizer(g, point);

  if (g.order() != stab.order() * orb.size()) return false;

  // Group the elements into fibers by the image of the point, then verify
  // each fiber is exactly one left coset of the stabilizer.
  std::map<std::size_t, std::set<std::vector<std::size_t>>> fibers;
  for (const Permutation& e : g.elements()) fibers[e(point)].insert(e.images());

  if (fibers.size() != orb.size()) return false;
  for (const auto& [image, fiber] : fibers) {
    if (fiber.size() != stab.order()) return false;
    const Permutation representative(g.carrier(), *fiber.begin());
    std::set<std::vector<std::size_t>> coset;
    for (const Permutation& s : stab.elements()) coset.insert((representative * s).images());
    if (coset != fiber) return false;
  }
  return true;
}

DualPairReport verify_dual_pair(const PermGroup& g, const PermGroup& h) {
  DualPairReport report;
  report.same_carrier = same_carrier(g.carrier(), h.carrier());
  if (!report.same_carrier) return report;

  report.g_simply_transitive = is_simply_transitive(g);
  report.h_simply_transitive = is_simply_transitive(h);

  report.commute = true;
  for (const Permutation& a : g.elements()) {
    for (const Permutation& b : h.elements()) {
      if (!a.commutes_with(b)) {
        report.commute = false;
        break;
      }
    }
    if (!report.commute) break;
  }

  const PermGroup cg = centralizer_in_sym(g);
  const PermGroup ch = centralizer_in_sym(h);
  report.g_in_centralizer_of_h = g.is_subgroup_of(ch);
  report.h_in_centralizer_of_g = h.is_subgroup_of(cg);
  report.centralizer_of_g_is_h = (cg == h);
  report.centralizer_of_h_is_g = (ch == g);
  return report;
}

DoubleCentralizerReport verify_double_centralizer(const PermGroup& g) {
  if (!is_simply_transitive(g)) {
    throw std::invalid_argument("verify_double_centralizer: group is not simply transitive");
  }
  const PermGroup c = centralizer_brute(g);
  DoubleCentralizerReport report;
  report.centralizer_order = c.order();
  report.centralizer_simply_transitive = is_simply_transitive(c);
  report.double_centralizer_is_original = (centralizer_brute(c) == g);
  return report;
}

}  // namespace hexdual
