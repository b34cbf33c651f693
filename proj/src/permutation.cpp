#include "hexdual/permutation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hexdual {

Carrier::Carrier(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw std::invalid_argument("carrier must be non-empty");
  auto sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("carrier labels must be distinct");
  }
}

std::optional<std::size_t> Carrier::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

CarrierPtr make_carrier(std::vector<std::string> labels) {
  return std::make_shared<const Carrier>(std::move(labels));
}

bool same_carrier(const CarrierPtr& a, const CarrierPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

Permutation::Permutation(CarrierPtr carrier, std::vector<std::size_t> images, std::string word)
    : carrier_(std::move(carrier)), images_(std::move(images)), word_(std::move(word)) {
  if (!carrier_) throw std::invalid_argument("permutation needs a carrier");
  if (images_.size() != carrier_->size()) {
    throw std::invalid_argument("image array size does not match carrier");
  }
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t img : images_) {
    if (img >= images_.size() || seen[img]) {
      throw std::invalid_argument("image array is not a bijection");
    }
    seen[img] = true;
  }
}

Permutation Permutation::identity(CarrierPtr carrier) {
  std::vector<std::size_t> images(carrier->size());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = i;
  return Permutation(std::move(carrier), std::move(images));
}

Permutation Permutation::with_word(std::string word) const {
  Permutation copy = *this;
  copy.word_ = std::move(word);
  return copy;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Permutation(carrier_, std::move(inv));
}

int Permutation::order() const {
  Permutation power = *this;
  int k = 1;
  while (!power.is_identity()) {
    power = *this * power;
    ++k;
  }
  return k;
}

bool Permutation::commutes_with(const Permutation& other) const {
  // f(g(i)) == g(f(i)) pointwise, without materializing the compositions.
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[other.images_[i]] != other.images_[images_[i]]) return false;
  }
  return true;
}

std::string Permutation::cycle_string() const {
  if (is_identity()) return "id";
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    os << '(';
    std::size_t i = start;
    bool first = true;
    while (!seen[i]) {
      seen[i] = true;
      if (!first) os << ' ';
      first = false;
      os << carrier_->label(i);
      i = images_[i];
    }
    os << ')';
  }
  return os.str();
}

Permutation operator*(const Permutation& f, const Permutation& g) {
  if (!same_carrier(f.carrier_, g.carrier_)) {
    throw std::invalid_argument("composing permutations of different carriers");
  }
  std::vector<std::size_t> images(f.images_.size());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = f.images_[g.images_[i]];
  return Permutation(f.carrier_, std::move(images));
}

}  // namespace hexdual
