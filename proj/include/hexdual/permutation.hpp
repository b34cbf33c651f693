#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hexdual {

/// An ordered finite set of distinct labelled points. Permutations are index
/// maps over a carrier; the ordering is fixed at construction.
class Carrier {
public:
  /// Throws std::invalid_argument on an empty list or duplicate labels.
  explicit Carrier(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> find(std::string_view label) const;

  friend bool operator==(const Carrier& a, const Carrier& b) { return a.labels_ == b.labels_; }

private:
  std::vector<std::string> labels_;
};

using CarrierPtr = std::shared_ptr<const Carrier>;

CarrierPtr make_carrier(std::vector<std::string> labels);

/// Two carrier handles describe the same carrier (same pointer or equal content).
bool same_carrier(const CarrierPtr& a, const CarrierPtr& b);

/// A bijection of a carrier, stored as a dense image array; point i maps to
/// images()[i]. Optionally labelled with a word in some generator alphabet.
/// The word never takes part in comparisons.
class Permutation {
public:
  /// Throws std::invalid_argument unless images is a bijection of {0..size-1}.
  Permutation(CarrierPtr carrier, std::vector<std::size_t> images, std::string word = "");

  static Permutation identity(CarrierPtr carrier);

  template <typename F>
  static Permutation from_function(CarrierPtr carrier, F&& f, std::string word = "") {
    std::vector<std::size_t> images(carrier->size());
    for (std::size_t i = 0; i < images.size(); ++i) images[i] = f(i);
    return Permutation(std::move(carrier), std::move(images), std::move(word));
  }

  std::size_t size() const { return images_.size(); }
  const CarrierPtr& carrier() const { return carrier_; }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const { return images_; }

  const std::string& word() const { return word_; }
  Permutation with_word(std::string word) const;

  bool is_identity() const;
  Permutation inverse() const;
  int order() const;
  bool commutes_with(const Permutation& other) const;

  /// Disjoint-cycle notation over the carrier labels, e.g. "(Eb eb)(B b)";
  /// the identity prints as "id".
  std::string cycle_string() const;

  /// Composition f * g applies g first: (f*g)(x) = f(g(x)).
  friend Permutation operator*(const Permutation& f, const Permutation& g);

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.images_ < b.images_;
  }

private:
  CarrierPtr carrier_;
  std::vector<std::size_t> images_;
  std::string word_;
};

}  // namespace hexdual
