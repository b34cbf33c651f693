#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hexdual {

inline constexpr int kSemitones = 12;

/// Reduce an integer into {0..11}.
constexpr int mod12(int x) {
  int m = x % kSemitones;
  return m < 0 ? m + kSemitones : m;
}

/// A pitch class in the Z12 model: C = 0, C#/Db = 1, ..., B = 11.
/// The value is always stored reduced, so arithmetic never leaks out of range.
class PitchClass {
public:
  constexpr PitchClass() = default;
  constexpr explicit PitchClass(int value) : value_(mod12(value)) {}

  constexpr int value() const { return value_; }

  constexpr PitchClass operator+(int semitones) const { return PitchClass(value_ + semitones); }
  constexpr PitchClass operator-(int semitones) const { return PitchClass(value_ - semitones); }

  friend constexpr bool operator==(PitchClass, PitchClass) = default;
  friend constexpr auto operator<=>(PitchClass, PitchClass) = default;

private:
  int value_ = 0;
};

/// Smallest circular distance between two pitch classes (0..6).
constexpr int circle_distance(PitchClass a, PitchClass b) {
  int d = mod12(a.value() - b.value());
  return d > 6 ? kSemitones - d : d;
}

/// An unordered set of pitch classes, stored as a 12-bit mask.
class PcSet {
public:
  constexpr PcSet() = default;

  PcSet(std::initializer_list<int> pcs) {
    for (int pc : pcs) bits_ |= static_cast<std::uint16_t>(1u << mod12(pc));
  }

  static constexpr PcSet from_bits(std::uint16_t bits) {
    PcSet s;
    s.bits_ = static_cast<std::uint16_t>(bits & 0x0fffu);
    return s;
  }

  static constexpr PcSet full() { return from_bits(0x0fffu); }

  constexpr std::uint16_t bits() const { return bits_; }
  constexpr bool contains(PitchClass pc) const { return (bits_ >> pc.value()) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return __builtin_popcount(bits_); }

  constexpr PcSet with(PitchClass pc) const {
    return from_bits(static_cast<std::uint16_t>(bits_ | (1u << pc.value())));
  }
  constexpr PcSet without(PitchClass pc) const {
    return from_bits(static_cast<std::uint16_t>(bits_ & ~(1u << pc.value())));
  }

  constexpr PcSet complement() const { return from_bits(static_cast<std::uint16_t>(~bits_)); }

  constexpr bool subset_of(PcSet other) const { return (bits_ & ~other.bits_) == 0; }

  friend constexpr PcSet operator&(PcSet a, PcSet b) {
    return from_bits(static_cast<std::uint16_t>(a.bits_ & b.bits_));
  }
  friend constexpr PcSet operator|(PcSet a, PcSet b) {
    return from_bits(static_cast<std::uint16_t>(a.bits_ | b.bits_));
  }
  /// Set difference.
  friend constexpr PcSet operator-(PcSet a, PcSet b) {
    return from_bits(static_cast<std::uint16_t>(a.bits_ & ~b.bits_));
  }

  std::vector<PitchClass> members() const;

  /// "{2,3,6,7,10,11}"
  std::string to_string() const;

  friend constexpr bool operator==(PcSet, PcSet) = default;

private:
  std::uint16_t bits_ = 0;
};

/// Lexicographic order on the sorted member tuples, e.g. {0,3,8} < {0,4,7}.
bool tuple_less(PcSet a, PcSet b);

enum class TiKind { Transposition, Inversion };

/// One of the 24 symmetries of the 12-gon: T_n(x) = x + n or I_n(x) = -x + n.
class TiOp {
public:
  static constexpr TiOp transposition(int n) { return TiOp(TiKind::Transposition, n); }
  static constexpr TiOp inversion(int n) { return TiOp(TiKind::Inversion, n); }

  constexpr TiKind kind() const { return kind_; }
  constexpr int index() const { return index_; }
  constexpr bool is_transposition() const { return kind_ == TiKind::Transposition; }

  constexpr PitchClass apply(PitchClass x) const {
    return kind_ == TiKind::Transposition ? PitchClass(x.value() + index_)
                                          : PitchClass(-x.value() + index_);
  }
  constexpr PitchClass operator()(PitchClass x) const { return apply(x); }

  /// "T4", "I9"
  std::string name() const;
  static std::optional<TiOp> parse(std::string_view text);

  friend constexpr bool operator==(TiOp, TiOp) = default;
  friend constexpr auto operator<=>(TiOp, TiOp) = default;

private:
  constexpr TiOp(TiKind kind, int index) : kind_(kind), index_(mod12(index)) {}

  TiKind kind_;
  int index_;
};

constexpr PitchClass transpose(int n, PitchClass x) { return TiOp::transposition(n)(x); }
constexpr PitchClass invert(int n, PitchClass x) { return TiOp::inversion(n)(x); }

/// The unique reflection interchanging m and n: I_{m+n}.
constexpr TiOp reflection_interchanging(PitchClass m, PitchClass n) {
  return TiOp::inversion(m.value() + n.value());
}

/// Elementwise image of a set.
PcSet apply(TiOp op, PcSet s);

/// Function composition a after b, re-recognized as one of the 24 operations.
TiOp compose(TiOp after, TiOp first);

TiOp inverse(TiOp op);

/// T0..T11 followed by I0..I11.
const std::vector<TiOp>& all_ti_ops();

}  // namespace hexdual
