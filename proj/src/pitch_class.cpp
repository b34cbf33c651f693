#include "hexdual/pitch_class.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hexdual {

std::vector<PitchClass> PcSet::members() const {
  std::vector<PitchClass> out;
  for (int pc = 0; pc < kSemitones; ++pc) {
    if ((bits_ >> pc) & 1u) out.emplace_back(pc);
  }
  return out;
}

std::string PcSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (PitchClass pc : members()) {
    if (!first) os << ',';
    first = false;
    os << pc.value();
  }
  os << '}';
  return os.str();
}

bool tuple_less(PcSet a, PcSet b) {
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

std::string TiOp::name() const {
  return (kind_ == TiKind::Transposition ? "T" : "I") + std::to_string(index_);
}

std::optional<TiOp> TiOp::parse(std::string_view text) {
  if (text.size() < 2 || (text[0] != 'T' && text[0] != 'I')) return std::nullopt;
  int n = 0;
  for (char c : text.substr(1)) {
    if (c < '0' || c > '9') return std::nullopt;
    n = n * 10 + (c - '0');
  }
  if (n > 11) return std::nullopt;
  return text[0] == 'T' ? TiOp::transposition(n) : TiOp::inversion(n);
}

PcSet apply(TiOp op, PcSet s) {
  PcSet out;
  for (PitchClass pc : s.members()) out = out.with(op(pc));
  return out;
}

TiOp compose(TiOp after, TiOp first) {
  // Compose as functions on Z12 and recognize the result from two sample
  // points: slope +1 means a rotation, slope -1 a reflection, and the image
  // of 0 is the index either way.
  const int y0 = after(first(PitchClass(0))).value();
  const int y1 = after(first(PitchClass(1))).value();
  const int slope = mod12(y1 - y0);
  if (slope == 1) return TiOp::transposition(y0);
  if (slope == 11) return TiOp::inversion(y0);
  throw std::logic_error("compose(TiOp): image is not a 12-gon symmetry");
}

TiOp inverse(TiOp op) {
  // Sample the inverse function at 0 and 1 and recognize it.
  int x0 = -1, x1 = -1;
  for (int x = 0; x < kSemitones; ++x) {
    const int y = op(PitchClass(x)).value();
    if (y == 0) x0 = x;
    if (y == 1) x1 = x;
  }
  const int slope = mod12(x1 - x0);
  if (slope == 1) return TiOp::transposition(x0);
  if (slope == 11) return TiOp::inversion(x0);
  throw std::logic_error("inverse(TiOp): unreachable");
}

const std::vector<TiOp>& all_ti_ops() {
  static const std::vector<TiOp> ops = [] {
    std::vector<TiOp> v;
    for (int n = 0; n < kSemitones; ++n) v.push_back(TiOp::transposition(n));
    for (int n = 0; n < kSemitones; ++n) v.push_back(TiOp::inversion(n));
    return v;
  }();
  return ops;
}

}  // namespace hexdual
