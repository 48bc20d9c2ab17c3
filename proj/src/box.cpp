#include "conjd/box.hpp"

#include <sstream>
#include <stdexcept>

namespace conjd {

Box::Box(std::vector<Interval> sides) : sides_(std::move(sides)) {
  if (sides_.empty()) throw std::invalid_argument("box needs at least one side");
  for (const auto& s : sides_)
    if (s.lo > s.hi) throw std::invalid_argument("box side with lo > hi");
}

Box Box::cube(int k, const Rational& lo, const Rational& hi) {
  if (k < 1) throw std::invalid_argument("box dimension must be positive");
  return Box(std::vector<Interval>(static_cast<std::size_t>(k), Interval{lo, hi}));
}

Box Box::parse(std::string_view text) {
  std::vector<Interval> sides;
  std::stringstream in{std::string(text)};
  std::string side;
  while (std::getline(in, side, ';')) {
    const auto comma = side.find(',');
    if (comma == std::string::npos || side.find(',', comma + 1) != std::string::npos)
      throw std::invalid_argument("box side must be 'lo,hi': '" + side + "'");
    sides.push_back({parse_rational(side.substr(0, comma)), parse_rational(side.substr(comma + 1))});
  }
  if (sides.empty()) throw std::invalid_argument("empty box");
  return Box(std::move(sides));
}

bool Box::contains(std::span<const Rational> point) const {
  if (point.size() != sides_.size()) throw std::invalid_argument("point dimension does not match box");
  for (std::size_t i = 0; i < point.size(); ++i)
    if (!sides_[i].contains(point[i])) return false;
  return true;
}

bool Box::contains(const Box& inner) const {
  if (inner.dimension() != dimension()) return false;
  for (std::size_t i = 0; i < sides_.size(); ++i)
    if (inner.sides_[i].lo < sides_[i].lo || inner.sides_[i].hi > sides_[i].hi) return false;
  return true;
}

Rational Box::volume() const {
  Rational v = 1;
  for (const auto& s : sides_) v *= s.width();
  return v;
}

std::string Box::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < sides_.size(); ++i) {
    if (i) out += ';';
    out += conjd::to_string(sides_[i].lo) + ',' + conjd::to_string(sides_[i].hi);
  }
  return out;
}

}  // namespace conjd
