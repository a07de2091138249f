#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace majc {

/// Cardinality of a countable set: a natural number or aleph-null.
class Card {
 public:
  constexpr Card() = default;

  static constexpr Card finite(std::uint64_t n) { return Card(false, n); }
  static constexpr Card aleph0() { return Card(true, 0); }

  constexpr bool is_finite() const { return !infinite_; }
  constexpr bool is_aleph0() const { return infinite_; }

  // Only meaningful for finite cardinals.
  constexpr std::uint64_t value() const { return n_; }

  constexpr bool operator==(const Card&) const = default;

  constexpr std::strong_ordering operator<=>(const Card& o) const {
    if (infinite_ != o.infinite_)
      return infinite_ ? std::strong_ordering::greater
                       : std::strong_ordering::less;
    return n_ <=> o.n_;
  }

  constexpr Card operator+(const Card& o) const {
    if (infinite_ || o.infinite_) return aleph0();
    return finite(n_ + o.n_);
  }

  std::string to_string() const {
    return infinite_ ? std::string("aleph0") : std::to_string(n_);
  }

 private:
  constexpr Card(bool inf, std::uint64_t n) : infinite_(inf), n_(n) {}

  bool infinite_ = false;
  std::uint64_t n_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Card& c) {
  return os << c.to_string();
}

}  // namespace majc
