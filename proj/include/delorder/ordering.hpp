#pragma once

namespace delorder {

/// Three-way comparison result shared by all word and element orders.
enum class Ordering { Less, Equal, Greater };

constexpr Ordering reversed(Ordering o) {
  switch (o) {
    case Ordering::Less:
      return Ordering::Greater;
    case Ordering::Greater:
      return Ordering::Less;
    default:
      return Ordering::Equal;
  }
}

constexpr const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::Less:
      return "less";
    case Ordering::Greater:
      return "greater";
    default:
      return "equal";
  }
}

}  // namespace delorder
