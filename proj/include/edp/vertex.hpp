#pragma once

#include <charconv>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace edp {

/// The two vertex classes of K_{n,n}.
enum class Side : std::uint8_t { A = 0, B = 1 };

constexpr Side opposite(Side s) noexcept { return s == Side::A ? Side::B : Side::A; }

constexpr char side_char(Side s) noexcept { return s == Side::A ? 'a' : 'b'; }

/// A vertex of K_{n,n}: a_i or b_i with 1-based index i.
struct VertexId {
  Side side = Side::A;
  int index = 1;

  friend constexpr bool operator==(const VertexId&, const VertexId&) = default;
  friend constexpr auto operator<=>(const VertexId&, const VertexId&) = default;

  std::string to_string() const { return std::string(1, side_char(side)) + std::to_string(index); }

  /// Parses "a3" / "b12". Returns nullopt on malformed text (range is not checked).
  static std::optional<VertexId> parse(std::string_view text) {
    if (text.size() < 2) return std::nullopt;
    Side side;
    if (text[0] == 'a') {
      side = Side::A;
    } else if (text[0] == 'b') {
      side = Side::B;
    } else {
      return std::nullopt;
    }
    int idx = 0;
    auto digits = text.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), idx);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || idx < 1) return std::nullopt;
    return VertexId{side, idx};
  }
};

inline std::ostream& operator<<(std::ostream& os, const VertexId& v) { return os << v.to_string(); }

constexpr VertexId a(int i) noexcept { return {Side::A, i}; }
constexpr VertexId b(int i) noexcept { return {Side::B, i}; }

// Dense numbering used by all graph containers: a_i -> i-1, b_i -> n+i-1.
constexpr int to_slot(VertexId v, int n) noexcept {
  return (v.side == Side::A ? 0 : n) + v.index - 1;
}

constexpr VertexId from_slot(int slot, int n) noexcept {
  return slot < n ? VertexId{Side::A, slot + 1} : VertexId{Side::B, slot - n + 1};
}

constexpr Side slot_side(int slot, int n) noexcept { return slot < n ? Side::A : Side::B; }

constexpr bool in_range(VertexId v, int n) noexcept { return v.index >= 1 && v.index <= n; }

}  // namespace edp

template <>
struct std::hash<edp::VertexId> {
  std::size_t operator()(const edp::VertexId& v) const noexcept {
    return std::hash<int>{}(v.index * 2 + static_cast<int>(v.side));
  }
};
