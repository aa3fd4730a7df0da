#pragma once

// Weights of sl3 in the fundamental-weight basis: (m, n) stands for mx + ny.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace a2kl {

struct Weight {
  std::int64_t m = 0;
  std::int64_t n = 0;

  /// i*alpha + j*beta with alpha = 2x - y and beta = -x + 2y.
  static constexpr Weight from_roots(std::int64_t i, std::int64_t j) {
    return {2 * i - j, -i + 2 * j};
  }

  constexpr bool is_dominant() const { return m >= 0 && n >= 0; }
  constexpr bool in_root_lattice() const { return (2 * m + n) % 3 == 0; }
  /// Coordinates in the simple-root basis, when integral.
  std::optional<std::pair<std::int64_t, std::int64_t>> root_coords() const;
  /// Image under -w0; swaps the two fundamental weights.
  constexpr Weight dual() const { return {n, m}; }

  std::string str() const;
  /// Parses "m,n".
  static Weight parse(std::string_view text);

  friend constexpr Weight operator+(Weight a, Weight b) { return {a.m + b.m, a.n + b.n}; }
  friend constexpr Weight operator-(Weight a, Weight b) { return {a.m - b.m, a.n - b.n}; }
  friend constexpr Weight operator-(Weight a) { return {-a.m, -a.n}; }
  friend constexpr Weight operator*(std::int64_t k, Weight a) { return {k * a.m, k * a.n}; }
  friend constexpr auto operator<=>(const Weight&, const Weight&) = default;
};

inline constexpr Weight kWeightX{1, 0};
inline constexpr Weight kWeightY{0, 1};
inline constexpr Weight kAlpha{2, -1};
inline constexpr Weight kBeta{-1, 2};
inline constexpr Weight kRho{1, 1};

}  // namespace a2kl
