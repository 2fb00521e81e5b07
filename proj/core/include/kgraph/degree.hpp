#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace kgraph {

/// An element of N^k: the number of edges of each color in a path.
///
/// Ordering via operator<=> is lexicographic and exists only so degrees can
/// key ordered containers. The componentwise partial order is `leq`.
class Degree {
 public:
  Degree() = default;
  Degree(std::initializer_list<std::uint32_t> coords) : coords_(coords) {}
  explicit Degree(std::vector<std::uint32_t> coords) : coords_(std::move(coords)) {}

  static Degree zero(std::size_t rank) { return Degree(std::vector<std::uint32_t>(rank, 0)); }
  static Degree filled(std::size_t rank, std::uint32_t value) {
    return Degree(std::vector<std::uint32_t>(rank, value));
  }
  /// e_i, with `color` zero-based.
  static Degree unit(std::size_t rank, std::size_t color);

  std::size_t rank() const noexcept { return coords_.size(); }
  std::uint32_t operator[](std::size_t i) const { return coords_[i]; }
  std::uint32_t& operator[](std::size_t i) { return coords_[i]; }
  std::span<const std::uint32_t> coords() const noexcept { return coords_; }

  std::uint32_t total() const noexcept;
  bool is_zero() const noexcept;
  /// True when every coordinate is at least one.
  bool all_positive() const noexcept;

  Degree& operator+=(const Degree& other);
  friend Degree operator+(Degree a, const Degree& b) { return a += b; }
  /// Subtraction; throws DegreeTooLarge unless b ≤ a componentwise.
  friend Degree operator-(const Degree& a, const Degree& b);
  friend Degree operator*(std::uint32_t s, Degree d);

  friend bool operator==(const Degree&, const Degree&) = default;
  friend auto operator<=>(const Degree&, const Degree&) = default;

  std::string to_string() const;

 private:
  std::vector<std::uint32_t> coords_;
};

/// Componentwise a ≤ b.
bool leq(const Degree& a, const Degree& b);
/// Coordinatewise maximum m ∨ n.
Degree join(const Degree& a, const Degree& b);
/// Coordinatewise minimum.
Degree meet(const Degree& a, const Degree& b);
/// max(a - b, 0) per coordinate.
Degree monus(const Degree& a, const Degree& b);

/// Total order used for deterministic enumeration: by total(), then lexicographic.
bool graded_less(const Degree& a, const Degree& b);

/// Every n with 0 ≤ n ≤ bound, in graded order.
std::vector<Degree> degrees_up_to(const Degree& bound);

/// Parses "1,2,3" (or "(1,2,3)").
Degree parse_degree(std::string_view text);

}  // namespace kgraph
