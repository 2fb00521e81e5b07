#include "kgraph/degree.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "kgraph/error.hpp"

namespace kgraph {

Degree Degree::unit(std::size_t rank, std::size_t color) {
  Degree d = zero(rank);
  d.coords_.at(color) = 1;
  return d;
}

std::uint32_t Degree::total() const noexcept {
  return std::accumulate(coords_.begin(), coords_.end(), std::uint32_t{0});
}

bool Degree::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c == 0; });
}

bool Degree::all_positive() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c > 0; });
}

Degree& Degree::operator+=(const Degree& other) {
  if (other.rank() != rank()) throw Error(ErrorCode::RankMismatch, "degree rank mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Degree operator-(const Degree& a, const Degree& b) {
  if (!leq(b, a)) {
    throw Error(ErrorCode::DegreeTooLarge, b.to_string() + " is not <= " + a.to_string());
  }
  Degree out = a;
  for (std::size_t i = 0; i < a.rank(); ++i) out.coords_[i] -= b.coords_[i];
  return out;
}

Degree operator*(std::uint32_t s, Degree d) {
  for (auto& c : d.coords_) c *= s;
  return d;
}

std::string Degree::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coords_[i]);
  }
  return out + ")";
}

bool leq(const Degree& a, const Degree& b) {
  if (a.rank() != b.rank()) throw Error(ErrorCode::RankMismatch, "degree rank mismatch");
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Degree join(const Degree& a, const Degree& b) {
  if (a.rank() != b.rank()) throw Error(ErrorCode::RankMismatch, "degree rank mismatch");
  Degree out = a;
  for (std::size_t i = 0; i < a.rank(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Degree meet(const Degree& a, const Degree& b) {
  if (a.rank() != b.rank()) throw Error(ErrorCode::RankMismatch, "degree rank mismatch");
  Degree out = a;
  for (std::size_t i = 0; i < a.rank(); ++i) out[i] = std::min(a[i], b[i]);
  return out;
}

Degree monus(const Degree& a, const Degree& b) {
  if (a.rank() != b.rank()) throw Error(ErrorCode::RankMismatch, "degree rank mismatch");
  Degree out = a;
  for (std::size_t i = 0; i < a.rank(); ++i) out[i] = a[i] > b[i] ? a[i] - b[i] : 0;
  return out;
}

bool graded_less(const Degree& a, const Degree& b) {
  const auto ta = a.total();
  const auto tb = b.total();
  if (ta != tb) return ta < tb;
  return a < b;
}

std::vector<Degree> degrees_up_to(const Degree& bound) {
  std::vector<Degree> out;
  Degree cur = Degree::zero(bound.rank());
  while (true) {
    out.push_back(cur);
    std::size_t i = 0;
    while (i < bound.rank() && cur[i] == bound[i]) {
      cur[i] = 0;
      ++i;
    }
    if (i == bound.rank()) break;
    ++cur[i];
  }
  std::sort(out.begin(), out.end(), graded_less);
  return out;
}

Degree parse_degree(std::string_view text) {
  if (!text.empty() && text.front() == '(') text.remove_prefix(1);
  if (!text.empty() && text.back() == ')') text.remove_suffix(1);
  std::vector<std::uint32_t> coords;
  while (true) {
    auto comma = text.find(',');
    auto piece = text.substr(0, comma);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size()) {
      throw Error(ErrorCode::InvalidSpec, "malformed degree '" + std::string(piece) + "'");
    }
    coords.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Degree(std::move(coords));
}

}  // namespace kgraph
