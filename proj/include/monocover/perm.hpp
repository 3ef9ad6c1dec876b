#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace monocover {

using Point = std::uint32_t;

/// Thrown when two permutations (or a permutation and a group) act on
/// different point sets.
class DegreeMismatch : public std::invalid_argument
{
public:
  DegreeMismatch(std::size_t lhs, std::size_t rhs)
    : std::invalid_argument("degree mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs))
  {}
};

/**
 * A permutation of {0, ..., degree-1}, stored as its image list.
 *
 * Products are read left to right: (p * q)(x) = q(p(x)). This matches
 * the right action of words on flags, where the first letter acts first.
 */
class Perm
{
public:
  Perm() = default;

  explicit Perm(std::size_t degree) : images_(degree)
  {
    std::iota(images_.begin(), images_.end(), Point{0});
  }

  /// Throws std::invalid_argument if `images` is not a bijection.
  explicit Perm(std::vector<Point> images) : images_(std::move(images))
  {
    std::vector<char> seen(images_.size(), 0);
    for (Point y : images_) {
      if (y >= images_.size() || seen[y])
        throw std::invalid_argument("image list is not a permutation");
      seen[y] = 1;
    }
  }

  static Perm identity(std::size_t degree) { return Perm(degree); }

  /// Builds a permutation from disjoint cycles, e.g. {{0, 1}, {2, 3, 4}}.
  static Perm from_cycles(std::size_t degree, std::vector<std::vector<Point>> const &cycles)
  {
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), Point{0});
    for (auto const &cyc : cycles) {
      for (std::size_t i = 0; i < cyc.size(); ++i)
        img.at(cyc[i]) = cyc[(i + 1) % cyc.size()];
    }
    return Perm(std::move(img));
  }

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point x) const noexcept { return images_[x]; }
  std::span<Point const> images() const noexcept { return images_; }

  bool is_identity() const noexcept
  {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i)
        return false;
    return true;
  }

  /// Smallest moved point, or degree() for the identity.
  Point first_moved() const noexcept
  {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i)
        return static_cast<Point>(i);
    return static_cast<Point>(images_.size());
  }

  Perm inverse() const
  {
    Perm inv;
    inv.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      inv.images_[images_[i]] = static_cast<Point>(i);
    return inv;
  }

  /// Apply *this first, then q.
  Perm operator*(Perm const &q) const
  {
    if (q.degree() != degree())
      throw DegreeMismatch(degree(), q.degree());
    Perm r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      r.images_[i] = q.images_[images_[i]];
    return r;
  }

  Perm &operator*=(Perm const &q) { return *this = *this * q; }

  Perm pow(long long k) const
  {
    Perm base = k < 0 ? inverse() : *this;
    unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
    Perm acc = identity(degree());
    while (e) {
      if (e & 1u)
        acc *= base;
      base *= base;
      e >>= 1u;
    }
    return acc;
  }

  /// g^{-1} * this * g
  Perm conjugate_by(Perm const &g) const { return g.inverse() * *this * g; }

  std::vector<std::vector<Point>> cycles() const
  {
    std::vector<std::vector<Point>> out;
    std::vector<char> seen(images_.size(), 0);
    for (Point s = 0; s < images_.size(); ++s) {
      if (seen[s] || images_[s] == s)
        continue;
      std::vector<Point> cyc;
      for (Point x = s; !seen[x]; x = images_[x]) {
        seen[x] = 1;
        cyc.push_back(x);
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  std::size_t fixed_point_count() const noexcept
  {
    std::size_t n = 0;
    for (std::size_t i = 0; i < images_.size(); ++i)
      n += images_[i] == i;
    return n;
  }

  friend bool operator==(Perm const &, Perm const &) = default;
  friend auto operator<=>(Perm const &, Perm const &) = default;

private:
  std::vector<Point> images_;
};

/// compose(p, q) applies p first, then q.
inline Perm compose(Perm const &p, Perm const &q) { return p * q; }

inline Perm inverse(Perm const &p) { return p.inverse(); }

/// Least k >= 1 with p^k = id (lcm of the cycle lengths).
inline std::uint64_t element_order(Perm const &p)
{
  std::uint64_t ord = 1;
  std::vector<char> seen(p.degree(), 0);
  for (Point s = 0; s < p.degree(); ++s) {
    if (seen[s])
      continue;
    std::uint64_t len = 0;
    for (Point x = s; !seen[x]; x = p[x]) {
      seen[x] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

inline bool commute(Perm const &p, Perm const &q) { return p * q == q * p; }

inline std::ostream &operator<<(std::ostream &os, Perm const &p)
{
  auto cyc = p.cycles();
  if (cyc.empty())
    return os << "()";
  for (auto const &c : cyc) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i)
      os << (i ? " " : "") << c[i];
    os << ')';
  }
  return os;
}

struct PermHash
{
  std::size_t operator()(Perm const &p) const noexcept
  {
    // FNV-1a over the image list
    std::uint64_t h = 1469598103934665603ull;
    for (Point x : p.images()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

} // namespace monocover
