#ifndef BOLNET_PERMUTATION_HPP
#define BOLNET_PERMUTATION_HPP

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace bolnet {

using Point = std::uint16_t;

/// A bijection on {0, ..., degree-1}.
///
/// Permutations act on the right: `x^(a*b) = (x^a)^b`, so `a * b` applies
/// `a` first. Every module in the library composes with this convention.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (Point p : images_) {
      if (p >= images_.size() || seen[p])
        throw Error(ErrorCode::BadEntry, "image list is not a permutation");
      seen[p] = true;
    }
  }

  Permutation(std::initializer_list<Point> images)
      : Permutation(std::vector<Point>(images)) {}

  static Permutation identity(std::size_t degree) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    return Permutation(std::move(images), trusted{});
  }

  /// Builds from disjoint cycles, e.g. `from_cycles(8, {{1, 3}, {4, 6}})`.
  static Permutation from_cycles(std::size_t degree,
                                 std::initializer_list<std::vector<Point>> cycles) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    for (const auto& cycle : cycles) {
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (cycle[i] >= degree)
          throw Error(ErrorCode::BadEntry, "cycle point out of range");
        images[cycle[i]] = cycle[(i + 1) % cycle.size()];
      }
    }
    return Permutation(std::move(images));
  }

  /// Builds from a callable `f(x)` evaluated on every point; validated.
  template <typename F>
    requires std::invocable<F, Point>
  static Permutation from_function(std::size_t degree, F&& f) {
    std::vector<Point> images(degree);
    for (std::size_t x = 0; x < degree; ++x)
      images[x] = static_cast<Point>(f(static_cast<Point>(x)));
    return Permutation(std::move(images));
  }

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  Point operator[](std::size_t x) const { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  Permutation operator*(const Permutation& rhs) const {
    if (rhs.degree() != degree())
      throw Error(ErrorCode::DegreeMismatch, "composing permutations of different degree");
    std::vector<Point> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out[i] = rhs.images_[images_[i]];
    return Permutation(std::move(out), trusted{});
  }

  Permutation inverse() const {
    std::vector<Point> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out[images_[i]] = static_cast<Point>(i);
    return Permutation(std::move(out), trusted{});
  }

  Permutation pow(long long k) const {
    Permutation base = k < 0 ? inverse() : *this;
    unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k)
                                 : static_cast<unsigned long long>(k);
    Permutation result = identity(degree());
    while (e) {
      if (e & 1u) result = result * base;
      base = base * base;
      e >>= 1u;
    }
    return result;
  }

  /// Order as the lcm of cycle lengths.
  std::size_t order() const {
    std::size_t result = 1;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t s = 0; s < images_.size(); ++s) {
      if (seen[s]) continue;
      std::size_t len = 0;
      for (std::size_t i = s; !seen[i]; i = images_[i]) {
        seen[i] = true;
        ++len;
      }
      result = std::lcm(result, len);
    }
    return result;
  }

  /// Cycle notation with nontrivial cycles only, "()" for the identity.
  std::string cycle_string() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t s = 0; s < images_.size(); ++s) {
      if (seen[s] || images_[s] == s) continue;
      out += '(';
      for (std::size_t i = s; !seen[i]; i = images_[i]) {
        seen[i] = true;
        if (i != s) out += ' ';
        out += std::to_string(i);
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  std::vector<Point> fixed_points() const {
    std::vector<Point> out;
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] == i) out.push_back(static_cast<Point>(i));
    return out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct trusted {};
  Permutation(std::vector<Point> images, trusted) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

/// `a^-1 b^-1 a b`
inline Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

/// `by^-1 a by`
inline Permutation conjugate(const Permutation& a, const Permutation& by) {
  return by.inverse() * a * by;
}

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Point x : p.images()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace bolnet

#endif  // BOLNET_PERMUTATION_HPP
