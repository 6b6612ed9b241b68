// Shared fixtures and independent oracles for the test binaries.
#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bolnet/group.hpp"
#include "bolnet/loop.hpp"

namespace testsupport {

using bolnet::Element;
using bolnet::LoopTable;
using bolnet::Permutation;
using bolnet::Point;

inline Permutation random_permutation(std::size_t n, std::mt19937& rng) {
  std::vector<Point> v(n);
  std::iota(v.begin(), v.end(), Point{0});
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(v);
}

/// Random permutation fixing 0.
inline Permutation random_unit_fixing(std::size_t n, std::mt19937& rng) {
  std::vector<Point> v(n);
  std::iota(v.begin(), v.end(), Point{0});
  std::shuffle(v.begin() + 1, v.end(), rng);
  return Permutation(v);
}

/// Closure by repeated products until nothing new appears; no BFS tricks.
inline std::set<Permutation> naive_closure(std::size_t degree, const std::vector<Permutation>& gens) {
  std::set<Permutation> s{Permutation::identity(degree)};
  s.insert(gens.begin(), gens.end());
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Permutation> cur(s.begin(), s.end());
    for (const auto& a : cur)
      for (const auto& b : cur)
        if (s.insert(a * b).second) grew = true;
  }
  return s;
}

inline LoopTable table_of(std::size_t n, auto mul) {
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) rows[x][y] = static_cast<int>(mul(x, y));
  return LoopTable::from_rows(rows);
}

/// Cayley tables of every group of order at most 8, with names.
struct NamedTable {
  std::string name;
  LoopTable table;
};

inline std::vector<NamedTable> small_groups() {
  std::vector<NamedTable> out;
  for (std::size_t n = 1; n <= 8; ++n)
    out.push_back({"C" + std::to_string(n), table_of(n, [n](std::size_t x, std::size_t y) { return (x + y) % n; })});
  out.push_back({"C2xC2", table_of(4, [](std::size_t x, std::size_t y) { return x ^ y; })});
  out.push_back({"C2^3", table_of(8, [](std::size_t x, std::size_t y) { return x ^ y; })});
  out.push_back({"C2xC4", table_of(8, [](std::size_t x, std::size_t y) {
                   return ((x / 4 + y / 4) % 2) * 4 + (x % 4 + y % 4) % 4;
                 })});
  // Dihedral groups: r^i s^j encoded i + k*j, with s r = r^-1 s.
  auto dihedral = [](std::size_t k) {
    return table_of(2 * k, [k](std::size_t x, std::size_t y) {
      std::size_t i = x % k, j = x / k, a = y % k, b = y / k;
      std::size_t ri = j ? (i + k - a) % k : (i + a) % k;
      return ri + k * ((j + b) % 2);
    });
  };
  out.push_back({"S3", dihedral(3)});
  out.push_back({"D8", dihedral(4)});
  // Q8 as {+-1, +-i, +-j, +-k}: index = sign*4 + unit, unit in {1,i,j,k}.
  out.push_back({"Q8", table_of(8, [](std::size_t x, std::size_t y) {
                   static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
                   static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
                   std::size_t ux = x % 4, uy = y % 4;
                   std::size_t s = (x / 4 + y / 4 + sign[ux][uy]) % 2;
                   return s * 4 + unit[ux][uy];
                 })});
  return out;
}

/// Random normalized Latin square of order n by randomized backtracking.
inline LoopTable random_loop(std::size_t n, std::mt19937& rng) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n, -1));
  for (std::size_t i = 0; i < n; ++i) t[0][i] = t[i][0] = static_cast<int>(i);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto fill = [&](auto&& self, std::size_t cell) -> bool {
    if (cell == (n - 1) * (n - 1)) return true;
    std::size_t x = 1 + cell / (n - 1), y = 1 + cell % (n - 1);
    std::vector<int> vals = order;
    std::shuffle(vals.begin(), vals.end(), rng);
    for (int v : vals) {
      bool ok = true;
      for (std::size_t k = 0; k < n && ok; ++k) ok = t[x][k] != v && t[k][y] != v;
      if (!ok) continue;
      t[x][y] = v;
      if (self(self, cell + 1)) return true;
      t[x][y] = -1;
    }
    return false;
  };
  fill(fill, 0);
  return LoopTable::from_rows(t);
}

/// The twenty random order-6 loops used by the property suites.
inline std::vector<LoopTable> random_order6_loops() {
  std::mt19937 rng(20240601);
  std::vector<LoopTable> out;
  for (int i = 0; i < 20; ++i) out.push_back(random_loop(6, rng));
  return out;
}

/// Every reduced Latin square of order n (first row and column in order).
inline std::vector<LoopTable> all_reduced_latin_squares(std::size_t n) {
  std::vector<LoopTable> out;
  std::vector<std::vector<int>> t(n, std::vector<int>(n, -1));
  for (std::size_t i = 0; i < n; ++i) t[0][i] = t[i][0] = static_cast<int>(i);
  auto fill = [&](auto&& self, std::size_t cell) -> void {
    if (n == 1 || cell == (n - 1) * (n - 1)) {
      out.push_back(LoopTable::from_rows(t));
      return;
    }
    std::size_t x = 1 + cell / (n - 1), y = 1 + cell % (n - 1);
    for (int v = 0; v < static_cast<int>(n); ++v) {
      bool ok = true;
      for (std::size_t k = 0; k < n && ok; ++k) ok = t[x][k] != v && t[k][y] != v;
      if (!ok) continue;
      t[x][y] = v;
      self(self, cell + 1);
      t[x][y] = -1;
    }
  };
  fill(fill, 0);
  return out;
}

/// Left Bol identity checked literally over all triples.
inline bool naive_left_bol(const LoopTable& l) {
  const std::size_t n = l.order();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (l.mul(x, l.mul(y, l.mul(x, z))) != l.mul(l.mul(x, l.mul(y, x)), z)) return false;
  return true;
}

inline bool naive_associative(const LoopTable& l) {
  const std::size_t n = l.order();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (l.mul(l.mul(x, y), z) != l.mul(x, l.mul(y, z))) return false;
  return true;
}

/// Every permutation fixing 0, in lexicographic order.
inline std::vector<Permutation> unit_fixing_permutations(std::size_t n) {
  std::vector<Permutation> out;
  std::vector<Point> v(n);
  std::iota(v.begin(), v.end(), Point{0});
  do out.emplace_back(v);
  while (std::next_permutation(v.begin() + 1, v.end()));
  return out;
}

}  // namespace testsupport
