#ifndef BOLNET_SEARCH_HPP
#define BOLNET_SEARCH_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <thread>
#include <vector>

#include "error.hpp"
#include "loop.hpp"

namespace bolnet {

inline constexpr std::size_t kMaxSearchOrder = 8;

namespace detail {

/// Row-major completion of a normalized Latin square. Row 0 and column 0 are
/// fixed to the identity; every placement is followed by a check of each
/// fully determined instance of x(y(xz)) = (x(yx))z.
class BolCompleter {
 public:
  explicit BolCompleter(std::size_t n) : n_(n), t_(n * n, kUnset), row_(n, 0), col_(n, 0) {
    for (std::size_t i = 0; i < n; ++i) {
      place(0, i, static_cast<int>(i));
      if (i) place(i, 0, static_cast<int>(i));
    }
  }

  std::size_t free_cells() const { return (n_ - 1) * (n_ - 1); }

  /// Values allowed at free cell `cell` given the current partial table.
  std::vector<int> candidates(std::size_t cell) const {
    auto [x, y] = coords(cell);
    std::vector<int> out;
    for (std::size_t v = 0; v < n_; ++v)
      if (!((row_[x] | col_[y]) >> v & 1u)) out.push_back(static_cast<int>(v));
    return out;
  }

  /// Depth-first completion from `cell` on; `emit` gets each full table.
  void run(std::size_t cell, const std::function<void(const std::vector<int>&)>& emit) {
    if (cell == free_cells()) {
      emit(t_);
      return;
    }
    auto [x, y] = coords(cell);
    for (int v : candidates(cell)) {
      place(x, y, v);
      if (consistent()) run(cell + 1, emit);
      unplace(x, y, v);
    }
  }

  /// Places value v at free cell `cell`; false if the Bol check rejects it.
  bool try_place(std::size_t cell, int v) {
    auto [x, y] = coords(cell);
    place(x, y, v);
    return consistent();
  }

 private:
  static constexpr int kUnset = -1;

  std::pair<std::size_t, std::size_t> coords(std::size_t cell) const {
    return {1 + cell / (n_ - 1), 1 + cell % (n_ - 1)};
  }

  int at(std::size_t x, std::size_t y) const { return t_[x * n_ + y]; }

  void place(std::size_t x, std::size_t y, int v) {
    t_[x * n_ + y] = v;
    row_[x] |= 1u << v;
    col_[y] |= 1u << v;
  }

  void unplace(std::size_t x, std::size_t y, int v) {
    t_[x * n_ + y] = kUnset;
    row_[x] &= ~(1u << v);
    col_[y] &= ~(1u << v);
  }

  bool consistent() const {
    for (std::size_t x = 1; x < n_; ++x)
      for (std::size_t y = 1; y < n_; ++y) {
        int yx = at(y, x);
        if (yx < 0) continue;
        int x_yx = at(x, static_cast<std::size_t>(yx));
        if (x_yx < 0) continue;
        for (std::size_t z = 1; z < n_; ++z) {
          int xz = at(x, z);
          if (xz < 0) continue;
          int y_xz = at(y, static_cast<std::size_t>(xz));
          if (y_xz < 0) continue;
          int lhs = at(x, static_cast<std::size_t>(y_xz));
          int rhs = at(static_cast<std::size_t>(x_yx), z);
          if (lhs >= 0 && rhs >= 0 && lhs != rhs) return false;
        }
      }
    return true;
  }

  std::size_t n_;
  std::vector<int> t_;
  std::vector<std::uint32_t> row_, col_;
};

inline LoopTable table_from_flat(std::size_t n, const std::vector<int>& flat) {
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n * n; ++i) rows[i / n][i % n] = flat[i];
  return LoopTable::from_rows(rows);
}

}  // namespace detail

/// Streams every left Bol loop of order n with unit 0, each normalized table
/// exactly once, in lexicographic (row-major) order. With jobs > 1 the
/// subtrees under the first free cell run concurrently and are emitted in
/// the same order as a single-worker run.
inline void enumerate_bol(std::size_t n, bool nonassociative_only, unsigned jobs,
                          const std::function<void(const LoopTable&)>& sink) {
  if (n == 0) throw Error(ErrorCode::BadOrder, "order must be at least 1");
  if (n > kMaxSearchOrder)
    throw Error(ErrorCode::OrderTooLarge,
                "Bol search supports orders up to " + std::to_string(kMaxSearchOrder));
  auto accept = [&](const LoopTable& l) {
    return !nonassociative_only || !check_property(l, LoopProperty::Associative).holds;
  };
  if (n == 1) {
    LoopTable one = LoopTable::from_rows({{0}});
    if (accept(one)) sink(one);
    return;
  }
  detail::BolCompleter root(n);
  if (jobs <= 1) {
    root.run(0, [&](const std::vector<int>& flat) {
      LoopTable l = detail::table_from_flat(n, flat);
      if (accept(l)) sink(l);
    });
    return;
  }
  const std::vector<int> first = root.candidates(0);
  std::vector<std::vector<LoopTable>> parts(first.size());
  auto work = [&](std::size_t k) {
    detail::BolCompleter c = root;
    if (!c.try_place(0, first[k])) return;
    c.run(1, [&](const std::vector<int>& flat) {
      LoopTable l = detail::table_from_flat(n, flat);
      if (accept(l)) parts[k].push_back(std::move(l));
    });
  };
  const unsigned workers = std::min<unsigned>(jobs, static_cast<unsigned>(first.size()));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t k = w; k < first.size(); k += workers) work(k);
    });
  for (auto& t : pool) t.join();
  for (const auto& part : parts)
    for (const auto& l : part) sink(l);
}

inline std::vector<LoopTable> enumerate_bol(std::size_t n, bool nonassociative_only,
                                            unsigned jobs = 1) {
  std::vector<LoopTable> out;
  enumerate_bol(n, nonassociative_only, jobs, [&](const LoopTable& l) { out.push_back(l); });
  return out;
}

/// Lexicographically least table over all relabelings fixing the unit.
/// Candidate tables are compared cell by cell and abandoned at the first
/// cell that is already larger than the best so far.
inline LoopTable canonical_form(const LoopTable& l) {
  const std::size_t n = l.order();
  std::vector<Element> q(n);  // new label -> old element
  std::iota(q.begin(), q.end(), Element{0});
  std::vector<Element> p(n);  // old element -> new label
  std::vector<Element> best(l.flat().begin(), l.flat().end());
  do {
    for (std::size_t i = 0; i < n; ++i) p[q[i]] = static_cast<Element>(i);
    bool smaller = false;
    for (std::size_t i = 0; i < n && !smaller; ++i) {
      bool larger = false;
      for (std::size_t j = 0; j < n; ++j) {
        Element v = p[l.mul(q[i], q[j])];
        Element b = best[i * n + j];
        if (v < b) {
          smaller = true;
          break;
        }
        if (v > b) {
          larger = true;
          break;
        }
      }
      if (larger) break;
    }
    if (smaller)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) best[i * n + j] = p[l.mul(q[i], q[j])];
  } while (std::next_permutation(q.begin() + 1, q.end()));
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n * n; ++i) rows[i / n][i % n] = best[i];
  return LoopTable::from_rows(rows);
}

enum class Relation { Isomorphism, Isotopy };

struct ClassificationResult {
  std::size_t order = 0;
  std::size_t total_found = 0;
  std::size_t nonassociative_count = 0;
  /// Canonical forms, sorted, with the number of input tables in each class.
  std::vector<LoopTable> isomorphism_representatives;
  std::vector<std::size_t> isomorphism_class_sizes;
  /// Filled only for Relation::Isotopy. Each isotopy class lists the indices
  /// of its isomorphism classes; the representative is the first of them.
  std::vector<std::vector<std::size_t>> isotopy_classes;

  std::size_t isomorphism_class_count() const { return isomorphism_representatives.size(); }
  std::size_t isotopy_class_count() const { return isotopy_classes.size(); }
};

inline ClassificationResult classify(const std::vector<LoopTable>& tables, Relation relation) {
  ClassificationResult r;
  r.total_found = tables.size();
  if (tables.empty()) return r;
  r.order = tables.front().order();
  std::map<LoopTable, std::size_t> classes;
  for (const auto& t : tables) {
    if (t.order() != r.order)
      throw Error(ErrorCode::MixedOrders, "tables of orders " + std::to_string(r.order) + " and " +
                                              std::to_string(t.order()) + " cannot be classified together");
    if (!check_property(t, LoopProperty::Associative).holds) ++r.nonassociative_count;
    ++classes[canonical_form(t)];
  }
  for (auto& [rep, count] : classes) {
    r.isomorphism_representatives.push_back(rep);
    r.isomorphism_class_sizes.push_back(count);
  }
  if (relation == Relation::Isotopy) {
    const std::size_t k = r.isomorphism_representatives.size();
    std::vector<std::size_t> root(k);
    std::iota(root.begin(), root.end(), 0);
    for (std::size_t i = 0; i < k; ++i) {
      if (root[i] != i) continue;
      for (std::size_t j = i + 1; j < k; ++j)
        if (root[j] == j &&
            is_isotopic(r.isomorphism_representatives[i], r.isomorphism_representatives[j]))
          root[j] = i;
    }
    std::map<std::size_t, std::size_t> slot;
    for (std::size_t i = 0; i < k; ++i) {
      auto [it, fresh] = slot.try_emplace(root[i], r.isotopy_classes.size());
      if (fresh) r.isotopy_classes.emplace_back();
      r.isotopy_classes[it->second].push_back(i);
    }
  }
  return r;
}

}  // namespace bolnet

#endif  // BOLNET_SEARCH_HPP
