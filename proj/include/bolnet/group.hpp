#ifndef BOLNET_GROUP_HPP
#define BOLNET_GROUP_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "error.hpp"
#include "permutation.hpp"

namespace bolnet {

/// A permutation group with every element materialized.
///
/// Elements are kept sorted lexicographically by image sequence, so element
/// indices and any report built from them are stable across runs. The
/// generator list is whatever the group was built from.
class GeneratedGroup {
 public:
  /// Trivial group on `degree` points.
  explicit GeneratedGroup(std::size_t degree = 0)
      : degree_(degree), elements_{Permutation::identity(degree)} {}

  /// Closure of `gens` under composition. An empty list gives the trivial group.
  static GeneratedGroup generate(std::size_t degree, std::span<const Permutation> gens) {
    for (const auto& g : gens)
      if (g.degree() != degree)
        throw Error(ErrorCode::DegreeMismatch, "generator degree differs from group degree");
    GeneratedGroup out(degree);
    out.generators_.assign(gens.begin(), gens.end());
    out.elements_ = closure(degree, gens);
    return out;
  }

  static GeneratedGroup generate(std::span<const Permutation> gens) {
    if (gens.empty())
      throw Error(ErrorCode::DegreeMismatch, "cannot infer degree from an empty generator list");
    return generate(gens.front().degree(), gens);
  }

  static GeneratedGroup generate(std::size_t degree, std::initializer_list<Permutation> gens) {
    return generate(degree, std::span<const Permutation>(gens.begin(), gens.size()));
  }

  /// Wraps an element set already known to be a group; picks a small
  /// generating set greedily. Throws BadEntry if the set is not closed.
  static GeneratedGroup from_elements(std::size_t degree, std::span<const Permutation> elems) {
    std::vector<Permutation> sorted(elems.begin(), elems.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    auto gens = greedy_generators(degree, sorted);
    GeneratedGroup out = generate(degree, gens);
    if (out.elements_ != sorted && !(sorted.empty() && out.order() == 1))
      throw Error(ErrorCode::BadEntry, "element set is not closed under composition");
    return out;
  }

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  std::span<const Permutation> elements() const noexcept { return elements_; }
  std::span<const Permutation> generators() const noexcept { return generators_; }
  const Permutation& element(std::size_t i) const { return elements_[i]; }
  Permutation identity() const { return Permutation::identity(degree_); }

  bool contains(const Permutation& p) const {
    return p.degree() == degree_ && std::binary_search(elements_.begin(), elements_.end(), p);
  }

  std::optional<std::size_t> index_of(const Permutation& p) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    if (it == elements_.end() || *it != p) return std::nullopt;
    return static_cast<std::size_t>(it - elements_.begin());
  }

  bool is_trivial() const noexcept { return elements_.size() == 1; }

  bool is_abelian() const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
      for (std::size_t j = i + 1; j < generators_.size(); ++j)
        if (generators_[i] * generators_[j] != generators_[j] * generators_[i]) return false;
    return true;
  }

  bool is_subgroup_of(const GeneratedGroup& other) const {
    if (other.degree_ != degree_) return false;
    return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                         elements_.end());
  }

  friend bool operator==(const GeneratedGroup& a, const GeneratedGroup& b) {
    return a.degree_ == b.degree_ && a.elements_ == b.elements_;
  }

  /// Greedy generating set: scan elements by descending order (ties by
  /// lexicographic position) and keep each one not yet generated.
  static std::vector<Permutation> greedy_generators(std::size_t degree,
                                                    std::span<const Permutation> elems) {
    std::vector<const Permutation*> pool;
    for (const auto& e : elems) pool.push_back(&e);
    std::stable_sort(pool.begin(), pool.end(), [](const Permutation* a, const Permutation* b) {
      return a->order() > b->order();
    });
    std::vector<Permutation> gens;
    std::unordered_set<Permutation, PermutationHash> have{Permutation::identity(degree)};
    for (const Permutation* p : pool) {
      if (have.count(*p)) continue;
      gens.push_back(*p);
      auto next = closure(degree, gens);
      have = std::unordered_set<Permutation, PermutationHash>(next.begin(), next.end());
      if (have.size() == elems.size()) break;
    }
    return gens;
  }

 private:
  static std::vector<Permutation> closure(std::size_t degree, std::span<const Permutation> gens) {
    std::unordered_set<Permutation, PermutationHash> seen;
    std::vector<Permutation> frontier{Permutation::identity(degree)};
    seen.insert(frontier.front());
    std::vector<Permutation> all = frontier;
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (const auto& x : frontier)
        for (const auto& g : gens) {
          Permutation y = x * g;
          if (seen.insert(y).second) {
            next.push_back(y);
            all.push_back(y);
          }
        }
      frontier = std::move(next);
    }
    std::sort(all.begin(), all.end());
    return all;
  }

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

}  // namespace bolnet

#endif  // BOLNET_GROUP_HPP
