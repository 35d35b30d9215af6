#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mopf/element_set.hpp"
#include "mopf/limits.hpp"
#include "mopf/rational.hpp"

namespace mopf {

/// Finite poset on elements 0..n-1.
///
/// Built only through build_poset(), which computes the order relation and
/// normalizes the covers to the Hasse diagram. Immutable afterwards.
class Poset {
 public:
  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  std::optional<int> index_of(const std::string& label) const;

  /// Hasse diagram edges (a, b) meaning a is covered by b, sorted.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  bool leq(int a, int b) const { return down_[b].contains(a); }
  bool less(int a, int b) const { return a != b && leq(a, b); }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

  /// Principal down-set {y : y <= x} (contains x).
  ElementSet down(int x) const { return down_[x]; }
  /// Principal up-set {y : x <= y} (contains x).
  ElementSet up(int x) const { return up_[x]; }

  ElementSet all() const { return ElementSet::first(size()); }
  ElementSet minimal() const;
  ElementSet maximal() const;

  bool is_ideal(ElementSet s) const;
  /// Elements of `within` whose strict down-set inside `within` is empty.
  ElementSet minimal_in(ElementSet within) const;

  /// Number of ordered pairs (a, b) with a <= b, reflexive pairs included.
  std::size_t comparable_pairs() const;

  /// Fixed topological order (smallest available index first).
  const std::vector<int>& topological_order() const { return topo_; }

 private:
  friend Poset build_poset(const std::vector<std::string>&,
                           const std::vector<std::pair<std::string, std::string>>&);
  friend Poset build_poset_indexed(std::vector<std::string>, const std::vector<std::pair<int, int>>&);

  std::vector<std::string> labels_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<ElementSet> down_;
  std::vector<ElementSet> up_;
  std::vector<int> topo_;
};

/// Builds a poset from labels and cover pairs (a, b) meaning a < b. Redundant
/// pairs implied by transitivity are accepted and dropped from covers().
/// Throws Error{DuplicateLabel, UnknownLabel, Cycle, SizeLimit}.
Poset build_poset(const std::vector<std::string>& labels,
                  const std::vector<std::pair<std::string, std::string>>& covers);

/// Same, with covers given as element indices into `labels`.
Poset build_poset_indexed(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& covers);

/// A poset together with its marked elements and their values.
class MarkedPoset {
 public:
  const Poset& poset() const { return poset_; }
  int size() const { return poset_.size(); }
  ElementSet marked() const { return marked_; }
  ElementSet unmarked() const { return poset_.all() - marked_; }
  bool is_marked(int i) const { return marked_.contains(i); }
  /// Value of a marked element; precondition is_marked(i).
  const Rational& value(int i) const { return *values_[i]; }
  const std::optional<Rational>& value_or_none(int i) const { return values_[i]; }

 private:
  friend MarkedPoset build_marked_poset(Poset, const std::vector<std::pair<std::string, Rational>>&);

  Poset poset_;
  ElementSet marked_;
  std::vector<std::optional<Rational>> values_;
};

/// Validates and attaches the marking. Every minimal and maximal element
/// must be marked and values must be weakly increasing along the order.
/// Throws Error{UnknownLabel, DuplicateLabel, ExtremalNotMarked, MarkingNotMonotone}.
MarkedPoset build_marked_poset(Poset poset, const std::vector<std::pair<std::string, Rational>>& marks);

/// All order ideals, sorted by (cardinality, bit pattern). Throws SizeLimit
/// when the poset has more than limits.max_elements elements.
std::vector<Ideal> enumerate_ideals(const Poset& poset, const Limits& limits = {});

/// Calls `fn(d)` for every down-closed subset d of `universe` (relative to
/// the order restricted to `universe`), the empty set included. Each subset
/// is visited exactly once.
template <typename Fn>
void for_each_downset(const Poset& poset, ElementSet universe, Fn&& fn);

using LinearExtension = std::vector<int>;

/// All linear extensions in lexicographic order of their index sequences.
/// Throws SizeLimit once more than limits.max_linear_extensions are found.
std::vector<LinearExtension> linear_extensions(const Poset& poset, const Limits& limits = {});

// ---------------------------------------------------------------------------

namespace detail {

template <typename Fn>
void downset_rec(const Poset& poset, const std::vector<int>& order, std::size_t pos, ElementSet universe,
                 ElementSet chosen, Fn& fn) {
  if (pos == order.size()) {
    fn(chosen);
    return;
  }
  const int x = order[pos];
  downset_rec(poset, order, pos + 1, universe, chosen, fn);
  // x may join only when everything below it inside the universe already has.
  const ElementSet below = (poset.down(x) & universe) - ElementSet::singleton(x);
  if (below.subset_of(chosen)) {
    chosen.insert(x);
    downset_rec(poset, order, pos + 1, universe, chosen, fn);
  }
}

}  // namespace detail

template <typename Fn>
void for_each_downset(const Poset& poset, ElementSet universe, Fn&& fn) {
  std::vector<int> order;
  for (int x : poset.topological_order())
    if (universe.contains(x)) order.push_back(x);
  detail::downset_rec(poset, order, 0, universe, ElementSet{}, fn);
}

}  // namespace mopf
