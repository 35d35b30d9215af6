#include "mopf/poset.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "mopf/error.hpp"

namespace mopf {

std::optional<int> Poset::index_of(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

ElementSet Poset::minimal() const {
  ElementSet out;
  for (int x = 0; x < size(); ++x)
    if (down_[x].size() == 1) out.insert(x);
  return out;
}

ElementSet Poset::maximal() const {
  ElementSet out;
  for (int x = 0; x < size(); ++x)
    if (up_[x].size() == 1) out.insert(x);
  return out;
}

bool Poset::is_ideal(ElementSet s) const {
  if (!s.subset_of(all())) return false;
  for (int x : s.elements())
    if (!down_[x].subset_of(s)) return false;
  return true;
}

ElementSet Poset::minimal_in(ElementSet within) const {
  ElementSet out;
  for (int x : within.elements())
    if (((down_[x] & within) - ElementSet::singleton(x)).empty()) out.insert(x);
  return out;
}

std::size_t Poset::comparable_pairs() const {
  std::size_t total = 0;
  for (const ElementSet& d : down_) total += static_cast<std::size_t>(d.size());
  return total;
}

Poset build_poset_indexed(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& covers) {
  const int n = static_cast<int>(labels.size());
  if (n > ElementSet::capacity)
    throw Error(ErrorKind::SizeLimit,
                "poset has " + std::to_string(n) + " elements; at most " + std::to_string(ElementSet::capacity) +
                    " are supported");
  {
    std::set<std::string> seen;
    for (const auto& l : labels)
      if (!seen.insert(l).second) throw Error(ErrorKind::DuplicateLabel, "duplicate element label '" + l + "'", l);
  }

  std::vector<std::vector<int>> succ(n);
  std::vector<int> indegree(n, 0);
  for (const auto& [a, b] : covers) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw Error(ErrorKind::UnknownLabel, "cover endpoint out of range");
    if (a == b) throw Error(ErrorKind::Cycle, "element '" + labels[a] + "' covers itself", labels[a]);
    succ[a].push_back(b);
    ++indegree[b];
  }

  // Kahn's algorithm, always taking the smallest available index.
  std::set<int> ready;
  for (int x = 0; x < n; ++x)
    if (indegree[x] == 0) ready.insert(x);
  std::vector<int> topo;
  topo.reserve(n);
  while (!ready.empty()) {
    const int x = *ready.begin();
    ready.erase(ready.begin());
    topo.push_back(x);
    for (int y : succ[x])
      if (--indegree[y] == 0) ready.insert(y);
  }
  if (static_cast<int>(topo.size()) != n) {
    // Elements left with positive in-degree lie on or above a cycle.
    std::string members;
    int first = -1;
    for (int x = 0; x < n; ++x) {
      if (indegree[x] == 0) continue;
      if (first < 0) first = x;
      members += (members.empty() ? "" : ", ") + labels[x];
    }
    throw Error(ErrorKind::Cycle, "cover relation has a directed cycle among {" + members + "}", labels[first]);
  }

  Poset p;
  p.labels_ = std::move(labels);
  p.down_.assign(n, ElementSet{});
  p.up_.assign(n, ElementSet{});
  std::vector<std::vector<int>> pred(n);
  for (const auto& [a, b] : covers) pred[b].push_back(a);
  for (int x : topo) {
    ElementSet d = ElementSet::singleton(x);
    for (int a : pred[x]) d |= p.down_[a];
    p.down_[x] = d;
  }
  for (int x = 0; x < n; ++x)
    for (int y : p.down_[x].elements()) p.up_[y].insert(x);

  for (int a = 0; a < n; ++a) {
    for (int b : (p.up_[a] - ElementSet::singleton(a)).elements()) {
      const ElementSet between = (p.up_[a] - ElementSet::singleton(a)) & (p.down_[b] - ElementSet::singleton(b));
      if (between.empty()) p.covers_.emplace_back(a, b);
    }
  }
  std::sort(p.covers_.begin(), p.covers_.end());
  p.topo_ = std::move(topo);
  return p;
}

Poset build_poset(const std::vector<std::string>& labels,
                  const std::vector<std::pair<std::string, std::string>>& covers) {
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
    if (!index.emplace(labels[i], i).second)
      throw Error(ErrorKind::DuplicateLabel, "duplicate element label '" + labels[i] + "'", labels[i]);
  }
  auto lookup = [&](const std::string& l) {
    const auto it = index.find(l);
    if (it == index.end()) throw Error(ErrorKind::UnknownLabel, "unknown element label '" + l + "'", l);
    return it->second;
  };
  std::vector<std::pair<int, int>> indexed;
  indexed.reserve(covers.size());
  for (const auto& [a, b] : covers) indexed.emplace_back(lookup(a), lookup(b));
  return build_poset_indexed(labels, indexed);
}

MarkedPoset build_marked_poset(Poset poset, const std::vector<std::pair<std::string, Rational>>& marks) {
  MarkedPoset mp;
  mp.values_.assign(poset.size(), std::nullopt);
  for (const auto& [label, value] : marks) {
    const auto idx = poset.index_of(label);
    if (!idx) throw Error(ErrorKind::UnknownLabel, "marked element '" + label + "' is not declared", label);
    if (mp.marked_.contains(*idx))
      throw Error(ErrorKind::DuplicateLabel, "element '" + label + "' marked twice", label);
    mp.marked_.insert(*idx);
    mp.values_[*idx] = value;
  }

  const ElementSet extremal = poset.minimal() | poset.maximal();
  const ElementSet missing = extremal - mp.marked_;
  if (!missing.empty()) {
    const int x = missing.front();
    throw Error(ErrorKind::ExtremalNotMarked,
                "element '" + poset.label(x) + "' is " + (poset.minimal().contains(x) ? "minimal" : "maximal") +
                    " but not marked",
                poset.label(x));
  }

  for (int a : mp.marked_.elements()) {
    for (int b : (poset.up(a) & mp.marked_).elements()) {
      if (*mp.values_[a] > *mp.values_[b])
        throw Error(ErrorKind::MarkingNotMonotone, "'" + poset.label(a) + "' <= '" + poset.label(b) + "' but " +
                                                       format_rational(*mp.values_[a]) + " > " +
                                                       format_rational(*mp.values_[b]),
                    poset.label(a));
    }
  }
  mp.poset_ = std::move(poset);
  return mp;
}

std::vector<Ideal> enumerate_ideals(const Poset& poset, const Limits& limits) {
  if (poset.size() > limits.max_elements)
    throw Error(ErrorKind::SizeLimit, "ideal enumeration capped at " + std::to_string(limits.max_elements) +
                                          " elements; poset has " + std::to_string(poset.size()));
  std::vector<Ideal> out;
  for_each_downset(poset, poset.all(), [&](ElementSet d) { out.push_back(d); });
  std::sort(out.begin(), out.end(), [](ElementSet a, ElementSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits < b.bits;
  });
  return out;
}

namespace {

void extend_rec(const Poset& poset, ElementSet placed, LinearExtension& prefix, std::vector<LinearExtension>& out,
                const Limits& limits) {
  if (static_cast<int>(prefix.size()) == poset.size()) {
    if (out.size() >= limits.max_linear_extensions)
      throw Error(ErrorKind::SizeLimit,
                  "more than " + std::to_string(limits.max_linear_extensions) + " linear extensions");
    out.push_back(prefix);
    return;
  }
  // Ascending index order of the available minima yields lexicographic output.
  for (int x : poset.minimal_in(poset.all() - placed).elements()) {
    prefix.push_back(x);
    extend_rec(poset, placed | ElementSet::singleton(x), prefix, out, limits);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<LinearExtension> linear_extensions(const Poset& poset, const Limits& limits) {
  std::vector<LinearExtension> out;
  LinearExtension prefix;
  prefix.reserve(poset.size());
  extend_rec(poset, ElementSet{}, prefix, out, limits);
  return out;
}

}  // namespace mopf
