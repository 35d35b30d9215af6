#include "mopf/chains.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "mopf/error.hpp"

namespace mopf {

bool IdealChain::contains(Ideal ideal) const {
  return std::find(ideals.begin(), ideals.end(), ideal) != ideals.end();
}

bool IdealChain::subchain_of(const IdealChain& other) const {
  // Both are sorted by strict inclusion, hence by cardinality.
  auto it = other.ideals.begin();
  for (Ideal i : ideals) {
    while (it != other.ideals.end() && it->size() < i.size()) ++it;
    if (it == other.ideals.end() || *it != i) return false;
  }
  return true;
}

IdealChain make_chain(const Poset& poset, std::vector<Ideal> ideals) {
  if (ideals.empty() || !ideals.front().empty()) ideals.insert(ideals.begin(), Ideal{});
  if (ideals.back() != poset.all()) ideals.push_back(poset.all());
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    if (!poset.is_ideal(ideals[i])) throw Error(ErrorKind::InvalidChain, "chain entry is not an order ideal");
    if (i > 0 && !ideals[i - 1].proper_subset_of(ideals[i]))
      throw Error(ErrorKind::InvalidChain, "chain entries are not strictly increasing");
  }
  return IdealChain{std::move(ideals)};
}

IdealChain intersect(const IdealChain& a, const IdealChain& b) {
  IdealChain out;
  for (Ideal i : a.ideals)
    if (std::find(b.ideals.begin(), b.ideals.end(), i) != b.ideals.end()) out.ideals.push_back(i);
  return out;
}

namespace {

enum class BlockCheck { Unmarked, Single, Conflict };

/// Classifies the marked values inside `block`; on Single, `value` is set.
BlockCheck classify(const MarkedPoset& mp, ElementSet block, const Rational*& value) {
  value = nullptr;
  for (int x : (block & mp.marked()).elements()) {
    if (value == nullptr)
      value = &mp.value(x);
    else if (mp.value(x) != *value)
      return BlockCheck::Conflict;
  }
  return value == nullptr ? BlockCheck::Unmarked : BlockCheck::Single;
}

}  // namespace

std::optional<AdmissibleChain> admit(const MarkedPoset& mp, IdealChain chain) {
  AdmissibleChain out;
  const Rational* last = nullptr;
  out.blocks_.reserve(chain.ideals.size() - 1);
  for (int i = 1; i <= chain.length(); ++i) {
    const ElementSet members = chain.block(i);
    const Rational* value = nullptr;
    switch (classify(mp, members, value)) {
      case BlockCheck::Conflict:
        return std::nullopt;
      case BlockCheck::Unmarked:
        out.blocks_.push_back(Block{members, std::nullopt});
        ++out.dim_;
        break;
      case BlockCheck::Single:
        if (last != nullptr && !(*last < *value)) return std::nullopt;
        last = value;
        out.blocks_.push_back(Block{members, *value});
        break;
    }
  }
  out.chain_ = std::move(chain);
  return out;
}

bool is_admissible(const MarkedPoset& mp, const IdealChain& chain) { return admit(mp, chain).has_value(); }

std::size_t ChainEnumeration::total() const {
  std::size_t t = 0;
  for (const auto& b : by_dim) t += b.size();
  return t;
}

std::vector<std::size_t> ChainEnumeration::counts() const {
  std::vector<std::size_t> out;
  for (const auto& b : by_dim) out.push_back(b.size());
  return out;
}

namespace {

struct ChainSearch {
  const MarkedPoset& mp;
  const Limits& limits;
  std::vector<Ideal> prefix;
  std::vector<AdmissibleChain> found;

  /// Marked elements outside `ideal` must all exceed `last` for the prefix to
  /// be completable.
  bool completable(Ideal ideal, const Rational* last) const {
    if (last == nullptr) return true;
    for (int x : (mp.marked() - ideal).elements())
      if (!(*last < mp.value(x))) return false;
    return true;
  }

  void run(const Rational* last) {
    const Ideal current = prefix.back();
    const ElementSet rest = mp.poset().all() - current;
    if (rest.empty()) {
      if (found.size() >= limits.max_chains)
        throw Error(ErrorKind::SizeLimit, "more than " + std::to_string(limits.max_chains) + " admissible chains");
      auto chain = admit(mp, IdealChain{prefix});
      assert(chain);
      found.push_back(std::move(*chain));
      return;
    }
    for_each_downset(mp.poset(), rest, [&](ElementSet block) {
      if (block.empty()) return;
      const Rational* value = nullptr;
      const BlockCheck kind = classify(mp, block, value);
      if (kind == BlockCheck::Conflict) return;
      const Rational* next_last = last;
      if (kind == BlockCheck::Single) {
        if (last != nullptr && !(*last < *value)) return;
        next_last = value;
      }
      const Ideal next = current | block;
      if (!completable(next, next_last)) return;
      prefix.push_back(next);
      run(next_last);
      prefix.pop_back();
    });
  }
};

}  // namespace

ChainEnumeration enumerate_admissible_chains(const MarkedPoset& mp, const Limits& limits) {
  if (mp.size() > limits.max_elements)
    throw Error(ErrorKind::SizeLimit, "chain enumeration capped at " + std::to_string(limits.max_elements) +
                                          " elements; poset has " + std::to_string(mp.size()));
  ChainSearch search{mp, limits, {Ideal{}}, {}};
  if (mp.size() == 0) {
    // Degenerate: the only chain is the empty set itself; no blocks.
    search.found.push_back(*admit(mp, IdealChain{{Ideal{}}}));
  } else {
    search.run(nullptr);
  }

  ChainEnumeration out;
  for (auto& c : search.found) {
    out.dim = std::max(out.dim, c.dim());
    if (static_cast<int>(out.by_dim.size()) <= c.dim()) out.by_dim.resize(c.dim() + 1);
    out.by_dim[c.dim()].push_back(std::move(c));
  }
  for (auto& bucket : out.by_dim) std::sort(bucket.begin(), bucket.end());
  return out;
}

namespace {

std::optional<AdmissibleChain> insert_ideal(const MarkedPoset& mp, const AdmissibleChain& c, int k, Ideal j) {
  std::vector<Ideal> ideals = c.ideals();
  ideals.insert(ideals.begin() + k, j);
  return admit(mp, IdealChain{std::move(ideals)});
}

}  // namespace

std::vector<Densification> densifications(const MarkedPoset& mp, const AdmissibleChain& c, int k) {
  std::vector<Densification> out;
  if (k < 1 || k > c.chain().length()) return out;
  const Ideal lower = c.ideals()[k - 1];
  const ElementSet block = c.chain().block(k);
  for_each_downset(mp.poset(), block, [&](ElementSet part) {
    if (part.empty() || part == block) return;
    const Ideal j = lower | part;
    if (auto result = insert_ideal(mp, c, k, j)) {
      assert(result->dim() == c.dim() + 1);
      out.push_back(Densification{c, k, j, std::move(*result)});
    }
  });
  std::sort(out.begin(), out.end(), [](const Densification& a, const Densification& b) {
    return a.inserted.bits < b.inserted.bits;
  });
  return out;
}

std::optional<Densification> conjugate_of(const MarkedPoset& mp, const Densification& d) {
  const auto& ideals = d.parent.ideals();
  const Ideal lower = ideals[d.position - 1];
  const Ideal upper = ideals[d.position];
  const Ideal swapped = lower | (upper - d.inserted);
  if (!mp.poset().is_ideal(swapped)) return std::nullopt;
  auto result = insert_ideal(mp, d.parent, d.position, swapped);
  if (!result) return std::nullopt;
  return Densification{d.parent, d.position, swapped, std::move(*result)};
}

std::vector<AdmissibleChain> coboundary_support(const MarkedPoset& mp, const AdmissibleChain& c) {
  std::vector<AdmissibleChain> out;
  for (int k = 1; k <= c.chain().length(); ++k) {
    for (const auto& d : densifications(mp, c, k))
      if (conjugate_of(mp, d)) out.push_back(d.result);
  }
  std::sort(out.begin(), out.end());
  // A result chain determines its insertion (position and ideal), so every
  // coefficient is exactly one.
  assert(std::adjacent_find(out.begin(), out.end()) == out.end());
  return out;
}

std::vector<CompatibleExtension> lambda_compatible_extensions(const MarkedPoset& mp, const Limits& limits) {
  std::vector<CompatibleExtension> candidates;
  for (auto& order : linear_extensions(mp.poset(), limits)) {
    const Rational* last = nullptr;
    bool compatible = true;
    for (int x : order) {
      if (!mp.is_marked(x)) continue;
      if (last != nullptr && mp.value(x) < *last) {
        compatible = false;
        break;
      }
      last = &mp.value(x);
    }
    if (!compatible) continue;

    // Prefix ideals I_0..I_l; equal marked values at positions i < j force
    // I_i..I_{j-1} out of the chain.
    const int l = static_cast<int>(order.size());
    std::vector<bool> removed(l + 1, false);
    int previous_marked = -1;  // 1-based position of the last marked element
    for (int pos = 1; pos <= l; ++pos) {
      const int x = order[pos - 1];
      if (!mp.is_marked(x)) continue;
      if (previous_marked > 0 && mp.value(order[previous_marked - 1]) == mp.value(x))
        for (int i = previous_marked; i < pos; ++i) removed[i] = true;
      previous_marked = pos;
    }
    std::vector<Ideal> ideals;
    Ideal prefix;
    ideals.push_back(prefix);
    for (int pos = 1; pos <= l; ++pos) {
      prefix.insert(order[pos - 1]);
      if (!removed[pos]) ideals.push_back(prefix);
    }
    auto chain = admit(mp, IdealChain{std::move(ideals)});
    assert(chain);
    candidates.push_back(CompatibleExtension{std::move(order), std::move(*chain)});
  }

  int top = 0;
  for (const auto& c : candidates) top = std::max(top, c.chain.dim());
  std::vector<CompatibleExtension> out;
  std::set<IdealChain> seen;
  for (auto& c : candidates) {
    if (c.chain.dim() != top) continue;
    if (!seen.insert(c.chain.chain()).second) continue;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace mopf
