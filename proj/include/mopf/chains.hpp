#pragma once

#include <optional>
#include <vector>

#include "mopf/element_set.hpp"
#include "mopf/limits.hpp"
#include "mopf/poset.hpp"
#include "mopf/rational.hpp"

namespace mopf {

/// Strictly increasing chain of order ideals from the empty set to the
/// whole poset, both endpoints stored.
struct IdealChain {
  std::vector<Ideal> ideals;

  /// Number of difference blocks, i.e. ideals.size() - 1.
  int length() const { return static_cast<int>(ideals.size()) - 1; }
  /// i-th block I_i \ I_{i-1}, 1-based as in the usual indexing.
  ElementSet block(int i) const { return ideals[i] - ideals[i - 1]; }
  bool contains(Ideal ideal) const;
  /// True iff every ideal of *this also appears in `other`.
  bool subchain_of(const IdealChain& other) const;

  friend bool operator==(const IdealChain&, const IdealChain&) = default;
  friend auto operator<=>(const IdealChain&, const IdealChain&) = default;
};

/// Builds a chain from the given ideals, adding the empty set and the whole
/// poset when they are missing. Throws Error{InvalidChain} unless every entry
/// is an ideal and inclusions are strict.
IdealChain make_chain(const Poset& poset, std::vector<Ideal> ideals);

/// Ideals common to both chains (always contains both endpoints).
IdealChain intersect(const IdealChain& a, const IdealChain& b);

struct Block {
  ElementSet members;
  std::optional<Rational> value;  // common value of the marked members, if any

  bool is_marked() const { return value.has_value(); }
};

/// A chain of ideals satisfying the admissibility condition: each block
/// carries at most one marked value and marked values strictly increase
/// along the chain.
class AdmissibleChain {
 public:
  const IdealChain& chain() const { return chain_; }
  const std::vector<Ideal>& ideals() const { return chain_.ideals; }
  const std::vector<Block>& blocks() const { return blocks_; }
  /// Number of blocks without marked elements.
  int dim() const { return dim_; }

  friend bool operator==(const AdmissibleChain& a, const AdmissibleChain& b) { return a.chain_ == b.chain_; }
  friend auto operator<=>(const AdmissibleChain& a, const AdmissibleChain& b) { return a.chain_ <=> b.chain_; }

 private:
  friend std::optional<AdmissibleChain> admit(const MarkedPoset&, IdealChain);

  IdealChain chain_;
  std::vector<Block> blocks_;
  int dim_ = 0;
};

/// Returns the admissible view of `chain`, or nullopt when the chain violates
/// the block condition. Precondition: chain is well formed over mp.
std::optional<AdmissibleChain> admit(const MarkedPoset& mp, IdealChain chain);

bool is_admissible(const MarkedPoset& mp, const IdealChain& chain);

inline int chain_dim(const AdmissibleChain& c) { return c.dim(); }

struct ChainEnumeration {
  /// by_dim[i] holds the admissible chains of dimension i, sorted.
  std::vector<std::vector<AdmissibleChain>> by_dim;
  /// Largest chain dimension; equals the dimension of the polytope.
  int dim = 0;

  std::size_t total() const;
  std::vector<std::size_t> counts() const;
};

/// Every admissible chain of `mp`, bucketed by dimension. Throws SizeLimit
/// beyond limits.max_elements elements or limits.max_chains chains.
ChainEnumeration enumerate_admissible_chains(const MarkedPoset& mp, const Limits& limits = {});

/// Insertion of one ideal strictly inside block `position` of `parent`.
struct Densification {
  AdmissibleChain parent;
  int position = 0;  // k: the new ideal sits between I_{k-1} and I_k
  Ideal inserted;
  AdmissibleChain result;
};

/// All admissible insertions at block k (1 <= k <= number of blocks).
std::vector<Densification> densifications(const MarkedPoset& mp, const AdmissibleChain& c, int k);

/// The conjugate insertion I_{k-1} u (I_k \ J): present only when that set is
/// an ideal and the resulting chain is admissible.
std::optional<Densification> conjugate_of(const MarkedPoset& mp, const Densification& d);

/// Chains carrying coefficient 1 in the coboundary of c, sorted. Each is the
/// result of a densification that has a conjugate.
std::vector<AdmissibleChain> coboundary_support(const MarkedPoset& mp, const AdmissibleChain& c);

struct CompatibleExtension {
  LinearExtension order;
  AdmissibleChain chain;  // pruned maximal chain of prefix ideals
};

/// Linear extensions on which the marking stays weakly increasing, each
/// paired with its pruned prefix chain. Only extensions whose pruned chain
/// has the maximal dimension are kept, one (the lexicographically first) per
/// distinct chain; the chains are then exactly the top-dimensional
/// admissible chains.
std::vector<CompatibleExtension> lambda_compatible_extensions(const MarkedPoset& mp, const Limits& limits = {});

}  // namespace mopf
