#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mopf/chains.hpp"
#include "mopf/gf2.hpp"
#include "mopf/limits.hpp"
#include "mopf/poset.hpp"

namespace mopf {

/// Graded GF(2) cochain complex whose degree-i basis is a list of
/// admissible chains of dimension i.
struct CochainComplex {
  std::vector<std::vector<AdmissibleChain>> basis;
  /// deltas[i] : C^i -> C^{i+1}; rows indexed by basis[i+1], columns by basis[i].
  std::vector<GF2Matrix> deltas;

  std::vector<std::size_t> dims() const;
  int top_degree() const { return static_cast<int>(basis.size()) - 1; }
};

/// The combinatorial complex: bases from enumerate_admissible_chains, the
/// column of chain L in deltas[i] supported on coboundary_support(L).
CochainComplex build_complex(const MarkedPoset& mp, const Limits& limits = {});

/// Same, reusing an existing enumeration.
CochainComplex build_complex(const MarkedPoset& mp, const ChainEnumeration& chains);

/// True iff deltas[i+1] * deltas[i] vanishes for every i.
bool verify_dd_zero(const CochainComplex& c);

struct FVector {
  std::vector<std::size_t> f;

  int dim() const { return static_cast<int>(f.size()) - 1; }
  /// Alternating sum f_0 - f_1 + f_2 - ...
  long long euler_characteristic() const;

  friend bool operator==(const FVector&, const FVector&) = default;
};

/// Cohomology dimensions: f_i = dim C^i - rank delta^i - rank delta^{i-1}.
/// Throws Error{NotAComplex} when some delta composition is nonzero.
FVector cohomology_fvector(const CochainComplex& c);

struct FPolynomial {
  std::vector<std::size_t> coefficients;  // low degree first
  std::string display;                    // e.g. "3 + 3t + t^2"
};

FPolynomial f_polynomial(const FVector& f);

/// "(3, 3, 1)"
std::string format_fvector(const FVector& f);

}  // namespace mopf
