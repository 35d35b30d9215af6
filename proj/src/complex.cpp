#include "mopf/complex.hpp"

#include <map>

#include "mopf/error.hpp"

namespace mopf {

std::vector<std::size_t> CochainComplex::dims() const {
  std::vector<std::size_t> out;
  out.reserve(basis.size());
  for (const auto& b : basis) out.push_back(b.size());
  return out;
}

CochainComplex build_complex(const MarkedPoset& mp, const Limits& limits) {
  return build_complex(mp, enumerate_admissible_chains(mp, limits));
}

CochainComplex build_complex(const MarkedPoset& mp, const ChainEnumeration& chains) {
  CochainComplex out;
  out.basis = chains.by_dim;
  const int top = out.top_degree();
  for (int i = 0; i < top; ++i) {
    std::map<IdealChain, std::size_t> row_of;
    for (std::size_t r = 0; r < out.basis[i + 1].size(); ++r) row_of.emplace(out.basis[i + 1][r].chain(), r);

    // Column-sparse assembly; the dense form is only needed for elimination.
    std::vector<std::vector<std::size_t>> columns;
    columns.reserve(out.basis[i].size());
    for (const auto& chain : out.basis[i]) {
      auto& col = columns.emplace_back();
      for (const auto& target : coboundary_support(mp, chain)) col.push_back(row_of.at(target.chain()));
    }
    out.deltas.push_back(GF2Matrix::from_columns(out.basis[i + 1].size(), columns));
  }
  return out;
}

bool verify_dd_zero(const CochainComplex& c) {
  for (std::size_t i = 0; i + 1 < c.deltas.size(); ++i)
    if (!(c.deltas[i + 1] * c.deltas[i]).is_zero()) return false;
  return true;
}

long long FVector::euler_characteristic() const {
  long long chi = 0;
  for (std::size_t i = 0; i < f.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(f[i]);
  return chi;
}

FVector cohomology_fvector(const CochainComplex& c) {
  if (!verify_dd_zero(c)) throw Error(ErrorKind::NotAComplex, "coboundary composition delta o delta is nonzero");
  const auto dims = c.dims();
  std::vector<std::size_t> ranks;
  ranks.reserve(c.deltas.size());
  for (const auto& d : c.deltas) ranks.push_back(d.rank());

  FVector out;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    const std::size_t outgoing = i < ranks.size() ? ranks[i] : 0;
    const std::size_t incoming = i > 0 ? ranks[i - 1] : 0;
    out.f.push_back(dims[i] - outgoing - incoming);
  }
  return out;
}

FPolynomial f_polynomial(const FVector& f) {
  FPolynomial out{f.f, {}};
  for (std::size_t i = 0; i < f.f.size(); ++i) {
    const std::size_t c = f.f[i];
    if (i > 0 && c == 0) continue;
    std::string term;
    if (i == 0 || c != 1) term = std::to_string(c);
    if (i >= 1) term += "t";
    if (i >= 2) term += "^" + std::to_string(i);
    out.display += (out.display.empty() ? "" : " + ") + term;
  }
  return out;
}

std::string format_fvector(const FVector& f) {
  std::string out = "(";
  for (std::size_t i = 0; i < f.f.size(); ++i) out += (i ? ", " : "") + std::to_string(f.f[i]);
  return out + ")";
}

}  // namespace mopf
