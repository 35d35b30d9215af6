#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mopf/chains.hpp"
#include "mopf/complex.hpp"
#include "mopf/error.hpp"
#include "mopf/gt.hpp"
#include "mopf/limits.hpp"
#include "mopf/poset.hpp"

namespace mopf {

enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,
  kExitVerificationFailed = 2,
  kExitSizeLimit = 3,
};

int exit_code_for(ErrorKind kind);

struct FVectorReport {
  int dim = 0;
  FVector f;
  FPolynomial polynomial;
  std::vector<std::size_t> chain_counts;
};

FVectorReport cmd_fvector(const MarkedPoset& mp, const Limits& limits = {});
std::string render_text(const FVectorReport& r);
std::string render_json(const FVectorReport& r);

struct ChainsReport {
  int dim = 0;                          // dimension of the polytope
  std::vector<AdmissibleChain> chains;  // filtered by the requested dimension
};

ChainsReport cmd_chains(const MarkedPoset& mp, std::optional<int> only_dim, const Limits& limits = {});
/// One chain per line, marked elements written by their values:
///   [dim 2] (∅ ⊊ {0} ⊊ {0,p} ⊊ {0,p,q} ⊊ {0,p,q,1} ⊊ P)
std::string render_text(const MarkedPoset& mp, const ChainsReport& r);
std::string render_json(const MarkedPoset& mp, const ChainsReport& r);
/// The chain in set notation, as used by render_text.
std::string format_chain(const MarkedPoset& mp, const AdmissibleChain& c);

struct VerifyOptions {
  bool oracle = false;
  Limits limits;
  /// Test hook applied to the combinatorial complex before any check runs.
  std::function<void(CochainComplex&)> tamper;
};

struct VerifyCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  std::optional<FVector> f;

  bool passed() const;
};

VerifyReport cmd_verify(const MarkedPoset& mp, const VerifyOptions& options);
std::string render_text(const VerifyReport& r);
std::string render_json(const VerifyReport& r);

/// Flips one entry of the first delta that feeds a nonzero column of the
/// next one, which is guaranteed to break delta o delta = 0. Returns false if
/// the complex has fewer than two deltas or no such column.
bool corrupt_delta(CochainComplex& c);

/// Instance text for the Gelfand-Tsetlin pattern of `shape`, re-validated by
/// parsing it back.
std::string cmd_gt(const GTShape& shape);

/// Entry point shared by the mopf executable and the tests.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mopf
