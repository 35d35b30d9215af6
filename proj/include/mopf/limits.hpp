#pragma once

#include <cstddef>

namespace mopf {

/// Explosion guards. Exceeding any of them raises ErrorKind::SizeLimit.
struct Limits {
  int max_elements = 20;                         // ideal / chain enumeration
  std::size_t max_linear_extensions = 1'000'000;
  std::size_t max_chains = 200'000;
  int max_oracle_vars = 8;                       // exact geometric oracle
};

}  // namespace mopf
