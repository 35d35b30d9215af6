#pragma once

#include <string>
#include <vector>

#include "mopf/poset.hpp"

namespace mopf {

/// Weakly decreasing top row of a Gelfand-Tsetlin pattern, length >= 2.
class GTShape {
 public:
  /// Throws Error{Shape} on increasing entries or fewer than two parts.
  explicit GTShape(std::vector<long> parts);

  const std::vector<long>& parts() const { return parts_; }
  int size() const { return static_cast<int>(parts_.size()); }

 private:
  std::vector<long> parts_;
};

/// Label of the entry in row i, column j (both 1-based): "a<i>_<j>".
std::string gt_label(int row, int column);

/// Triangular interlacing array a_{i,j}, 1 <= i <= n, 1 <= j <= n-i+1, with
/// covers a_{i+1,j} < a_{i,j} and a_{i,j+1} < a_{i+1,j}; row 1 is marked
/// by the shape. Row i+1 interlaces row i from below.
MarkedPoset gt_marked_poset(const GTShape& shape);

}  // namespace mopf
