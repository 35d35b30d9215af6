#include "mopf/gt.hpp"

#include "mopf/error.hpp"

namespace mopf {

GTShape::GTShape(std::vector<long> parts) : parts_(std::move(parts)) {
  if (parts_.size() < 2) throw Error(ErrorKind::Shape, "a Gelfand-Tsetlin shape needs at least two parts");
  for (std::size_t i = 1; i < parts_.size(); ++i)
    if (parts_[i] > parts_[i - 1])
      throw Error(ErrorKind::Shape, "shape must be weakly decreasing: " + std::to_string(parts_[i - 1]) + " < " +
                                        std::to_string(parts_[i]));
}

std::string gt_label(int row, int column) { return "a" + std::to_string(row) + "_" + std::to_string(column); }

MarkedPoset gt_marked_poset(const GTShape& shape) {
  const int n = shape.size();
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n - i + 1; ++j) labels.push_back(gt_label(i, j));

  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j <= n - i; ++j) {
      covers.emplace_back(gt_label(i + 1, j), gt_label(i, j));
      covers.emplace_back(gt_label(i, j + 1), gt_label(i + 1, j));
    }
  }
  std::vector<std::pair<std::string, Rational>> marks;
  for (int j = 1; j <= n; ++j) marks.emplace_back(gt_label(1, j), Rational(shape.parts()[j - 1]));
  return build_marked_poset(build_poset(labels, covers), marks);
}

}  // namespace mopf
