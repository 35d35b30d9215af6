#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include <doctest.h>

#include "mopf/chains.hpp"
#include "mopf/instance.hpp"

namespace mopf::test {

// r < p < q < s; t is isolated. Marks r=0, s=2, t=1. A triangle.
inline const char* const kTriangle =
    "elements: r p q s t\n"
    "cover: r p\ncover: p q\ncover: q s\n"
    "marked: r 0\nmarked: s 2\nmarked: t 1\n";

// Same, with t above p. A quadrilateral.
inline const char* const kQuadrilateral =
    "elements: r p q s t\n"
    "cover: r p\ncover: p q\ncover: q s\ncover: p t\n"
    "marked: r 0\nmarked: s 2\nmarked: t 1\n";

inline const char* const kSegment =
    "elements: lo m hi\ncover: lo m\ncover: m hi\nmarked: lo 0\nmarked: hi 1\n";

inline const char* const kTwoChain = "elements: lo hi\ncover: lo hi\nmarked: lo 0\nmarked: hi 1\n";

inline MarkedPoset triangle() { return parse_instance(kTriangle); }
inline MarkedPoset quadrilateral() { return parse_instance(kQuadrilateral); }

inline Ideal ideal_of(const MarkedPoset& mp, std::initializer_list<const char*> labels) {
  Ideal out;
  for (const char* l : labels) out.insert(*mp.poset().index_of(l));
  return out;
}

/// Chain from the listed inner ideals; endpoints are added.
inline IdealChain chain_of(const MarkedPoset& mp, std::initializer_list<std::initializer_list<const char*>> ideals) {
  std::vector<Ideal> v;
  for (auto i : ideals) v.push_back(ideal_of(mp, i));
  return make_chain(mp.poset(), v);
}

inline AdmissibleChain admissible_of(const MarkedPoset& mp,
                                     std::initializer_list<std::initializer_list<const char*>> ideals) {
  auto c = admit(mp, chain_of(mp, ideals));
  REQUIRE(c.has_value());
  return *c;
}

}  // namespace mopf::test

namespace mopf::test {

/// The named chains of the triangle instance.
struct TriangleChains {
  MarkedPoset mp = triangle();
  AdmissibleChain s1 = admissible_of(mp, {{"r"}, {"r", "p"}, {"r", "p", "q"}, {"r", "p", "q", "t"}});
  AdmissibleChain s2 = admissible_of(mp, {{"r"}, {"r", "p"}, {"r", "p", "t"}, {"r", "p", "t", "q"}});
  AdmissibleChain s3 = admissible_of(mp, {{"r"}, {"r", "t"}, {"r", "t", "p"}, {"r", "t", "p", "q"}});
  AdmissibleChain l1 = admissible_of(mp, {{"r", "p"}, {"r", "p", "t"}, {"r", "p", "t", "q"}});
  AdmissibleChain l2 = admissible_of(mp, {{"r", "p"}, {"r", "p", "q"}, {"r", "p", "q", "t"}});
  AdmissibleChain l3 = admissible_of(mp, {{"r"}, {"r", "p", "q"}, {"r", "p", "q", "t"}});
  AdmissibleChain l4 = admissible_of(mp, {{"r"}, {"r", "t"}, {"r", "t", "p", "q"}});
  AdmissibleChain l5 = admissible_of(mp, {{"r"}, {"r", "t"}, {"r", "t", "p"}});
  AdmissibleChain l6 = admissible_of(mp, {{"r"}, {"r", "p"}, {"r", "p", "t"}});
  AdmissibleChain l7 = admissible_of(mp, {{"r"}, {"r", "p", "t"}, {"r", "p", "t", "q"}});
  AdmissibleChain l8 = admissible_of(mp, {{"r"}, {"r", "p"}, {"r", "p", "q", "t"}});
  AdmissibleChain v0 = admissible_of(mp, {{"r", "p"}, {"r", "p", "t"}});
  AdmissibleChain v1 = admissible_of(mp, {{"r", "p", "q"}, {"r", "p", "q", "t"}});
  AdmissibleChain v2 = admissible_of(mp, {{"r"}, {"r", "t"}});
  AdmissibleChain w0 = admissible_of(mp, {{"r", "p"}, {"r", "p", "q", "t"}});
  AdmissibleChain w1 = admissible_of(mp, {{"r"}, {"r", "p", "q", "t"}});
  AdmissibleChain w2 = admissible_of(mp, {{"r"}, {"r", "p", "t"}});

  std::vector<AdmissibleChain> dim0() const { return {v0, v1, v2, w0, w1, w2}; }
  std::vector<AdmissibleChain> dim1() const { return {l1, l2, l3, l4, l5, l6, l7, l8}; }
  std::vector<AdmissibleChain> dim2() const { return {s1, s2, s3}; }
};

}  // namespace mopf::test
