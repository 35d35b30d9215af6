#include "mopf/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "mopf/error.hpp"

namespace mopf {

Rational Inequality::slack(const Point& x) const {
  Rational s = bound;
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    if (sgn(coefficients[i]) != 0) s -= coefficients[i] * x[i];
  return s;
}

bool ExactPolytope::contains(const Point& x) const {
  return std::all_of(inequalities.begin(), inequalities.end(), [&](const Inequality& h) { return h.satisfied_by(x); });
}

std::vector<std::size_t> ExactPolytope::tight_set(const Point& x) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < inequalities.size(); ++i)
    if (inequalities[i].tight_at(x)) out.push_back(i);
  return out;
}

namespace {

std::vector<int> unmarked_vars(const MarkedPoset& mp) { return mp.unmarked().elements(); }

std::map<int, std::size_t> var_positions(const std::vector<int>& vars) {
  std::map<int, std::size_t> pos;
  for (std::size_t i = 0; i < vars.size(); ++i) pos.emplace(vars[i], i);
  return pos;
}

/// x_a <= x_b with marked coordinates moved to the right-hand side.
Inequality difference_row(const MarkedPoset& mp, const std::map<int, std::size_t>& pos, int a, int b) {
  Inequality h{std::vector<Rational>(pos.size()), Rational(0)};
  if (mp.is_marked(a))
    h.bound -= mp.value(a);
  else
    h.coefficients[pos.at(a)] += 1;
  if (mp.is_marked(b))
    h.bound += mp.value(b);
  else
    h.coefficients[pos.at(b)] -= 1;
  return h;
}

bool row_less(const Inequality& a, const Inequality& b) {
  if (a.coefficients != b.coefficients) return a.coefficients < b.coefficients;
  return a.bound < b.bound;
}

}  // namespace

ExactPolytope hrep(const MarkedPoset& mp) {
  ExactPolytope p;
  p.vars = unmarked_vars(mp);
  const auto pos = var_positions(p.vars);
  for (const auto& [a, b] : mp.poset().covers()) {
    if (mp.is_marked(a) && mp.is_marked(b)) continue;
    p.inequalities.push_back(difference_row(mp, pos, a, b));
  }
  std::sort(p.inequalities.begin(), p.inequalities.end(), row_less);
  p.inequalities.erase(std::unique(p.inequalities.begin(), p.inequalities.end()), p.inequalities.end());
  return p;
}

ExactPolytope cell_system(const MarkedPoset& mp, const IdealChain& chain) {
  ExactPolytope p;
  p.vars = unmarked_vars(mp);
  const auto pos = var_positions(p.vars);
  int previous_rep = -1;
  for (int i = 1; i <= chain.length(); ++i) {
    const auto members = chain.block(i).elements();
    for (std::size_t j = 1; j < members.size(); ++j) {
      p.inequalities.push_back(difference_row(mp, pos, members[j - 1], members[j]));
      p.inequalities.push_back(difference_row(mp, pos, members[j], members[j - 1]));
    }
    if (previous_rep >= 0) p.inequalities.push_back(difference_row(mp, pos, previous_rep, members.front()));
    previous_rep = members.front();
  }
  return p;
}

namespace {

/// A row of an augmented system [coefficients | rhs] in insertion-order
/// echelon form: zero at the pivot columns of all earlier rows.
struct EchelonRow {
  std::vector<Rational> coefficients;
  Rational rhs;
  std::size_t pivot;
};

/// Reduces (c, r) against the echelon rows; returns false if it becomes zero.
bool reduce(std::vector<Rational>& c, Rational& r, const std::vector<EchelonRow>& echelon, std::size_t& pivot) {
  for (const auto& e : echelon) {
    if (sgn(c[e.pivot]) == 0) continue;
    const Rational factor = c[e.pivot] / e.coefficients[e.pivot];
    for (std::size_t k = 0; k < c.size(); ++k)
      if (sgn(e.coefficients[k]) != 0) c[k] -= factor * e.coefficients[k];
    r -= factor * e.rhs;
  }
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (sgn(c[k]) != 0) {
      pivot = k;
      return true;
    }
  }
  return false;
}

/// Solves the echelon system, with `free_col` (if any) set to one and a
/// homogeneous right-hand side when `homogeneous`.
Point back_substitute(const std::vector<EchelonRow>& echelon, std::size_t dim, std::optional<std::size_t> free_col,
                      bool homogeneous) {
  Point x(dim);
  if (free_col) x[*free_col] = 1;
  for (auto it = echelon.rbegin(); it != echelon.rend(); ++it) {
    Rational v = homogeneous ? Rational(0) : it->rhs;
    for (std::size_t k = 0; k < dim; ++k)
      if (k != it->pivot && sgn(it->coefficients[k]) != 0) v -= it->coefficients[k] * x[k];
    x[it->pivot] = v / it->coefficients[it->pivot];
  }
  return x;
}

struct VertexSearch {
  const ExactPolytope& p;
  std::size_t dim;
  std::set<Point> vertices;
  std::size_t max_rank = 0;

  bool is_recession_direction(const Point& d) const {
    for (const auto& h : p.inequalities) {
      Rational s = 0;
      for (std::size_t k = 0; k < dim; ++k) s += h.coefficients[k] * d[k];
      if (sgn(s) > 0) return false;
    }
    return true;
  }

  void check_ray(const std::vector<EchelonRow>& echelon) {
    std::vector<bool> is_pivot(dim, false);
    for (const auto& e : echelon) is_pivot[e.pivot] = true;
    std::size_t free_col = 0;
    while (is_pivot[free_col]) ++free_col;
    Point d = back_substitute(echelon, dim, free_col, true);
    Point neg = d;
    for (auto& v : neg) v = -v;
    if (is_recession_direction(d) || is_recession_direction(neg))
      throw Error(ErrorKind::Unbounded, "polyhedron has a recession direction");
  }

  void run(std::vector<EchelonRow>& echelon, std::size_t next_row) {
    max_rank = std::max(max_rank, echelon.size());
    if (echelon.size() + 1 == dim) check_ray(echelon);
    if (echelon.size() == dim) {
      Point x = back_substitute(echelon, dim, std::nullopt, false);
      if (p.contains(x)) vertices.insert(std::move(x));
      return;
    }
    for (std::size_t j = next_row; j < p.inequalities.size(); ++j) {
      std::vector<Rational> c = p.inequalities[j].coefficients;
      Rational r = p.inequalities[j].bound;
      std::size_t pivot = 0;
      if (!reduce(c, r, echelon, pivot)) continue;
      echelon.push_back(EchelonRow{std::move(c), std::move(r), pivot});
      run(echelon, j + 1);
      echelon.pop_back();
    }
  }
};

}  // namespace

std::vector<Point> enumerate_vertices(const ExactPolytope& p, const Limits& limits) {
  const std::size_t dim = p.vars.size();
  if (p.ambient_dim() > limits.max_oracle_vars)
    throw Error(ErrorKind::SizeLimit, "vertex enumeration capped at " + std::to_string(limits.max_oracle_vars) +
                                          " variables; polytope has " + std::to_string(dim));
  if (dim == 0) {
    const Point origin;
    if (p.contains(origin)) return {origin};
    return {};
  }
  VertexSearch search{p, dim, {}, 0};
  std::vector<EchelonRow> echelon;
  search.run(echelon, 0);
  if (search.max_rank < dim) throw Error(ErrorKind::Unbounded, "constraint matrix is rank deficient");
  return {search.vertices.begin(), search.vertices.end()};
}

namespace {

std::size_t rational_rank(std::vector<std::vector<Rational>> rows) {
  std::vector<EchelonRow> echelon;
  for (auto& r : rows) {
    Rational rhs = 0;
    std::size_t pivot = 0;
    if (reduce(r, rhs, echelon, pivot)) echelon.push_back(EchelonRow{std::move(r), rhs, pivot});
  }
  return echelon.size();
}

}  // namespace

int affine_dimension(const std::vector<Point>& points) {
  if (points.empty()) return -1;
  std::vector<std::vector<Rational>> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    std::vector<Rational> d(points[i].size());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = points[i][k] - points[0][k];
    diffs.push_back(std::move(d));
  }
  return static_cast<int>(rational_rank(std::move(diffs)));
}

FVector FaceLattice::fvector() const {
  FVector out;
  for (const auto& f : faces) {
    if (static_cast<int>(out.f.size()) <= f.dim) out.f.resize(f.dim + 1, 0);
    ++out.f[f.dim];
  }
  return out;
}

FaceLattice face_lattice(const ExactPolytope& p, const Limits& limits) {
  FaceLattice out;
  out.vertices = enumerate_vertices(p, limits);
  const std::size_t nv = out.vertices.size();
  if (nv == 0) return out;

  std::vector<VertexSet> generators;
  for (const auto& h : p.inequalities) {
    VertexSet tight(nv);
    for (std::size_t v = 0; v < nv; ++v)
      if (h.tight_at(out.vertices[v])) tight.set(v);
    if (tight.any()) generators.push_back(std::move(tight));
  }

  std::set<VertexSet> seen;
  std::vector<VertexSet> work;
  auto add = [&](VertexSet s) {
    if (s.none()) return;
    if (seen.insert(s).second) work.push_back(std::move(s));
  };
  add(VertexSet(nv).set());
  for (const auto& g : generators) add(g);
  while (!work.empty()) {
    const VertexSet face = std::move(work.back());
    work.pop_back();
    for (const auto& g : generators) add(face & g);
  }

  for (const auto& s : seen) {
    std::vector<Point> pts;
    for (std::size_t v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) pts.push_back(out.vertices[v]);
    out.faces.push_back(Face{s, affine_dimension(pts)});
  }
  std::stable_sort(out.faces.begin(), out.faces.end(), [](const Face& a, const Face& b) { return a.dim < b.dim; });

  out.superfaces.resize(out.faces.size());
  for (std::size_t i = 0; i < out.faces.size(); ++i)
    for (std::size_t j = 0; j < out.faces.size(); ++j)
      if (i != j && out.faces[i].vertices.is_proper_subset_of(out.faces[j].vertices)) out.superfaces[i].push_back(j);
  return out;
}

GeomCell realize_cell(const MarkedPoset& mp, const AdmissibleChain& c) { return realize_cell(mp, c, hrep(mp)); }

GeomCell realize_cell(const MarkedPoset& mp, const AdmissibleChain& c, const ExactPolytope& ambient) {
  GeomCell cell{c, Point(mp.size()), {}, 0, {}};
  const auto& blocks = c.blocks();
  std::size_t i = 0;
  while (i < blocks.size()) {
    if (blocks[i].is_marked()) {
      for (int x : blocks[i].members.elements()) cell.full_point[x] = *blocks[i].value;
      ++i;
      continue;
    }
    // Run of unmarked blocks [i, j) strictly between two marked blocks.
    std::size_t j = i;
    while (j < blocks.size() && !blocks[j].is_marked()) ++j;
    assert(i > 0 && j < blocks.size());
    const Rational& lo = *blocks[i - 1].value;
    const Rational& hi = *blocks[j].value;
    const Rational parts = static_cast<long>(j - i + 1);
    for (std::size_t k = i; k < j; ++k) {
      const Rational v = lo + (hi - lo) * static_cast<long>(k - i + 1) / parts;
      for (int x : blocks[k].members.elements()) cell.full_point[x] = v;
    }
    i = j;
  }

  for (int x : ambient.vars) cell.rel_interior_point.push_back(cell.full_point[x]);
  cell.carrier = ambient.tight_set(cell.rel_interior_point);

  // At a relative-interior point the tight rows of the cell's own system are
  // exactly its implicit equalities.
  const ExactPolytope own = cell_system(mp, c.chain());
  std::vector<std::vector<Rational>> equalities;
  for (std::size_t r : own.tight_set(cell.rel_interior_point)) equalities.push_back(own.inequalities[r].coefficients);
  cell.dim = own.ambient_dim() - static_cast<int>(rational_rank(std::move(equalities)));
  return cell;
}

CochainComplex build_geometric_complex(const MarkedPoset& mp, const Limits& limits) {
  const ExactPolytope ambient = hrep(mp);
  if (ambient.ambient_dim() > limits.max_oracle_vars)
    throw Error(ErrorKind::SizeLimit, "geometric complex capped at " + std::to_string(limits.max_oracle_vars) +
                                          " variables");
  const ChainEnumeration chains = enumerate_admissible_chains(mp, limits);

  std::vector<std::vector<GeomCell>> cells(chains.by_dim.size());
  for (std::size_t i = 0; i < chains.by_dim.size(); ++i)
    for (const auto& c : chains.by_dim[i]) cells[i].push_back(realize_cell(mp, c, ambient));

  CochainComplex out;
  out.basis = chains.by_dim;
  for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
    GF2Matrix delta(cells[i + 1].size(), cells[i].size());
    for (std::size_t col = 0; col < cells[i].size(); ++col) {
      const GeomCell& sigma = cells[i][col];
      for (std::size_t row = 0; row < cells[i + 1].size(); ++row) {
        const GeomCell& tau = cells[i + 1][row];
        if (tau.dim == sigma.dim + 1 && tau.carrier == sigma.carrier &&
            sigma.source.chain().subchain_of(tau.source.chain()))
          delta.set(row, col);
      }
    }
    out.deltas.push_back(std::move(delta));
  }
  return out;
}

bool verify_intersection_lemma(const MarkedPoset& mp, const AdmissibleChain& a, const AdmissibleChain& b,
                               const Limits& limits) {
  ExactPolytope combined = cell_system(mp, a.chain());
  const ExactPolytope other = cell_system(mp, b.chain());
  combined.inequalities.insert(combined.inequalities.end(), other.inequalities.begin(), other.inequalities.end());
  const auto combined_vertices = enumerate_vertices(combined, limits);

  const IdealChain common = intersect(a.chain(), b.chain());
  if (!is_admissible(mp, common)) return combined_vertices.empty();
  const auto expected = enumerate_vertices(cell_system(mp, common), limits);
  return !expected.empty() && combined_vertices == expected;
}

bool SubdivisionHyperplane::contains(const Point& full_point) const {
  if (other) return full_point[element] == full_point[*other];
  return full_point[element] == *value;
}

std::string SubdivisionHyperplane::describe(const Poset& poset) const {
  const std::string lhs = "x_" + poset.label(element);
  if (other) return lhs + " = x_" + poset.label(*other);
  return lhs + " = " + format_rational(*value);
}

std::vector<SubdivisionHyperplane> subdivision_hyperplanes(const MarkedPoset& mp) {
  const Poset& poset = mp.poset();
  std::vector<SubdivisionHyperplane> out;
  std::set<std::pair<int, Rational>> pinned;
  for (int u = 0; u < mp.size(); ++u) {
    if (mp.is_marked(u)) continue;
    for (int v = 0; v < mp.size(); ++v) {
      if (v == u || poset.comparable(u, v)) continue;
      if (!mp.is_marked(v)) {
        if (u < v) out.push_back(SubdivisionHyperplane{u, v, std::nullopt});
      } else if (pinned.emplace(u, mp.value(v)).second) {
        out.push_back(SubdivisionHyperplane{u, std::nullopt, mp.value(v)});
      }
    }
  }
  return out;
}

}  // namespace mopf
