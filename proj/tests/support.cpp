#include "support.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace mopf::test {

Relation closure(int n, const std::vector<std::pair<int, int>>& covers) {
  Relation r;
  r.n = n;
  r.less.assign(n, std::vector<bool>(n, false));
  for (auto [a, b] : covers) r.less[a][b] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (r.less[i][k] && r.less[k][j]) r.less[i][j] = true;
  return r;
}

std::vector<std::pair<int, int>> hasse(const Relation& r) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < r.n; ++a)
    for (int b = 0; b < r.n; ++b) {
      if (!r.less[a][b]) continue;
      bool between = false;
      for (int c = 0; c < r.n && !between; ++c) between = r.less[a][c] && r.less[c][b];
      if (!between) out.emplace_back(a, b);
    }
  return out;
}

std::vector<std::uint64_t> brute_ideals(const Relation& r) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << r.n); ++s) {
    bool ok = true;
    for (int b = 0; b < r.n && ok; ++b)
      if ((s >> b) & 1U)
        for (int a = 0; a < r.n && ok; ++a)
          if (r.less[a][b] && !((s >> a) & 1U)) ok = false;
    if (ok) out.push_back(s);
  }
  return out;
}

std::size_t brute_linear_extension_count(const Relation& r) {
  std::vector<int> perm(r.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t count = 0;
  do {
    bool ok = true;
    for (int i = 0; i < r.n && ok; ++i)
      for (int j = i + 1; j < r.n && ok; ++j)
        if (r.less[perm[j]][perm[i]]) ok = false;
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

std::vector<Relation> posets_up_to_isomorphism(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  std::set<std::uint64_t> seen;
  std::vector<Relation> out;
  std::vector<int> perm(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    Relation r;
    r.n = n;
    r.less.assign(n, std::vector<bool>(n, false));
    for (std::size_t p = 0; p < pairs.size(); ++p)
      if ((mask >> p) & 1U) r.less[pairs[p].first][pairs[p].second] = true;
    bool transitive = true;
    for (int a = 0; a < n && transitive; ++a)
      for (int b = 0; b < n && transitive; ++b)
        for (int c = 0; c < n && transitive; ++c)
          if (r.less[a][b] && r.less[b][c] && !r.less[a][c]) transitive = false;
    if (!transitive) continue;

    std::uint64_t best = ~std::uint64_t{0};
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::uint64_t code = 0;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (r.less[a][b]) code |= std::uint64_t{1} << (perm[a] * n + perm[b]);
      best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (seen.insert(best).second) out.push_back(std::move(r));
  }
  return out;
}

MarkedPoset to_marked(const RawInstance& s) {
  std::vector<std::string> labels;
  for (int i = 0; i < s.order.n; ++i) labels.push_back("e" + std::to_string(i));
  std::vector<std::pair<std::string, Rational>> marks;
  for (int i = 0; i < s.order.n; ++i)
    if (s.marked[i]) marks.emplace_back(labels[i], s.value[i]);
  return build_marked_poset(build_poset_indexed(labels, hasse(s.order)), marks);
}

namespace {

bool is_extremal(const Relation& r, int x) {
  bool has_below = false;
  bool has_above = false;
  for (int y = 0; y < r.n; ++y) {
    has_below = has_below || r.less[y][x];
    has_above = has_above || r.less[x][y];
  }
  return !has_below || !has_above;
}

void markings_rec(const Relation& r, const std::vector<Rational>& palette, int x, RawInstance& cur, std::vector<RawInstance>& out) {
  if (x == r.n) {
    out.push_back(cur);
    return;
  }
  if (!is_extremal(r, x)) {
    cur.marked[x] = false;
    markings_rec(r, palette, x + 1, cur, out);
  }
  for (const Rational& v : palette) {
    bool ok = true;
    for (int y = 0; y < x && ok; ++y) {
      if (!cur.marked[y]) continue;
      if (r.less[y][x] && cur.value[y] > v) ok = false;
      if (r.less[x][y] && v > cur.value[y]) ok = false;
    }
    if (!ok) continue;
    cur.marked[x] = true;
    cur.value[x] = v;
    markings_rec(r, palette, x + 1, cur, out);
  }
  cur.marked[x] = false;
  cur.value[x] = 0;
}

}  // namespace

std::vector<RawInstance> all_markings(const Relation& r, const std::vector<Rational>& palette) {
  RawInstance cur{r, std::vector<bool>(r.n, false), std::vector<Rational>(r.n, Rational(0))};
  std::vector<RawInstance> out;
  markings_rec(r, palette, 0, cur, out);
  return out;
}

RawInstance random_instance(std::mt19937_64& rng, int max_n) {
  const int n = std::uniform_int_distribution<int>(1, max_n)(rng);
  const double density = std::uniform_real_distribution<double>(0.1, 0.6)(rng);
  std::bernoulli_distribution edge(density);
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (edge(rng)) covers.emplace_back(i, j);

  RawInstance s{closure(n, covers), std::vector<bool>(n, false), std::vector<Rational>(n, Rational(0))};
  std::bernoulli_distribution extra_mark(0.3);
  std::uniform_int_distribution<int> half_steps(0, 4);
  // Index order is a linear extension, so lifting each value to the largest
  // marked value below it makes the marking order preserving.
  for (int x = 0; x < n; ++x) {
    s.marked[x] = is_extremal(s.order, x) || extra_mark(rng);
    if (!s.marked[x]) continue;
    s.value[x] = Rational(half_steps(rng), 2);
    s.value[x].canonicalize();
    for (int y = 0; y < x; ++y)
      if (s.marked[y] && s.order.less[y][x] && s.value[y] > s.value[x]) s.value[x] = s.value[y];
  }
  return s;
}

std::vector<RawChain> brute_ideal_chains(const RawInstance& s) {
  const auto ideals = brute_ideals(s.order);
  const std::uint64_t full = (std::uint64_t{1} << s.order.n) - 1;
  std::vector<RawChain> out;
  RawChain cur{0};
  auto rec = [&](auto& self) -> void {
    const std::uint64_t last = cur.back();
    if (last == full) {
      out.push_back(cur);
      return;
    }
    for (std::uint64_t next : ideals) {
      if (next == last || (last & ~next) != 0) continue;
      cur.push_back(next);
      self(self);
      cur.pop_back();
    }
  };
  if (s.order.n == 0) return {cur};
  rec(rec);
  return out;
}

bool brute_admissible(const RawInstance& s, const RawChain& c) {
  std::optional<Rational> previous;
  for (std::size_t i = 1; i < c.size(); ++i) {
    const std::uint64_t block = c[i] & ~c[i - 1];
    std::set<Rational> values;
    for (int x = 0; x < s.order.n; ++x)
      if (((block >> x) & 1U) && s.marked[x]) values.insert(s.value[x]);
    if (values.size() > 1) return false;
    if (values.size() == 1) {
      if (previous && !(*previous < *values.begin())) return false;
      previous = *values.begin();
    }
  }
  return true;
}

int brute_dim(const RawInstance& s, const RawChain& c) {
  int dim = 0;
  for (std::size_t i = 1; i < c.size(); ++i) {
    const std::uint64_t block = c[i] & ~c[i - 1];
    bool has_mark = false;
    for (int x = 0; x < s.order.n; ++x) has_mark = has_mark || (((block >> x) & 1U) && s.marked[x]);
    if (!has_mark) ++dim;
  }
  return dim;
}

BruteComplex brute_complex(const RawInstance& s) {
  const auto ideals = brute_ideals(s.order);
  const std::set<std::uint64_t> ideal_set(ideals.begin(), ideals.end());

  BruteComplex out;
  std::map<RawChain, std::pair<int, std::size_t>> where;
  for (const auto& c : brute_ideal_chains(s)) {
    if (!brute_admissible(s, c)) continue;
    const int d = brute_dim(s, c);
    if (static_cast<int>(out.basis.size()) <= d) out.basis.resize(d + 1);
    out.basis[d].push_back(c);
  }
  for (auto& b : out.basis) std::sort(b.begin(), b.end());
  for (std::size_t d = 0; d < out.basis.size(); ++d)
    for (std::size_t i = 0; i < out.basis[d].size(); ++i) where[out.basis[d][i]] = {static_cast<int>(d), i};

  auto inserted = [](RawChain c, std::size_t k, std::uint64_t j) {
    c.insert(c.begin() + static_cast<std::ptrdiff_t>(k), j);
    return c;
  };
  auto admissible_of_dim = [&](const RawChain& c, int d) {
    auto it = where.find(c);
    return it != where.end() && it->second.first == d;
  };

  if (out.basis.size() > 1) out.columns.resize(out.basis.size() - 1);
  for (std::size_t d = 0; d + 1 < out.basis.size(); ++d) {
    for (const auto& c : out.basis[d]) {
      std::set<std::size_t> rows;
      for (std::size_t k = 1; k < c.size(); ++k) {
        const std::uint64_t lo = c[k - 1];
        const std::uint64_t hi = c[k];
        for (std::uint64_t j : ideals) {
          if (j == lo || j == hi || (lo & ~j) != 0 || (j & ~hi) != 0) continue;
          const RawChain with_j = inserted(c, k, j);
          if (!admissible_of_dim(with_j, static_cast<int>(d) + 1)) continue;
          const std::uint64_t conj = lo | (hi & ~j);
          if (!ideal_set.count(conj)) continue;
          if (!admissible_of_dim(inserted(c, k, conj), static_cast<int>(d) + 1)) continue;
          rows.insert(where[with_j].second);
        }
      }
      out.columns[d].emplace_back(rows.begin(), rows.end());
    }
  }
  return out;
}

std::size_t naive_gf2_rank(std::vector<std::vector<std::uint8_t>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && !m[pivot][col]) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r)
      if (r != rank && m[r][col])
        for (std::size_t k = 0; k < cols; ++k) m[r][k] ^= m[rank][k];
    ++rank;
  }
  return rank;
}

std::vector<std::size_t> brute_fvector(const BruteComplex& c) {
  const std::size_t degrees = c.basis.size();
  std::vector<std::vector<std::vector<std::uint8_t>>> dense;
  for (std::size_t d = 0; d + 1 < degrees; ++d) {
    std::vector<std::vector<std::uint8_t>> m(c.basis[d + 1].size(), std::vector<std::uint8_t>(c.basis[d].size(), 0));
    for (std::size_t col = 0; col < c.columns[d].size(); ++col)
      for (std::size_t row : c.columns[d][col]) m[row][col] = 1;
    dense.push_back(std::move(m));
  }
  for (std::size_t d = 0; d + 1 < dense.size(); ++d) {
    const auto& a = dense[d];
    const auto& b = dense[d + 1];
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < c.basis[d].size(); ++j) {
        int sum = 0;
        for (std::size_t k = 0; k < a.size(); ++k) sum ^= b[i][k] & a[k][j];
        if (sum) return {};
      }
  }
  std::vector<std::size_t> rank(dense.size());
  for (std::size_t d = 0; d < dense.size(); ++d) rank[d] = naive_gf2_rank(dense[d]);
  std::vector<std::size_t> f(degrees);
  for (std::size_t d = 0; d < degrees; ++d) {
    f[d] = c.basis[d].size();
    if (d < rank.size()) f[d] -= rank[d];
    if (d > 0) f[d] -= rank[d - 1];
  }
  return f;
}

std::vector<Row> cell_rows(const RawInstance& s, const RawChain& c) {
  const int n = s.order.n;
  std::vector<Row> rows;
  auto add = [&](int plus, int minus, const Rational& bound) {
    Row r{std::vector<Rational>(n, Rational(0)), bound};
    if (plus >= 0) r.a[plus] += 1;
    if (minus >= 0) r.a[minus] -= 1;
    rows.push_back(std::move(r));
  };
  for (int x = 0; x < n; ++x) {
    if (!s.marked[x]) continue;
    add(x, -1, s.value[x]);
    add(-1, x, -s.value[x]);
  }
  int previous = -1;
  for (std::size_t i = 1; i < c.size(); ++i) {
    const std::uint64_t block = c[i] & ~c[i - 1];
    int first = -1;
    for (int x = 0; x < n; ++x) {
      if (!((block >> x) & 1U)) continue;
      if (first < 0) {
        first = x;
      } else {
        add(first, x, Rational(0));
        add(x, first, Rational(0));
      }
    }
    if (previous >= 0) add(previous, first, Rational(0));
    previous = first;
  }
  return rows;
}

namespace {

void normalize(Row& r) {
  for (const Rational& v : r.a) {
    if (sgn(v) == 0) continue;
    const Rational scale = abs(v);
    for (Rational& w : r.a) w /= scale;
    r.b /= scale;
    return;
  }
}

}  // namespace

bool fm_feasible(std::vector<Row> rows, int vars) {
  std::vector<bool> done(vars, false);
  for (int step = 0; step < vars; ++step) {
    // Eliminate the variable that creates the fewest new rows.
    int j = -1;
    long best = 0;
    for (int v = 0; v < vars; ++v) {
      if (done[v]) continue;
      long p = 0, n = 0;
      for (const Row& r : rows) {
        const int sg = sgn(r.a[v]);
        p += sg > 0;
        n += sg < 0;
      }
      if (j < 0 || p * n - p - n < best) {
        j = v;
        best = p * n - p - n;
      }
    }
    done[j] = true;
    std::vector<Row> pos, neg, next;
    for (auto& r : rows) {
      const int s = sgn(r.a[j]);
      (s > 0 ? pos : s < 0 ? neg : next).push_back(std::move(r));
    }
    for (const Row& p : pos)
      for (const Row& q : neg) {
        const Rational cp = -q.a[j];
        const Rational cq = p.a[j];
        Row r{std::vector<Rational>(vars), cp * p.b + cq * q.b};
        for (int k = 0; k < vars; ++k) r.a[k] = cp * p.a[k] + cq * q.a[k];
        r.a[j] = 0;
        next.push_back(std::move(r));
      }
    // Constant rows are decided on the spot.
    std::vector<Row> live;
    for (Row& r : next) {
      if (std::all_of(r.a.begin(), r.a.end(), [](const Rational& v) { return sgn(v) == 0; })) {
        if (sgn(r.b) < 0) return false;
        continue;
      }
      normalize(r);
      live.push_back(std::move(r));
    }
    next = std::move(live);
    std::sort(next.begin(), next.end(), [](const Row& x, const Row& y) {
      return x.a != y.a ? x.a < y.a : x.b < y.b;
    });
    // Among rows with the same left-hand side only the tightest bound matters.
    std::vector<Row> kept;
    for (Row& r : next)
      if (kept.empty() || kept.back().a != r.a) kept.push_back(std::move(r));
    rows = std::move(kept);
  }
  return std::all_of(rows.begin(), rows.end(), [](const Row& r) { return sgn(r.b) >= 0; });
}

bool difference_feasible(const std::vector<Row>& rows, int vars) {
  mpz_class scale = 1;
  for (const Row& r : rows) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), r.b.get_den_mpz_t());

  // Node `vars` is the origin; the row x_u - x_v <= b is the edge v -> u.
  const int n = vars + 1;
  constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
  std::vector<std::vector<long long>> d(n, std::vector<long long>(n, kInf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (const Row& r : rows) {
    int plus = vars, minus = vars, terms = 0;
    for (int k = 0; k < vars; ++k) {
      if (sgn(r.a[k]) == 0) continue;
      ++terms;
      if (r.a[k] == 1) plus = k;
      else if (r.a[k] == -1) minus = k;
      else throw std::invalid_argument("not a difference constraint");
    }
    if (terms > 2 || (terms == 2 && (plus == vars || minus == vars)))
      throw std::invalid_argument("not a difference constraint");
    const mpq_class scaled = r.b * scale;
    const long long w = mpz_class(scaled.get_num() / scaled.get_den()).get_si();
    d[minus][plus] = std::min(d[minus][plus], w);
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][k] < kInf && d[k][j] < kInf) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (int i = 0; i < n; ++i)
    if (d[i][i] < 0) return false;
  return true;
}

std::string describe(const RawInstance& s) {
  std::ostringstream out;
  out << "elements:";
  for (int i = 0; i < s.order.n; ++i) out << " e" << i;
  out << "\n";
  for (auto [a, b] : hasse(s.order)) out << "cover: e" << a << " e" << b << "\n";
  for (int i = 0; i < s.order.n; ++i)
    if (s.marked[i]) out << "marked: e" << i << " " << format_rational(s.value[i]) << "\n";
  return out.str();
}

}  // namespace mopf::test
