#include "fq/exact_linear.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace fq {

// --- Subspace ---------------------------------------------------------------

Vec Subspace::reduce(Vec v) const {
  FQ_CHECK(static_cast<int>(v.size()) == ambient_, "vector dimension mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rat& c = v[lead_[r]];
    if (c == 0) continue;
    Rat factor = c;
    const Vec& row = rows_[r];
    for (int j = lead_[r]; j < ambient_; ++j) {
      if (row[j] != 0) v[j] -= factor * row[j];
    }
  }
  return v;
}

bool Subspace::insert(Vec v) {
  v = reduce(std::move(v));
  int lead = -1;
  for (int j = 0; j < ambient_; ++j) {
    if (v[j] != 0) {
      lead = j;
      break;
    }
  }
  if (lead < 0) return false;
  Rat inv = 1 / v[lead];
  for (int j = lead; j < ambient_; ++j) v[j] *= inv;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Rat c = rows_[r][lead];
    if (c == 0) continue;
    for (int j = lead; j < ambient_; ++j) rows_[r][j] -= c * v[j];
  }
  auto pos = std::lower_bound(lead_.begin(), lead_.end(), lead);
  std::size_t at = static_cast<std::size_t>(pos - lead_.begin());
  lead_.insert(pos, lead);
  rows_.insert(rows_.begin() + at, std::move(v));
  return true;
}

bool Subspace::contains(Vec v) const {
  v = reduce(std::move(v));
  return std::all_of(v.begin(), v.end(), [](const Rat& c) { return c == 0; });
}

// --- Null spaces --------------------------------------------------------------

Mat transpose(const Mat& m) {
  if (m.empty()) return {};
  Mat out(m[0].size(), Vec(m.size(), Rat(0)));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) out[j][i] = m[i][j];
  }
  return out;
}

namespace {

Mat canonical_rows(const std::vector<Vec>& basis, int cols) {
  Subspace s(cols);
  for (const auto& v : basis) s.insert(v);
  return s.rows();
}

// Basis of the null space given a row echelon form with known pivot columns:
// one vector per free column, solved by back substitution.
Mat nullbasis_from_echelon(const Mat& ech, const std::vector<int>& pivots,
                           int cols) {
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  Mat basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec x(cols, Rat(0));
    x[f] = 1;
    for (int r = static_cast<int>(pivots.size()) - 1; r >= 0; --r) {
      Rat acc(0);
      for (int j = pivots[r] + 1; j < cols; ++j) {
        if (ech[r][j] != 0 && x[j] != 0) acc += ech[r][j] * x[j];
      }
      x[pivots[r]] = -acc / ech[r][pivots[r]];
    }
    basis.push_back(std::move(x));
  }
  return canonical_rows(basis, cols);
}

}  // namespace

Mat nullspace(const Mat& m) {
  FQ_CHECK(!m.empty(), "nullspace needs at least one row to fix the width");
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());

  // Clear denominators row by row so that Bareiss elimination stays integral.
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (int i = 0; i < rows; ++i) {
    FQ_CHECK(static_cast<int>(m[i].size()) == cols, "ragged matrix");
    mpz_class lcm = 1;
    for (int j = 0; j < cols; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                                           m[i][j].get_den_mpz_t());
    for (int j = 0; j < cols; ++j) {
      mpq_class scaled = m[i][j] * Rat(lcm);
      FQ_CHECK(scaled.get_den() == 1, "denominator clearing failed");
      a[i][j] = scaled.get_num();
    }
  }

  std::vector<int> pivots;
  mpz_class prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i) {
      if (a[i][c] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[r], a[pivot]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        mpz_class num = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_class q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
                    prev.get_mpz_t());
        FQ_CHECK(rem == 0, "Bareiss division must be exact");
        a[i][j] = q;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }

  Mat ech(pivots.size(), Vec(cols, Rat(0)));
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    for (int j = 0; j < cols; ++j) ech[i][j] = Rat(a[i][j]);
  }
  return nullbasis_from_echelon(ech, pivots, cols);
}

Mat nullspace_naive(const Mat& m) {
  FQ_CHECK(!m.empty(), "nullspace needs at least one row to fix the width");
  Mat a = m;
  int rows = static_cast<int>(a.size());
  int cols = static_cast<int>(a[0].size());
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i) {
      if (a[i][c] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[r], a[pivot]);
    Rat inv = 1 / a[r][c];
    for (int j = c; j < cols; ++j) a[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  a.resize(pivots.size(), Vec(cols, Rat(0)));
  return nullbasis_from_echelon(a, pivots, cols);
}

// --- Graded kernel and ideals ------------------------------------------------

int GradedSubspace::dim(const Grade& g) const {
  auto it = by_grade.find(g);
  return it == by_grade.end() ? 0 : it->second.dim();
}

long GradedSubspace::total_dim() const {
  long total = 0;
  for (const auto& [g, s] : by_grade) total += s.dim();
  return total;
}

KernelResult kernel_delta_iota(int n) {
  KernelResult out;
  out.n = n;
  out.table = build_path_table(n);
  for (const auto& [g, paths] : out.table.grades) {
    const auto& [source, dest] = g;
    std::vector<Composition> columns = arrangements_of(source);
    std::map<Composition, int> col_of;
    for (std::size_t j = 0; j < columns.size(); ++j)
      col_of.emplace(columns[j], static_cast<int>(j));

    Mat m(paths.size(), Vec(columns.size(), Rat(0)));
    for (std::size_t i = 0; i < paths.size(); ++i) {
      WordSum w = delta_iota(paths[i]);
      for (const auto& [word, c] : w.terms()) {
        auto it = col_of.find(word);
        FQ_CHECK(it != col_of.end(),
                 "leaf words must rearrange the grade's source");
        m[i][it->second] = c;
      }
    }

    Mat null_rows = nullspace(transpose(m));
    if (null_rows.empty()) continue;
    Subspace s(static_cast<int>(paths.size()));
    for (auto& row : null_rows) s.insert(std::move(row));
    out.kernel.by_grade.emplace(g, std::move(s));
  }
  return out;
}

namespace {

// Coefficient vector of (path at index k) * e, resp. e * (path at index k),
// transported into the target grade's basis.
void push_mapped_rows(const Mat& rows, const std::vector<Path>& paths,
                      const std::function<Path(const Path&)>& act,
                      const PathTable& table, const Grade& target,
                      std::vector<Vec>& out) {
  auto it = table.grades.find(target);
  FQ_CHECK(it != table.grades.end(), "mapped grade must exist");
  int width = static_cast<int>(it->second.size());
  for (const auto& row : rows) {
    Vec v(width, Rat(0));
    bool nonzero = false;
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k] == 0) continue;
      Path moved = act(paths[k]);
      v[table.index_of(moved)] += row[k];
      nonzero = true;
    }
    if (nonzero) out.push_back(std::move(v));
  }
}

}  // namespace

GradedSubspace ideal_generated(const std::map<Grade, Mat>& generators,
                               const PathTable& table) {
  GradedSubspace ideal;
  std::deque<Grade> work;
  auto insert_rows = [&](const Grade& g, const std::vector<Vec>& rows) {
    if (rows.empty()) return;
    auto it = table.grades.find(g);
    FQ_CHECK(it != table.grades.end(), "generator grade must exist");
    auto [slot, created] = ideal.by_grade.try_emplace(
        g, Subspace(static_cast<int>(it->second.size())));
    bool grew = false;
    for (const auto& row : rows) {
      if (slot->second.insert(row)) grew = true;
    }
    if (grew) work.push_back(g);
  };

  for (const auto& [g, rows] : generators) {
    std::vector<Vec> vs(rows.begin(), rows.end());
    insert_rows(g, vs);
  }

  while (!work.empty()) {
    Grade g = work.front();
    work.pop_front();
    auto it = ideal.by_grade.find(g);
    if (it == ideal.by_grade.end()) continue;
    const auto& [source, dest] = g;
    const auto& paths = table.grades.at(g);
    Mat rows = it->second.rows();  // snapshot: growth re-queues the grade

    for (const Edge& e : edges_from(dest)) {
      Grade target{source, e.dest()};
      std::vector<Vec> mapped;
      push_mapped_rows(
          rows, paths, [&](const Path& p) { return mul_edge_right(p, e); },
          table, target, mapped);
      insert_rows(target, mapped);
    }
    for (const Edge& e : edges_into(source)) {
      Grade target{e.source, dest};
      std::vector<Vec> mapped;
      push_mapped_rows(
          rows, paths, [&](const Path& p) { return mul_edge_left(e, p); },
          table, target, mapped);
      insert_rows(target, mapped);
    }
  }

  for (auto it = ideal.by_grade.begin(); it != ideal.by_grade.end();) {
    it = it->second.dim() == 0 ? ideal.by_grade.erase(it) : std::next(it);
  }
  return ideal;
}

std::pair<Grade, Vec> grade_vector(const PathSum& s, const PathTable& table) {
  FQ_CHECK(!s.is_zero(), "grade_vector needs a nonzero sum");
  const Path& first = s.terms().begin()->first;
  Grade g{first.source(), first.dest};
  auto it = table.grades.find(g);
  FQ_CHECK(it != table.grades.end(), "sum's grade must be in the table");
  Vec v(it->second.size(), Rat(0));
  for (const auto& [p, c] : s.terms()) {
    FQ_CHECK(Grade(p.source(), p.dest) == g, "sum must be grade-homogeneous");
    v[table.index_of(p)] = c;
  }
  return {g, v};
}

MinimalCount minimal_generator_count(const GradedSubspace& ideal,
                                     const PathTable& table) {
  MinimalCount out;
  for (const auto& [g, space] : ideal.by_grade) {
    const auto& [source, dest] = g;
    int grade_length =
        static_cast<int>(source.size()) - static_cast<int>(dest.size());
    FQ_CHECK(grade_length >= 2 || space.dim() == 0,
             "ideal must sit in radical square");
    const auto& paths = table.grades.at(g);
    Subspace boundary(static_cast<int>(paths.size()));

    // ideal * edge contributions ending at this grade.
    for (const Edge& e : edges_into(dest)) {
      Grade from{source, e.source};
      auto it = ideal.by_grade.find(from);
      if (it == ideal.by_grade.end()) continue;
      std::vector<Vec> mapped;
      push_mapped_rows(
          it->second.rows(), table.grades.at(from),
          [&](const Path& p) { return mul_edge_right(p, e); }, table, g,
          mapped);
      for (auto& v : mapped) {
        FQ_CHECK(space.contains(v), "ideal must absorb edge products");
        boundary.insert(std::move(v));
      }
    }
    // edge * ideal contributions.
    for (const Edge& e : edges_from(source)) {
      Grade from{e.dest(), dest};
      auto it = ideal.by_grade.find(from);
      if (it == ideal.by_grade.end()) continue;
      std::vector<Vec> mapped;
      push_mapped_rows(
          it->second.rows(), table.grades.at(from),
          [&](const Path& p) { return mul_edge_left(e, p); }, table, g,
          mapped);
      for (auto& v : mapped) {
        FQ_CHECK(space.contains(v), "ideal must absorb edge products");
        boundary.insert(std::move(v));
      }
    }

    int fresh = space.dim() - boundary.dim();
    FQ_CHECK(fresh >= 0, "boundary cannot exceed the ideal");
    if (fresh > 0) out.by_grade.emplace(g, fresh);
    out.total += fresh;
  }
  return out;
}

bool membership(const PathSum& s, const GradedSubspace& space,
                const PathTable& table) {
  if (s.is_zero()) return true;
  auto [g, v] = grade_vector(s, table);
  auto it = space.by_grade.find(g);
  if (it == space.by_grade.end()) {
    return std::all_of(v.begin(), v.end(),
                       [](const Rat& c) { return c == 0; });
  }
  return it->second.contains(v);
}

}  // namespace fq
