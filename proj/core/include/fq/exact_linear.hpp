#pragma once

#include <map>
#include <vector>

#include "fq/numbers.hpp"
#include "fq/quiver.hpp"
#include "fq/rational.hpp"

namespace fq {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;

// Basis of the right null space {x : m x = 0}, returned as rows in reduced
// echelon form (each row's leading entry is 1 in its free column), sorted by
// leading column.  Elimination is fraction-free (denominators are cleared
// per row, then Bareiss pivoting keeps all intermediate values integral).
Mat nullspace(const Mat& m);

// Straightforward rational Gauss-Jordan elimination; an independent cross
// check for nullspace.
Mat nullspace_naive(const Mat& m);

Mat transpose(const Mat& m);

// Stable insertion-order index for basis elements.
template <class B, class Less = std::less<B>>
class BasisIndex {
 public:
  int id(const B& b) {
    auto [it, inserted] = index_.try_emplace(b, static_cast<int>(elems_.size()));
    if (inserted) elems_.push_back(b);
    return it->second;
  }
  bool has(const B& b) const { return index_.count(b) != 0; }
  const B& at(int i) const { return elems_.at(i); }
  int size() const { return static_cast<int>(elems_.size()); }

 private:
  std::map<B, int, Less> index_;
  std::vector<B> elems_;
};

// Subspace of a fixed-dimensional rational vector space, kept as rows in
// reduced echelon form so membership and growth tests are cheap.
class Subspace {
 public:
  explicit Subspace(int ambient = 0) : ambient_(ambient) {}

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const Mat& rows() const { return rows_; }

  // Reduces v by the current rows; inserts the remainder when nonzero.
  // Returns true when the dimension grew.
  bool insert(Vec v);
  bool contains(Vec v) const;

 private:
  Vec reduce(Vec v) const;

  int ambient_;
  Mat rows_;               // reduced echelon form
  std::vector<int> lead_;  // leading column per row, strictly increasing
};

// --- Graded kernel and ideals ------------------------------------------------
//
// All vector data is graded by (source, dest) vertex pairs; coordinates in a
// grade are taken in the word-sorted path basis of the path table.

struct GradedSubspace {
  std::map<Grade, Subspace> by_grade;  // only grades with positive dimension

  int dim(const Grade& g) const;
  long total_dim() const;
};

struct KernelResult {
  int n = 0;
  PathTable table;
  GradedSubspace kernel;

  long dim_paths() const { return table.total_paths(); }
  long dim_kernel() const { return kernel.total_dim(); }
  long dim_quotient() const { return dim_paths() - dim_kernel(); }
};

// Kernel of the composite "difference operator after iota" on the path
// algebra, grade by grade: rows are the leaf-word expansions of the paths of
// a grade, and the kernel collects the vanishing combinations.
KernelResult kernel_delta_iota(int n);

// Two-sided ideal generated by homogeneous elements (given per grade as
// coefficient vectors in the grade's path basis): saturates by multiplying
// with single edges on both sides until the grade dimensions stabilize.
GradedSubspace ideal_generated(const std::map<Grade, Mat>& generators,
                               const PathTable& table);

// Vector of a path-sum inside its grade; checks homogeneity.
std::pair<Grade, Vec> grade_vector(const PathSum& s, const PathTable& table);

// Number of generators in a minimal homogeneous generating set of the ideal:
// the dimension of ideal / (edges * ideal + ideal * edges), summed over
// grades.  Requires every element of the ideal to have length >= 2.
struct MinimalCount {
  long total = 0;
  std::map<Grade, int> by_grade;  // nonzero entries only
};
MinimalCount minimal_generator_count(const GradedSubspace& ideal,
                                     const PathTable& table);

// Membership of a homogeneous path-sum in a graded subspace.
bool membership(const PathSum& s, const GradedSubspace& space,
                const PathTable& table);

}  // namespace fq
