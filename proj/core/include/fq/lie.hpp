#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "fq/forest.hpp"
#include "fq/quiver.hpp"

namespace fq {

// Path read off a labeled forest: the word's i-th symbol records the child
// values of the node labeled i, and the path ends at the forest's part-value
// partition.  For forests in the image of iota this recovers the path.
Path p_map(const Forest& labeled);

// Single exchange moves between labeled forests: two subtrees of equal value
// may be exchanged when each one's parent label (where present) is smaller
// than the other's root label (where present).  Part order is immaterial, so
// results are reported as labeled class keys.
std::vector<Forest> wiggle_neighbors(const Forest& labeled);

// Closure of a labeled class under exchange moves (exponential; meant for
// tests and small inputs).
std::set<Forest, ForestOrd> wiggle_closure(const Forest& labeled);

// --- Alignment rendering ---------------------------------------------------
//
// A tree is rewritten modulo antisymmetry and the Jacobi identity into a
// combination of aligned trees (value(left) < value(right) at every node).
// Every step is recorded as an explicit generator so the rewrite can be
// replayed: input - output == sum of coeff * generator.

enum class StepKind { Swap, Jacobi, Drop };

struct RenderStep {
  StepKind kind;
  Rat coeff;
  TreeSum generator;
};

struct RenderedTree {
  TreeSum sum;
  std::vector<RenderStep> steps;
};

struct RenderPolicy {
  // When set, the first rewrite of a term whose root has equal child values
  // (and distinct children) swaps instead of rotating.  Used as a fallback
  // when the default rendering of a Jacobi element cancels to zero.
  bool swap_first_at_root = false;
};

RenderedTree render_tree(const TreeP& t, RenderPolicy policy = {});

// --- Jacobi elements ---------------------------------------------------------
//
// jacobi(X, Y, Z) = (X,(Y,Z)) + (Z,(X,Y)) + (Y,(Z,X)).  Two families of
// shapes are used: plain leaves x < y < z with x+y != z, and a node (x1,x2)
// with x1 < x2 over leaves y < z where x1+x2 is y, z or y+z.

struct JacobiShape {
  bool composite = false;  // true: first slot is the node (x1, x2)
  int x1 = 0, x2 = 0;      // only for composite shapes
  int x = 0;               // only for plain shapes
  int y = 0, z = 0;

  int value() const { return (composite ? x1 + x2 : x) + y + z; }
  std::string display() const;
};

std::vector<JacobiShape> jacobi_shapes(int max_value);

// The three terms of the Jacobi element for the shape.
std::vector<TreeP> jacobi_terms(const JacobiShape& shape);

// Renders the Jacobi element into aligned trees; retries with the fallback
// policy when the default rendering cancels; nullopt when both cancel.
std::optional<TreeSum> render_jacobi(const JacobiShape& shape);

// --- Main factorization ------------------------------------------------------
//
// Writes the unlabeled class of an aligned, nondecreasing forest as a
// rational combination of paths whose erased iota image is exactly that
// class: erase_class_sum(iota(mf(x))) == [x].  Results are cached per class.

class MainFactorizer {
 public:
  PathSum factor(const Forest& x);  // x aligned, nondecreasing, unlabeled

 private:
  std::map<Forest, PathSum, ForestOrd> cache_;
};

std::string to_string(StepKind k);

}  // namespace fq
