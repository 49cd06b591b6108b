#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fq/formal_sum.hpp"
#include "fq/numbers.hpp"

namespace fq {

// Immutable binary tree with positive integer leaves.  Internal nodes may
// carry a positive label; label 0 means "no label".  value caches the leaf
// sum, len the number of internal nodes.
struct Tree;
using TreeP = std::shared_ptr<const Tree>;

struct Tree {
  int value = 0;
  int len = 0;
  int label = 0;
  TreeP left, right;

  bool is_leaf() const { return left == nullptr; }
};

TreeP leaf(int value);
TreeP node(TreeP left, TreeP right, int label = 0);

// A forest is a sequence of trees (its parts).  A labeled forest of length l
// carries the labels 1..l on its internal nodes, decreasing toward the roots
// (every parent label is smaller than its children's labels).
using Forest = std::vector<TreeP>;

int length(const TreeP& t);
int length(const Forest& f);
int value(const Forest& f);

// Leaf word, read left to right across all parts.
Composition foliage(const Forest& f);
// Per-part leaf sums.
Composition squash(const Forest& f);

// The length-0 forest whose parts are the given values as bare leaves.
Forest forest_of_parts(const Composition& parts);

// --- Orders and equality -------------------------------------------------
//
// tree_less is the total order on unlabeled trees: smaller value first; at
// equal value the tree with MORE internal nodes comes first; at equal value
// and length, compare left children, then right children.  labeled_tree_less
// refines it by the label sequence in prefix order, so it is a total order
// on labeled trees as well.

bool tree_equal(const TreeP& a, const TreeP& b);        // labels included
bool tree_equal_shape(const TreeP& a, const TreeP& b);  // labels ignored
bool tree_less(const TreeP& a, const TreeP& b);
bool labeled_tree_less(const TreeP& a, const TreeP& b);

bool forest_equal(const Forest& a, const Forest& b);  // labels included
bool forest_less(const Forest& a, const Forest& b);   // lex by tree_less
bool labeled_forest_less(const Forest& a, const Forest& b);

struct TreeOrd {
  bool operator()(const TreeP& a, const TreeP& b) const {
    return labeled_tree_less(a, b);
  }
};
struct ForestOrd {
  bool operator()(const Forest& a, const Forest& b) const {
    return labeled_forest_less(a, b);
  }
};

using TreeSum = FormalSum<TreeP, TreeOrd>;
using ForestSum = FormalSum<Forest, ForestOrd>;
using WordSum = FormalSum<Composition>;

// --- Validation -----------------------------------------------------------

bool is_valid_labeled_forest(const Forest& f);
// Every internal node has value(left) < value(right).
bool is_aligned(const TreeP& t);
bool is_aligned(const Forest& f);
// Parts weakly increasing in tree_less.
bool is_nondecreasing(const Forest& f);
Forest nondecreasing_rep(Forest f);

// --- Labels ---------------------------------------------------------------

TreeP erase_labels(const TreeP& t);
Forest erase_labels(const Forest& f);
Forest shift_labels(const Forest& f, int delta);

// Canonical labeling: internal nodes are numbered in prefix order (node,
// left subtree, right subtree) within each part, parts left to right.
// Erasing the labels gives back the input.
Forest prefix_labeling(const Forest& f);

// --- Rearrangement classes -----------------------------------------------
//
// The class of a forest consists of all rearrangements of its parts (labels
// travel with their trees).  Classes are keyed by the canonical sorted
// arrangement.

Forest class_key_labeled(Forest f);
Forest class_key_unlabeled(Forest f);
// All distinct part rearrangements, each exactly once.
std::vector<Forest> class_members(const Forest& f);
long class_size_labeled(const Forest& f);
long class_size_unlabeled(const Forest& f);
// Index of the labeled class over the unlabeled one:
// class_size_labeled / class_size_unlabeled, always a positive integer.
long erase_multiplicity(const Forest& f);

// --- Composition product and factorization --------------------------------

// x * y is defined when foliage(x) == squash(y); the leaves of x are then
// replaced in order by the parts of y, and the labels of y are shifted up by
// length(x).
bool composable(const Forest& x, const Forest& y);
Forest bullet(const Forest& x, const Forest& y);

// Unique factorization of a labeled forest of positive length as
// head * tail, where head has length 1 and carries what was node 1.
std::pair<Forest, Forest> split_first(const Forest& f);
// Full chain of length-1 factors, multiplying left to right to f.
std::vector<Forest> factorize(const Forest& f);

// --- Operators --------------------------------------------------------------

// One difference step on a labeled forest of positive length: node 1 is the
// root of some part i; replace that part by its two children (labels all
// decrease by one) to get Y, and subtract Y with parts i, i+1 exchanged.
ForestSum delta_step(const Forest& f);
// length(f)-fold iteration of delta_step; lands in the span of length-0
// forests, reported as their leaf words.
WordSum Delta(const Forest& f);
WordSum Delta(const ForestSum& s);

// Leaf-word expansion: a leaf maps to its one-letter word and a node to the
// commutator pi(left) pi(right) - pi(right) pi(left) under concatenation;
// parts multiply by concatenation.  Labels are ignored.
WordSum pi_word(const TreeP& t);
WordSum pi_word(const Forest& f);

// Branch action: every leaf equal to a+b is in turn replaced by a node
// labeled length(f)+1 with children a, b; returns the occurrences left to
// right (empty when no leaf matches).
std::vector<Forest> branch_apply(const Forest& f, int a, int b);

// --- Display ----------------------------------------------------------------

std::string to_string(const TreeP& t);
std::string to_string(const Forest& f);
std::string to_string(const ForestSum& s);
std::string to_string(const TreeSum& s);
std::string to_string(const WordSum& s);

}  // namespace fq
