#include "fq/forest.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace fq {

TreeP leaf(int value) {
  FQ_CHECK(value >= 1, "leaf value must be positive");
  auto t = std::make_shared<Tree>();
  t->value = value;
  t->len = 0;
  t->label = 0;
  return t;
}

TreeP node(TreeP left, TreeP right, int label) {
  FQ_CHECK(left && right, "node needs two children");
  auto t = std::make_shared<Tree>();
  t->value = left->value + right->value;
  t->len = left->len + right->len + 1;
  t->label = label;
  t->left = std::move(left);
  t->right = std::move(right);
  return t;
}

int length(const TreeP& t) { return t->len; }

int length(const Forest& f) {
  int l = 0;
  for (const auto& t : f) l += t->len;
  return l;
}

int value(const Forest& f) {
  int v = 0;
  for (const auto& t : f) v += t->value;
  return v;
}

namespace {

void foliage_rec(const TreeP& t, Composition& out) {
  if (t->is_leaf()) {
    out.push_back(t->value);
    return;
  }
  foliage_rec(t->left, out);
  foliage_rec(t->right, out);
}

}  // namespace

Composition foliage(const Forest& f) {
  Composition out;
  for (const auto& t : f) foliage_rec(t, out);
  return out;
}

Composition squash(const Forest& f) {
  Composition out;
  out.reserve(f.size());
  for (const auto& t : f) out.push_back(t->value);
  return out;
}

Forest forest_of_parts(const Composition& parts) {
  Forest f;
  f.reserve(parts.size());
  for (int p : parts) f.push_back(leaf(p));
  return f;
}

// --- Orders and equality -----------------------------------------------------

bool tree_equal(const TreeP& a, const TreeP& b) {
  if (a == b) return true;
  if (a->value != b->value || a->len != b->len || a->label != b->label)
    return false;
  if (a->is_leaf()) return b->is_leaf();
  if (b->is_leaf()) return false;
  return tree_equal(a->left, b->left) && tree_equal(a->right, b->right);
}

bool tree_equal_shape(const TreeP& a, const TreeP& b) {
  if (a == b) return true;
  if (a->value != b->value || a->len != b->len) return false;
  if (a->is_leaf()) return b->is_leaf();
  if (b->is_leaf()) return false;
  return tree_equal_shape(a->left, b->left) &&
         tree_equal_shape(a->right, b->right);
}

bool tree_less(const TreeP& a, const TreeP& b) {
  if (a->value != b->value) return a->value < b->value;
  if (a->len != b->len) return a->len > b->len;  // longer trees come first
  if (a->is_leaf()) return false;
  if (tree_less(a->left, b->left)) return true;
  if (tree_less(b->left, a->left)) return false;
  return tree_less(a->right, b->right);
}

namespace {

void prefix_labels(const TreeP& t, std::vector<int>& out) {
  if (t->is_leaf()) return;
  out.push_back(t->label);
  prefix_labels(t->left, out);
  prefix_labels(t->right, out);
}

}  // namespace

bool labeled_tree_less(const TreeP& a, const TreeP& b) {
  if (tree_less(a, b)) return true;
  if (tree_less(b, a)) return false;
  std::vector<int> la, lb;
  prefix_labels(a, la);
  prefix_labels(b, lb);
  return la < lb;
}

bool forest_equal(const Forest& a, const Forest& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!tree_equal(a[i], b[i])) return false;
  return true;
}

namespace {

template <class LessT>
bool forest_lex(const Forest& a, const Forest& b, LessT less) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (less(a[i], b[i])) return true;
    if (less(b[i], a[i])) return false;
  }
  return a.size() < b.size();
}

}  // namespace

bool forest_less(const Forest& a, const Forest& b) {
  return forest_lex(a, b, [](const TreeP& x, const TreeP& y) {
    return tree_less(x, y);
  });
}

bool labeled_forest_less(const Forest& a, const Forest& b) {
  return forest_lex(a, b, [](const TreeP& x, const TreeP& y) {
    return labeled_tree_less(x, y);
  });
}

// --- Validation -----------------------------------------------------------

namespace {

void collect_label_edges(const TreeP& t, int parent_label,
                         std::vector<int>& labels, bool& ok) {
  if (t->is_leaf()) return;
  if (t->label <= 0) {
    ok = false;
    return;
  }
  if (parent_label > 0 && parent_label >= t->label) ok = false;
  labels.push_back(t->label);
  collect_label_edges(t->left, t->label, labels, ok);
  collect_label_edges(t->right, t->label, labels, ok);
}

}  // namespace

bool is_valid_labeled_forest(const Forest& f) {
  std::vector<int> labels;
  bool ok = true;
  for (const auto& t : f) collect_label_edges(t, 0, labels, ok);
  if (!ok) return false;
  std::sort(labels.begin(), labels.end());
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] != static_cast<int>(i) + 1) return false;
  return true;
}

bool is_aligned(const TreeP& t) {
  if (t->is_leaf()) return true;
  if (t->left->value >= t->right->value) return false;
  return is_aligned(t->left) && is_aligned(t->right);
}

bool is_aligned(const Forest& f) {
  return std::all_of(f.begin(), f.end(),
                     [](const TreeP& t) { return is_aligned(t); });
}

bool is_nondecreasing(const Forest& f) {
  for (std::size_t i = 1; i < f.size(); ++i)
    if (tree_less(f[i], f[i - 1])) return false;
  return true;
}

Forest nondecreasing_rep(Forest f) {
  std::stable_sort(f.begin(), f.end(), tree_less);
  return f;
}

// --- Labels ---------------------------------------------------------------

TreeP erase_labels(const TreeP& t) {
  if (t->is_leaf()) return t;
  return node(erase_labels(t->left), erase_labels(t->right), 0);
}

Forest erase_labels(const Forest& f) {
  Forest out;
  out.reserve(f.size());
  for (const auto& t : f) out.push_back(erase_labels(t));
  return out;
}

namespace {

TreeP shift_tree_labels(const TreeP& t, int delta) {
  if (t->is_leaf()) return t;
  return node(shift_tree_labels(t->left, delta),
              shift_tree_labels(t->right, delta), t->label + delta);
}

}  // namespace

Forest shift_labels(const Forest& f, int delta) {
  Forest out;
  out.reserve(f.size());
  for (const auto& t : f)
    out.push_back(t->len == 0 ? t : shift_tree_labels(t, delta));
  return out;
}

namespace {

TreeP prefix_label_tree(const TreeP& t, int& next) {
  if (t->is_leaf()) return t;
  int label = next++;
  TreeP l = prefix_label_tree(t->left, next);
  TreeP r = prefix_label_tree(t->right, next);
  return node(std::move(l), std::move(r), label);
}

}  // namespace

Forest prefix_labeling(const Forest& f) {
  Forest out;
  out.reserve(f.size());
  int next = 1;
  for (const auto& t : f) out.push_back(prefix_label_tree(t, next));
  return out;
}

// --- Rearrangement classes -----------------------------------------------

Forest class_key_labeled(Forest f) {
  std::sort(f.begin(), f.end(), labeled_tree_less);
  return f;
}

Forest class_key_unlabeled(Forest f) {
  f = erase_labels(f);
  std::sort(f.begin(), f.end(), tree_less);
  return f;
}

std::vector<Forest> class_members(const Forest& f) {
  Forest cur = class_key_labeled(f);
  std::vector<Forest> out;
  do {
    out.push_back(cur);
  } while (std::next_permutation(cur.begin(), cur.end(), labeled_tree_less));
  return out;
}

namespace {

// Number of distinct rearrangements of the parts under the given total
// order: size! divided by the factorials of the run lengths of equal parts.
template <class LessT>
long arrangement_count(Forest f, LessT less) {
  std::sort(f.begin(), f.end(), less);
  long count = 1;
  long taken = 0;
  long run = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    ++taken;
    if (i > 0 && !less(f[i - 1], f[i]) && !less(f[i], f[i - 1])) {
      ++run;
    } else {
      run = 1;
    }
    count = count * taken / run;
  }
  return count;
}

}  // namespace

long class_size_labeled(const Forest& f) {
  return arrangement_count(f, labeled_tree_less);
}

long class_size_unlabeled(const Forest& f) {
  return arrangement_count(erase_labels(f), tree_less);
}

long erase_multiplicity(const Forest& f) {
  long lab = class_size_labeled(f);
  long unl = class_size_unlabeled(f);
  FQ_CHECK(lab % unl == 0, "erase multiplicity must be an integer");
  return lab / unl;
}

// --- Composition product and factorization --------------------------------

bool composable(const Forest& x, const Forest& y) {
  return foliage(x) == squash(y);
}

namespace {

TreeP bullet_tree(const TreeP& t, std::deque<TreeP>& supply) {
  if (t->is_leaf()) {
    FQ_CHECK(!supply.empty(), "bullet ran out of parts");
    TreeP part = supply.front();
    supply.pop_front();
    FQ_CHECK(part->value == t->value, "bullet part value mismatch");
    return part;
  }
  TreeP l = bullet_tree(t->left, supply);
  TreeP r = bullet_tree(t->right, supply);
  return node(std::move(l), std::move(r), t->label);
}

}  // namespace

Forest bullet(const Forest& x, const Forest& y) {
  FQ_CHECK(composable(x, y), "bullet needs foliage(x) == squash(y)");
  Forest shifted = shift_labels(y, length(x));
  std::deque<TreeP> supply(shifted.begin(), shifted.end());
  Forest out;
  out.reserve(x.size());
  for (const auto& t : x) out.push_back(bullet_tree(t, supply));
  FQ_CHECK(supply.empty(), "bullet did not consume all parts");
  return out;
}

std::pair<Forest, Forest> split_first(const Forest& f) {
  FQ_CHECK(length(f) >= 1, "split_first needs positive length");
  FQ_CHECK(is_valid_labeled_forest(f), "split_first needs a labeled forest");
  std::size_t i = f.size();
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (!f[j]->is_leaf() && f[j]->label == 1) {
      i = j;
      break;
    }
  }
  FQ_CHECK(i < f.size(), "node 1 must be the root of some part");
  Forest head, tail;
  head.reserve(f.size());
  tail.reserve(f.size() + 1);
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (j == i) {
      head.push_back(node(leaf(f[j]->left->value), leaf(f[j]->right->value), 1));
      tail.push_back(f[j]->left);
      tail.push_back(f[j]->right);
    } else {
      head.push_back(leaf(f[j]->value));
      tail.push_back(f[j]);
    }
  }
  tail = shift_labels(tail, -1);
  FQ_CHECK(is_valid_labeled_forest(tail), "factor tail must stay labeled");
  return {head, tail};
}

std::vector<Forest> factorize(const Forest& f) {
  std::vector<Forest> factors;
  Forest rest = f;
  while (length(rest) > 0) {
    auto [head, tail] = split_first(rest);
    factors.push_back(head);
    rest = tail;
  }
  return factors;
}

// --- Operators --------------------------------------------------------------

ForestSum delta_step(const Forest& f) {
  FQ_CHECK(length(f) >= 1, "delta_step needs positive length");
  std::size_t i = f.size();
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (!f[j]->is_leaf() && f[j]->label == 1) {
      i = j;
      break;
    }
  }
  FQ_CHECK(i < f.size(), "node 1 must be the root of some part");
  Forest split;
  split.reserve(f.size() + 1);
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (j == i) {
      split.push_back(f[j]->left);
      split.push_back(f[j]->right);
    } else {
      split.push_back(f[j]);
    }
  }
  split = shift_labels(split, -1);
  Forest swapped = split;
  std::swap(swapped[i], swapped[i + 1]);
  ForestSum out;
  out.add(split, 1);
  out.add(swapped, -1);
  return out;
}

WordSum Delta(const Forest& f) {
  ForestSum s(f);
  return Delta(s);
}

WordSum Delta(const ForestSum& s) {
  ForestSum cur = s;
  while (true) {
    bool any = false;
    for (const auto& [g, c] : cur.terms()) {
      FQ_CHECK(length(g) == length(cur.terms().begin()->first),
               "Delta needs length-homogeneous sums");
      if (length(g) > 0) any = true;
    }
    if (!any) break;
    ForestSum next;
    for (const auto& [g, c] : cur.terms()) next.add_scaled(delta_step(g), c);
    cur = next;
  }
  WordSum out;
  for (const auto& [g, c] : cur.terms()) out.add(foliage(g), c);
  return out;
}

namespace {

WordSum word_concat_product(const WordSum& a, const WordSum& b) {
  WordSum out;
  for (const auto& [u, cu] : a.terms()) {
    for (const auto& [v, cv] : b.terms()) {
      Composition w = u;
      w.insert(w.end(), v.begin(), v.end());
      out.add(w, cu * cv);
    }
  }
  return out;
}

}  // namespace

WordSum pi_word(const TreeP& t) {
  if (t->is_leaf()) return WordSum(Composition{t->value});
  WordSum l = pi_word(t->left);
  WordSum r = pi_word(t->right);
  return word_concat_product(l, r) - word_concat_product(r, l);
}

WordSum pi_word(const Forest& f) {
  WordSum out{Composition{}};
  for (const auto& t : f) out = word_concat_product(out, pi_word(t));
  return out;
}

namespace {

// Replaces the k-th leaf (0-based, left to right) matching value a+b by the
// labeled node; returns true when found.
TreeP branch_tree(const TreeP& t, int a, int b, int label, int& remaining,
                  bool& done) {
  if (done) return t;
  if (t->is_leaf()) {
    if (t->value == a + b) {
      if (remaining == 0) {
        done = true;
        return node(leaf(a), leaf(b), label);
      }
      --remaining;
    }
    return t;
  }
  TreeP l = branch_tree(t->left, a, b, label, remaining, done);
  TreeP r = branch_tree(t->right, a, b, label, remaining, done);
  if (!done) return t;
  return node(std::move(l), std::move(r), t->label);
}

}  // namespace

std::vector<Forest> branch_apply(const Forest& f, int a, int b) {
  FQ_CHECK(a >= 1 && b >= 1, "branch parts must be positive");
  Composition leaves = foliage(f);
  int matches = 0;
  for (int v : leaves)
    if (v == a + b) ++matches;
  std::vector<Forest> out;
  int label = length(f) + 1;
  for (int k = 0; k < matches; ++k) {
    Forest g;
    g.reserve(f.size());
    int remaining = k;
    bool done = false;
    for (const auto& t : f) g.push_back(branch_tree(t, a, b, label, remaining, done));
    FQ_CHECK(done, "branch occurrence must be found");
    out.push_back(std::move(g));
  }
  return out;
}

// --- Display ----------------------------------------------------------------

std::string to_string(const TreeP& t) {
  if (t->is_leaf()) return std::to_string(t->value);
  std::string out =
      "(" + to_string(t->left) + "," + to_string(t->right) + ")";
  if (t->label > 0) out += "#" + std::to_string(t->label);
  return out;
}

std::string to_string(const Forest& f) {
  if (f.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i > 0) out += " ";
    out += to_string(f[i]);
  }
  return out;
}

namespace {

template <class SumT, class FmtT>
std::string sum_to_string(const SumT& s, FmtT fmt) {
  if (s.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, c] : s.terms()) {
    std::string coeff = to_string(c < 0 ? Rat(-c) : c);
    out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    if (coeff != "1") out += coeff + "*";
    out += fmt(b);
    first = false;
  }
  return out;
}

}  // namespace

std::string to_string(const ForestSum& s) {
  return sum_to_string(s, [](const Forest& f) { return to_string(f); });
}

std::string to_string(const TreeSum& s) {
  return sum_to_string(s, [](const TreeP& t) { return to_string(t); });
}

std::string to_string(const WordSum& s) {
  return sum_to_string(s, [](const Composition& c) { return format_parts(c); });
}

}  // namespace fq
