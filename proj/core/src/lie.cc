#include "fq/lie.hpp"

#include <algorithm>
#include <deque>

namespace fq {

namespace {

void collect_symbols(const TreeP& t,
                     std::vector<std::pair<int, int>>& by_label) {
  if (t->is_leaf()) return;
  FQ_CHECK(t->label >= 1, "p_map needs a labeled forest");
  if (static_cast<int>(by_label.size()) < t->label)
    by_label.resize(t->label, {0, 0});
  FQ_CHECK(by_label[t->label - 1] == std::make_pair(0, 0),
           "labels must be distinct");
  by_label[t->label - 1] = {t->left->value, t->right->value};
  collect_symbols(t->left, by_label);
  collect_symbols(t->right, by_label);
}

}  // namespace

Path p_map(const Forest& labeled) {
  std::vector<std::pair<int, int>> by_label;
  for (const auto& t : labeled) collect_symbols(t, by_label);
  for (const auto& [a, b] : by_label) {
    FQ_CHECK(a >= 1 && a < b, "p_map needs aligned nodes");
  }
  Path p{partition_of(squash(labeled)), std::move(by_label)};
  FQ_CHECK(replay(p.dest, p.word).has_value(), "p_map word must replay");
  return p;
}

// --- Exchange moves ----------------------------------------------------------

namespace {

struct SubtreePos {
  std::size_t part;
  std::vector<int> path;  // 0 = left, 1 = right
  TreeP sub;
  int parent_label;  // 0 when the subtree is a whole part
};

void collect_positions(const TreeP& t, std::size_t part, std::vector<int>& path,
                       int parent_label, std::vector<SubtreePos>& out) {
  out.push_back(SubtreePos{part, path, t, parent_label});
  if (t->is_leaf()) return;
  path.push_back(0);
  collect_positions(t->left, part, path, t->label, out);
  path.back() = 1;
  collect_positions(t->right, part, path, t->label, out);
  path.pop_back();
}

TreeP replace_subtree(const TreeP& t, const std::vector<int>& path,
                      std::size_t depth, const TreeP& sub) {
  if (depth == path.size()) return sub;
  FQ_CHECK(!t->is_leaf(), "replace path must stay inside the tree");
  if (path[depth] == 0) {
    return node(replace_subtree(t->left, path, depth + 1, sub), t->right,
                t->label);
  }
  return node(t->left, replace_subtree(t->right, path, depth + 1, sub),
              t->label);
}

}  // namespace

std::vector<Forest> wiggle_neighbors(const Forest& labeled) {
  std::vector<SubtreePos> positions;
  for (std::size_t i = 0; i < labeled.size(); ++i) {
    std::vector<int> path;
    collect_positions(labeled[i], i, path, 0, positions);
  }
  std::vector<Forest> out;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    for (std::size_t j = i + 1; j < positions.size(); ++j) {
      const auto& u = positions[i];
      const auto& v = positions[j];
      if (u.sub->value != v.sub->value) continue;
      int root_u = u.sub->is_leaf() ? 0 : u.sub->label;
      int root_v = v.sub->is_leaf() ? 0 : v.sub->label;
      if (u.parent_label > 0 && root_v > 0 && u.parent_label >= root_v)
        continue;
      if (v.parent_label > 0 && root_u > 0 && v.parent_label >= root_u)
        continue;
      Forest g = labeled;
      g[u.part] = replace_subtree(g[u.part], u.path, 0, v.sub);
      g[v.part] = replace_subtree(g[v.part], v.path, 0, u.sub);
      out.push_back(class_key_labeled(g));
    }
  }
  return out;
}

std::set<Forest, ForestOrd> wiggle_closure(const Forest& labeled) {
  std::set<Forest, ForestOrd> seen;
  std::deque<Forest> todo;
  Forest start = class_key_labeled(labeled);
  seen.insert(start);
  todo.push_back(start);
  while (!todo.empty()) {
    Forest cur = todo.front();
    todo.pop_front();
    for (const auto& next : wiggle_neighbors(cur)) {
      if (seen.insert(next).second) todo.push_back(next);
    }
  }
  return seen;
}

// --- Alignment rendering ---------------------------------------------------

namespace {

struct Offender {
  std::vector<int> path;
  int depth = -1;
};

void find_offender(const TreeP& t, std::vector<int>& path, Offender& best) {
  if (t->is_leaf()) return;
  if (t->left->value >= t->right->value &&
      static_cast<int>(path.size()) > best.depth) {
    // Prefix-order traversal visits equal depths left to right, so the
    // strict > keeps the leftmost among the deepest.
    best.path = path;
    best.depth = static_cast<int>(path.size());
  }
  path.push_back(0);
  find_offender(t->left, path, best);
  path.back() = 1;
  find_offender(t->right, path, best);
  path.pop_back();
}

const TreeP& subtree_at(const TreeP& t, const std::vector<int>& path,
                        std::size_t depth = 0) {
  if (depth == path.size()) return t;
  return subtree_at(path[depth] == 0 ? t->left : t->right, path, depth + 1);
}

}  // namespace

RenderedTree render_tree(const TreeP& t, RenderPolicy policy) {
  RenderedTree out;
  out.sum.add(t, 1);
  long guard = 0;
  while (true) {
    FQ_CHECK(++guard < 1000000, "render must terminate");
    const TreeP* term = nullptr;
    Rat coeff;
    Offender off;
    for (const auto& [cand, c] : out.sum.terms()) {
      Offender o;
      std::vector<int> path;
      find_offender(cand, path, o);
      if (o.depth >= 0) {
        term = &cand;
        coeff = c;
        off = o;
        break;
      }
    }
    if (!term) break;
    TreeP cur = *term;
    const TreeP& n = subtree_at(cur, off.path);
    TreeP z1 = n->left, z2 = n->right;
    out.sum.add(cur, -coeff);
    if (tree_equal_shape(z1, z2)) {
      // (T', T') is its own swap: twice the term is an antisymmetry
      // generator, so the term is dropped.
      TreeSum gen;
      gen.add(cur, 2);
      out.steps.push_back(RenderStep{StepKind::Drop, coeff / 2, gen});
      continue;
    }
    bool root_swap = policy.swap_first_at_root && out.steps.empty() &&
                     off.path.empty() && z1->value == z2->value &&
                     !z1->is_leaf();
    if (z1->value > z2->value || z2->is_leaf() || root_swap) {
      TreeP swapped =
          replace_subtree(cur, off.path, 0, node(z2, z1, n->label));
      TreeSum gen;
      gen.add(cur, 1);
      gen.add(swapped, 1);
      out.steps.push_back(RenderStep{StepKind::Swap, coeff, gen});
      out.sum.add(swapped, -coeff);
    } else {
      // Equal child values with a composite right child: rotate with the
      // Jacobi identity jacobi(Z1, Z21, Z22) in place.
      TreeP t2 = replace_subtree(cur, off.path, 0,
                                 node(z2->right, node(z1, z2->left), n->label));
      TreeP t3 = replace_subtree(cur, off.path, 0,
                                 node(z2->left, node(z2->right, z1), n->label));
      TreeSum gen;
      gen.add(cur, 1);
      gen.add(t2, 1);
      gen.add(t3, 1);
      out.steps.push_back(RenderStep{StepKind::Jacobi, coeff, gen});
      out.sum.add(t2, -coeff);
      out.sum.add(t3, -coeff);
    }
  }
  for (const auto& [term, c] : out.sum.terms()) {
    FQ_CHECK(is_aligned(term), "rendered terms must be aligned");
  }
  return out;
}

// --- Jacobi elements ---------------------------------------------------------

std::string JacobiShape::display() const {
  std::string first = composite ? "(" + std::to_string(x1) + "," +
                                      std::to_string(x2) + ")"
                                : std::to_string(x);
  return "J(" + first + "," + std::to_string(y) + "," + std::to_string(z) +
         ")";
}

std::vector<JacobiShape> jacobi_shapes(int max_value) {
  std::vector<JacobiShape> out;
  for (int x = 1; x <= max_value; ++x) {
    for (int y = x + 1; y <= max_value; ++y) {
      for (int z = y + 1; x + y + z <= max_value; ++z) {
        if (x + y == z) continue;
        JacobiShape s;
        s.x = x;
        s.y = y;
        s.z = z;
        out.push_back(s);
      }
    }
  }
  for (int x1 = 1; x1 <= max_value; ++x1) {
    for (int x2 = x1 + 1; x1 + x2 <= max_value; ++x2) {
      for (int y = 1; y <= max_value; ++y) {
        for (int z = y + 1; x1 + x2 + y + z <= max_value; ++z) {
          int s12 = x1 + x2;
          if (s12 != y && s12 != z && s12 != y + z) continue;
          JacobiShape s;
          s.composite = true;
          s.x1 = x1;
          s.x2 = x2;
          s.y = y;
          s.z = z;
          out.push_back(s);
        }
      }
    }
  }
  return out;
}

std::vector<TreeP> jacobi_terms(const JacobiShape& shape) {
  TreeP x = shape.composite ? node(leaf(shape.x1), leaf(shape.x2))
                            : leaf(shape.x);
  TreeP y = leaf(shape.y);
  TreeP z = leaf(shape.z);
  return {node(x, node(y, z)), node(z, node(x, y)), node(y, node(z, x))};
}

std::optional<TreeSum> render_jacobi(const JacobiShape& shape) {
  for (RenderPolicy policy : {RenderPolicy{false}, RenderPolicy{true}}) {
    TreeSum total;
    for (const auto& term : jacobi_terms(shape)) {
      total += render_tree(term, policy).sum;
    }
    if (!total.is_zero()) return total;
  }
  return std::nullopt;
}

// --- Main factorization ------------------------------------------------------

PathSum MainFactorizer::factor(const Forest& x) {
  FQ_CHECK(is_aligned(x), "factor needs an aligned forest");
  FQ_CHECK(is_nondecreasing(x), "factor needs the nondecreasing class key");
  FQ_CHECK(forest_equal(x, erase_labels(x)), "factor input must be unlabeled");
  auto hit = cache_.find(x);
  if (hit != cache_.end()) return hit->second;

  PathSum out;
  if (length(x) == 0) {
    out.add(Path{squash(x), {}}, 1);
    cache_.emplace(x, out);
    return out;
  }

  Forest labeled = prefix_labeling(x);
  Path p = p_map(labeled);
  ForestSum erased = erase_class_sum(iota_path(p));
  Rat cx = erased.coeff(x);
  FQ_CHECK(cx == erase_multiplicity(labeled),
           "leading coefficient must be the erase multiplicity");
  FQ_CHECK(cx > 0, "leading coefficient must be positive");

  out.add(p, 1 / cx);
  for (const auto& [y, cy] : erased.terms()) {
    if (forest_equal(y, x)) continue;
    FQ_CHECK(forest_less(y, x), "corrections must be strictly smaller");
    out.add_scaled(factor(y), -cy / cx);
  }
  cache_.emplace(x, out);
  return out;
}

std::string to_string(StepKind k) {
  switch (k) {
    case StepKind::Swap:
      return "swap";
    case StepKind::Jacobi:
      return "jacobi";
    case StepKind::Drop:
      return "drop";
  }
  return "?";
}

}  // namespace fq
