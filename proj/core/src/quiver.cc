#include "fq/quiver.hpp"

#include <algorithm>
#include <set>

namespace fq {

Partition Edge::dest() const {
  Partition q;
  q.reserve(source.size() - 1);
  bool took_a = false, took_b = false;
  for (int p : source) {
    if (!took_a && p == a) {
      took_a = true;
      continue;
    }
    if (!took_b && p == b) {
      took_b = true;
      continue;
    }
    q.push_back(p);
  }
  FQ_CHECK(took_a && took_b, "edge parts must occur in the source");
  q.push_back(a + b);
  std::sort(q.begin(), q.end());
  return q;
}

std::string Edge::symbol() const {
  return "<" + std::to_string(a) + "|" + std::to_string(b) + ">";
}

std::vector<Partition> quiver_vertices(int n) { return partitions_of(n); }

std::vector<Edge> edges_from(const Partition& p) {
  std::set<int> values(p.begin(), p.end());
  std::vector<Edge> out;
  for (auto it = values.begin(); it != values.end(); ++it) {
    for (auto jt = std::next(it); jt != values.end(); ++jt) {
      out.push_back(Edge{p, *it, *jt});
    }
  }
  return out;
}

std::vector<Edge> edges_into(const Partition& q) {
  std::vector<Edge> out;
  std::set<int> seen;
  for (int s : q) {
    if (!seen.insert(s).second) continue;
    for (int a = 1; 2 * a < s; ++a) {
      Partition source;
      source.reserve(q.size() + 1);
      bool removed = false;
      for (int p : q) {
        if (!removed && p == s) {
          removed = true;
          continue;
        }
        source.push_back(p);
      }
      source.push_back(a);
      source.push_back(s - a);
      std::sort(source.begin(), source.end());
      out.push_back(Edge{source, a, s - a});
    }
  }
  return out;
}

std::vector<Edge> quiver_edges(int n) {
  std::vector<Edge> out;
  for (const auto& p : quiver_vertices(n)) {
    auto from = edges_from(p);
    out.insert(out.end(), from.begin(), from.end());
  }
  return out;
}

std::optional<Partition> split_part(const Partition& p, int a, int b) {
  auto it = std::find(p.begin(), p.end(), a + b);
  if (it == p.end()) return std::nullopt;
  Partition q;
  q.reserve(p.size() + 1);
  q.insert(q.end(), p.begin(), it);
  q.insert(q.end(), std::next(it), p.end());
  q.push_back(a);
  q.push_back(b);
  std::sort(q.begin(), q.end());
  return q;
}

std::optional<Partition> replay(const Partition& dest,
                                const std::vector<std::pair<int, int>>& word) {
  Partition cur = dest;
  for (const auto& [a, b] : word) {
    auto next = split_part(cur, a, b);
    if (!next) return std::nullopt;
    cur = *next;
  }
  return cur;
}

Partition Path::source() const {
  auto s = replay(dest, word);
  FQ_CHECK(s.has_value(), "path word must replay from its dest");
  return *s;
}

Path mul_edge_right(const Path& p, const Edge& e) {
  FQ_CHECK(e.source == p.dest, "edge must start at the path's dest");
  Path out;
  out.dest = e.dest();
  out.word.reserve(p.word.size() + 1);
  out.word.emplace_back(e.a, e.b);
  out.word.insert(out.word.end(), p.word.begin(), p.word.end());
  return out;
}

Path mul_edge_left(const Edge& e, const Path& p) {
  FQ_CHECK(e.dest() == p.source(), "edge must end at the path's source");
  Path out = p;
  out.word.emplace_back(e.a, e.b);
  return out;
}

Path mul(const Path& p, const Path& q) {
  FQ_CHECK(q.source() == p.dest, "paths must meet to compose");
  Path out;
  out.dest = q.dest;
  out.word.reserve(p.word.size() + q.word.size());
  out.word.insert(out.word.end(), q.word.begin(), q.word.end());
  out.word.insert(out.word.end(), p.word.begin(), p.word.end());
  return out;
}

std::optional<Path> path_branch(const Path& p, int a, int b) {
  if (!split_part(p.source(), a, b)) return std::nullopt;
  Path out = p;
  out.word.emplace_back(a, b);
  return out;
}

std::vector<Path> paths_between(const Partition& source,
                                const Partition& dest) {
  std::vector<Path> out;
  int steps = static_cast<int>(source.size()) - static_cast<int>(dest.size());
  if (steps < 0 || sum(source) != sum(dest)) return out;
  std::vector<std::pair<int, int>> word;
  Partition cur = dest;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(word.size()) == steps) {
      if (cur == source) out.push_back(Path{dest, word});
      return;
    }
    std::set<int> values(cur.begin(), cur.end());
    for (int s : values) {
      for (int a = 1; 2 * a < s; ++a) {
        auto next = split_part(cur, a, s - a);
        Partition save = cur;
        cur = *next;
        word.emplace_back(a, s - a);
        self(self);
        word.pop_back();
        cur = save;
      }
    }
  };
  rec(rec);
  std::sort(out.begin(), out.end());
  return out;
}

long PathTable::total_paths() const {
  long total = 0;
  for (const auto& [g, ps] : grades) total += static_cast<long>(ps.size());
  return total;
}

int PathTable::index_of(const Path& p) const {
  auto it = grades.find(Grade{p.source(), p.dest});
  FQ_CHECK(it != grades.end(), "path's grade must be in the table");
  auto pos = std::lower_bound(it->second.begin(), it->second.end(), p);
  FQ_CHECK(pos != it->second.end() && *pos == p, "path must be in its grade");
  return static_cast<int>(pos - it->second.begin());
}

PathTable build_path_table(int n) {
  PathTable table;
  table.n = n;
  auto vertices = quiver_vertices(n);
  for (const auto& u : vertices) {
    for (const auto& v : vertices) {
      auto paths = paths_between(u, v);
      if (!paths.empty()) table.grades[Grade{u, v}] = std::move(paths);
    }
  }
  return table;
}

namespace {

thread_local std::map<Path, ForestSum> iota_cache;

}  // namespace

ForestSum iota_path(const Path& p) {
  auto hit = iota_cache.find(p);
  if (hit != iota_cache.end()) return hit->second;

  ForestSum out;
  if (p.word.empty()) {
    out.add(forest_of_parts(p.dest), 1);
    iota_cache.emplace(p, out);
    return out;
  }

  auto [a, b] = p.word.front();
  auto inner_dest = split_part(p.dest, a, b);
  FQ_CHECK(inner_dest.has_value(), "iota path must replay");
  Path inner{*inner_dest,
             {p.word.begin() + 1, p.word.end()}};
  ForestSum s = iota_path(inner);

  for (const auto& [v, c] : s.terms()) {
    FQ_CHECK(c == 1, "iota image classes must have coefficient one");
    for (const Forest& arr : class_members(v)) {
      Composition sv = squash(arr);
      for (std::size_t k = 0; k + 1 < sv.size(); ++k) {
        if (sv[k] != a || sv[k + 1] != b) continue;
        Forest u;
        u.reserve(sv.size() - 1);
        for (std::size_t j = 0; j < k; ++j) u.push_back(leaf(sv[j]));
        u.push_back(node(leaf(a), leaf(b), 1));
        for (std::size_t j = k + 2; j < sv.size(); ++j) u.push_back(leaf(sv[j]));
        out.add(class_key_labeled(bullet(u, arr)), 1);
      }
    }
  }
  for (const auto& [f, c] : out.terms()) {
    FQ_CHECK(c == 1, "iota image classes must have coefficient one");
    FQ_CHECK(is_valid_labeled_forest(f), "iota image must stay labeled");
  }
  iota_cache.emplace(p, out);
  return out;
}

ForestSum erase_class_sum(const ForestSum& labeled) {
  ForestSum out;
  for (const auto& [f, c] : labeled.terms()) {
    out.add(class_key_unlabeled(f), c * erase_multiplicity(f));
  }
  return out;
}

WordSum delta_iota(const Path& p) {
  ForestSum s = iota_path(p);
  WordSum out;
  std::map<const Tree*, WordSum> part_cache;
  for (const auto& [z, c] : s.terms()) {
    for (const auto& t : z) {
      if (!part_cache.count(t.get())) part_cache.emplace(t.get(), pi_word({t}));
    }
    for (const Forest& arr : class_members(z)) {
      WordSum prod{Composition{}};
      for (const auto& t : arr) {
        WordSum next;
        const WordSum& factor = part_cache.at(t.get());
        for (const auto& [u, cu] : prod.terms()) {
          for (const auto& [w, cw] : factor.terms()) {
            Composition uw = u;
            uw.insert(uw.end(), w.begin(), w.end());
            next.add(uw, cu * cw);
          }
        }
        prod = next;
      }
      out.add_scaled(prod, c);
    }
  }
  return out;
}

WordSum delta_iota_by_steps(const Path& p) {
  ForestSum s = iota_path(p);
  WordSum out;
  for (const auto& [z, c] : s.terms()) {
    for (const Forest& arr : class_members(z)) {
      out.add_scaled(Delta(arr), c);
    }
  }
  return out;
}

std::string to_string(const Path& p) {
  std::string out = format_parts(p.dest) + ".";
  if (p.word.empty()) out += "()";
  for (const auto& [a, b] : p.word) {
    out += "<" + std::to_string(a) + "|" + std::to_string(b) + ">";
  }
  return out;
}

std::string to_string(const PathSum& s) {
  if (s.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [p, c] : s.terms()) {
    std::string coeff = to_string(c < 0 ? Rat(-c) : c);
    out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    if (coeff != "1") out += coeff + "*";
    out += to_string(p);
    first = false;
  }
  return out;
}

}  // namespace fq
