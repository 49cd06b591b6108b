#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fq/forest.hpp"
#include "fq/numbers.hpp"

namespace fq {

// Quiver on the partitions of n: an edge goes from p to q exactly when q is
// obtained from p by merging two parts of *distinct* sizes a < b into a+b.
// Vertices whose parts are all equal (such as the all-ones partition) have
// no outgoing edges, and there are no parallel edges because an edge is
// determined by its source and the merged pair {a, b}.

struct Edge {
  Partition source;
  int a = 0, b = 0;  // a < b, both parts of source

  Partition dest() const;
  std::string symbol() const;  // "<a|b>"
};

std::vector<Partition> quiver_vertices(int n);
std::vector<Edge> quiver_edges(int n);
std::vector<Edge> edges_from(const Partition& p);
std::vector<Edge> edges_into(const Partition& q);

// A path is stored by its final vertex (dest) together with its word of
// merge symbols listed from the dest end: replaying the word left to right
// from dest, each symbol <a|b> splits one part equal to a+b into a and b,
// ending at the source.  The empty word is the lazy path at dest.
struct Path {
  Partition dest;
  std::vector<std::pair<int, int>> word;

  int length() const { return static_cast<int>(word.size()); }
  Partition source() const;

  friend bool operator<(const Path& x, const Path& y) {
    if (x.dest != y.dest) return x.dest < y.dest;
    return x.word < y.word;
  }
  friend bool operator==(const Path& x, const Path& y) {
    return x.dest == y.dest && x.word == y.word;
  }
};

using PathSum = FormalSum<Path>;

// Splits one part equal to a+b of p into a and b; nullopt when p has none.
std::optional<Partition> split_part(const Partition& p, int a, int b);
std::optional<Partition> replay(const Partition& dest,
                                const std::vector<std::pair<int, int>>& word);

// Path times edge: defined when e starts at p's dest; prepends e's symbol.
Path mul_edge_right(const Path& p, const Edge& e);
// Edge times path: defined when e ends at p's source; appends e's symbol.
Path mul_edge_left(const Edge& e, const Path& p);
// Concatenation p then q (q starts where p ends).
Path mul(const Path& p, const Path& q);

// Branch action on a path: extends it one step back at the source by
// splitting a part equal to a+b; nullopt when the source has no such part.
std::optional<Path> path_branch(const Path& p, int a, int b);

// All paths from source to dest, sorted by word.  The grade of a path is the
// pair (source, dest).
std::vector<Path> paths_between(const Partition& source, const Partition& dest);

using Grade = std::pair<Partition, Partition>;

struct PathTable {
  int n = 0;
  std::map<Grade, std::vector<Path>> grades;  // nonempty grades only

  long total_paths() const;
  // Position of the path inside its grade's word-sorted basis.
  int index_of(const Path& p) const;
};

PathTable build_path_table(int n);

// The embedding of the path algebra into class sums of labeled forests.
// iota of a lazy path at p is the class of p's parts as bare leaves; iota of
// a longer path composes one edge class at a time.  Every class in the image
// shows up with coefficient exactly one; this is checked on every call.
ForestSum iota_path(const Path& p);

// Erasure at the class level: a labeled class maps to its unlabeled class
// with multiplicity erase_multiplicity.
ForestSum erase_class_sum(const ForestSum& labeled);

// Leaf-word image of iota(p): the difference operator applied to the class
// sum, computed through the commutator word expansion.
WordSum delta_iota(const Path& p);

// Slower independent evaluation through repeated difference steps on every
// member of every class; used to cross-check delta_iota.
WordSum delta_iota_by_steps(const Path& p);

std::string to_string(const Path& p);
std::string to_string(const PathSum& s);

}  // namespace fq
