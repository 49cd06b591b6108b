#include "fq/numbers.hpp"

#include <algorithm>
#include <numeric>

#include "fq/rational.hpp"

namespace fq {

int sum(const Composition& c) { return std::accumulate(c.begin(), c.end(), 0); }

bool is_partition(const Composition& c) {
  if (!c.empty() && c.front() <= 0) return false;
  return std::is_sorted(c.begin(), c.end());
}

Partition partition_of(Composition c) {
  std::sort(c.begin(), c.end());
  return c;
}

std::vector<Composition> compositions_of(int n) {
  FQ_CHECK(n >= 0, "compositions_of needs n >= 0");
  std::vector<Composition> out;
  Composition cur;
  auto rec = [&](auto&& self, int rest) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int first = 1; first <= rest; ++first) {
      cur.push_back(first);
      self(self, rest - first);
      cur.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

std::vector<Partition> partitions_of(int n) {
  FQ_CHECK(n >= 0, "partitions_of needs n >= 0");
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int rest, int min_part) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int first = min_part; first <= rest; ++first) {
      cur.push_back(first);
      self(self, rest - first, first);
      cur.pop_back();
    }
  };
  rec(rec, n, 1);
  return out;
}

std::vector<Composition> arrangements_of(Composition parts) {
  std::sort(parts.begin(), parts.end());
  std::vector<Composition> out;
  do {
    out.push_back(parts);
  } while (std::next_permutation(parts.begin(), parts.end()));
  return out;
}

std::string format_parts(const Composition& c) {
  if (c.empty()) return "-";
  bool single_digits =
      std::all_of(c.begin(), c.end(), [](int p) { return p >= 1 && p <= 9; });
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0 && !single_digits) out += ',';
    out += std::to_string(c[i]);
  }
  return out;
}

}  // namespace fq
