#pragma once

#include <string>
#include <vector>

namespace fq {

// A composition is a finite sequence of positive integer parts; a partition
// is the canonical representative of its rearrangement class and is kept
// weakly increasing.
using Composition = std::vector<int>;
using Partition = std::vector<int>;

int sum(const Composition& c);

bool is_partition(const Composition& c);

// Sorts the parts weakly increasing.
Partition partition_of(Composition c);

// All compositions of n (2^(n-1) of them; just the empty one for n = 0),
// in lexicographic order.
std::vector<Composition> compositions_of(int n);

// All partitions of n in lexicographic order of their weakly increasing
// representatives.
std::vector<Partition> partitions_of(int n);

// All distinct rearrangements of the given multiset of parts, in
// lexicographic order.
std::vector<Composition> arrangements_of(Composition parts);

// Compact display form: parts are concatenated when all are single digits
// ("1123"), otherwise comma-separated ("2,10").  The empty composition
// renders as "-".
std::string format_parts(const Composition& c);

}  // namespace fq
