#pragma once

#include <map>
#include <string>
#include <vector>

#include "fq/exact_linear.hpp"
#include "fq/lie.hpp"
#include "fq/quiver.hpp"

namespace fq {

using Word = std::vector<std::pair<int, int>>;

// Commutation-style relation scheme in the edge symbols, instantiated at
// every vertex.  The two-symbol scheme swaps two independent merges; the
// three-symbol schemes interleave two merges around a third.  A scheme whose
// four words collapse (both middle words equal) is stored in collapsed form.
struct BranchTemplate {
  std::map<Word, int> words;
  std::string display;
};

std::vector<BranchTemplate> branch_templates(int n);

struct BranchRelation {
  BranchTemplate tmpl;
  Partition vertex;
  PathSum relation;
};

// Applies every scheme at every vertex, keeps the nonzero results, and
// deduplicates elements that agree up to a nonzero rational scalar (the
// count convention reported alongside).
std::vector<BranchRelation> branch_relations(int n);

struct JacobiRelation {
  JacobiShape shape;
  Partition tail;
  PathSum relation;
};

struct JacobiResult {
  std::vector<JacobiRelation> relations;
  std::vector<std::string> skipped;  // shapes whose rendering cancelled
};

// One relation per (shape, tail) pair whose rendered element is nonzero:
// the element's aligned terms, each padded by the tail parts, are written
// as paths through the main factorization and combined with the rendered
// coefficients.
JacobiResult jacobi_relations(int n);

// --- Conjecture verification -------------------------------------------------

struct VerifyReport {
  int n = 0;
  bool pass = false;
  long dim_paths = 0;
  long dim_kernel = 0;
  long dim_quotient = 0;
  MinimalCount minimal;  // minimal generators of the kernel ideal
  std::vector<BranchRelation> branch;
  std::vector<JacobiRelation> jacobi;
  std::vector<std::string> skipped;
  std::vector<std::string> mismatches;  // per-grade ideal/kernel differences
};

// Compares the ideal generated by the branch and Jacobi relations with the
// kernel, grade by grade.  The negative control corrupts one generator (or
// injects a bogus one) and must make the comparison fail; it exists so the
// detection machinery itself stays testable.
VerifyReport verify_conjecture(int n, bool negative_control = false);

// --- Output -------------------------------------------------------------------

std::string quiver_dot(int n);
std::string quiver_json(int n);
std::string quiver_text(int n);
std::string kernel_json(const KernelResult& kernel, const MinimalCount& minimal);
std::string relations_json(const VerifyReport& report);
std::string relations_text(const VerifyReport& report);

struct Presentation {
  std::string dot;
  std::string json;
  std::string text;
};

// Full presentation bundle; requires a passing report unless overridden.
Presentation emit_presentation(const VerifyReport& report,
                               bool allow_failed = false);

std::string to_string(const Word& w);

}  // namespace fq
