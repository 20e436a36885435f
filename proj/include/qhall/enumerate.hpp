#pragma once
/**
 * Brute-force enumeration oracles and per-sequence statistics.
 *
 * Families:
 *  - lecture hall sequences of length k with ramp (n, n-1, ..., n-k+1):
 *    nonnegative integers with lambda_1/n >= lambda_2/(n-1) >= ... >= 0,
 *    optionally restricted to exactly k positive entries ("bar" families)
 *    and/or a fixed last entry;
 *  - anti lecture hall sequences of length k with ramp
 *    (n-k+1, n-k+2, ..., n): lambda_1/(n-k+1) >= ... >= lambda_k/n >= 0,
 *    where a zero ramp entry (n == k-1) makes the first ratio vacuous;
 *  - partitions into odd parts below a cap with a bounded or exact number of
 *    parts inside a prescribed odd interval;
 *  - plain partition shapes: fixed length with zeros, exactly m positive
 *    parts, bounded largest part, distinct parts.
 *
 * Sequences store trailing zeros explicitly for the fixed-length families.
 * Enumeration is exhaustive and exact up to a weight budget, by recursive
 * descent on positions with the tightest neighbor bound at each step.
 */

#include <string>
#include <vector>

#include "qhall/series.hpp"

namespace qhall {

enum class SeqFamily {
  lecture_hall,
  anti_lecture_hall,
  plain_partition,
  distinct_parts,
  odd_restricted,
};

/** A finite integer sequence tagged with the family it was drawn from. */
struct PartSequence {
  SeqFamily family = SeqFamily::plain_partition;
  int n = 0;  // ramp parameter for the ramped families, part cap otherwise
  int k = 0;  // stored length
  std::vector<int> parts;

  long long weight() const;
  bool operator==(const PartSequence& o) const = default;
  bool operator<(const PartSequence& o) const;
};

/** "(2,1)" style rendering; the all-zero sequence renders as "()". */
std::string sequence_to_text(const PartSequence& s);
/** Parse "2,1", "(2,1)" or "()" into a bare part list. */
std::vector<int> parse_parts(const std::string& text);

/** Ramp value at 1-based position i for the ramped families. */
long long family_ramp(SeqFamily family, int n, int k, int i);

/** Membership by the defining chain of neighbor ratio inequalities. */
bool in_lecture_hall(const std::vector<int>& parts, int n);
bool in_anti_lecture_hall(const std::vector<int>& parts, int n, int k);

std::vector<PartSequence> gen_lecture_hall(int n, int k,
                                           bool exactly_k_positive,
                                           long long max_weight,
                                           int last_part = -1);
std::vector<PartSequence> gen_anti_lecture_hall(int n, int k,
                                                long long max_weight,
                                                int last_part = -1);
/**
 * Partitions into odd parts <= 2n-1 with at most floor(k/2) parts inside
 * {2*ceil(k/2)+1, ..., 2(n-floor(k/2))-1}.
 */
std::vector<PartSequence> gen_restricted_odd(int n, int k, long long max_weight);
/**
 * Partitions into odd parts <= 2n-1 with exactly t parts inside
 * {2j+1, ..., 2l-1}.
 */
std::vector<PartSequence> gen_restricted_odd_exact_t(int n, int t, int j, int l,
                                                     long long max_weight);
/** Nonincreasing length-k sequences of nonnegative integers. */
std::vector<PartSequence> gen_plain_fixed(int k, long long max_weight);
/** Length-n nonincreasing sequences with exactly m positive entries. */
std::vector<PartSequence> gen_plain_exact_positive(int n, int m,
                                                   long long max_weight);
/** Partitions (no zeros stored) with largest part at most k. */
std::vector<PartSequence> gen_max_part(int k, long long max_weight);
/** Partitions into exactly k distinct positive parts. */
std::vector<PartSequence> gen_distinct(int k, long long max_weight);
/** Partitions into odd parts at most max_part (no further restriction). */
std::vector<PartSequence> gen_odd_parts(int max_part, long long max_weight);

/**
 * Statistics of a sequence.  Index sums are 1-based; the ceiling and floor
 * images divide each entry by its ramp value and exist only for the ramped
 * families (and not when the first anti ramp entry is zero).
 */
struct StatVector {
  long long weight = 0;
  long long odd_index_sum = 0;   // sum of entries at odd positions
  long long even_index_sum = 0;  // sum of entries at even positions
  long long positive_parts = 0;
  long long last_part = 0;
  long long odd_parts = 0;  // number of odd entries

  bool has_ramp_images = false;
  std::vector<int> ceil_image, floor_image;
  long long ceil_weight = 0, ceil_odd_count = 0;
  long long floor_weight = 0, floor_odd_count = 0;

  /**
   * Look up a statistic by name: weight, odd_index_sum, even_index_sum,
   * odd_even_diff, positive_parts, last_part, odd_parts, ceil_weight,
   * ceil_odd_count, floor_weight, floor_odd_count.
   */
  long long stat(const std::string& name) const;
};

StatVector statistics(const PartSequence& s);

/**
 * Positional decomposition lambda_i = ramp_i * mu_i - r_i (lecture hall,
 * mu = ceiling image, 0 <= r_i <= ramp_i - 1) or
 * lambda_i = ramp_i * mu_i + r_i (anti, mu = floor image, same residue
 * range).  `valid` reports the membership criterion: mu nonincreasing and
 * residues nondecreasing (lecture hall) / nonincreasing (anti) along every
 * plateau of mu.  Defined only for the ramped families with all ramp values
 * positive; otherwise throws std::domain_error.
 */
struct MuRDecomposition {
  std::vector<int> mu, r;
  std::vector<long long> multiplicity;  // of the values 0..mu_1 within mu
  std::vector<long long> ell;
  bool valid = false;
};

MuRDecomposition mu_r_decompose(const PartSequence& s);

/** Family designator used by generating-function oracles and the CLI. */
struct FamilySpec {
  enum class Kind { L, Lbar, A, R, Rt, P_len, P_pos, Pmax, D } kind;
  int n = 0, k = 0, m = 0;
  int last = -1;            // fixed last entry, -1 = unrestricted
  int t = 0, j = 0, l = 0;  // exact odd-interval parameters

  /** "L(3,2)", "Lbar(4,2;last=1)", "A(2,2)", "R(3,1)", "Rt(2,1,1,2)",
   *  "P(4)", "P(4,2)", "Pmax(3)", "D(2)". */
  static FamilySpec parse(const std::string& text);
  std::string to_text() const;
};

std::vector<PartSequence> generate(const FamilySpec& fam, long long max_weight);

/**
 * Sum the monomial prod var^{stat} over every family member of weight at
 * most the grading bound.  The assignment maps statistic names to variables;
 * it must give the weight (or both index sums) a positively weighted
 * variable, so that the weight budget covers the truncation bound.
 */
GradedSeries gf_oracle(const FamilySpec& fam,
                       const std::vector<std::pair<std::string, Var>>& assign,
                       const Grading& g);

}  // namespace qhall
