#pragma once

#include "curvetopo/cball.hpp"
#include "curvetopo/words.hpp"

namespace curvetopo {

// Word in the Artin braid group B_d: letters +-i for sigma_i^{+-1},
// 1 <= i <= strands-1.
struct BraidWord {
  int strands = 0;
  std::vector<int> letters;

  // permutation induced on strand positions: perm[i] = final position of
  // the strand starting at position i (0-based)
  std::vector<int> permutation() const;
  BraidWord inverse() const;
  friend BraidWord operator*(const BraidWord& a, const BraidWord& b);
  // exponent sum (writhe); invariant under conjugacy
  long writhe() const;
  // free cancellation of adjacent sigma_i sigma_i^{-1}
  BraidWord reduced() const;
  std::string str() const;
};

// Artin action of the braid on free-group meridians g_1..g_d:
// sigma_i: g_i -> g_i g_{i+1} g_i^{-1}, g_{i+1} -> g_i (letters applied left
// to right). Returns the image of generator `gen` (1-based) as a word.
Word artin_apply(const BraidWord& b, int gen);

// Monodromy relations of the braid: words b(g_i) g_i^{-1} (freely reduced,
// trivial ones dropped).
std::vector<Word> braid_relations(const BraidWord& b);

// Extracts a braid word from certified strand paths (one polyline per
// strand, all the same length, closed loop not required). The projection
// direction is exp(i*theta); neighbouring samples must be fine enough that
// strand orderings change by adjacent transpositions only, and projected
// gaps must be certified (balls disjoint in projection) at every step --
// violations raise degenerate/undecidable errors so callers can resample.
BraidWord braid_from_paths(const std::vector<std::vector<cball>>& paths,
                           double theta);

} // namespace curvetopo
