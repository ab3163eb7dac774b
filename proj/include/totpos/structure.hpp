#pragma once

#include "totpos/rational.hpp"

#include <random>
#include <vector>

namespace totpos {

/// Composition (n_1, ..., n_k) of n: C(D) = S(n_1) + ... + S(n_k) as a direct sum.
struct CentralizerShape {
  std::vector<int> composition;

  friend bool operator==(const CentralizerShape&, const CentralizerShape&) = default;
};

/// Groups maximal runs of equal consecutive diagonal entries. Throws
/// std::invalid_argument for a non-diagonal or non-positive input.
CentralizerShape centralizer_shape(const RatMatrix& d);

/// X is ITN and AX = XA.
bool in_centralizer(const RatMatrix& a, const RatMatrix& x);

/// Decides X in C(D) from the block pattern of centralizer_shape(D): X vanishes
/// outside the diagonal blocks and every diagonal block is ITN.
bool block_membership(const RatMatrix& d, const RatMatrix& x);

/// diag(1, 2, ..., k, k, k+2, ..., n): only positions k and k+1 agree.
RatMatrix dk_matrix(int n, int k);

/// Positive diagonal whose only equal consecutive pair sits at (k, k+1).
bool is_dk(const RatMatrix& d, int k);

/// a I_{k-1} + X + b I_{n-k-1} (direct sum), X a non-diagonal 2x2 ITN matrix.
struct CkElement {
  int n = 0;
  int k = 1;
  Rat a;
  Rat b;
  RatMatrix x;

  /// Checks the invariants and builds the n x n matrix.
  RatMatrix realize() const;
};

CkElement random_ck_element(int n, int k, std::mt19937_64& rng);

/// Elements of C_i and C_j all commute exactly when |i - j| > 1 (n >= 4).
bool ck_commute_expected(int n, int i, int j);

struct EntryWitness {
  int row = 0;  ///< 1-based
  int col = 0;  ///< 1-based
  Rat value;
};

/// Position of a negative entry of A^{-1} for a non-diagonal ITN A: such an A has
/// no inverse inside ITN, so D(n) is the largest subgroup.
EntryWitness maximal_subgroup_witness(const RatMatrix& a);

/// For a non-diagonal 2x2 ITN A: true iff A = aI + bE_12 or A = aI + bE_21, i.e.
/// exactly when every diagonal conjugate of A commutes with A.
bool two_by_two_conjugation_test(const RatMatrix& a);

}  // namespace totpos
