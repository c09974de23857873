#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ehrtensor/tensor.hpp"

namespace ehrtensor {

struct ConstraintRow {
  CoordinateRow coeffs;
  std::string tag;  // which relation produced the row
};

// Linear constraints on the coordinates of a rank-r tensor on R^dim.
// Unknowns are all multi-indices in lexicographic order.
class ConstraintSystem {
 public:
  ConstraintSystem(int dim, int rank);

  int dim() const { return dim_; }
  int rank() const { return rank_; }
  const std::vector<MultiIndex>& unknowns() const { return unknowns_; }
  const std::vector<ConstraintRow>& rows() const { return rows_; }
  std::size_t column(const MultiIndex& alpha) const;

  // Zero rows are dropped.
  void add_row(CoordinateRow coeffs, std::string tag);
  void append(const ConstraintSystem& other);

  // True when every row vanishes on t.
  bool annihilates(const SymTensor& t) const;

 private:
  int dim_;
  int rank_;
  std::vector<MultiIndex> unknowns_;
  std::vector<ConstraintRow> rows_;
};

// Unknowns x_a = Z(T_2)(e_1[a], e_2[r-a]). Rows from the relation
// T_2 - e_2 = phi T_2 with phi^t e_1 = e_2, phi^t e_2 = -e_1 - e_2, plus
// x_a = parity * x_{r-a} when parity is +1 or -1 (0 adds no symmetry rows).
ConstraintSystem planar_system(int r, int parity);

// The planar recurrence written out by hand: for 1 <= j <= r the row
// sum_{i<j} C(j,i) x_i + 2 x_j [j odd] = 0, then x_a = parity * x_{r-a}.
// Parity -1 also gets x_0 + x_r = 0.
ConstraintSystem planar_transcription(int r, int parity);

// Adds (1 + (-1)^r) Z(T_2) = 0 and the square relation
// Z o psi^t + Z o psi'^t = 0 coming from the two diagonals of the unit square.
void add_square_relation(ConstraintSystem& system);

enum class CoordinateFilter { All, LastOdd, LastEven };

// Dissection rows sum_i Z(T_n)(phi_i^t e_1[r_1], ..., phi_i^t e_n[r_n]) = 0 for
// every multi-index passing the filter on r_n, plus x_alpha = x_{sigma alpha}
// for generators sigma of the even permutations.
ConstraintSystem prism_system(int n, int r, CoordinateFilter filter);

// phi_i^t e_1, ..., phi_i^t e_n (1-based i, phi_1 = identity).
std::vector<IntVec> prism_map_transpose_images(int n, int i);

enum class RankStrategy {
  Auto,         // union-find on two-term rows, Bareiss on the rest
  DenseBareiss  // Bareiss on the full matrix
};

std::size_t rank(const ConstraintSystem& system, RankStrategy strategy = RankStrategy::Auto);

// Kernel basis in reduced row echelon form (one tensor per basis vector).
std::vector<SymTensor> kernel_basis(const ConstraintSystem& system);

// Rank of a rational matrix by fraction-free elimination.
std::size_t bareiss_rank(const std::vector<RatVec>& rows, std::size_t ncols);

struct SurveyRow {
  int r = 0;
  std::string assembly;
  std::size_t unknowns = 0;
  std::size_t rank = 0;
  std::optional<std::size_t> expected;
  bool designated = false;  // the assembly the quoted numbers are checked against
};

struct SurveyKernelCheck {
  std::size_t kernel_dim = 0;
  bool l9_in_kernel = false;
  bool n_in_kernel = false;
  bool independent = false;
};

struct SurveyReport {
  std::vector<SurveyRow> rows;
  std::optional<SurveyKernelCheck> r9;
  // Every designated row with an expected value matches it.
  bool designated_match() const;
};

// Expected planar rank for odd r >= 9, if stated.
std::optional<std::size_t> quoted_survey_rank(int r);

// Ranks of every planar assembly for each r; the r = 9 kernel check runs when
// 9 is in the list.
SurveyReport high_rank_survey(const std::vector<int>& r_list);

}  // namespace ehrtensor
