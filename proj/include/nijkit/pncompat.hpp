#pragma once

#include <string>
#include <vector>

#include "nijkit/nijenhuis.hpp"

namespace nijkit {

struct PNPair {
  KForm omega;
  OperatorField L;

  const Chart& chart() const { return L.chart(); }
  /// Half the dimension.
  std::size_t n() const { return L.dim() / 2; }
};

/// Chart (x1..xn, p1..pn).
Chart canonical_chart(std::size_t n);
/// sum dx_i ^ dp_i on a chart whose first n coordinates are x and last n are p.
KForm canonical_omega(const Chart& chart);
/// The companion block with -x_i down the first column.
ScalarMatrix canonical_A(const Chart& chart, std::size_t n);
/// Skew block with -p_j in the first row and p_i in the first column.
ScalarMatrix canonical_S(const Chart& chart, std::size_t n);

/// Matrix of omega(L., .), i.e. L^T W.
ScalarMatrix twisted_matrix(const KForm& omega, const OperatorField& L);

/// L with omega_tilde(., .) = omega(L., .). Throws DegenerateOmega.
OperatorField recursion_operator(const KForm& omega, const KForm& omega_tilde);

struct CompatibilityReport {
  bool omega_nondegenerate = false;
  bool skew = false;          // condition (I)
  bool tilde_closed = false;  // condition (II)
  bool omega_closed = false;
  std::vector<std::string> violations;
  bool ok() const { return omega_nondegenerate && skew && tilde_closed && omega_closed; }
};

CompatibilityReport check_compatibility(const PNPair& p);

struct CanonicalPN {
  std::size_t n = 0;
  PNPair pair;
  ScalarMatrix A;
  ScalarMatrix S;
};

/// Builds the canonical pair and certifies torsion = 0 and (I), (II);
/// a failed certification is reported as Error(Internal).
CanonicalPN build_canonical(std::size_t n);

enum class BlockType { Type1, Type2, Type3, Type4, Singular };

std::string_view to_string(BlockType t);

struct BlockTag {
  UPoly factor;               // factor of the characteristic polynomial at the point
  unsigned multiplicity = 0;  // its multiplicity in the characteristic polynomial
  bool complex_pair = false;
  bool eigenvalue_constant = false;  // the cluster trace differentials vanish at the point
  BlockType type = BlockType::Singular;
};

/// Structural Types 1-4 tags for the eigenvalue clusters of L at the point.
/// Throws NotSemisimpleAtPoint when the minimal polynomial of L(point) is not
/// square-free.
std::vector<BlockTag> classify_semisimple_block(const PNPair& p, std::span<const Rational> point);

struct JacobiRowResult {
  bool ok = false;
  ScalarMatrix S_hat;   // lower-left block when ok
  std::string failure;  // first failing row otherwise
};

/// Checks the block shape [[A, 0], [S_hat, A^T]] with A the canonical
/// companion block and S_hat skew.
JacobiRowResult jacobi_row_structure(const OperatorField& L);

/// Applies the canonical transformation P = p + grad U for U = U(x):
/// L_new = J L J^-1 re-expressed in the new momenta, omega likewise.
/// Throws InvalidArgument if U depends on a p-variable.
PNPair generating_transform(const ScalarField& U, const PNPair& p);

}  // namespace nijkit
