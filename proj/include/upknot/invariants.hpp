#pragma once

#include <vector>

#include "upknot/diagram.hpp"
#include "upknot/laurent.hpp"
#include "upknot/rational_func.hpp"

namespace upknot {

// The (2n+1)x(2n+1) presentation matrix of a diagram: identity minus, for
// each crossing (s, i, j), T^s at (i, i+1), (1 - T^s) at (i, j+1), and 1 at
// (j, j+1). Rows and columns are 0-based here; edge k corresponds to index
// k-1.
struct AMatrix {
  int size = 0;
  std::vector<Laurent1> entries;  // row-major
  const Laurent1& at(int r, int c) const { return entries[static_cast<std::size_t>(r) * size + c]; }
  Laurent1& at(int r, int c) { return entries[static_cast<std::size_t>(r) * size + c]; }
};

AMatrix build_matrix(const UprightDiagram& d);

// Determinant and adjugate of an invertible polynomial matrix; the entry
// (r, c) of the matrix inverse is adj(r, c) / det.
struct GreenData {
  int size = 0;
  Laurent1 det;
  std::vector<Laurent1> adj;  // row-major adjugate
  const Laurent1& adj_at(int r, int c) const {
    return adj[static_cast<std::size_t>(r) * size + c];
  }
  RatFn1 g(int r, int c) const { return RatFn1(adj_at(r, c), det); }
};

// Dense fraction-free elimination over the polynomial ring; works for any
// square matrix, throws SingularMatrixError when the determinant vanishes.
GreenData green(const AMatrix& a);

// Same result for a diagram's matrix, via a structured elimination that
// reduces to an n x n core first. Every call certifies A * adj == det * I
// and det(1) == 1 exactly; failure of either throws InternalError.
GreenData green(const UprightDiagram& d);

// Normalized Alexander polynomial T^((-rotation-writhe)/2) * det(A).
Laurent1 alexander(const UprightDiagram& d);

// Whether the double sum over crossing pairs includes the diagonal pair
// (c, c). IncludeDiagonal is the correct convention: with ExcludeDiagonal the
// two-variable invariant of a one-crossing curl fails to be a Laurent
// polynomial. The wrong convention stays selectable for diagnostics.
enum class PairSum { IncludeDiagonal, ExcludeDiagonal };

// Reading of the last bracket of the per-crossing term. The source formula
// for it is ambiguous; MinusInside is the unique reading under which the
// invariant vanishes on all four one-crossing curls, as invariance demands.
// The rejected readings remain selectable so tests can demonstrate they fail.
enum class F1Tail { MinusInside, PlusInside, MinusOutside, PlusOutside };

struct ThetaOptions {
  PairSum pair_sum = PairSum::IncludeDiagonal;
  F1Tail tail = F1Tail::MinusInside;
};

Laurent1 rho1(const UprightDiagram& d);
Laurent2 theta(const UprightDiagram& d, const ThetaOptions& options = {});

// T1 <- 1, T2 <- T; the defining identity is rho1 == -specialize_theta(theta).
Laurent1 specialize_theta(const Laurent2& th);

struct InvariantResult {
  Laurent1 delta;
  Laurent1 rho1;
  Laurent2 theta;
  int writhe = 0;
  int total_rotation = 0;
};

// All three invariants from a single elimination of the diagram's matrix.
InvariantResult compute_all(const UprightDiagram& d, const ThetaOptions& options = {});

}  // namespace upknot
