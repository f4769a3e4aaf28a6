#pragma once

#include "homcodes/types.hpp"

#include <optional>
#include <vector>

namespace homcodes {

/// Dense matrix over Z_D (D >= 2, not necessarily prime); entries kept in [0, D).
struct ZdMatrix {
  IMat m;
  Int modulus = 2;

  ZdMatrix() = default;
  ZdMatrix(IMat mat, Int D);

  Int rows() const { return m.rows(); }
  Int cols() const { return m.cols(); }
};

/// U*A*V = diag(factors) with U, V unimodular and d_1 | d_2 | ... | d_r.
struct SmithForm {
  IMat u;
  IMat v;
  std::vector<Int> factors;  // nonzero invariant factors, in divisibility order

  Int rank() const { return static_cast<Int>(factors.size()); }
  IMat diagonal(Int rows, Int cols) const;
};

SmithForm smith_normal_form(const IMat& a);

/// Determinant by fraction-free (Bareiss) elimination; exact for Int-sized inputs.
Int determinant(const IMat& a);

/// Exact integer inverse of a unimodular matrix (via its Smith transforms).
IMat unimodular_inverse(const IMat& a);

/// Canonical Howell form of the row span of `a` over Z_D. Rows are a canonical
/// generating set: pivots divide D, pivot columns strictly increase, entries
/// above a pivot lie in [0, pivot). For prime D this is the RREF.
ZdMatrix howell_form(const ZdMatrix& a);

/// True iff v lies in the row span of a Howell-form matrix.
bool in_howell_span(const ZdMatrix& howell, const IVec& v);

/// Cardinality of the row span of a Howell-form matrix (product of D/pivot).
/// Guarded against overflow; spans here are desk-scale.
Int howell_span_order(const ZdMatrix& howell);

/// Generating set for {x : A x = 0 (mod D)}, returned in Howell form (one row
/// per generator). For prime D the rows are linearly independent.
ZdMatrix kernel_mod(const ZdMatrix& a);

/// True iff no nontrivial Z_D combination of the rows vanishes. Decided via the
/// Smith form of the integer lifts: the rows are independent mod D exactly when
/// the stacked matrix has full row rank and every invariant factor is a unit
/// mod D.
bool is_independent_mod(const IMat& rows, Int D);

/// Number of nonzero Howell rows (= rank for prime D).
Int row_space_rank_mod(const ZdMatrix& a);

/// Extended gcd: returns g = gcd(a,b) >= 0 and x, y with a*x + b*y = g.
struct Xgcd {
  Int g, x, y;
};
Xgcd xgcd(Int a, Int b);

/// A unit u mod D with u*a = gcd(a, D) (mod D). Requires 0 <= a < D.
Int unit_scaling_to_gcd(Int a, Int D);

IMat mat_mod(const IMat& a, Int D);

}  // namespace homcodes
