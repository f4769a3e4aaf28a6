#include "homcodes/zd_linalg.hpp"

#include <algorithm>
#include <limits>
#include <vector>
#include <cstdlib>

namespace homcodes {

IMat mat_mod(const IMat& a, Int D) {
  IMat r = a;
  for (Int i = 0; i < r.rows(); ++i)
    for (Int j = 0; j < r.cols(); ++j) r(i, j) = mod_reduce(r(i, j), D);
  return r;
}

ZdMatrix::ZdMatrix(IMat mat, Int D) : m(std::move(mat)), modulus(D) {
  if (D < 2) throw Error("InvalidArgument", "modulus must be >= 2");
  m = mat_mod(m, D);
}

Xgcd xgcd(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r; old_r = r; r = tmp;
    tmp = old_s - q * s; old_s = s; s = tmp;
    tmp = old_t - q * t; old_t = t; t = tmp;
  }
  if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
  return {old_r, old_s, old_t};
}

Int unit_scaling_to_gcd(Int a, Int D) {
  Int d = std::gcd(a, D);
  if (a == d) return 1;
  for (Int u = 1; u < D; ++u) {
    if (std::gcd(u, D) != 1) continue;
    if (mod_reduce(u * a, D) == d) return u;
  }
  throw Error("InvalidArgument", "no unit scaling found");
}

IMat SmithForm::diagonal(Int rows, Int cols) const {
  IMat d = IMat::Zero(rows, cols);
  for (Int i = 0; i < rank(); ++i) d(i, i) = factors[static_cast<size_t>(i)];
  return d;
}

namespace {

// The reduction runs in 128-bit: the input entries are small but the
// accumulated transforms are not, and a spurious 64-bit trap here would fail
// inputs that are perfectly fine. Results are narrowed (and checked) at the end.
using Wide = __int128;

struct WideMat {
  Int rows, cols;
  std::vector<Wide> a;
  WideMat(Int r, Int c, bool identity) : rows(r), cols(c), a(static_cast<size_t>(r * c), 0) {
    if (identity)
      for (Int i = 0; i < std::min(r, c); ++i) at(i, i) = 1;
  }
  Wide& at(Int i, Int j) { return a[static_cast<size_t>(i * cols + j)]; }
  Wide get(Int i, Int j) const { return a[static_cast<size_t>(i * cols + j)]; }
  void swap_rows(Int i, Int j) {
    if (i == j) return;
    for (Int c = 0; c < cols; ++c) std::swap(at(i, c), at(j, c));
  }
  void swap_cols(Int i, Int j) {
    if (i == j) return;
    for (Int r = 0; r < rows; ++r) std::swap(at(r, i), at(r, j));
  }
};

Wide wmul(Wide x, Wide y) {
  Wide r;
  if (__builtin_mul_overflow(x, y, &r)) throw Error("Overflow", "smith reduction");
  return r;
}

void wcol_axpy(WideMat& a, Int dst, Int src, Wide c) {
  for (Int i = 0; i < a.rows; ++i) a.at(i, dst) -= wmul(c, a.at(i, src));
}

IMat narrow(const WideMat& w) {
  IMat out(w.rows, w.cols);
  for (Int i = 0; i < w.rows; ++i)
    for (Int j = 0; j < w.cols; ++j) {
      Wide x = w.get(i, j);
      if (x > std::numeric_limits<Int>::max() || x < std::numeric_limits<Int>::min())
        throw Error("Overflow", "smith transform exceeds 64 bits");
      out(i, j) = static_cast<Int>(x);
    }
  return out;
}

}  // namespace

SmithForm smith_normal_form(const IMat& a0) {
  const Int m = a0.rows(), n = a0.cols();
  WideMat a(m, n, false), u(m, m, true), v(n, n, true);
  for (Int i = 0; i < m; ++i)
    for (Int j = 0; j < n; ++j) a.at(i, j) = a0(i, j);

  // xgcd elimination: rows (t, i) <- [[x, y], [-b/g, a/g]] * rows (t, i) with
  // a = A(t,t), b = A(i,t) leaves gcd at the pivot and zero below. The 2x2
  // block is unimodular, and xgcd keeps its entries minimal.
  auto wxgcd = [](Wide av, Wide bv, Wide& x, Wide& y) -> Wide {
    Wide old_r = av, r = bv, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
      Wide q = old_r / r;
      Wide tmp = old_r - q * r; old_r = r; r = tmp;
      tmp = old_s - q * s; old_s = s; s = tmp;
      tmp = old_t - q * t; old_t = t; t = tmp;
    }
    if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
    x = old_s; y = old_t;
    return old_r;
  };

  // When the pivot already divides the target, a plain quotient step leaves the
  // pivot row/column untouched (termination depends on this); otherwise the
  // full xgcd combine strictly shrinks the pivot.
  auto combine_rows = [&](Int t, Int i) {
    Wide av = a.get(t, t), bv = a.get(i, t);
    if (bv % av == 0) {
      Wide q = bv / av;
      for (Int j = 0; j < n; ++j) a.at(i, j) -= wmul(q, a.get(t, j));
      for (Int j = 0; j < m; ++j) u.at(i, j) -= wmul(q, u.get(t, j));
      return;
    }
    Wide x, y;
    Wide g = wxgcd(av, bv, x, y);
    for (Int j = 0; j < n; ++j) {
      Wide rt = a.get(t, j), ri = a.get(i, j);
      a.at(t, j) = wmul(x, rt) + wmul(y, ri);
      a.at(i, j) = wmul(av / g, ri) - wmul(bv / g, rt);
    }
    for (Int j = 0; j < m; ++j) {
      Wide rt = u.get(t, j), ri = u.get(i, j);
      u.at(t, j) = wmul(x, rt) + wmul(y, ri);
      u.at(i, j) = wmul(av / g, ri) - wmul(bv / g, rt);
    }
  };

  auto combine_cols = [&](Int t, Int j) {
    Wide av = a.get(t, t), bv = a.get(t, j);
    if (bv % av == 0) {
      Wide q = bv / av;
      for (Int i = 0; i < m; ++i) a.at(i, j) -= wmul(q, a.get(i, t));
      for (Int i = 0; i < n; ++i) v.at(i, j) -= wmul(q, v.get(i, t));
      return;
    }
    Wide x, y;
    Wide g = wxgcd(av, bv, x, y);
    for (Int i = 0; i < m; ++i) {
      Wide ct = a.get(i, t), cj = a.get(i, j);
      a.at(i, t) = wmul(x, ct) + wmul(y, cj);
      a.at(i, j) = wmul(av / g, cj) - wmul(bv / g, ct);
    }
    for (Int i = 0; i < n; ++i) {
      Wide ct = v.get(i, t), cj = v.get(i, j);
      v.at(i, t) = wmul(x, ct) + wmul(y, cj);
      v.at(i, j) = wmul(av / g, cj) - wmul(bv / g, ct);
    }
  };

  Int t = 0;
  while (t < m && t < n) {
    // pivot: smallest nonzero |entry| in the trailing submatrix
    Int pi = -1, pj = -1;
    Wide best = 0;
    for (Int i = t; i < m; ++i)
      for (Int j = t; j < n; ++j) {
        Wide x = a.get(i, j);
        if (x < 0) x = -x;
        if (x != 0 && (pi < 0 || x < best)) { pi = i; pj = j; best = x; }
      }
    if (pi < 0) break;
    a.swap_rows(t, pi); u.swap_rows(t, pi);
    a.swap_cols(t, pj); v.swap_cols(t, pj);

    while (true) {
      for (Int i = t + 1; i < m; ++i)
        if (a.get(i, t) != 0) combine_rows(t, i);
      for (Int j = t + 1; j < n; ++j)
        if (a.get(t, j) != 0) combine_cols(t, j);
      bool dirty = false;
      for (Int i = t + 1; i < m && !dirty; ++i) dirty = a.get(i, t) != 0;
      for (Int j = t + 1; j < n && !dirty; ++j) dirty = a.get(t, j) != 0;
      if (!dirty) break;
    }
    ++t;
  }
  const Int rank = t;

  // Enforce the divisibility chain on the diagonal: fold d_j into column i and
  // re-run the 2x2 gcd elimination, which replaces (d_i, d_j) by (gcd, lcm).
  bool chain_dirty = true;
  while (chain_dirty) {
    chain_dirty = false;
    for (Int i = 0; i + 1 < rank; ++i)
      for (Int j = i + 1; j < rank; ++j)
        if (a.get(j, j) % a.get(i, i) != 0) {
          wcol_axpy(a, i, j, -1); wcol_axpy(v, i, j, -1);
          combine_rows(i, j);
          combine_cols(i, j);
          chain_dirty = true;
        }
  }

  SmithForm s;
  for (Int i = 0; i < std::min(m, n); ++i) {
    if (a.get(i, i) == 0) continue;
    if (a.get(i, i) < 0) {
      for (Int j = 0; j < n; ++j) a.at(i, j) = -a.get(i, j);
      for (Int j = 0; j < m; ++j) u.at(i, j) = -u.get(i, j);
    }
    Wide f = a.get(i, i);
    if (f > std::numeric_limits<Int>::max()) throw Error("Overflow", "invariant factor exceeds 64 bits");
    s.factors.push_back(static_cast<Int>(f));
  }
  s.u = narrow(u);
  s.v = narrow(v);
  return s;
}

Int determinant(const IMat& a0) {
  if (a0.rows() != a0.cols()) throw Error("InvalidArgument", "determinant of non-square matrix");
  const Int n = a0.rows();
  if (n == 0) return 1;
  // Bareiss in 128-bit: transform entries can exceed the input magnitude.
  using Wide = __int128;
  std::vector<Wide> a(static_cast<size_t>(n * n));
  for (Int i = 0; i < n; ++i)
    for (Int j = 0; j < n; ++j) a[static_cast<size_t>(i * n + j)] = a0(i, j);
  auto at = [&](Int i, Int j) -> Wide& { return a[static_cast<size_t>(i * n + j)]; };
  auto wmul = [](Wide x, Wide y) {
    Wide r;
    if (__builtin_mul_overflow(x, y, &r)) throw Error("Overflow", "determinant");
    return r;
  };
  Int sign = 1;
  Wide prev = 1;
  for (Int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      Int p = -1;
      for (Int i = k + 1; i < n; ++i)
        if (at(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (Int j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (Int i = k + 1; i < n; ++i)
      for (Int j = k + 1; j < n; ++j)
        at(i, j) = (wmul(at(i, j), at(k, k)) - wmul(at(i, k), at(k, j))) / prev;
    prev = at(k, k);
  }
  Wide det = at(n - 1, n - 1);
  if (det > std::numeric_limits<Int>::max() || det < std::numeric_limits<Int>::min())
    throw Error("Overflow", "determinant exceeds 64 bits");
  return sign * static_cast<Int>(det);
}

IMat unimodular_inverse(const IMat& a) {
  if (a.rows() != a.cols()) throw Error("InvalidArgument", "inverse of non-square matrix");
  SmithForm s = smith_normal_form(a);
  if (s.rank() != a.rows())
    throw Error("InvalidArgument", "matrix is singular");
  for (Int f : s.factors)
    if (f != 1) throw Error("InvalidArgument", "matrix is not unimodular");
  IMat inv = s.v * s.u;  // U A V = I  =>  A^-1 = V U
  if (inv * a != IMat::Identity(a.rows(), a.cols()))
    throw Error("InvalidArgument", "inverse verification failed");
  return inv;
}

ZdMatrix howell_form(const ZdMatrix& a) {
  const Int D = a.modulus;
  const Int n = a.cols();
  std::vector<IVec> rows;
  for (Int i = 0; i < a.rows(); ++i) {
    IVec r = a.m.row(i).transpose();
    if (!r.isZero()) rows.push_back(r);
  }

  auto mod_row = [D](IVec& r) {
    for (Int j = 0; j < r.size(); ++j) r[j] = mod_reduce(r[j], D);
  };

  size_t done = 0;
  for (Int j = 0; j < n && done < rows.size(); ++j) {
    // combine all rows with support at column j into a single pivot row
    size_t p = rows.size();
    for (size_t i = done; i < rows.size(); ++i) {
      if (rows[i][j] == 0) continue;
      if (p == rows.size()) { p = i; continue; }
      Xgcd e = xgcd(rows[p][j], rows[i][j]);
      IVec np = e.x * rows[p] + e.y * rows[i];
      IVec ni = (rows[p][j] / e.g) * rows[i] - (rows[i][j] / e.g) * rows[p];
      mod_row(np); mod_row(ni);
      rows[p] = std::move(np);
      rows[i] = std::move(ni);
    }
    if (p == rows.size()) continue;
    std::swap(rows[done], rows[p]);
    IVec& piv = rows[done];
    Int u = unit_scaling_to_gcd(piv[j], D);
    if (u != 1) { piv *= u; mod_row(piv); }
    Int d = piv[j];  // now a divisor of D
    if (d > 1) {
      IVec ann = (D / d) * piv;  // annihilator: kills the pivot, may survive to the right
      mod_row(ann);
      if (!ann.isZero()) rows.push_back(ann);
    }
    ++done;
  }
  rows.resize(done);

  // reduce entries above each pivot into [0, pivot)
  for (size_t i = 1; i < done; ++i) {
    Int j = 0;
    while (rows[i][j] == 0) ++j;
    Int d = rows[i][j];
    for (size_t q = 0; q < i; ++q) {
      Int c = rows[q][j] / d;
      if (c != 0) { rows[q] -= c * rows[i]; mod_row(rows[q]); }
    }
  }

  IMat out(static_cast<Int>(done), n);
  for (size_t i = 0; i < done; ++i) out.row(static_cast<Int>(i)) = rows[i].transpose();
  return ZdMatrix(std::move(out), D);
}

bool in_howell_span(const ZdMatrix& howell, const IVec& v0) {
  const Int D = howell.modulus;
  IVec v = v0;
  for (Int j = 0; j < v.size(); ++j) v[j] = mod_reduce(v[j], D);
  for (Int i = 0; i < howell.rows(); ++i) {
    Int j = 0;
    while (j < howell.cols() && howell.m(i, j) == 0) ++j;
    if (j == howell.cols()) continue;
    Int d = howell.m(i, j);
    if (v[j] % d != 0) return false;
    Int c = v[j] / d;
    if (c != 0) {
      v -= c * howell.m.row(i).transpose();
      for (Int q = 0; q < v.size(); ++q) v[q] = mod_reduce(v[q], D);
    }
  }
  return v.isZero();
}

Int howell_span_order(const ZdMatrix& howell) {
  const Int D = howell.modulus;
  Int order = 1;
  for (Int i = 0; i < howell.rows(); ++i) {
    Int j = 0;
    while (j < howell.cols() && howell.m(i, j) == 0) ++j;
    if (j == howell.cols()) continue;
    order = checked_mul(order, D / howell.m(i, j));
  }
  return order;
}

ZdMatrix kernel_mod(const ZdMatrix& a) {
  const Int D = a.modulus;
  const Int n = a.cols();
  SmithForm s = smith_normal_form(a.m);
  const Int r = s.rank();

  // A x = 0 (mod D)  <=>  S y = 0 with x = V y: y_i ranges over multiples of
  // D/gcd(s_i, D) for i < r and is free beyond the rank.
  std::vector<IVec> gens;
  for (Int i = 0; i < r; ++i) {
    Int g = std::gcd(s.factors[static_cast<size_t>(i)] % D, D);
    if (g == 0) g = D;
    if (g == 1) continue;  // y_i forced to 0
    gens.push_back((D / g) * s.v.col(i));
  }
  for (Int i = r; i < n; ++i) gens.push_back(s.v.col(i));

  IMat g(static_cast<Int>(gens.size()), n);
  for (size_t i = 0; i < gens.size(); ++i) g.row(static_cast<Int>(i)) = gens[i].transpose();
  return howell_form(ZdMatrix(std::move(g), D));
}

bool is_independent_mod(const IMat& rows, Int D) {
  if (rows.rows() == 0) return true;
  SmithForm s = smith_normal_form(rows);
  if (s.rank() < rows.rows()) return false;
  for (Int f : s.factors)
    if (std::gcd(f, D) != 1) return false;
  return true;
}

Int row_space_rank_mod(const ZdMatrix& a) { return howell_form(a).rows(); }

}  // namespace homcodes
