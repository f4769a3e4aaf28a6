#include "homcodes/symplectic.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

namespace homcodes {

namespace {

using U64 = std::uint64_t;
using Wide = unsigned __int128;

Wide wmul(Wide a, Wide b) {
  Wide r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("Overflow", "bound arithmetic");
  return r;
}

Wide wpow(Int base, Int e) {
  Wide r = 1;
  for (Int i = 0; i < e; ++i) r = wmul(r, static_cast<Wide>(base));
  return r;
}

Wide wbinom(Int n, Int k) {
  if (k < 0 || k > n) return 0;
  Wide r = 1;
  for (Int i = 0; i < k; ++i) {
    r = wmul(r, static_cast<Wide>(n - i));
    r /= static_cast<Wide>(i + 1);
  }
  return r;
}

std::complex<double> omega_power(Int k, Int D) {
  double arg = 2.0 * std::numbers::pi * static_cast<double>(mod_reduce(k, D)) / static_cast<double>(D);
  return {std::cos(arg), std::sin(arg)};
}

CMat kron(const CMat& a, const CMat& b) {
  CMat r(a.rows() * b.rows(), a.cols() * b.cols());
  for (Int i = 0; i < a.rows(); ++i)
    for (Int j = 0; j < a.cols(); ++j)
      r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return r;
}

}  // namespace

Int symp_form_raw(const IVec& u, const IVec& v, Int n, Int D) {
  // Omega = [[0, -I], [I, 0]]: the sign pairs with the shift/phase action of
  // the sigma operators so that sigma_u sigma_v = omega^{u^t Omega v} sigma_v
  // sigma_u holds exactly (and syndromes come out as v_i^t Omega u).
  Int s = 0;
  for (Int i = 0; i < n; ++i) s += u[n + i] * v[i] - u[i] * v[n + i];
  return mod_reduce(s, D);
}

Int symp_form(const SympVector& u, const SympVector& v) {
  if (u.n != v.n || u.D != v.D) throw Error("InvalidArgument", "symplectic form dimension mismatch");
  return symp_form_raw(u.v, v.v, u.n, u.D);
}

Int symp_weight_raw(const IVec& v, Int n) {
  Int w = 0;
  for (Int i = 0; i < n; ++i)
    if (v[i] != 0 || v[n + i] != 0) ++w;
  return w;
}

Int symp_weight(const SympVector& v) { return symp_weight_raw(v.v, v.n); }

IMat omega_matrix(Int n) {
  IMat o = IMat::Zero(2 * n, 2 * n);
  for (Int i = 0; i < n; ++i) { o(i, n + i) = -1; o(n + i, i) = 1; }
  return o;
}

std::complex<double> pauli_phase_f(Int x, Int D) {
  if (D % 2 == 0 && mod_reduce(x, 2) == 1) {
    double arg = std::numbers::pi / static_cast<double>(D);
    return {std::cos(arg), std::sin(arg)};
  }
  return {1.0, 0.0};
}

CMat dense_sigma(const SympVector& s) {
  double dim = std::pow(static_cast<double>(s.D), static_cast<double>(s.n));
  if (dim > 4096.0) throw Error("TooLarge", "dense sigma bounded at D^n = 4096");
  CMat acc = CMat::Identity(1, 1);
  for (Int q = 0; q < s.n; ++q) {
    Int x = s.x(q), z = s.z(q);
    CMat m = CMat::Zero(s.D, s.D);
    std::complex<double> f = pauli_phase_f(mod_reduce(x * z, s.D) , s.D);
    // sigma(x,z)|k> = f(xz) omega^{zk} |k+x>
    for (Int k = 0; k < s.D; ++k)
      m(mod_reduce(k + x, s.D), k) = f * omega_power(z * k, s.D);
    acc = kron(acc, m);
  }
  return acc;
}

StabilizerCode StabilizerCode::from_rows(Int n, Int D, IMat rows) {
  if (rows.cols() != 2 * n) throw Error("InvalidArgument", "generator length != 2n");
  StabilizerCode c;
  c.n = n;
  c.D = D;
  c.basis = mat_mod(rows, D);
  c.phases = IVec::Zero(rows.rows());
  if (!is_isotropic(c)) throw Error("InvalidArgument", "generators are not isotropic");
  return c;
}

StabilizerCode StabilizerCode::trivial(Int n, Int k, Int D) {
  IMat rows = IMat::Zero(n - k, 2 * n);
  for (Int i = 0; i < n - k; ++i) rows(i, n + i) = 1;
  return from_rows(n, D, rows);
}

StabilizerCode StabilizerCode::five_qubit() {
  IMat rows(4, 10);
  rows << 1, 1, 0, 0, 0,  0, 0, 1, 1, 0,
          1, 0, 1, 0, 0,  0, 1, 0, 0, 1,
          0, 0, 0, 1, 0,  1, 0, 1, 0, 1,
          0, 0, 0, 0, 1,  1, 1, 0, 1, 0;
  return from_rows(5, 2, rows);
}

StabilizerCode StabilizerCode::conjugated(const IVec& w) const {
  StabilizerCode c = *this;
  for (Int i = 0; i < basis.rows(); ++i)
    c.phases[i] = mod_reduce(phases[i] + symp_form_raw(basis.row(i).transpose(), w, n, D), D);
  return c;
}

bool is_isotropic(const StabilizerCode& c) {
  for (Int i = 0; i < c.basis.rows(); ++i)
    for (Int j = i; j < c.basis.rows(); ++j)
      if (symp_form_raw(c.basis.row(i).transpose(), c.basis.row(j).transpose(), c.n, c.D) != 0)
        return false;
  return true;
}

ZdMatrix vhat(const StabilizerCode& c) {
  IMat constraint = c.basis * omega_matrix(c.n);
  return kernel_mod(ZdMatrix(constraint, c.D));
}

std::optional<Int> stabilizer_log_order(const StabilizerCode& c) {
  ZdMatrix h = howell_form(ZdMatrix(c.basis, c.D));
  Int order = howell_span_order(h);
  Int k = 0;
  while (order % c.D == 0) { order /= c.D; ++k; }
  if (order != 1) return std::nullopt;
  return k;
}

std::optional<Int> code_k(const StabilizerCode& c) {
  auto lo = stabilizer_log_order(c);
  if (!lo) return std::nullopt;
  return c.n - *lo;
}

namespace {

// complement of span(V) inside span(V-hat): rows extending the Howell form
IMat vhat_complement(const StabilizerCode& c, const ZdMatrix& vh) {
  ZdMatrix span = howell_form(ZdMatrix(c.basis, c.D));
  std::vector<IVec> extra;
  for (Int i = 0; i < vh.rows(); ++i) {
    IVec row = vh.m.row(i).transpose();
    if (in_howell_span(span, row)) continue;
    extra.push_back(row);
    IMat stacked(span.rows() + 1, 2 * c.n);
    stacked.topRows(span.rows()) = span.m;
    stacked.row(span.rows()) = row.transpose();
    span = howell_form(ZdMatrix(stacked, c.D));
  }
  IMat w(static_cast<Int>(extra.size()), 2 * c.n);
  for (size_t i = 0; i < extra.size(); ++i) w.row(static_cast<Int>(i)) = extra[i].transpose();
  return w;
}

Int distance_packed_z2(const StabilizerCode& c, const IMat& vrows, const IMat& wrows) {
  const Int n = c.n;
  auto pack = [&](const IMat& m, Int i) {
    U64 x = 0, z = 0;
    for (Int j = 0; j < n; ++j) {
      if (m(i, j) & 1) x |= U64(1) << j;
      if (m(i, n + j) & 1) z |= U64(1) << j;
    }
    return std::pair<U64, U64>{x, z};
  };
  std::vector<std::pair<U64, U64>> vr, wr;
  for (Int i = 0; i < vrows.rows(); ++i) vr.push_back(pack(vrows, i));
  for (Int i = 0; i < wrows.rows(); ++i) wr.push_back(pack(wrows, i));

  Int best = n + 1;
  const U64 wcount = U64(1) << wr.size();
  for (U64 wm = 1; wm < wcount; ++wm) {
    U64 x0 = 0, z0 = 0;
    for (size_t i = 0; i < wr.size(); ++i)
      if ((wm >> i) & 1) { x0 ^= wr[i].first; z0 ^= wr[i].second; }
    U64 x = x0, z = z0;
    Int w0 = std::popcount(x | z);
    if (w0 < best) best = w0;
    const U64 vcount = vr.empty() ? 1 : (U64(1) << vr.size());
    for (U64 cnt = 1; cnt < vcount; ++cnt) {
      size_t flip = static_cast<size_t>(std::countr_zero(cnt));
      x ^= vr[flip].first;
      z ^= vr[flip].second;
      Int w = std::popcount(x | z);
      if (w < best) best = w;
    }
  }
  return best;
}

Int distance_odometer(const StabilizerCode& c, const IMat& vrows, const IMat& wrows) {
  const Int n = c.n, D = c.D;
  Int best = n + 1;
  const Int wn = wrows.rows(), vn = vrows.rows();
  std::vector<Int> wcoef(static_cast<size_t>(wn), 0);
  IVec base = IVec::Zero(2 * n);

  auto add_row = [&](IVec& dst, const IMat& m, Int i, Int times) {
    for (Int j = 0; j < 2 * n; ++j) dst[j] = mod_reduce(dst[j] + times * m(i, j), D);
  };

  while (true) {
    // advance the W odometer, skipping the all-zero combination
    Int p = 0;
    while (p < wn) {
      add_row(base, wrows, p, 1);
      if (++wcoef[static_cast<size_t>(p)] < D) break;
      wcoef[static_cast<size_t>(p)] = 0;
      ++p;
    }
    if (p == wn) break;

    IVec cur = base;
    Int w = symp_weight_raw(cur, n);
    if (w < best) best = w;
    std::vector<Int> vcoef(static_cast<size_t>(vn), 0);
    while (true) {
      Int q = 0;
      while (q < vn) {
        add_row(cur, vrows, q, 1);
        if (++vcoef[static_cast<size_t>(q)] < D) break;
        vcoef[static_cast<size_t>(q)] = 0;
        ++q;
      }
      if (q == vn) break;
      Int wt = symp_weight_raw(cur, n);
      if (wt < best) best = wt;
    }
  }
  return best;
}

bool is_prime(Int p) {
  if (p < 2) return false;
  for (Int q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

}  // namespace

Int distance_bruteforce(const StabilizerCode& c) {
  ZdMatrix vh = vhat(c);
  ZdMatrix vspan = howell_form(ZdMatrix(c.basis, c.D));

  if (is_prime(c.D)) {
    IMat w = vhat_complement(c, vh);
    double total = std::pow(static_cast<double>(c.D),
                            static_cast<double>(vspan.rows() + w.rows()));
    if (c.D == 2) {
      if (c.n > 63 || total > double(1ULL << 30)) throw Error("TooLarge", "distance enumeration budget");
      return distance_packed_z2(c, vspan.m, w);
    }
    if (total > 400000000.0) throw Error("TooLarge", "distance enumeration budget");
    return distance_odometer(c, vspan.m, w);
  }

  // composite D: enumerate the whole of V-hat by generator coefficients and
  // test membership in V per candidate
  double total = std::pow(static_cast<double>(c.D), static_cast<double>(vh.rows()));
  if (total > 2000000.0) throw Error("TooLarge", "distance enumeration budget");
  Int best = c.n + 1;
  std::vector<Int> coef(static_cast<size_t>(vh.rows()), 0);
  IVec cur = IVec::Zero(2 * c.n);
  while (true) {
    Int p = 0;
    while (p < vh.rows()) {
      for (Int j = 0; j < 2 * c.n; ++j) cur[j] = mod_reduce(cur[j] + vh.m(p, j), c.D);
      if (++coef[static_cast<size_t>(p)] < c.D) break;
      coef[static_cast<size_t>(p)] = 0;
      ++p;
    }
    if (p == vh.rows()) break;
    if (!in_howell_span(vspan, cur)) {
      Int w = symp_weight_raw(cur, c.n);
      if (w < best) best = w;
    }
  }
  return best;
}

std::optional<CssSplit> is_css(const StabilizerCode& c) {
  const Int n = c.n, D = c.D;
  IMat bx = c.basis.leftCols(n), bz = c.basis.rightCols(n);

  // pure-X subcode: row combinations annihilating the Z block (and vice versa)
  auto pure_rows = [&](const IMat& anni_block, bool x_part) {
    ZdMatrix lam = kernel_mod(ZdMatrix(anni_block.transpose(), D));
    IMat rows = mat_mod(lam.m * c.basis, D);
    (void)x_part;
    return rows;
  };
  IMat px = pure_rows(bz, true);
  IMat pz = pure_rows(bx, false);

  IMat stacked(px.rows() + pz.rows(), 2 * n);
  stacked.topRows(px.rows()) = px;
  stacked.bottomRows(pz.rows()) = pz;
  Int split_order = howell_span_order(howell_form(ZdMatrix(stacked, D)));
  Int full_order = howell_span_order(howell_form(ZdMatrix(c.basis, D)));
  if (split_order != full_order) return std::nullopt;

  CssSplit s;
  s.x_checks = howell_form(ZdMatrix(IMat(px.leftCols(n)), D)).m;
  s.z_checks = howell_form(ZdMatrix(IMat(pz.rightCols(n)), D)).m;
  return s;
}

bool is_degenerate(const StabilizerCode& c, Int t) {
  if (t <= 0) return false;
  ZdMatrix span = howell_form(ZdMatrix(c.basis, c.D));
  double total = std::pow(static_cast<double>(c.D), static_cast<double>(span.rows()));
  if (total > 50000000.0) throw Error("TooLarge", "degeneracy enumeration budget");
  std::vector<Int> coef(static_cast<size_t>(span.rows()), 0);
  IVec cur = IVec::Zero(2 * c.n);
  while (true) {
    Int p = 0;
    while (p < span.rows()) {
      for (Int j = 0; j < 2 * c.n; ++j) cur[j] = mod_reduce(cur[j] + span.m(p, j), c.D);
      if (++coef[static_cast<size_t>(p)] < c.D) break;
      coef[static_cast<size_t>(p)] = 0;
      ++p;
    }
    if (p == span.rows()) break;
    Int w = symp_weight_raw(cur, c.n);
    if (w > 0 && w <= 2 * t) return true;
  }
  return false;
}

bool quantum_hamming_holds(Int n, Int k, Int t, Int D) {
  Wide sum = 0;
  for (Int i = 0; i <= t; ++i) {
    Wide term = wmul(wpow(D * D - 1, i), wbinom(n, i));
    Wide next = sum + term;
    if (next < sum) throw Error("Overflow", "bound arithmetic");
    sum = next;
  }
  return wmul(wpow(D, k), sum) <= wpow(D, n);
}

std::vector<SympGenerator> appendix_a_generators(Int D, Int n) {
  if (n < 1) throw Error("InvalidArgument", "need n >= 1");
  std::vector<SympGenerator> gens;
  auto ident = [&]() { return mat_mod(IMat::Identity(2 * n, 2 * n), D); };

  // Fourier on qudit 0: (x, z) -> (-z, x)
  SympGenerator f{"F", ident()};
  f.m(0, 0) = 0; f.m(0, n) = mod_reduce(-1, D);
  f.m(n, 0) = 1; f.m(n, n) = 0;
  gens.push_back(std::move(f));

  // K on qudit 0: (x, z) -> (x, x + z)
  SympGenerator k{"K", ident()};
  k.m(n, 0) = 1;
  gens.push_back(std::move(k));

  if (n >= 2) {
    // controlled NOT on qudits (0, 1): x2 += x1, z1 -= z2
    SympGenerator cx{"CNOT", ident()};
    cx.m(1, 0) = 1;
    cx.m(n, n + 1) = mod_reduce(-1, D);
    gens.push_back(std::move(cx));

    for (Int q = 0; q + 1 < n; ++q) {
      SympGenerator sw{"SWAP" + std::to_string(q), ident()};
      sw.m(q, q) = sw.m(q + 1, q + 1) = 0;
      sw.m(q, q + 1) = sw.m(q + 1, q) = 1;
      sw.m(n + q, n + q) = sw.m(n + q + 1, n + q + 1) = 0;
      sw.m(n + q, n + q + 1) = sw.m(n + q + 1, n + q) = 1;
      gens.push_back(std::move(sw));
    }
  }

  IMat om = omega_matrix(n);
  for (const auto& g : gens)
    if (!mat_mod(g.m.transpose() * om * g.m - om, D).isZero())
      throw Error("InvalidArgument", "generator is not symplectic");
  return gens;
}

CMat dense_fourier(Int D) {
  CMat f(D, D);
  for (Int k = 0; k < D; ++k)
    for (Int l = 0; l < D; ++l) f(k, l) = omega_power(k * l, D) / std::sqrt(static_cast<double>(D));
  return f;
}

CMat dense_k_operator(Int D) {
  CMat m = CMat::Zero(D, D);
  for (Int k = 0; k < D; ++k) {
    std::complex<double> f1 = pauli_phase_f(1, D);
    m(k, k) = std::pow(f1, static_cast<double>(k)) * omega_power(k * (k + 1) / 2, D);
  }
  return m;
}

CMat dense_cnot(Int D) {
  // |k,l> -> |k, k+l>; this is the direction that realizes
  // X^i ox X^j -> X^i ox X^{i+j} and Z^i ox Z^j -> Z^{i-j} ox Z^j
  CMat m = CMat::Zero(D * D, D * D);
  for (Int k = 0; k < D; ++k)
    for (Int l = 0; l < D; ++l)
      m(k * D + mod_reduce(k + l, D), k * D + l) = 1.0;
  return m;
}

std::vector<GeneratorVerification> verify_generator_unitaries(Int D, Int n) {
  double dim = std::pow(static_cast<double>(D), static_cast<double>(n));
  if (dim > 1024.0) throw Error("TooLarge", "dense verification bounded at D^n = 1024");
  auto gens = appendix_a_generators(D, n);

  auto embed = [&](const CMat& u, Int qudits) {
    CMat acc = u;
    for (Int q = qudits; q < n; ++q) acc = kron(acc, CMat::Identity(D, D));
    return acc;
  };

  std::vector<GeneratorVerification> out;
  for (const auto& g : gens) {
    CMat u;
    if (g.name == "F") u = embed(dense_fourier(D), 1);
    else if (g.name == "K") u = embed(dense_k_operator(D), 1);
    else if (g.name == "CNOT") u = embed(dense_cnot(D), 2);
    else continue;  // transpositions act by relabeling; nothing dense to check

    GeneratorVerification ver{g.name, 0.0, {}};
    for (Int unit = 0; unit < 2 * n; ++unit) {
      IVec v = IVec::Zero(2 * n);
      v[unit] = 1;
      CMat lhs = u * dense_sigma(SympVector(n, D, v)) * u.adjoint();
      IVec mv = mat_mod(g.m * v, D);
      CMat rhs = dense_sigma(SympVector(n, D, mv));
      // proportionality constant via the largest entry of rhs
      Int bi = 0, bj = 0;
      double bestmag = 0;
      for (Int i = 0; i < rhs.rows(); ++i)
        for (Int j = 0; j < rhs.cols(); ++j)
          if (std::abs(rhs(i, j)) > bestmag) { bestmag = std::abs(rhs(i, j)); bi = i; bj = j; }
      std::complex<double> psi = lhs(bi, bj) / rhs(bi, bj);
      double dev = std::abs(std::abs(psi) - 1.0);
      dev = std::max(dev, (lhs - psi * rhs).cwiseAbs().maxCoeff());
      ver.max_deviation = std::max(ver.max_deviation, dev);
      // measured omega exponent of psi
      double ang = std::arg(psi) * D / (2.0 * std::numbers::pi);
      Int gexp = mod_reduce(static_cast<Int>(std::llround(ang)), D);
      ver.measured_phase.push_back(gexp);
    }
    out.push_back(std::move(ver));
  }
  return out;
}

}  // namespace homcodes
