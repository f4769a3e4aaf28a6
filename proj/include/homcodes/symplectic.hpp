#pragma once

#include "homcodes/zd_linalg.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace homcodes {

/// Element of Z_D^{2n} in (x|z) block order.
struct SympVector {
  Int n = 0;
  Int D = 2;
  IVec v;  // length 2n

  SympVector() = default;
  SympVector(Int n_, Int D_, IVec v_) : n(n_), D(D_), v(std::move(v_)) {
    if (v.size() != 2 * n) throw Error("InvalidArgument", "symplectic vector length");
    for (Int i = 0; i < v.size(); ++i) v[i] = mod_reduce(v[i], D);
  }
  Int x(Int i) const { return v[i]; }
  Int z(Int i) const { return v[n + i]; }
};

/// u^t Omega v mod D with Omega = [[0, -I], [I, 0]] (the sign that makes the
/// commutation law of the sigma operators hold as stated).
Int symp_form(const SympVector& u, const SympVector& v);
Int symp_form_raw(const IVec& u, const IVec& v, Int n, Int D);

/// Number of qudits the operator touches.
Int symp_weight(const SympVector& v);
Int symp_weight_raw(const IVec& v, Int n);

/// 2n x 2n block matrix Omega over Z.
IMat omega_matrix(Int n);

/// f(x): e^{i pi / D} for even D and odd x, else 1; makes sigma(x,z)^D = 1.
std::complex<double> pauli_phase_f(Int x, Int D);

/// Dense unitary of sigma_v = tensor of f(x_i z_i) X^{x_i} Z^{z_i} (D^n <= 4096).
CMat dense_sigma(const SympVector& v);

/// Stabilizer code as an isotropic subspace of Z_D^{2n}, held by a generator
/// basis (rows) plus optional eigenvalue phases.
struct StabilizerCode {
  Int n = 0;
  Int D = 2;
  IMat basis;   // (n - k) x 2n for integral k
  IVec phases;  // one exponent per generator, default 0

  static StabilizerCode from_rows(Int n, Int D, IMat rows);
  /// C_T(n, k): pure-Z generators on the first n-k qudits.
  static StabilizerCode trivial(Int n, Int k, Int D);
  /// The [[5,1,3]] code, rows frozen from the standard 4 x 10 table.
  static StabilizerCode five_qubit();
  /// Same subspace, phases shifted by the sigma_w conjugation.
  StabilizerCode conjugated(const IVec& w) const;
};

/// Isotropy check: all pairwise forms vanish.
bool is_isotropic(const StabilizerCode& c);

/// Howell basis of V-hat = {u : u^t Omega v = 0 for all v in V}.
ZdMatrix vhat(const StabilizerCode& c);

/// log_D |span V| when integral (number of independent generators for prime D).
std::optional<Int> stabilizer_log_order(const StabilizerCode& c);

/// k = n - log_D|V|; nullopt when the subgroup order is not a power of D.
std::optional<Int> code_k(const StabilizerCode& c);

/// Exact min weight over V-hat minus V. Packed Gray enumeration for D = 2,
/// odometer for prime D, Howell-membership fallback for composite D.
Int distance_bruteforce(const StabilizerCode& c);

struct CssSplit {
  IMat x_checks;  // rows act as X only
  IMat z_checks;  // rows act as Z only
};
/// Decides whether V splits into pure-X and pure-Z parts after a basis change.
std::optional<CssSplit> is_css(const StabilizerCode& c);

/// True iff some nonzero stabilizer element has weight <= 2t.
bool is_degenerate(const StabilizerCode& c, Int t);

/// D^k sum_{i<=t} (D^2-1)^i C(n,i) <= D^n, exact arithmetic.
bool quantum_hamming_holds(Int n, Int k, Int t, Int D);

struct SympGenerator {
  std::string name;
  IMat m;  // 2n x 2n over Z_D with M^t Omega M = Omega
};

/// Symplectic images of the Fourier, K and controlled-NOT operators (acting on
/// the first one or two qudits) plus adjacent-qudit transpositions.
std::vector<SympGenerator> appendix_a_generators(Int D, Int n);

struct GeneratorVerification {
  std::string name;
  double max_deviation;            // max |U sigma_v U+ - psi sigma_{Mv}| over tested v
  std::vector<Int> measured_phase; // omega exponent of psi for each tested unit vector
};

/// Builds the dense unitaries for the appendix generators and measures
/// U sigma_v U+ against sigma_{Mv} (D^n <= 1024).
std::vector<GeneratorVerification> verify_generator_unitaries(Int D, Int n);

/// Dense unitaries used by the verifier (exposed for the simulator tests).
CMat dense_fourier(Int D);
CMat dense_k_operator(Int D);
CMat dense_cnot(Int D);

}  // namespace homcodes
