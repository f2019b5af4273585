#pragma once

#include <functional>
#include <map>
#include <vector>

#include "hochq/algebra.hpp"
#include "hochq/group_ring.hpp"
#include "hochq/specialization.hpp"

namespace hochq {

/// Grading signature gamma = alpha - beta, entries in N u {-1}.
using Signature = std::vector<int>;

/// Basis element (x^alpha # g) (x) (x*)^{wedge beta} of the cochain complex.
/// Its cohomological degree is |beta| and its internal degree |alpha|.
struct CochainKey {
  int g = 0;
  Monomial alpha;
  WedgeIndex beta;

  Signature gamma() const;
  int degree() const noexcept { return beta.degree(); }

  friend bool operator==(const CochainKey&, const CochainKey&) = default;
  friend auto operator<=>(const CochainKey&, const CochainKey&) = default;
};

std::ostream& operator<<(std::ostream& os, const CochainKey& k);

/// gamma together with ||gamma||_g.
struct GradedSignature {
  Signature gamma;
  int norm = 0;
};

using SymbolicCochain = std::map<CochainKey, GroupRingElement>;
using FieldCochain = std::map<CochainKey, CyclotomicNumber>;

/// prod_{s} q_{i,s}^{gamma_s}.
ScalarExponent row_character(const QMatrix& q, const Signature& gamma, int i);
/// prod_s q_{i,s}^{gamma_s} == lambda_{g,i}.
bool row_condition(const QInstance& inst, int g, const Signature& gamma, int i);
/// #{i : row_condition fails and gamma_i != -1}.
int graded_norm(const QInstance& inst, int g, const Signature& gamma);
GradedSignature graded_signature(const QInstance& inst, int g, const Signature& gamma);

/// (-1)^{beta_0 + ... + beta_i} (0-based, inclusive).
int epsilon(const WedgeIndex& beta, int i);

/// Omega_g(alpha, beta, i): zero when the row condition holds or beta_i = 1,
/// otherwise eps(beta,i) (prod_{s<=i} q_{i,s}^{gamma_s} - lambda_{g,i}
/// prod_{s>=i} q_{s,i}^{gamma_s}).
GroupRingElement omega_big(const QInstance& inst, int g, const Monomial& alpha,
                           const WedgeIndex& beta, int i);

/// Signature of omega_big, so fixtures can substitute a faulty coefficient.
using OmegaFn = std::function<GroupRingElement(const QInstance&, int, const Monomial&,
                                               const WedgeIndex&, int)>;

/// d_m^* on cochains of degree m - 1, from the Omega_g coefficients.
SymbolicCochain d_star(const QInstance& inst, int m, const SymbolicCochain& c);
SymbolicCochain d_star(const QInstance& inst, int m, const SymbolicCochain& c,
                       const OmegaFn& omega);
/// d_m^* computed from the left/right A^e-module action on A_g instead of
/// the simplified Omega_g coefficients. Must agree with d_star exactly.
SymbolicCochain d_star_module_action(const QInstance& inst, int m, const SymbolicCochain& c);

/// Basis of K_{g,gamma}^m: every beta with |beta| = m and beta_i = 1 wherever
/// gamma_i = -1, paired with alpha = gamma + beta; ordered by beta.
std::vector<CochainKey> graded_piece_basis(int g, const Signature& gamma, int m);

/// Specialized omega_g(alpha, beta, i); requires a nonzero Omega_g inverse.
CyclotomicNumber omega_small(const QInstance& inst, int g, const Monomial& alpha,
                             const WedgeIndex& beta, int i, const Specialization& s);

/// The contracting homotopy h_m : K_{g,gamma}^m -> K_{g,gamma}^{m-1} for
/// gamma outside C_g, over the specialized field. Throws PreconditionError
/// if gamma is in C_g or a key lies in another piece.
FieldCochain homotopy_h(const QInstance& inst, int g, const Signature& gamma, int m,
                        const FieldCochain& c, const Specialization& s);

/// Specialized d^* on field-valued cochains of degree m - 1.
FieldCochain d_star_field(const QInstance& inst, int m, const FieldCochain& c,
                          const Specialization& s);

// ---------------------------------------------------------------------------
// The resolution A^e (x) wedge(V) itself.

/// left (x) right (x) x^{wedge wedge} in A^e (x) wedge^m(V).
struct ResolutionKey {
  Monomial left;
  Monomial right;
  WedgeIndex wedge;

  friend bool operator==(const ResolutionKey&, const ResolutionKey&) = default;
  friend auto operator<=>(const ResolutionKey&, const ResolutionKey&) = default;
};

using ResolutionElement = std::map<ResolutionKey, GroupRingElement>;

/// d_m(1 (x) 1 (x) x^{wedge beta}), m = |beta| >= 1.
ResolutionElement koszul_d(const QMatrix& q, const WedgeIndex& beta);
/// A^e-linear extension of d to an arbitrary element.
ResolutionElement koszul_d(const QMatrix& q, const ResolutionElement& x);

}  // namespace hochq
