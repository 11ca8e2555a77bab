#pragma once

// Index and nullity of the c-biharmonic hyperspheres in S^{m+1} from the
// spectral decomposition of the Jacobi operator J_2^c along the three
// section families: normal eigenfunctions, gradients of eigenfunctions,
// and divergence-free eigenfields.
//
// All sign decisions are exact: eigenvalue expressions are rational in the
// Laplace eigenvalue and r^2, the coupling d_j enters only through d_j^2,
// and the infinite spectrum is cut off by a Fujiwara root bound on the
// trace/determinant polynomials, beyond which every level is certified
// positive.

#include "cbh/polynomial.hpp"
#include "cbh/roots.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cbh {

// Laplace spectrum on S^m(r): functions and coclosed one-forms.
Rational laplace_eigenvalue(int m, const Rational& r2, int j);         // j(m+j-1)/r^2
Rational divfree_laplace_eigenvalue(int m, const Rational& r2, int k); // (k+1)(k+m-2)/r^2

// Multiplicity of the j-th Laplace eigenvalue on functions. S^1 degenerates
// to 1 (j = 0) and 2 (j >= 1).
Int sph_multiplicity(int m, int j);

// Dimension of the space of divergence-free eigenfields at level k. The
// k = 1 eigenfields are the Killing fields, dimension m(m+1)/2; S^1 has no
// divergence-free eigenfields beyond its single Killing field.
Int divfree_multiplicity(int m, int k);

inline Int killing_dimension(int m) { return Int(m) * (m + 1) / 2; }

struct EigenStream {
  enum class Kind { NormalFunction, GradientField, DivergenceFree };
  Kind kind;
  int level;            // j (functions) or k (divergence-free)
  Rational eigenvalue;  // Laplace / Hodge eigenvalue
  Int multiplicity;
};
EigenStream normal_stream(int m, const Rational& r2, int j);
EigenStream gradient_stream(int m, const Rational& r2, int j);
EigenStream divfree_stream(int m, const Rational& r2, int k);

// ---- equator (r = 1) eigenvalues -------------------------------------------

// J_2^c on normal sections alpha*eta: (lambda - m)(lambda + (2m^2-11m+6)/3).
Rational equator_normal_eigenvalue(int m, const Rational& lambda);
// J_2^c on tangent eigenfields: (mu - 2m + 2)(mu + (2m^2-14m+12)/3).
Rational equator_tangent_eigenvalue(int m, const Rational& mu);

// ---- small hypersphere blocks ----------------------------------------------

// The 2x2 coupled block of J_2^c on span{alpha eta, grad alpha} at function
// level j >= 1. Eigenvalue signs are read off trace and determinant only.
struct BlockSpectrum {
  Rational a, b, d_sq;
  Rational trace, det;
  int negative_count = 0;
  int zero_count = 0;
};

// include_correction = false drops the (2/3)(m-1)(m-3)/r^2 term, i.e.
// evaluates the plain bienergy Hessian J_2 instead of J_2^c.
BlockSpectrum hypersphere_block(int m, const Rational& r2, int j,
                                bool include_correction = true);

// The j = 0 normal direction a*eta is uncoupled; its J_2^c coefficient.
Rational hypersphere_s0_coefficient(int m, const Rational& r2,
                                    bool include_correction = true);

// J_2^c coefficient on divergence-free eigenfields with Hodge eigenvalue mu.
Rational hypersphere_divfree_eigenvalue(int m, const Rational& r2, const Rational& mu,
                                        bool include_correction = true);

// ---- reports -----------------------------------------------------------------

struct StreamEntry {
  enum class Kind { NormalFunction, GradientField, DivergenceFree, CoupledBlock };
  Kind kind;
  int level;                          // j or k
  Rational eigen_param;               // lambda_j or mu_k
  std::optional<Rational> value;      // operator coefficient (scalar streams)
  std::optional<BlockSpectrum> block; // coupled blocks
  Int multiplicity;                   // eigenfunction count at this level
  Int negative, zero;                 // multiplicity-weighted contributions
};

struct StreamTruncation {
  StreamEntry::Kind kind;
  int first_certified_level;  // all levels >= this are certified positive
  Rational eigen_param;       // Laplace eigenvalue at that level
};

struct TruncationCertificate {
  std::string method;  // "fujiwara-root-bound"
  std::vector<StreamTruncation> streams;
};

struct IndexNullityReport {
  int m = 0;
  Rational r2 = 1;
  bool variational = true;  // false for exploratory (non-c-biharmonic) parameters
  Int index = 0, nullity = 0;
  std::vector<StreamEntry> breakdown;
  TruncationCertificate truncation;
};

IndexNullityReport index_nullity_equator(int m);
IndexNullityReport index_nullity_hypersphere(int m, const Rational& r2);

}  // namespace cbh
