#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sspec/complex.hpp"
#include "sspec/matrix.hpp"
#include "sspec/modular.hpp"

namespace sspec {

/// L_i^up = delta_i^T delta_i. Zero matrix of order |X_i| when X_{i+1} is absent.
IntMatrix up_laplacian(const CliqueComplex& x, int i);
/// L_i^down = delta_{i-1} delta_{i-1}^T; for i = 0 this is the all-ones matrix.
IntMatrix down_laplacian(const CliqueComplex& x, int i);
IntMatrix total_laplacian(const CliqueComplex& x, int i);

/// Ascending eigenvalues of a symmetric matrix (dense solver). Advisory only.
/// Throws InputError on asymmetric input.
std::vector<double> numeric_spectrum(const IntMatrix& m);

/// det(xI - M) modulo several primes.
struct CharPolyFingerprint {
  std::size_t degree = 0;
  std::vector<std::pair<std::uint64_t, ModPoly>> evaluations;

  friend bool operator==(const CharPolyFingerprint&, const CharPolyFingerprint&) = default;
};

CharPolyFingerprint cospectral_fingerprint(const IntMatrix& m,
                                           const std::vector<std::uint64_t>& primes = default_primes());

struct CertifiedEigenvalue {
  std::int64_t value = 0;
  std::size_t multiplicity = 0;
  bool certified = false;  // multiplicity agreed at two independent primes
  friend bool operator==(const CertifiedEigenvalue&, const CertifiedEigenvalue&) = default;
};

struct SpectrumSummary {
  std::size_t size = 0;
  std::vector<CertifiedEigenvalue> integer_eigs;  // ascending by value
  std::size_t residual_degree = 0;
  /// charpoly divided by prod (x - lambda)^mult, per prime
  CharPolyFingerprint residual;
  std::vector<double> float_eigs;
  /// primes consulted for multiplicities beyond the fingerprint set
  std::vector<std::uint64_t> primes_used;

  std::map<std::int64_t, std::size_t> multiset() const;
  /// Same integer part and same residual fingerprint.
  bool same_spectrum(const SpectrumSummary& other) const;
};

struct SpectrumOptions {
  /// Fingerprint primes; the first two also certify multiplicities.
  std::vector<std::uint64_t> primes = default_primes();
  /// Relative integer-snap tolerance; scaled by max(1, ||M||_inf).
  double snap_tolerance = 1e-6;
};

/// Certified spectrum of a symmetric integer matrix. Integer eigenvalue
/// candidates come from the numeric solve and from an exhaustive root sweep of
/// the residual polynomial over [-||M||_inf, ||M||_inf]; every multiplicity is
/// a nullity agreed at two primes. Throws VerificationError when four primes
/// fail to produce agreement or the residual division is inexact.
SpectrumSummary certified_spectrum(const IntMatrix& m, const SpectrumOptions& opt = {});

/// Two-row array form: eigenvalues over multiplicities, with a residual note.
std::string format_spectrum_array(const SpectrumSummary& s);

}  // namespace sspec
