#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rotaperm/field.hpp"
#include "rotaperm/mpoly.hpp"

namespace rotaperm {

struct CertReport {
  std::string name;
  bool pass = false;
  /// Symbolic difference (zero on pass); zero for numeric certificates.
  MPoly diff;
  std::string notes;
  /// Informational reports never affect the CLI exit code.
  bool mandatory = true;
};

/// Sylvester determinant of p and q in var after evaluating every other
/// variable at `at`, by Gaussian elimination over the field. Formal degrees
/// are those of the symbolic polynomials.
Elem numeric_resultant(const Field& field, const MPoly& p, const MPoly& q, char var,
                       const std::map<char, Elem>& at);

// Symbolic certificates. The overloads take replacement inputs so that a
// perturbed system can be checked to fail.
CertReport cert_resultant_g();
CertReport cert_resultant_g(const MPoly& P1, const MPoly& P3);
CertReport cert_resultant_h();
CertReport cert_resultant_h(const MPoly& g, const MPoly& P2);
CertReport cert_factorizations();
CertReport cert_factorizations(const MPoly& A_fact, const MPoly& ADBC_fact, const MPoly& ACB2_fact);
CertReport cert_beta_identity();
CertReport cert_beta_identity(const MPoly& beta);
/// Printed K1, K2 expansions against (AC+B^2)^3 and A(AD+BC). Informational.
CertReport cert_printed_K();
CertReport cert_resultant_Q();
CertReport cert_resultant_Q(const MPoly& Q1, const MPoly& Q2);

// Numeric certificates (odd m).
/// Tr((AC+B^2)^3 / (A^2 (AD+BC)^2)) = 0 wherever A(AD+BC) != 0.
CertReport cert_beta_numeric(const Field& field);
/// Common zeros of M1, M2 and the trace of the second one, for every t != 1.
CertReport cert_charsum_support(const Field& field);
/// A(a,b,c) = 0 iff (b=0, a=c) or (a=0, b=c) or a=b=c; m <= 5.
CertReport cert_A_zero_classification(const Field& field);

/// Registered certificate names, in report order.
const std::vector<std::string>& cert_names();
/// Runs every certificate, or just the named one (kUnknownName otherwise).
std::vector<CertReport> certify_all(std::optional<std::string_view> only = std::nullopt);

}  // namespace rotaperm
