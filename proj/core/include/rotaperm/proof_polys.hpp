#pragma once

#include "rotaperm/mpoly.hpp"

// Polynomials from the permutation proofs, transcribed as printed. All live in
// Vars::standard() (x y z a b c t Y Z).
namespace rotaperm::proof {

// T1 inversion system after the linear change phi:
//   P1 = x^3+y^3+a, P2 = y^3+z^3+b, P3 = xy^2+yz^2+x^2z+c.
const MPoly& P1();
const MPoly& P2();
const MPoly& P3();

/// Printed R_x(P1, P3).
const MPoly& printed_g();
/// Printed R_z(g, P2) = A y^9 + B y^6 + C y^3 + D.
const MPoly& printed_h();
const MPoly& printed_A();
const MPoly& printed_B();
const MPoly& printed_C();
const MPoly& printed_D();

/// Printed factorizations of A, AD+BC and AC+B^2.
const MPoly& A_factored();
const MPoly& ADBC_factored();
const MPoly& ACB2_factored();

/// Printed solution of beta^2 + A(AD+BC) beta = (AC+B^2)^3.
const MPoly& printed_beta();
/// Printed expansions of (AC+B^2)^3 and A(AD+BC).
const MPoly& printed_K1();
const MPoly& printed_K2();

// T2 difference system in the a+b+c = 0 case.
const MPoly& Q1();
const MPoly& Q2();
/// Printed R_x(Q1, Q2) in factored form.
const MPoly& printed_RQ();

/// D(Y, Z) with t = b/a, in variables t, Y, Z.
const MPoly& D_poly();

}  // namespace rotaperm::proof
