#include "rotaperm/proof_polys.hpp"

namespace rotaperm::proof {

#define ROTAPERM_PROOF_POLY(fn, text)     \
  const MPoly& fn() {                     \
    static const MPoly p = MPoly::parse(text); \
    return p;                             \
  }

ROTAPERM_PROOF_POLY(P1, "x^3+y^3+a")
ROTAPERM_PROOF_POLY(P2, "y^3+z^3+b")
ROTAPERM_PROOF_POLY(P3, "xy^2+yz^2+x^2z+c")

ROTAPERM_PROOF_POLY(printed_g,
    "y^9 + y^6a + y^5zc + y^3z^6 + y^3z^3a + y^2z^4c"
    " + y^2zac + yz^2c^2 + z^3a^2 + c^3")

ROTAPERM_PROOF_POLY(printed_A,
    "a^6 + a^5b + a^3b^3 + a^2bc^3 + ab^5 + ab^2c^3 + b^6 + c^6")
ROTAPERM_PROOF_POLY(printed_B,
    "a^6 b + a^4 b^3 + a^4 c^3 + a^3 b c^3 + a^2 b^5 + a^2 b^2 c^3 + a b^3 c^3 + a c^6"
    " + b^4 c^3 + b c^6")
ROTAPERM_PROOF_POLY(printed_C,
    "a^6 b^2 + a^5 b^3 + a^4 b^4 + a^3 b^2 c^3 + a^2 b^3 c^3 + a^2 c^6 + b^2 c^6")
ROTAPERM_PROOF_POLY(printed_D,
    "a^6 b^3 + a^4 b^2 c^3 + a^2 b c^6 + c^9")

ROTAPERM_PROOF_POLY(printed_h,
    "(a^6 + a^5b + a^3b^3 + a^2bc^3 + ab^5 + ab^2c^3 + b^6 + c^6)y^9"
    " + (a^6 b + a^4 b^3 + a^4 c^3 + a^3 b c^3 + a^2 b^5 + a^2 b^2 c^3 + a b^3 c^3 + a c^6"
    " + b^4 c^3 + b c^6)y^6"
    " + (a^6 b^2 + a^5 b^3 + a^4 b^4 + a^3 b^2 c^3 + a^2 b^3 c^3 + a^2 c^6 + b^2 c^6)y^3"
    " + (a^6 b^3 + a^4 b^2 c^3 + a^2 b c^6 + c^9)")

ROTAPERM_PROOF_POLY(A_factored,
    "(a^2 + a b + b^2 + b c + c^2)(a^2 + a b + a c + b^2 + c^2)(a^2 + a b + a c + b^2 + b c + c^2)")
ROTAPERM_PROOF_POLY(ADBC_factored,
    "c^3(ab^2+c^3)(a^2b+b^3+c^3)(a^2b+ab^2+c^3)(a^3+a^2b+c^3)")
ROTAPERM_PROOF_POLY(ACB2_factored,
    "abc^3(a+b)(a^2 + a b + b^2)(a^2 b + a b^2 + c^3)(a^3 + a b^2 + b^3 + c^3)")

ROTAPERM_PROOF_POLY(printed_beta,
    "a^3b^3c^3(a + b)^3(a^2 + a b + b^2)^3(a^2 b + a b^2 + c^3)")

ROTAPERM_PROOF_POLY(printed_K1,
    "a^27 b^6 c^9 + a^26 b^7 c^9 + a^25 b^5 c^12 + a^24 b^6 c^12 + a^23 b^7 c^12 + a^23 b^4 "
    "c^15 + a^22 b^11 c^9 + a^22 b^8 c^12 + a^21 b^3 c^18 + a^20 b^10 c^12 + a^20 b^7 c^15 + "
    "a^20 b^4 c^18 + a^19 b^14 c^9 + a^19 b^11 c^12 + a^19 b^5 c^18 + a^18 b^15 c^9 + a^18 b^12 "
    "c^12 + a^18 b^9 c^15 + a^18 b^6 c^18 + a^18 b^3 c^21 + a^17 b^16 c^9 + a^17 b^10 c^15 + "
    "a^17 b^7 c^18 + a^17 b^4 c^21 + a^16 b^17 c^9 + a^16 b^11 c^15 + a^15 b^18 c^9 + a^15 b^15 "
    "c^12 + a^15 b^3 c^24 + a^14 b^16 c^12 + a^14 b^7 c^21 + a^14 b^4 c^24 + a^13 b^20 c^9 + "
    "a^13 b^17 c^12 + a^13 b^8 c^21 + a^12 b^12 c^18 + a^12 b^9 c^21 + a^12 b^3 c^27 + a^11 "
    "b^22 c^9 + a^11 b^16 c^15 + a^11 b^10 c^21 + a^11 b^7 c^24 + a^10 b^20 c^12 + a^10 b^11 "
    "c^21 + a^9 b^21 c^12 + a^9 b^12 c^21 + a^9 b^6 c^27 + a^8 b^25 c^9 + a^8 b^19 c^15 + a^8 "
    "b^16 c^18 + a^8 b^13 c^21 + a^8 b^10 c^24 + a^7 b^23 c^12 + a^7 b^17 c^18 + a^7 b^14 c^21 "
    "+ a^6 b^27 c^9 + a^6 b^21 c^15 + a^6 b^9 c^27 + a^5 b^25 c^12 + a^5 b^22 c^15 + a^5 b^19 "
    "c^18 + a^5 b^13 c^24 + a^4 b^23 c^15 + a^4 b^17 c^21 + a^3 b^21 c^18 + a^3 b^18 c^21 + a^3 "
    "b^15 c^24 + a^3 b^12 c^27")

ROTAPERM_PROOF_POLY(printed_K2,
    "a^14 b^4 c^3 + a^13 b^5 c^3 + a^13 b^2 c^6 + a^12 b^3 c^6 + a^11 b^7 c^3 + a^10 b^8 c^3 + "
    "a^10 b^5 c^6 + a^10 b^2 c^9 + a^9 b^6 c^6 + a^9 c^12 + a^8 b^10 c^3 + a^8 b^7 c^6 + a^8 "
    "b^4 c^9 + a^7 b^11 c^3 + a^7 b^8 c^6 + a^6 b^6 c^9 + a^6 b^3 c^12 + a^6 c^15 + a^5 b^13 "
    "c^3 + a^5 b^10 c^6 + a^5 b^4 c^12 + a^4 b^14 c^3 + a^4 b^5 c^12 + a^4 b^2 c^15 + a^3 b^6 "
    "c^12 + a^3 c^18 + a^2 b^13 c^6 + a^2 b^10 c^9 + a b^8 c^12 + a b^2 c^18 + b^9 c^12 + b^6 "
    "c^15 + b^3 c^18 + c^21")

ROTAPERM_PROOF_POLY(Q1, "(a+b)x^2 + b^2x + a^2y + bz^2 + (a+b)^2z + a^3 + b^3")
ROTAPERM_PROOF_POLY(Q2, "(a+b)x^2 + a^2x + ay^2 + (a+b)^2y + b^2z + (a+b)^3 + b^3")

ROTAPERM_PROOF_POLY(printed_RQ,
    "(a+b)^2(a^2y^4 + b^2(a^2+ab+b^2)y^2 + (a+b)(a^2+ab+b^2)^2y"
    " + b^2z^4 + a^2(a^2+ab+b^2)z^2 + (a+b)(a^2+ab+b^2)^2z"
    " + (a^2+ab+b^2)^3)")

ROTAPERM_PROOF_POLY(D_poly,
    "Y^4 + t^2(1+t+t^2)Y^2 + (1+t)(1+t+t^2)^2Y"
    " + t^2Z^4 + (1+t+t^2)Z^2 + (1+t)(1+t+t^2)^2Z"
    " + (1+t+t^2)^3")

#undef ROTAPERM_PROOF_POLY

}  // namespace rotaperm::proof
