#include "genbell/errata.hpp"

#include <array>

namespace genbell {

namespace {

constexpr std::array<Erratum, 4> kErrata{{
    {"dobinski-rs-inverse-factorial",
     "Dobinski series for B_{r,s}(n), r > s: (r-s)^(s(n-1)) / e times a sum over k of "
     "prod_j Gamma(n + (k+j)/(r-s)) / Gamma(1 + (k+j)/(r-s))",
     "As written the summand has no 1/k! and grows with k, so the series diverges.",
     "Summand divided by k!. The corrected series rounds to the exact B_{r,s}(n) for every "
     "tested family, including 1, 207775, 566828686621, 9011375448568566265 for (9,6).",
     "Dobinski.RsSeriesNeedsInverseFactorial"},
    {"hypergeometric-general-prefactor",
     "Hypergeometric form of B_{pr+p,pr}(n) with its Gamma-ratio prefactor",
     "For p >= 2 the formula disagrees with the exact values; for (9,6), n = 1 it gives 1/2160 "
     "instead of 1. The (r+1,r) and (2r,r) forms are exact.",
     "Kept as written and reported inconsistent; the exact normal-ordering values and the "
     "listed first four terms of B_{9,6} are the ground truth.",
     "Dobinski.GeneralShapePrefactorDisagrees"},
    {"matrix-element-exponent-sign",
     "<z| exp(lambda (a^dagger)^r a) |z> = exp{[(1 - lambda (z*)^(r-1) (r-1))^(1/(r-1)) - 1] |z|^2} "
     "and the matching EGF of B_{r,1}(n)",
     "With the positive inner exponent, r = 2 and z = 1 give exp(-lambda), contradicting the EGF "
     "exp(x/(1-x)) of B_{2,1}.",
     "Inner exponent -1/(r-1). This reproduces exp(x/(1-x)) for r = 2 and "
     "exp((1-sqrt(1-2x))/sqrt(1-2x)) for r = 3, and agrees with the truncated Fock-space "
     "evaluation to 1e-10.",
     "GeneratingFunctions.ClosedFormMatchesFockGrid"},
    {"b31-subleading-coefficient",
     "Two-term asymptotics of B_{3,1}(n) with subleading coefficient 2^(-3/7)",
     "The exponent -3/7 is suspect. With it, exact/asymptotic is 0.852 at n = 100 and 0.903 at "
     "n = 400; the leading term alone gives 0.988 and 0.994.",
     "Evaluated exactly as given; no replacement coefficient is substituted. The 10% band at "
     "n = 100 is not met, the monotone approach to 1 is.",
     "MomentAnalysis.B31ExpansionAsGiven"},
}};

}  // namespace

std::span<const Erratum> errata() { return kErrata; }

}  // namespace genbell
