#pragma once

#include <string>
#include <vector>

namespace homnr {

// One place where the library's sign or twist convention differs from the
// displayed formula it implements. `location` names the displayed formula by
// its content so a reader can find it.
struct ConventionEntry {
    std::string id;
    std::string location;
    std::string printed;
    std::string adopted;
    std::string evidence;
};

inline const std::vector<ConventionEntry>& convention_ledger() {
    static const std::vector<ConventionEntry> entries{
        {"right-circle-sign",
         "circle product of the right beta-NR bracket, cohomology of right Hom-Leibniz algebras",
         "(-1)^i eps(sigma) on the term with g in slot i",
         "(-1)^(i-1) eps(sigma), the same sign as the left circle product",
         "with (-1)^i, d o_r d is the negative of the displayed three-term half-square of a right Hom-Leibniz "
         "product; with (-1)^(i-1) they agree term by term"},
        {"lie-circle-leading-minus",
         "circle product o_L on alternating cochains, cohomology of Hom-Lie algebras",
         "f o_L g = f o_l g = -sum eps(sigma) f(g(..), beta^(n-1) ..)",
         "f o_L g = f o_l g = +sum eps(sigma) f(g(..), beta^(n-1) ..); o_L is o_l with g moved to slot 1",
         "moving g from slot i to slot 1 of an alternating f contributes (-1)^(i-1), cancelling the (-1)^(i-1) of "
         "o_l, so the first equality of the display forces a plus sign"},
        {"left-coboundary-signs",
         "explicit expansion of D_k(f) = [d,f]_l for left Hom-Leibniz algebras, and of D'_k for symmetric "
         "Hom-Leibniz algebras",
         "first sum (-1)^s (D_k) or (-1)^(k-s) (D'_k), middle term +1, double sum unsigned",
         "D_k(f) = [d,f] from the bracket engine; it equals the expansion with first sum (-1)^(k+s), middle term "
         "+1 and double sum (-1)^(k+s-1)",
         "the printed D_k is not a global sign multiple of [d,f] (it fails on sl2 read as left Leibniz); the "
         "claimed identity D'_k = D_k holds only after the corrections"},
        {"lie-coboundary-degree-sign",
         "explicit description of D^L_k for Hom-Lie algebras",
         "sum (-1)^(s+1) d(beta^(k-1) a_s, f(..)) + sum (-1)^(s+t) f(d(a_s,a_t), beta ..)",
         "[d,f]_L, which is (-1)^(k-1) times the printed expansion",
         "exact comparison on every alternating basis cochain of sl2 and the Heisenberg algebra, k <= 3"},
        {"representation-twist-power",
         "coboundary with values in V, representation and cohomology of Hom-algebras",
         "bare alpha on the argument acted on by lambda_l and lambda_r",
         "alpha^(k-1), matching beta^(k-1) of the adjoint expansion",
         "with the bare alpha, D o D != 0 on the adjoint representation of a Yau-twisted LZ2; with alpha^(k-1) "
         "D o D = 0 on every tested representation"},
        {"order-one-equivalence-sign",
         "first-order relation between equivalent deformations, deformations of Hom-algebras",
         "d'_1 = d_1 + [d_0, phi_1]",
         "d'_1 = d_1 - [d_0, phi_1] with the engine bracket, equal to the printed elementwise form "
         "d_1(a,b) + phi_1(d_0(a,b)) - d_0(phi_1 a, b) - d_0(a, phi_1 b)",
         "the elementwise line above the bracket form is what transport produces at order one"},
        {"perturbation-h-sign",
         "coboundary perturbation of an extension, equivalence of extensions",
         "theta' = theta plus the coboundary of h in the printed D^1 convention, so LZ2 + Q with theta(e2,e2) = 1 "
         "is trivialized by h(e1) = -1",
         "d' = d + [d, H] with the engine bracket; the same trivialization uses h(e1) = +1",
         "Phi = I + H satisfies Phi o d' = d(Phi, Phi) exactly when mu(hx, hy) = 0"},
        {"right-coboundary-oracle",
         "right Hom-Leibniz cohomology (no explicit coboundary expansion is displayed)",
         "none",
         "oracle: (-1)^(k+1) times the corrected left expansion for the opposite product, arguments reversed",
         "exact agreement with [d,f]_r on full cochain bases"},
    };
    return entries;
}

}  // namespace homnr
