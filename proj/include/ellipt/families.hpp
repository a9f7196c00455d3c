// Everything specific to the three hypersurface families:
//   H(a_0..a_{n+1}):  z_0^{a_0} z_1 + z_1^{a_1} z_2 + ... (cyclic), n odd
//   V_n^d:            z_1^d + z_0 z_2^{d-1} + z_2 z_3^{d-1} + ... + z_n z_{n+1}^{d-1}
//   W_n^d:            z_0 z_1^{d-1} + z_1 z_2^{d-1} + ... + z_n z_{n+1}^{d-1}
// Weight systems of the distinguished singular point, the cyclic weight
// system of H, the Phi/Delta recurrences with the Milnor-Orlik oracle as
// cross-check, Milnor numbers, Betti numbers, canonical self-intersection
// and the affine chart parametrization.
#pragma once

#include <string>
#include <vector>

#include "ellipt/lambda_product.hpp"
#include "ellipt/milnor_orlik.hpp"
#include "ellipt/rational.hpp"

namespace ellipt {

enum class Family { H, V, W };

std::string family_name(Family f);

// Tagged descriptor of one hypersurface instance.
struct FamilyInstance {
    Family family;
    // H only: the cyclic exponent vector a_0..a_{n+1} (n odd, n >= 3).
    std::vector<Int> a;
    // V, W only.
    long n = 0;
    long d = 0;

    static FamilyInstance h(std::vector<Int> a);
    static FamilyInstance v(long n, long d);
    static FamilyInstance w(long n, long d);

    // Complex dimension of the hypersurface (a is length n+2 for H).
    long dimension() const;
};

// Exact solution of the cyclic linear system w_i + a_{i-1} w_{i-1} = d
// (indices mod n+2), d = prod a_i + (-1)^{n+1}.
struct KollarSolution {
    Int d;
    std::vector<Rat> weights;
    bool integral = false;
    Int w_star;             // gcd of the weights when integral, else 0
    bool admissible = false;  // positive integral weights with gcd 1
    // Quasi-smoothness (Kollar) is out of scope and recorded, not checked.
    bool quasi_smoothness_checked = false;
};

// Requires odd n >= 3 (a of length n+2) and all a_i >= 1. Throws
// "degenerate system" if the cyclic system were singular (cannot happen for
// positive a); back-substitutes and aborts on any nonzero residual.
KollarSolution kollar_weight_system(const std::vector<Int>& a);

// Weights of the W_n^d singularity at P = (1:0:...:0), local equation
// z_1^{d-1} + z_1 z_2^{d-1} + ... + z_n z_{n+1}^{d-1}:
//   w_i = d(d-1)^i / ((d-1)^i + (-1)^{i-1}),  i = 1..n+1.
// d = 2 collapses to a smooth point, reported as the single weight (1).
WeightSystem w_singularity_weights(long n, long d);

// Weights of the V_n^d singularity at P, local equation
// z_1^d + z_2^{d-1} + z_2 z_3^{d-1} + ... + z_n z_{n+1}^{d-1}:
//   w_1 = d, w_2 = d-1, w_{i+1} = (d-1) w_i / (w_i - 1).
// d = 2: an ordinary quadratic cone for even n (weights (2,..,2), mu = 1),
// a smooth point for odd n (single weight (1)).
WeightSystem v_singularity_weights(long n, long d);

// Phi_n^d via the even-index recurrence
//   Phi_{n+1} = Phi_{n-1} * (t^{(d-1)^{n+2}} - 1)/(t^{(d-1)^{n+1}} - 1),
// base Phi_0 = (t^{d-1} - 1)/(t - 1). Odd n is rejected with guidance to
// use monodromy_char_poly(w_singularity_weights(n, d)) instead.
LambdaProduct phi_closed_form(long n, long d);

// Delta_n^d via
//   Delta_{n+2} = Delta_n * (t^{d(d-1)^{n+2}}-1)(t^{(d-1)^{n+1}}-1)
//                         / ((t^{(d-1)^{n+2}}-1)(t^{d(d-1)^{n+1}}-1)),
// odd chain from the closed-form base Delta_1, even chain from the
// Milnor-Orlik oracle at Delta_2.
LambdaProduct delta_closed_form(long n, long d);

// Checks Delta_{n+1}(t) * Phi_n(t) = prod_{i=0}^{d-1} Phi_n(w_d^i t) exactly
// in LambdaProduct form (units included). Requires even n.
bool verify_ts_identity(long n, long d);

// (1/d)[(d-1)^{n+2} + (-1)^n (d-1)]  (always an integer).
Int milnor_number_V(long n, long d);
// (1/d)[(d-1)^{n+2} - (-1)^n] for d >= 3; 0 for d = 2 (smooth point).
Int milnor_number_W(long n, long d);

// b_0..b_{2n} plus caveat flags. H and V give the Betti numbers of P^n; W
// replaces the middle one by b_n(smooth) - mu_W.
struct BettiNumbers {
    std::vector<Int> b;
    std::vector<std::string> flags;
};

BettiNumbers betti_numbers(const FamilyInstance& inst);

// K^n = d (d - n - 2)^n for a degree-d hypersurface in P^{n+1}, with
// K = O(d - n - 2) by adjunction. sign reports {positive | zero | negative}.
struct SelfIntersection {
    Int value;
    std::string sign;
    std::string convention;
};

SelfIntersection canonical_self_intersection(long n, long d);
// Same formula for degrees beyond the long range (H-family products).
SelfIntersection canonical_self_intersection(long n, const Int& d);

// Substitutes the parametrization of the affine chart z_0 != 0, z_1 = 1 into
// the W equation: z_0 = -(z_2^{d-1} + z_2 z_3^{d-1} + ... + z_n z_{n+1}^{d-1})
// and confirms the equation vanishes identically at the sample point
// (z_2..z_{n+1}) = sample.
bool affine_chart_check(long n, long d, const std::vector<Rat>& sample);

}  // namespace ellipt
