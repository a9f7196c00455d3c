#include "ellipt/families.hpp"

#include <stdexcept>

namespace ellipt {

namespace {

// The n = 0 base case is allowed throughout: W_0^d and V_0^d are the point
// sets z_0 z_1^{d-1} = 0 and z_1^d = 0 in P^1, and every rank formula stays
// honest there (b_0 = 2 and 1 respectively). Only the canonical
// self-intersection insists on n >= 1.
void require_base_params(long n, long d) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    if (d < 2) throw std::invalid_argument("d must be >= 2");
}

// (d-1)^e as an Int.
Int dm1_pow(long d, long e) { return int_pow(Int(d - 1), static_cast<unsigned long>(e)); }

LambdaProduct binomial_quotient(const Int& num, const Int& den) {
    return LambdaProduct::binomial(num, 1) * LambdaProduct::binomial(den, -1);
}

void check_weighted_degree_one(const Rat& sum) {
    if (sum != 1) throw std::logic_error("internal consistency failure: weighted degree != 1");
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::H: return "H";
        case Family::V: return "V";
        case Family::W: return "W";
    }
    throw std::logic_error("unreachable");
}

FamilyInstance FamilyInstance::h(std::vector<Int> a) {
    if (a.size() < 5 || a.size() % 2 == 0)
        throw std::invalid_argument("H requires odd n >= 3 (a of odd length n+2 >= 5)");
    for (const auto& ai : a)
        if (ai < 1) throw std::invalid_argument("H exponents must be >= 1");
    FamilyInstance inst;
    inst.family = Family::H;
    inst.a = std::move(a);
    inst.n = static_cast<long>(inst.a.size()) - 2;
    return inst;
}

FamilyInstance FamilyInstance::v(long n, long d) {
    require_base_params(n, d);
    FamilyInstance inst;
    inst.family = Family::V;
    inst.n = n;
    inst.d = d;
    return inst;
}

FamilyInstance FamilyInstance::w(long n, long d) {
    require_base_params(n, d);
    FamilyInstance inst;
    inst.family = Family::W;
    inst.n = n;
    inst.d = d;
    return inst;
}

long FamilyInstance::dimension() const {
    return family == Family::H ? static_cast<long>(a.size()) - 2 : n;
}

KollarSolution kollar_weight_system(const std::vector<Int>& a) {
    if (a.size() < 5 || a.size() % 2 == 0)
        throw std::invalid_argument("kollar_weight_system: a must have odd length n+2 >= 5");
    for (const auto& ai : a)
        if (ai < 1) throw std::invalid_argument("kollar_weight_system: entries must be >= 1");
    std::size_t len = a.size();  // n + 2, with n odd

    KollarSolution sol;
    sol.d = 1;
    for (const auto& ai : a) sol.d *= ai;
    sol.d += 1;  // (-1)^{n+1} = +1 for odd n

    // Express w_i = p_i + q_i w_0 along the chain w_i = d - a_{i-1} w_{i-1},
    // then close the cycle to pin down w_0.
    std::vector<Rat> p(len), q(len);
    p[0] = 0;
    q[0] = 1;
    for (std::size_t i = 1; i < len; ++i) {
        p[i] = Rat(sol.d) - Rat(a[i - 1]) * p[i - 1];
        q[i] = -Rat(a[i - 1]) * q[i - 1];
    }
    Rat denom = Rat(1) + Rat(a[len - 1]) * q[len - 1];
    if (denom == 0) throw std::domain_error("degenerate system");
    Rat w0 = (Rat(sol.d) - Rat(a[len - 1]) * p[len - 1]) / denom;
    w0.canonicalize();

    sol.weights.resize(len);
    for (std::size_t i = 0; i < len; ++i) {
        sol.weights[i] = p[i] + q[i] * w0;
        sol.weights[i].canonicalize();
    }
    // Back-substitution residuals must vanish identically.
    for (std::size_t i = 0; i < len; ++i) {
        std::size_t prev = (i + len - 1) % len;
        if (sol.weights[i] + Rat(a[prev]) * sol.weights[prev] != Rat(sol.d))
            throw std::logic_error("internal consistency failure: cyclic residual nonzero");
    }

    sol.integral = true;
    for (const auto& w : sol.weights)
        if (!is_integer(w)) sol.integral = false;
    if (sol.integral) {
        sol.w_star = 0;
        for (const auto& w : sol.weights) sol.w_star = int_gcd(sol.w_star, w.get_num());
        bool positive = true;
        for (const auto& w : sol.weights)
            if (w <= 0) positive = false;
        sol.admissible = positive && sol.w_star == 1;
    } else {
        sol.w_star = 0;
        sol.admissible = false;
    }
    return sol;
}

WeightSystem w_singularity_weights(long n, long d) {
    require_base_params(n, d);
    // d = 2 degenerates: the local equation z_1 + z_1 z_2 + ... has a linear
    // term, so P is a smooth point.
    if (d == 2) return WeightSystem({Rat(1)});

    std::vector<Rat> w(static_cast<std::size_t>(n) + 1);
    for (long i = 1; i <= n + 1; ++i) {
        Int num = Int(d) * dm1_pow(d, i);
        Int den = dm1_pow(d, i) + (i % 2 == 1 ? 1 : -1);
        w[i - 1] = Rat(num, den);
        w[i - 1].canonicalize();
    }
    // Monomial audit: z_1^{d-1} and each z_i z_{i+1}^{d-1} must have weighted
    // degree exactly 1 (this is also the balance identity between w_i and
    // w_{i+1}).
    check_weighted_degree_one(Rat(d - 1) / w[0]);
    for (long i = 1; i <= n; ++i)
        check_weighted_degree_one(1 / w[i - 1] + Rat(d - 1) / w[i]);
    return WeightSystem(std::move(w));
}

WeightSystem v_singularity_weights(long n, long d) {
    require_base_params(n, d);
    if (d == 2) {
        // z_1^2 + z_2 + z_2 z_3 + ...: eliminating the chain leaves an
        // ordinary quadratic cone for even n and a smooth point for odd n.
        if (n % 2 == 1) return WeightSystem({Rat(1)});
        return WeightSystem(std::vector<Rat>(static_cast<std::size_t>(n) + 1, Rat(2)));
    }

    std::vector<Rat> w(static_cast<std::size_t>(n) + 1);
    w[0] = d;
    if (n >= 1) w[1] = d - 1;
    for (long i = 2; i <= n; ++i) {
        w[i] = Rat(d - 1) * w[i - 1] / (w[i - 1] - 1);
        w[i].canonicalize();
    }
    check_weighted_degree_one(Rat(d) / w[0]);
    if (n >= 1) check_weighted_degree_one(Rat(d - 1) / w[1]);
    for (long i = 2; i <= n; ++i)
        check_weighted_degree_one(1 / w[i - 1] + Rat(d - 1) / w[i]);
    return WeightSystem(std::move(w));
}

LambdaProduct phi_closed_form(long n, long d) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    if (d < 2) throw std::invalid_argument("d must be >= 2");
    if (n % 2 != 0)
        throw std::invalid_argument(
            "phi_closed_form: n must be even; use "
            "monodromy_char_poly(w_singularity_weights(n, d)) for odd n");

    LambdaProduct phi = binomial_quotient(Int(d - 1), Int(1));
    // Phi_{m+2} = Phi_m * (t^{(d-1)^{m+3}} - 1)/(t^{(d-1)^{m+2}} - 1)
    for (long m = 0; m < n; m += 2)
        phi *= binomial_quotient(dm1_pow(d, m + 3), dm1_pow(d, m + 2));
    return phi;
}

LambdaProduct delta_closed_form(long n, long d) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (d < 2) throw std::invalid_argument("d must be >= 2");
    LambdaProduct delta;
    long m;
    if (n % 2 == 1) {
        // Delta_1 = (t^{d(d-1)} - 1)(t - 1) / ((t^{d-1} - 1)(t^d - 1))
        delta = binomial_quotient(Int(d) * Int(d - 1), Int(d - 1)) *
                binomial_quotient(Int(1), Int(d));
        m = 1;
    } else {
        delta = monodromy_char_poly(v_singularity_weights(2, d));
        m = 2;
    }
    // Delta_{m+2} = Delta_m * (t^{d(d-1)^{m+2}} - 1)(t^{(d-1)^{m+1}} - 1)
    //                       / ((t^{(d-1)^{m+2}} - 1)(t^{d(d-1)^{m+1}} - 1))
    for (; m < n; m += 2) {
        delta *= binomial_quotient(Int(d) * dm1_pow(d, m + 2), dm1_pow(d, m + 2)) *
                 binomial_quotient(dm1_pow(d, m + 1), Int(d) * dm1_pow(d, m + 1));
    }
    return delta;
}

bool verify_ts_identity(long n, long d) {
    if (n < 0 || n % 2 != 0) throw std::invalid_argument("verify_ts_identity: n must be even >= 0");
    if (d < 2) throw std::invalid_argument("d must be >= 2");
    LambdaProduct phi = phi_closed_form(n, d);
    LambdaProduct lhs = delta_closed_form(n + 1, d) * phi;
    LambdaProduct rhs = phi.root_of_unity_product(Int(d));
    return lhs == rhs;
}

Int milnor_number_V(long n, long d) {
    require_base_params(n, d);
    Int num = dm1_pow(d, n + 2) + (n % 2 == 0 ? 1 : -1) * Int(d - 1);
    Int mu;
    if (!mpz_divisible_p(num.get_mpz_t(), Int(d).get_mpz_t()))
        throw std::logic_error("internal consistency failure: mu_V not integral");
    mpz_divexact(mu.get_mpz_t(), num.get_mpz_t(), Int(d).get_mpz_t());
    return mu;
}

Int milnor_number_W(long n, long d) {
    require_base_params(n, d);
    if (d == 2) return 0;  // smooth point
    Int num = dm1_pow(d, n + 2) - Int(n % 2 == 0 ? 1 : -1);
    Int mu;
    if (!mpz_divisible_p(num.get_mpz_t(), Int(d).get_mpz_t()))
        throw std::logic_error("internal consistency failure: mu_W not integral");
    mpz_divexact(mu.get_mpz_t(), num.get_mpz_t(), Int(d).get_mpz_t());
    return mu;
}

BettiNumbers betti_numbers(const FamilyInstance& inst) {
    long n = inst.dimension();
    BettiNumbers out;
    out.b.assign(static_cast<std::size_t>(2 * n) + 1, Int(0));
    for (long i = 0; i <= 2 * n; i += 2) out.b[static_cast<std::size_t>(i)] = 1;

    switch (inst.family) {
        case Family::H: {
            out.flags.push_back("quasi-smoothness unchecked");
            KollarSolution sol = kollar_weight_system(inst.a);
            if (!sol.admissible)
                out.flags.push_back("outside theorem hypotheses: weight system not admissible");
            break;
        }
        case Family::V:
            break;
        case Family::W: {
            // b_n(smooth) - mu_W in the middle, rank arithmetic either way.
            Int bn_smooth = milnor_number_V(inst.n, inst.d) + (inst.n % 2 == 0 ? 1 : 0);
            out.b[static_cast<std::size_t>(n)] = bn_smooth - milnor_number_W(inst.n, inst.d);
            if (inst.n % 2 != 0 || inst.d % 2 != 0)
                out.flags.push_back("outside theorem hypotheses");
            break;
        }
    }
    return out;
}

SelfIntersection canonical_self_intersection(long n, const Int& d) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (d < 2) throw std::invalid_argument("d must be >= 2");
    SelfIntersection si;
    si.value = d * int_pow(d - n - 2, static_cast<unsigned long>(n));
    si.sign = si.value > 0 ? "positive" : (si.value == 0 ? "zero" : "negative");
    si.convention =
        "K = O(d-n-2) by adjunction; the opposite orientation O(n+2-d) flips the "
        "sign for odd n";
    return si;
}

SelfIntersection canonical_self_intersection(long n, long d) {
    return canonical_self_intersection(n, Int(d));
}

bool affine_chart_check(long n, long d, const std::vector<Rat>& sample) {
    require_base_params(n, d);
    if (sample.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("affine_chart_check: sample must have n entries");
    // Coordinates z_1 = 1, (z_2..z_{n+1}) = sample; the chart map solves the
    // W equation for z_0.
    auto z = [&](long i) -> Rat {
        if (i == 1) return Rat(1);
        return sample[static_cast<std::size_t>(i - 2)];
    };
    Rat tail(0);
    for (long i = 1; i <= n; ++i) tail += z(i) * rat_pow(z(i + 1), d - 1);
    Rat z0 = -tail;

    // Fresh evaluation of z_0 z_1^{d-1} + sum_i z_i z_{i+1}^{d-1}.
    Rat value = z0 * rat_pow(Rat(1), d - 1);
    for (long i = 1; i <= n; ++i) value += z(i) * rat_pow(z(i + 1), d - 1);
    return value == 0;
}

}  // namespace ellipt
