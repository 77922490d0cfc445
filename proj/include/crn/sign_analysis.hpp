#pragma once

#include <optional>
#include <utility>

#include "crn/fluxcone.hpp"
#include "crn/symbolics.hpp"

namespace crn {

struct TransformedJacobian {
    VarUniverse u;
    PolyMatrix J;  // s x s in the p and lambda variables
};

struct BPolynomialBundle {
    VarUniverse u;
    Poly B;                                // sum of 2x2 principal minors of J
    Poly B_tilde;                          // B with lambda_k := 0 for k in theta
    std::vector<int> theta;                // rays appearing quadratically in B
    std::vector<std::vector<int>> q;       // per reaction i: rays with R_i != 0
    std::vector<std::vector<int>> q_tilde;  // q_i minus theta
};

enum class SignVerdict { positive_certified, zero_polynomial, inconclusive };

struct SignReport {
    SignVerdict verdict = SignVerdict::inconclusive;
    std::optional<std::pair<int, int>> witness_pair;             // reaction indices
    std::vector<std::pair<int, int>> witness_lambda_pairs;       // the witness's product set
    size_t b_terms = 0;
    size_t b_tilde_terms = 0;
    int theta_size = 0;
    int ray_count = 0;
};

// J(p, lambda) = N diag(sum_k lambda_k R^(k)) Y^T diag(p).  Requires t >= 1.
TransformedJacobian build_transformed_jacobian(const StoichiometricData& sd,
                                               const ExtremeRaySet& rays, const VarUniverse& u);

BPolynomialBundle build_B_bundle(const TransformedJacobian& tj, const ExtremeRaySet& rays);

// Certificate search: a reaction pair (i, j) such that every product
// lambda_k lambda_l with k in q~_i, l in q~_j divides some term of B~.
// Success implies det Jac_h > 0 at every positive steady state (r = 2).
SignReport check_sign_criterion(const BPolynomialBundle& bundle);

enum class InjectivityVerdict { injective, undetermined };

// Term-sign screen on det Jac_f and det Jac_{x-f}.
InjectivityVerdict injectivity_screen(const SteadyStateSystem& ss);

enum class StructuralSignCheck { consistent, violation };

// Structural sign sanity for r in {1, 2}: diagonal of J non-positive,
// B non-negative.  A violation indicates a bug, not a network property.
StructuralSignCheck structural_sign_check(const StoichiometricData& sd, const TransformedJacobian& tj);

}  // namespace crn
