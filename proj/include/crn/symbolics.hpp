#pragma once

#include "crn/network.hpp"
#include "crn/poly.hpp"

namespace crn {

// Fixed variable universe for one analysis session, ordered
// kappa_1..kappa_m, x_1..x_s, p_1..p_s, lambda_1..lambda_t, c_1..c_d.
struct VarUniverse {
    int m = 0;  // reactions
    int s = 0;  // species
    int t = 0;  // extreme rays
    int d = 0;  // conservation laws

    int nvars() const { return m + 2 * s + t + d; }
    int kappa(int j) const { return j; }
    int x(int i) const { return m + i; }
    int p(int i) const { return m + s + i; }
    int lambda(int k) const { return m + 2 * s + k; }
    int c(int k) const { return m + 2 * s + t + k; }

    std::vector<std::string> names() const;
};

struct SteadyStateSystem {
    VarUniverse u;
    std::vector<Poly> f;  // s entries, f = N v
    std::vector<Poly> v;  // m monomial fluxes
};

struct AugmentedSystem {
    std::vector<Poly> h;  // s entries; conservation rows at the leading indices
};

SteadyStateSystem build_f(const StoichiometricData& sd, const VarUniverse& u);

AugmentedSystem build_h(const SteadyStateSystem& ss, const StoichiometricData& sd);

// Jacobian with respect to the given variable indices.
PolyMatrix jacobian(const std::vector<Poly>& polys, const std::vector<int>& vars);

std::vector<int> x_indices(const VarUniverse& u);

}  // namespace crn
