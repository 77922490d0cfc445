#include "crn/symbolics.hpp"

namespace crn {

std::vector<std::string> VarUniverse::names() const {
    std::vector<std::string> out;
    for (int j = 1; j <= m; ++j) out.push_back("k" + std::to_string(j));
    for (int i = 1; i <= s; ++i) out.push_back("x" + std::to_string(i));
    for (int i = 1; i <= s; ++i) out.push_back("p" + std::to_string(i));
    for (int k = 1; k <= t; ++k) out.push_back("l" + std::to_string(k));
    for (int k = 1; k <= d; ++k) out.push_back("c" + std::to_string(k));
    return out;
}

SteadyStateSystem build_f(const StoichiometricData& sd, const VarUniverse& u) {
    SteadyStateSystem ss;
    ss.u = u;
    int s = sd.species_count(), m = sd.reaction_count();
    for (int j = 0; j < m; ++j) {
        Exponents e(static_cast<size_t>(u.nvars()), 0);
        e[static_cast<size_t>(u.kappa(j))] = 1;
        for (int i = 0; i < s; ++i)
            e[static_cast<size_t>(u.x(i))] = sd.Y[static_cast<size_t>(i)][static_cast<size_t>(j)];
        ss.v.push_back(Poly::monomial(u.nvars(), std::move(e), Rational(1)));
    }
    for (int i = 0; i < s; ++i) {
        Poly fi(u.nvars());
        for (int j = 0; j < m; ++j) {
            int nij = sd.N[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (nij != 0) fi += ss.v[static_cast<size_t>(j)] * Rational(nij);
        }
        ss.f.push_back(std::move(fi));
    }
    return ss;
}

AugmentedSystem build_h(const SteadyStateSystem& ss, const StoichiometricData& sd) {
    AugmentedSystem aug;
    aug.h = ss.f;
    const VarUniverse& u = ss.u;
    for (size_t k = 0; k < sd.W.size(); ++k) {
        Poly row(u.nvars());
        for (int i = 0; i < u.s; ++i)
            if (sd.W[k][static_cast<size_t>(i)] != 0)
                row += Poly::variable(u.nvars(), u.x(i)) * sd.W[k][static_cast<size_t>(i)];
        row -= Poly::variable(u.nvars(), u.c(static_cast<int>(k)));
        aug.h[static_cast<size_t>(sd.leading_indices[k])] = std::move(row);
    }
    return aug;
}

PolyMatrix jacobian(const std::vector<Poly>& polys, const std::vector<int>& vars) {
    PolyMatrix jac;
    for (const Poly& p : polys) {
        std::vector<Poly> row;
        for (int v : vars) row.push_back(p.derivative(v));
        jac.push_back(std::move(row));
    }
    return jac;
}

std::vector<int> x_indices(const VarUniverse& u) {
    std::vector<int> out;
    for (int i = 0; i < u.s; ++i) out.push_back(u.x(i));
    return out;
}

}  // namespace crn
