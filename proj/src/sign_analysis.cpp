#include "crn/sign_analysis.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace crn {

TransformedJacobian build_transformed_jacobian(const StoichiometricData& sd,
                                               const ExtremeRaySet& rays, const VarUniverse& u) {
    if (rays.count() == 0)
        throw std::invalid_argument("build_transformed_jacobian: the flux cone has no positive flux");
    int s = sd.species_count(), m = sd.reaction_count();
    int nv = u.nvars();

    // g_j = sum_k lambda_k R_j^(k)
    std::vector<Poly> g(static_cast<size_t>(m), Poly(nv));
    for (int k = 0; k < rays.count(); ++k)
        for (int j = 0; j < m; ++j) {
            const Rational& rj = rays.rays[static_cast<size_t>(k)][static_cast<size_t>(j)];
            if (rj != 0) g[static_cast<size_t>(j)] += Poly::variable(nv, u.lambda(k)) * rj;
        }

    TransformedJacobian tj;
    tj.u = u;
    tj.J.assign(static_cast<size_t>(s), std::vector<Poly>(static_cast<size_t>(s), Poly(nv)));
    for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b) {
            Poly entry(nv);
            for (int j = 0; j < m; ++j) {
                int nj = sd.N[static_cast<size_t>(a)][static_cast<size_t>(j)];
                int yj = sd.Y[static_cast<size_t>(b)][static_cast<size_t>(j)];
                if (nj != 0 && yj != 0) entry += g[static_cast<size_t>(j)] * Rational(nj * yj);
            }
            tj.J[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                entry * Poly::variable(nv, u.p(b));
        }
    return tj;
}

BPolynomialBundle build_B_bundle(const TransformedJacobian& tj, const ExtremeRaySet& rays) {
    BPolynomialBundle bundle;
    bundle.u = tj.u;
    const VarUniverse& u = tj.u;
    int s = u.s, t = rays.count(), m = u.m;

    Poly B(u.nvars());
    for (int a = 0; a < s; ++a)
        for (int b = a + 1; b < s; ++b)
            B += tj.J[static_cast<size_t>(a)][static_cast<size_t>(a)] * tj.J[static_cast<size_t>(b)][static_cast<size_t>(b)] -
                 tj.J[static_cast<size_t>(a)][static_cast<size_t>(b)] * tj.J[static_cast<size_t>(b)][static_cast<size_t>(a)];
    bundle.B = B;

    std::set<int> theta;
    for (const auto& [e, c] : B.terms())
        for (int k = 0; k < t; ++k)
            if (e[static_cast<size_t>(u.lambda(k))] >= 2) theta.insert(k);
    bundle.theta.assign(theta.begin(), theta.end());

    Poly bt = B;
    for (int k : bundle.theta) bt = bt.substitute_zero(u.lambda(k));
    bundle.B_tilde = std::move(bt);

    bundle.q.assign(static_cast<size_t>(m), {});
    bundle.q_tilde.assign(static_cast<size_t>(m), {});
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < t; ++k)
            if (rays.rays[static_cast<size_t>(k)][static_cast<size_t>(i)] != 0) {
                bundle.q[static_cast<size_t>(i)].push_back(k);
                if (!theta.count(k)) bundle.q_tilde[static_cast<size_t>(i)].push_back(k);
            }
    return bundle;
}

SignReport check_sign_criterion(const BPolynomialBundle& bundle) {
    SignReport report;
    report.b_terms = bundle.B.term_count();
    report.b_tilde_terms = bundle.B_tilde.term_count();
    report.theta_size = static_cast<int>(bundle.theta.size());
    report.ray_count = bundle.u.t;

    if (bundle.B.is_zero()) {
        report.verdict = SignVerdict::zero_polynomial;
        return report;
    }

    const VarUniverse& u = bundle.u;
    int m = u.m;
    // A reaction whose flux is carried only by quadratically-appearing rays
    // forces one of those rays' weights positive, which already makes B
    // positive: the empty product set is a (vacuous) witness.
    for (int i = 0; i < m; ++i) {
        if (bundle.q_tilde[static_cast<size_t>(i)].empty()) {
            report.verdict = SignVerdict::positive_certified;
            report.witness_pair = {i, i};
            return report;
        }
    }
    for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) {
            if (bundle.q_tilde[static_cast<size_t>(j)].empty()) continue;
            bool ok = true;
            std::set<std::pair<int, int>> pairs;
            for (int k : bundle.q_tilde[static_cast<size_t>(i)]) {
                for (int l : bundle.q_tilde[static_cast<size_t>(j)]) {
                    if (k == l) {
                        // Would require a lambda_k^2 term; impossible in B~.
                        ok = false;
                        break;
                    }
                    pairs.emplace(std::min(k, l), std::max(k, l));
                }
                if (!ok) break;
            }
            if (!ok) continue;
            for (const auto& [k, l] : pairs) {
                Exponents e(static_cast<size_t>(u.nvars()), 0);
                e[static_cast<size_t>(u.lambda(k))] = 1;
                e[static_cast<size_t>(u.lambda(l))] = 1;
                if (!bundle.B_tilde.has_term_divisible_by(e)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                report.verdict = SignVerdict::positive_certified;
                report.witness_pair = {i, j};
                report.witness_lambda_pairs.assign(pairs.begin(), pairs.end());
                return report;
            }
        }
    }
    report.verdict = SignVerdict::inconclusive;
    return report;
}

InjectivityVerdict injectivity_screen(const SteadyStateSystem& ss) {
    const VarUniverse& u = ss.u;
    std::vector<int> xs = x_indices(u);
    PolyMatrix jac_f = jacobian(ss.f, xs);
    SignProfile a = term_sign_profile(det(jac_f));
    if (a == SignProfile::all_positive || a == SignProfile::all_negative)
        return InjectivityVerdict::injective;

    std::vector<Poly> xmf;
    for (int i = 0; i < u.s; ++i)
        xmf.push_back(Poly::variable(u.nvars(), u.x(i)) - ss.f[static_cast<size_t>(i)]);
    SignProfile b = term_sign_profile(det(jacobian(xmf, xs)));
    if (b == SignProfile::all_positive || b == SignProfile::all_negative)
        return InjectivityVerdict::injective;
    return InjectivityVerdict::undetermined;
}

StructuralSignCheck structural_sign_check(const StoichiometricData& sd, const TransformedJacobian& tj) {
    int r = sd.rank_N;
    if (r == 1) {
        Poly trace(tj.u.nvars());
        for (int i = 0; i < tj.u.s; ++i) trace += tj.J[static_cast<size_t>(i)][static_cast<size_t>(i)];
        SignProfile prof = term_sign_profile(trace);
        return (prof == SignProfile::zero || prof == SignProfile::all_negative)
                   ? StructuralSignCheck::consistent
                   : StructuralSignCheck::violation;
    }
    if (r == 2) {
        Poly B(tj.u.nvars());
        int s = tj.u.s;
        for (int a = 0; a < s; ++a)
            for (int b = a + 1; b < s; ++b)
                B += tj.J[static_cast<size_t>(a)][static_cast<size_t>(a)] * tj.J[static_cast<size_t>(b)][static_cast<size_t>(b)] -
                     tj.J[static_cast<size_t>(a)][static_cast<size_t>(b)] * tj.J[static_cast<size_t>(b)][static_cast<size_t>(a)];
        SignProfile prof = term_sign_profile(B);
        return (prof == SignProfile::zero || prof == SignProfile::all_positive)
                   ? StructuralSignCheck::consistent
                   : StructuralSignCheck::violation;
    }
    throw std::invalid_argument("structural_sign_check: requires rank 1 or 2");
}

}  // namespace crn
