#include "crn/onedim.hpp"

#include <algorithm>
#include <stdexcept>

#include "crn/matrix.hpp"
#include "crn/symbolics.hpp"
#include "crn/unipoly.hpp"

namespace crn {

OneDimStructure analyze_one_dim(const StoichiometricData& sd) {
    if (sd.rank_N != 1) throw std::invalid_argument("analyze_one_dim requires a rank-one network");
    int s = sd.species_count();

    OneDimStructure st;
    // Exactly one species index is not a leading column of W; its coordinate
    // parameterizes the stoichiometric class.
    std::vector<bool> is_leading(static_cast<size_t>(s), false);
    for (int idx : sd.leading_indices) is_leading[static_cast<size_t>(idx)] = true;
    st.pivot = -1;
    for (int i = 0; i < s; ++i)
        if (!is_leading[static_cast<size_t>(i)]) st.pivot = i;
    if (st.pivot < 0) throw std::logic_error("rank-one network without a free coordinate");

    st.leading = sd.leading_indices;
    for (size_t k = 0; k < sd.W.size(); ++k) {
        // Row k of W reads x_lead + W[k][pivot] * x_pivot = c_k, so the class
        // relation is x_lead = a * x_pivot + c_k with a = -W[k][pivot].
        Rational w = sd.W[k][static_cast<size_t>(st.pivot)];
        int a;
        if (w == -1)
            a = 1;
        else if (w == 1)
            a = -1;
        else if (w == 0)
            a = 0;
        else
            throw std::logic_error("conservation coefficients of a zero-one rank-one network "
                                   "must lie in {-1,0,1}");
        st.a.push_back(a);
        if (a == 1)
            st.J1.push_back(static_cast<int>(k));
        else if (a == -1)
            st.J2.push_back(static_cast<int>(k));
        else
            st.J3.push_back(static_cast<int>(k));
    }

    // All nonzero rows of N are multiples of the pivot row, so every nonzero
    // row changes sign exactly when the pivot row takes both signs.
    bool pos = false, neg = false;
    for (int v : sd.N[static_cast<size_t>(st.pivot)]) {
        if (v > 0) pos = true;
        if (v < 0) neg = true;
    }
    st.all_rows_change_sign = pos && neg;
    return st;
}

namespace {

bool region_holds(const OneDimStructure& st, const std::vector<Rational>& c) {
    for (int k : st.J2)
        if (c[static_cast<size_t>(k)] <= 0) return false;
    for (int k : st.J3)
        if (c[static_cast<size_t>(k)] <= 0) return false;
    for (int i : st.J1)
        for (int j : st.J2)
            if (c[static_cast<size_t>(i)] + c[static_cast<size_t>(j)] <= 0) return false;
    return true;
}

}  // namespace

OneDimVerdict classify_total_constant(const OneDimStructure& st, const std::vector<Rational>& c) {
    if (c.size() != st.a.size())
        throw std::invalid_argument("total-constant vector has wrong dimension");
    if (!st.all_rows_change_sign) return OneDimVerdict::no_steady_states;
    return region_holds(st, c) ? OneDimVerdict::one_stable_steady_state
                               : OneDimVerdict::no_positive_class;
}

std::vector<std::string> region_inequalities(const OneDimStructure& st) {
    std::vector<std::string> out;
    for (int k : st.J2) out.push_back("c" + std::to_string(k + 1) + " > 0");
    for (int k : st.J3) out.push_back("c" + std::to_string(k + 1) + " > 0");
    for (int i : st.J1)
        for (int j : st.J2)
            out.push_back("c" + std::to_string(i + 1) + " + c" + std::to_string(j + 1) + " > 0");
    return out;
}

std::optional<std::vector<Rational>> witness_point(const OneDimStructure& st,
                                                   const std::vector<Rational>& c) {
    if (c.size() != st.a.size())
        throw std::invalid_argument("total-constant vector has wrong dimension");
    if (!region_holds(st, c)) return std::nullopt;

    auto min_over = [&](const std::vector<int>& idx) {
        Rational m = c[static_cast<size_t>(idx.front())];
        for (int k : idx) m = std::min(m, Rational(c[static_cast<size_t>(k)]));
        return m;
    };

    Rational xp;
    if (st.J2.empty()) {
        // Only lower bounds on x_pivot remain; any sufficiently large value works.
        Rational lo = 0;
        if (!st.J1.empty()) lo = std::min(Rational(0), min_over(st.J1));
        xp = 1 - lo;
    } else {
        Rational m2 = min_over(st.J2);
        if (!st.J1.empty() && min_over(st.J1) < 0)
            xp = (m2 - min_over(st.J1)) / 2;
        else
            xp = m2 / 2;
    }

    int s = static_cast<int>(st.a.size()) + 1;
    std::vector<Rational> x(static_cast<size_t>(s), Rational(0));
    x[static_cast<size_t>(st.pivot)] = xp;
    for (size_t k = 0; k < st.a.size(); ++k)
        x[static_cast<size_t>(st.leading[k])] = Rational(st.a[k]) * xp + c[k];
    for (const auto& v : x)
        if (v <= 0) return std::nullopt;
    return x;
}

OneDimFullResult one_dim_full_verdict(const StoichiometricData& sd,
                                      const std::vector<Rational>& kappa,
                                      const std::vector<Rational>& c, const Rational& max_width) {
    OneDimStructure st = analyze_one_dim(sd);
    OneDimVerdict verdict = classify_total_constant(st, c);
    if (verdict != OneDimVerdict::one_stable_steady_state)
        return {verdict, std::nullopt, std::nullopt};

    int s = sd.species_count();
    VarUniverse u{sd.reaction_count(), s, 0, sd.deficiency_dim()};
    SteadyStateSystem ss = build_f(sd, u);
    AugmentedSystem aug = build_h(ss, sd);

    // Pin the parameters, leaving polynomials in x alone.
    std::vector<Poly> h;
    for (Poly p : aug.h) {
        for (int j = 0; j < u.m; ++j) p = p.substitute(u.kappa(j), kappa[static_cast<size_t>(j)]);
        for (int k = 0; k < u.d; ++k) p = p.substitute(u.c(k), c[static_cast<size_t>(k)]);
        h.push_back(p);
    }

    // Substitute the class relations into the pivot equation to obtain a
    // univariate polynomial in x_pivot.
    Poly g = h[static_cast<size_t>(st.pivot)];
    for (size_t k = 0; k < st.a.size(); ++k) {
        Poly repl = Poly::variable(u.nvars(), u.x(st.pivot)) * Rational(st.a[k]) +
                    Poly::constant(u.nvars(), c[k]);
        g = g.substitute(u.x(st.leading[k]), repl);
    }
    UniPoly uni = UniPoly::from_poly(g, u.x(st.pivot));
    if (uni.is_zero()) return {verdict, std::nullopt, std::nullopt};

    std::vector<Interval> roots = uni.squarefree_part().isolate_positive_roots(max_width);

    // Keep only roots that place every species strictly inside the class.
    std::vector<Interval> valid;
    for (const Interval& r : roots) {
        bool ok = true;
        for (size_t k = 0; k < st.a.size(); ++k) {
            Interval coord = Rational(st.a[k]) * r + c[k];
            if (coord.hi <= 0) ok = false;
        }
        if (ok) valid.push_back(r);
    }
    if (valid.size() != 1) return {verdict, std::nullopt, std::nullopt};

    Interval xp = valid.front();
    std::vector<Interval> state(static_cast<size_t>(s), Interval(Rational(0)));
    state[static_cast<size_t>(st.pivot)] = xp;
    for (size_t k = 0; k < st.a.size(); ++k)
        state[static_cast<size_t>(st.leading[k])] = Rational(st.a[k]) * xp + c[k];

    // Stability at rank one reduces to a negative augmented-Jacobian determinant.
    PolyMatrix jac = jacobian(h, x_indices(u));
    IntervalVector box(static_cast<size_t>(u.nvars()), Interval(Rational(0)));
    Interval dj;
    for (int attempt = 0;; ++attempt) {
        for (int i = 0; i < s; ++i) box[static_cast<size_t>(u.x(i))] = state[static_cast<size_t>(i)];
        std::vector<std::vector<Interval>> jm(static_cast<size_t>(s),
                                              std::vector<Interval>(static_cast<size_t>(s),
                                                                    Interval(Rational(0))));
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < s; ++j)
                jm[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    jac[static_cast<size_t>(i)][static_cast<size_t>(j)].evaluate_interval(box);
        dj = interval_det(jm);
        if (!dj.contains_zero() || attempt >= 24) break;
        xp = uni.squarefree_part().refine_root(xp, xp.width() / 16);
        state[static_cast<size_t>(st.pivot)] = xp;
        for (size_t k = 0; k < st.a.size(); ++k)
            state[static_cast<size_t>(st.leading[k])] = Rational(st.a[k]) * xp + c[k];
    }

    std::optional<bool> stable;
    if (dj.hi < 0)
        stable = true;
    else if (dj.lo > 0)
        stable = false;
    return {verdict, state, stable};
}

}  // namespace crn
