#include "crn/solver.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "crn/matrix.hpp"
#include "crn/poly.hpp"
#include "crn/symbolics.hpp"
#include "crn/unipoly.hpp"

namespace crn {

namespace {

struct ReducedSystem {
    StoichiometricData sd;
    VarUniverse u;
    std::vector<int> free_species;  // species not pinned by a conservation law
    std::vector<int> free_vars;     // their polynomial variable indices
    std::vector<Poly> g;            // rank-many equations in the free variables
    std::vector<Poly> lead_expr;    // per conservation row: x_lead as an affine poly
};

ReducedSystem reduce_system(const ReactionNetwork& net, const std::vector<Rational>& kappa,
                            const std::vector<Rational>& c) {
    ReducedSystem rs;
    rs.sd = stoichiometric_data(net);
    int s = rs.sd.species_count();
    rs.u = VarUniverse{rs.sd.reaction_count(), s, 0, rs.sd.deficiency_dim()};
    if (static_cast<int>(kappa.size()) != rs.u.m || static_cast<int>(c.size()) != rs.u.d)
        throw std::invalid_argument("parameter vector lengths do not match the network");

    std::vector<bool> is_leading(static_cast<size_t>(s), false);
    for (int idx : rs.sd.leading_indices) is_leading[static_cast<size_t>(idx)] = true;
    for (int i = 0; i < s; ++i)
        if (!is_leading[static_cast<size_t>(i)]) {
            rs.free_species.push_back(i);
            rs.free_vars.push_back(rs.u.x(i));
        }

    // x_lead = c_k - sum over free species of W[k][j] x_j  (W is in RREF).
    for (size_t k = 0; k < rs.sd.W.size(); ++k) {
        Poly e = Poly::constant(rs.u.nvars(), c[k]);
        for (int j : rs.free_species)
            e -= Poly::variable(rs.u.nvars(), rs.u.x(j)) * rs.sd.W[k][static_cast<size_t>(j)];
        rs.lead_expr.push_back(e);
    }

    SteadyStateSystem ss = build_f(rs.sd, rs.u);
    for (int i : rs.free_species) {
        Poly p = ss.f[static_cast<size_t>(i)];
        for (int j = 0; j < rs.u.m; ++j) p = p.substitute(rs.u.kappa(j), kappa[static_cast<size_t>(j)]);
        for (size_t k = 0; k < rs.sd.W.size(); ++k)
            p = p.substitute(rs.u.x(rs.sd.leading_indices[k]), rs.lead_expr[k]);
        rs.g.push_back(p);
    }
    return rs;
}

// Strict linear feasibility of {y : a.y + b > 0 for every constraint} via
// Fourier-Motzkin elimination; exact for strict systems.
bool strictly_feasible(std::vector<std::pair<std::vector<Rational>, Rational>> cons, size_t nv) {
    for (size_t v = 0; v < nv; ++v) {
        std::vector<std::pair<std::vector<Rational>, Rational>> pos, neg, rest;
        for (auto& cn : cons) {
            Rational a = cn.first[v];
            if (a > 0)
                pos.push_back(std::move(cn));
            else if (a < 0)
                neg.push_back(std::move(cn));
            else
                rest.push_back(std::move(cn));
        }
        for (const auto& p : pos)
            for (const auto& n : neg) {
                Rational ap = p.first[v], an = n.first[v];
                std::vector<Rational> coef(nv, Rational(0));
                for (size_t j = 0; j < nv; ++j) coef[j] = -an * p.first[j] + ap * n.first[j];
                rest.push_back({std::move(coef), -an * p.second + ap * n.second});
            }
        cons = std::move(rest);
    }
    for (const auto& cn : cons)
        if (!(cn.second > 0)) return false;
    return true;
}

// True when the stoichiometric compatibility class contains a strictly
// positive point: free coordinates positive and every pinned coordinate's
// affine expression positive.
bool positive_class_nonempty(const ReducedSystem& rs, const std::vector<Rational>& c) {
    size_t r = rs.free_vars.size();
    std::vector<std::pair<std::vector<Rational>, Rational>> cons;
    for (size_t i = 0; i < r; ++i) {
        std::vector<Rational> coef(r, Rational(0));
        coef[i] = 1;
        cons.push_back({std::move(coef), Rational(0)});
    }
    for (size_t k = 0; k < rs.sd.W.size(); ++k) {
        std::vector<Rational> coef(r, Rational(0));
        for (size_t j = 0; j < r; ++j)
            coef[j] = -rs.sd.W[k][static_cast<size_t>(rs.free_species[j])];
        cons.push_back({std::move(coef), c[k]});
    }
    return strictly_feasible(std::move(cons), r);
}

// Divide out pure powers of the given variables: they carry no information
// about strictly positive roots and make resultants vanish spuriously.
Poly strip_positive_content(Poly p, int nvars, const std::vector<int>& vars) {
    if (p.is_zero()) return p;
    for (int v : vars) {
        while (p.degree_in(v) > 0 && p.coefficients_in(v)[0].is_zero())
            p = p.exact_div(Poly::variable(nvars, v));
    }
    return p;
}

// One elimination pass: resultants of a pivot against every other polynomial
// that still mentions the variable.
std::vector<Poly> eliminate_var(const std::vector<Poly>& polys, int var,
                                const std::vector<int>& all_vars, bool& saw_zero) {
    std::vector<Poly> with, without;
    for (const Poly& p : polys) {
        if (p.is_zero()) continue;
        (p.degree_in(var) > 0 ? with : without).push_back(p);
    }
    if (with.empty()) return without;  // variable absent: nothing to eliminate
    size_t pivot = 0;
    for (size_t i = 1; i < with.size(); ++i)
        if (with[i].degree_in(var) < with[pivot].degree_in(var)) pivot = i;
    std::vector<Poly> out = without;
    for (size_t i = 0; i < with.size(); ++i) {
        if (i == pivot) continue;
        Poly r = resultant(with[pivot], with[i], var);
        if (!r.is_zero()) r = strip_positive_content(r, r.nvars(), all_vars);
        if (r.is_zero())
            saw_zero = true;
        else
            out.push_back(r);
    }
    if (with.size() == 1) out.push_back(with[pivot]);  // nothing to pair against
    return out;
}

enum class ShadowStatus { ok, identically_zero, failed };

// Univariate eliminant in `target` obtained by clearing the other variables;
// tries every elimination order before giving up.
ShadowStatus shadow_polynomial(const std::vector<Poly>& g, const std::vector<int>& vars,
                               int target, UniPoly& out) {
    std::vector<int> others;
    for (int v : vars)
        if (v != target) others.push_back(v);
    std::sort(others.begin(), others.end());

    std::vector<Poly> start;
    for (const Poly& p : g) start.push_back(strip_positive_content(p, p.nvars(), vars));

    // A nonzero constant (an equation with no positive roots at all) settles
    // the question immediately: the shadow has no roots.
    for (const Poly& p : start)
        if (!p.is_zero() && p.total_degree() == 0) {
            out = UniPoly::from_poly(p, target);
            return ShadowStatus::ok;
        }

    bool any_zero = false;
    do {
        std::vector<Poly> cur = start;
        bool saw_zero = false;
        for (int v : others) {
            cur = eliminate_var(cur, v, vars, saw_zero);
            if (cur.empty()) break;
        }
        // Keep the lowest-degree nonzero univariate result.
        const Poly* best = nullptr;
        for (const Poly& p : cur) {
            bool univariate = !p.is_zero();
            for (int v : others)
                if (p.degree_in(v) > 0) univariate = false;
            if (univariate && (!best || p.degree_in(target) < best->degree_in(target))) best = &p;
        }
        // A nonzero constant in the eliminated set proves the system has no
        // solutions at all; it is returned as a rootless shadow.
        if (best) {
            out = UniPoly::from_poly(*best, target);
            return ShadowStatus::ok;
        }
        if (saw_zero || (!cur.empty() && !best)) any_zero = true;
        if (cur.empty()) any_zero = true;  // target never constrained
    } while (std::next_permutation(others.begin(), others.end()));
    return any_zero ? ShadowStatus::identically_zero : ShadowStatus::failed;
}

std::vector<Interval> box_point(const ReducedSystem& rs, const std::vector<Interval>& free_box) {
    std::vector<Interval> full(static_cast<size_t>(rs.u.nvars()), Interval(Rational(0)));
    for (size_t i = 0; i < rs.free_vars.size(); ++i)
        full[static_cast<size_t>(rs.free_vars[i])] = free_box[i];
    return full;
}

bool passes_filter(const ReducedSystem& rs, const std::vector<Interval>& free_box) {
    std::vector<Interval> full = box_point(rs, free_box);
    for (const Poly& p : rs.g)
        if (!p.evaluate_interval(full).contains_zero()) return false;
    return true;
}

struct KrawczykOutcome {
    enum { certified, excluded, inconclusive } kind = inconclusive;
    std::vector<Interval> box;
};

KrawczykOutcome krawczyk_step(const ReducedSystem& rs, const PolyMatrix& jg,
                              std::vector<Interval> X) {
    size_t r = rs.free_vars.size();
    std::vector<Rational> y(r);
    for (size_t i = 0; i < r; ++i) y[i] = X[i].mid();

    std::vector<Rational> point(static_cast<size_t>(rs.u.nvars()), Rational(0));
    for (size_t i = 0; i < r; ++i) point[static_cast<size_t>(rs.free_vars[i])] = y[i];

    QMatrix jy(r, std::vector<Rational>(r));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) jy[i][j] = jg[i][j].evaluate(point);
    auto C = inverse(jy);
    if (!C) return {KrawczykOutcome::inconclusive, X};

    std::vector<Rational> gy(r);
    for (size_t i = 0; i < r; ++i) gy[i] = rs.g[i].evaluate(point);

    std::vector<Interval> full = box_point(rs, X);
    std::vector<std::vector<Interval>> jX(r, std::vector<Interval>(r, Interval(Rational(0))));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) jX[i][j] = jg[i][j].evaluate_interval(full);

    // K = y - C g(y) + (I - C J(X)) (X - y)
    std::vector<Interval> K(r, Interval(Rational(0)));
    for (size_t i = 0; i < r; ++i) {
        Rational base = y[i];
        for (size_t j = 0; j < r; ++j) base -= (*C)[i][j] * gy[j];
        Interval acc(base);
        for (size_t j = 0; j < r; ++j) {
            Interval coeff = Interval(i == j ? Rational(1) : Rational(0));
            for (size_t l = 0; l < r; ++l) coeff = coeff - (*C)[i][l] * jX[l][j];
            acc = acc + coeff * (X[j] + Rational(-y[j]));
        }
        K[i] = acc;
    }

    bool inside = true, disjoint = false;
    for (size_t i = 0; i < r; ++i) {
        bool point_box = X[i].lo == X[i].hi;
        if (point_box) {
            if (!(K[i].lo == X[i].lo && K[i].hi == X[i].hi)) inside = false;
        } else if (!(K[i].lo > X[i].lo && K[i].hi < X[i].hi)) {
            inside = false;
        }
        if (K[i].hi < X[i].lo || K[i].lo > X[i].hi) disjoint = true;
    }
    if (disjoint) return {KrawczykOutcome::excluded, X};

    std::vector<Interval> next(r);
    for (size_t i = 0; i < r; ++i)
        if (!intersect(K[i], X[i], next[i])) return {KrawczykOutcome::excluded, X};
    return {inside ? KrawczykOutcome::certified : KrawczykOutcome::inconclusive, next};
}

Rational box_width(const std::vector<Interval>& X) {
    Rational w = 0;
    for (const Interval& iv : X) w = std::max(w, iv.width());
    return w;
}

int interval_sign(const Interval& iv) {
    if (iv.hi < 0) return -1;
    if (iv.lo > 0) return 1;
    return 0;
}

std::vector<std::vector<Interval>> jac_f_interval(const ReactionNetwork& net,
                                                  const std::vector<Rational>& kappa,
                                                  const std::vector<Interval>& x,
                                                  StoichiometricData& sd_out) {
    sd_out = stoichiometric_data(net);
    int s = sd_out.species_count();
    VarUniverse u{sd_out.reaction_count(), s, 0, sd_out.deficiency_dim()};
    SteadyStateSystem ss = build_f(sd_out, u);
    std::vector<Poly> f;
    for (Poly p : ss.f) {
        for (int j = 0; j < u.m; ++j) p = p.substitute(u.kappa(j), kappa[static_cast<size_t>(j)]);
        f.push_back(p);
    }
    PolyMatrix jac = jacobian(f, x_indices(u));
    std::vector<Interval> box(static_cast<size_t>(u.nvars()), Interval(Rational(0)));
    for (int i = 0; i < s; ++i) box[static_cast<size_t>(u.x(i))] = x[static_cast<size_t>(i)];
    std::vector<std::vector<Interval>> out(
        static_cast<size_t>(s), std::vector<Interval>(static_cast<size_t>(s), Interval(Rational(0))));
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j)
            out[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                jac[static_cast<size_t>(i)][static_cast<size_t>(j)].evaluate_interval(box);
    return out;
}

std::vector<std::vector<Interval>> jac_h_from_f(const StoichiometricData& sd,
                                                std::vector<std::vector<Interval>> jf) {
    for (size_t k = 0; k < sd.W.size(); ++k) {
        size_t row = static_cast<size_t>(sd.leading_indices[k]);
        for (size_t j = 0; j < jf.size(); ++j) jf[row][j] = Interval(sd.W[k][j]);
    }
    return jf;
}

// Sum of all k x k principal minors of an interval matrix.
Interval principal_minor_sum(const std::vector<std::vector<Interval>>& m, int k) {
    int s = static_cast<int>(m.size());
    Interval total(Rational(0));
    std::vector<int> idx(static_cast<size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        std::vector<std::vector<Interval>> sub(static_cast<size_t>(k),
                                               std::vector<Interval>(static_cast<size_t>(k),
                                                                     Interval(Rational(0))));
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
                sub[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                    m[static_cast<size_t>(idx[static_cast<size_t>(a)])]
                     [static_cast<size_t>(idx[static_cast<size_t>(b)])];
        total = total + interval_det(sub);
        int pos = k - 1;
        while (pos >= 0 && idx[static_cast<size_t>(pos)] == s - k + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<size_t>(pos)];
        for (int q = pos + 1; q < k; ++q) idx[static_cast<size_t>(q)] = idx[static_cast<size_t>(q - 1)] + 1;
    }
    return total;
}

}  // namespace

std::vector<Interval> hurwitz_determinants(const std::vector<Interval>& b) {
    int n = static_cast<int>(b.size()) - 1;
    auto coeff = [&](int k) {
        return (k >= 0 && k <= n) ? b[static_cast<size_t>(k)] : Interval(Rational(0));
    };
    std::vector<Interval> H;
    for (int i = 1; i <= n; ++i) {
        std::vector<std::vector<Interval>> m(static_cast<size_t>(i),
                                             std::vector<Interval>(static_cast<size_t>(i),
                                                                   Interval(Rational(0))));
        for (int a = 1; a <= i; ++a)
            for (int bb = 1; bb <= i; ++bb)
                m[static_cast<size_t>(a - 1)][static_cast<size_t>(bb - 1)] = coeff(n - 2 * a + bb);
        H.push_back(interval_det(m));
    }
    return H;
}

HurwitzData hurwitz_data(const ReactionNetwork& net, const std::vector<Rational>& kappa,
                         const std::vector<Interval>& x) {
    StoichiometricData sd;
    auto jf = jac_f_interval(net, kappa, x, sd);
    int s = sd.species_count(), r = sd.rank_N;

    HurwitzData data;
    // det(lambda I - J) = sum_k (-1)^k e_k lambda^{s-k}; coefficients below
    // r + 1 vanish because J has rank at most r.
    std::vector<Interval> e(static_cast<size_t>(s) + 1, Interval(Rational(0)));
    e[0] = Interval(Rational(1));
    for (int k = 1; k <= r; ++k) e[static_cast<size_t>(k)] = principal_minor_sum(jf, k);

    data.char_poly.assign(static_cast<size_t>(s) + 1, Interval(Rational(0)));
    for (int k = 0; k <= r; ++k) {
        Interval c = e[static_cast<size_t>(k)];
        if (k % 2 == 1) c = -c;
        data.char_poly[static_cast<size_t>(s - k)] = c;
    }

    std::vector<Interval> reduced(static_cast<size_t>(r) + 1, Interval(Rational(0)));
    for (int k = 0; k <= r; ++k)
        reduced[static_cast<size_t>(r - k)] = data.char_poly[static_cast<size_t>(s - k)];
    data.hurwitz_determinants = hurwitz_determinants(reduced);
    return data;
}

NondegeneracyReport nondegeneracy(const ReactionNetwork& net, const std::vector<Rational>& kappa,
                                  const std::vector<Interval>& x) {
    StoichiometricData sd;
    auto jf = jac_f_interval(net, kappa, x, sd);
    auto jh = jac_h_from_f(sd, jf);
    NondegeneracyReport rep;
    rep.det_jac_f_sign = interval_sign(interval_det(jf));
    rep.det_jac_h_sign = interval_sign(interval_det(jh));
    rep.nondegenerate = rep.det_jac_h_sign != 0;
    return rep;
}

Stability classify_stability(const ReactionNetwork& net, const std::vector<Rational>& kappa,
                             const std::vector<Interval>& x) {
    StoichiometricData sd;
    auto jf = jac_f_interval(net, kappa, x, sd);
    int r = sd.rank_N;

    if (r == 1) {
        int sign = interval_sign(interval_det(jac_h_from_f(sd, jf)));
        if (sign < 0) return Stability::stable;
        if (sign > 0) return Stability::unstable;
        return Stability::undetermined;
    }
    if (r == 2) {
        Interval trace(Rational(0));
        for (size_t i = 0; i < jf.size(); ++i) trace = trace + jf[i][i];
        int tr = interval_sign(trace);
        int dh = interval_sign(interval_det(jac_h_from_f(sd, jf)));
        if (tr < 0 && dh > 0) return Stability::stable;
        if (tr > 0 || dh < 0) return Stability::unstable;
        return Stability::undetermined;
    }

    HurwitzData hd = hurwitz_data(net, kappa, x);
    bool all_pos = true;
    for (const Interval& H : hd.hurwitz_determinants) {
        int sign = interval_sign(H);
        if (sign < 0) return Stability::unstable;
        if (sign == 0) all_pos = false;
    }
    return all_pos ? Stability::stable : Stability::undetermined;
}

SolveResult solve_positive_steady_states(const ReactionNetwork& net,
                                         const std::vector<Rational>& kappa,
                                         const std::vector<Rational>& c,
                                         const Rational& max_width) {
    ReducedSystem rs = reduce_system(net, kappa, c);
    size_t r = rs.free_vars.size();
    SolveResult result;

    if (r == 0) return result;  // no dynamics left; no positive-steady-state question

    // An empty positive compatibility class has no positive steady states,
    // continuum or otherwise.
    if (!positive_class_nonempty(rs, c)) return result;

    // For every remaining equation identically zero, the solution set is a
    // continuum (or empty only in degenerate parameter slices).
    bool all_zero = true;
    for (const Poly& p : rs.g)
        if (!p.is_zero()) all_zero = false;
    if (all_zero) {
        result.status = SolveStatus::degenerate_continuum;
        return result;
    }

    // Shadow eliminant per variable.
    std::vector<std::vector<Interval>> candidates(r);
    std::vector<UniPoly> shadows(r);
    for (size_t i = 0; i < r; ++i) {
        UniPoly sh;
        ShadowStatus st = shadow_polynomial(rs.g, rs.free_vars, rs.free_vars[i], sh);
        if (st == ShadowStatus::identically_zero) {
            result.status = SolveStatus::degenerate_continuum;
            return result;
        }
        if (st == ShadowStatus::failed) {
            result.status = SolveStatus::elimination_failed;
            return result;
        }
        if (sh.degree() == 0) return result;  // nonzero constant: inconsistent system
        shadows[i] = sh.squarefree_part();
        candidates[i] = shadows[i].isolate_positive_roots(max_width);
        if (candidates[i].empty()) return result;  // no positive projection
    }

    PolyMatrix jg = jacobian(rs.g, rs.free_vars);

    // Cross product of per-variable root enclosures.
    std::vector<size_t> pick(r, 0);
    while (true) {
        std::vector<Interval> box(r);
        for (size_t i = 0; i < r; ++i) box[i] = candidates[i][pick[i]];

        if (passes_filter(rs, box)) {
            // Certification loop: contract with Krawczyk, re-tightening the
            // per-coordinate enclosures when inconclusive.
            bool excluded = false, certified = false;
            for (int round = 0; round < 10 && !excluded && !certified; ++round) {
                KrawczykOutcome out = krawczyk_step(rs, jg, box);
                if (out.kind == KrawczykOutcome::excluded) {
                    excluded = true;
                    break;
                }
                if (out.kind == KrawczykOutcome::certified) {
                    box = out.box;
                    // Contract to the requested width.
                    for (int it = 0; it < 80 && box_width(box) > max_width; ++it) {
                        KrawczykOutcome again = krawczyk_step(rs, jg, box);
                        if (again.kind == KrawczykOutcome::excluded) break;
                        Rational before = box_width(box);
                        box = again.box;
                        if (box_width(box) >= before) break;
                    }
                    certified = true;
                    break;
                }
                box = out.box;
                for (size_t i = 0; i < r; ++i)
                    if (box[i].lo != box[i].hi)
                        box[i] = shadows[i].refine_root(candidates[i][pick[i]],
                                                        box[i].width() / 16);
                if (!passes_filter(rs, box)) {
                    excluded = true;
                    break;
                }
            }

            if (!excluded) {
                // Assemble the full state and require strict positivity.
                int s = rs.sd.species_count();
                std::vector<Interval> state(static_cast<size_t>(s), Interval(Rational(0)));
                for (size_t i = 0; i < r; ++i)
                    state[static_cast<size_t>(rs.free_species[i])] = box[i];
                std::vector<Interval> full = box_point(rs, box);
                bool positive = true;
                for (size_t k = 0; k < rs.lead_expr.size(); ++k) {
                    Interval lead = rs.lead_expr[k].evaluate_interval(full);
                    state[static_cast<size_t>(rs.sd.leading_indices[k])] = lead;
                    if (lead.lo <= 0) positive = false;
                }
                for (size_t i = 0; i < r; ++i)
                    if (box[i].lo <= 0) positive = false;

                if (positive) {
                    SteadyStateSolution sol;
                    sol.x = state;
                    sol.certified = certified;
                    NondegeneracyReport rep = nondegeneracy(net, kappa, sol.x);
                    sol.nondegenerate = rep.nondegenerate;
                    sol.det_jac_h_sign = rep.det_jac_h_sign;
                    sol.det_jac_f_sign = rep.det_jac_f_sign;
                    sol.stability = sol.nondegenerate ? classify_stability(net, kappa, sol.x)
                                                      : Stability::undetermined;
                    result.solutions.push_back(sol);
                }
            }
        }

        size_t pos = 0;
        while (pos < r && ++pick[pos] == candidates[pos].size()) {
            pick[pos] = 0;
            ++pos;
        }
        if (pos == r) break;
    }
    return result;
}

}  // namespace crn
