#include "crn/fluxcone.hpp"

#include <algorithm>
#include <set>

namespace crn {

namespace {

std::vector<Rational> normalize_ray(const std::vector<Rational>& ray) {
    mpz_class lcm_den = 1;
    for (const auto& q : ray) {
        mpz_class g;
        mpz_lcm(g.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den_mpz_t());
        lcm_den = g;
    }
    std::vector<mpz_class> ints;
    mpz_class gcd_all = 0;
    for (const auto& q : ray) {
        mpz_class v = q.get_num() * (lcm_den / q.get_den());
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), gcd_all.get_mpz_t(), v.get_mpz_t());
        gcd_all = g;
        ints.push_back(v);
    }
    std::vector<Rational> out;
    for (const auto& v : ints) out.push_back(gcd_all == 0 ? Rational(0) : Rational(v / gcd_all));
    return out;
}

std::vector<int> support(const std::vector<Rational>& ray) {
    std::vector<int> s;
    for (size_t i = 0; i < ray.size(); ++i)
        if (ray[i] != 0) s.push_back(static_cast<int>(i));
    return s;
}

// Extremality in {gamma >= 0 : A gamma = 0}: the support-restricted columns
// of A must have rank |support| - 1.
bool is_extreme(const std::vector<Rational>& ray, const QMatrix& A) {
    std::vector<int> supp = support(ray);
    if (supp.empty()) return false;
    QMatrix sub(A.size(), std::vector<Rational>(supp.size()));
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = 0; j < supp.size(); ++j) sub[i][j] = A[i][static_cast<size_t>(supp[j])];
    return rank(std::move(sub)) == static_cast<int>(supp.size()) - 1;
}

}  // namespace

ExtremeRaySet extreme_rays(const StoichiometricData& sd) {
    int m = sd.reaction_count();
    // Row-reduce N so each double description step adds an independent equality.
    QMatrix reduced = to_rational(sd.N);
    rref(reduced);
    while (!reduced.empty()) {
        bool zero = std::all_of(reduced.back().begin(), reduced.back().end(),
                                [](const Rational& q) { return q == 0; });
        if (!zero) break;
        reduced.pop_back();
    }

    std::vector<std::vector<Rational>> rays;
    for (int i = 0; i < m; ++i) {
        std::vector<Rational> e(static_cast<size_t>(m), Rational(0));
        e[static_cast<size_t>(i)] = 1;
        rays.push_back(std::move(e));
    }

    QMatrix active;
    for (const auto& row : reduced) {
        active.push_back(row);
        std::vector<std::vector<Rational>> pos, neg, zero;
        for (auto& ray : rays) {
            Rational dot = 0;
            for (int j = 0; j < m; ++j) dot += row[static_cast<size_t>(j)] * ray[static_cast<size_t>(j)];
            if (dot > 0)
                pos.push_back(std::move(ray));
            else if (dot < 0)
                neg.push_back(std::move(ray));
            else
                zero.push_back(std::move(ray));
        }
        std::vector<std::vector<Rational>> next = std::move(zero);
        for (const auto& rp : pos) {
            Rational dp = 0;
            for (int j = 0; j < m; ++j) dp += row[static_cast<size_t>(j)] * rp[static_cast<size_t>(j)];
            for (const auto& rn : neg) {
                Rational dn = 0;
                for (int j = 0; j < m; ++j) dn += row[static_cast<size_t>(j)] * rn[static_cast<size_t>(j)];
                std::vector<Rational> combo(static_cast<size_t>(m));
                for (int j = 0; j < m; ++j)
                    combo[static_cast<size_t>(j)] =
                        dp * rn[static_cast<size_t>(j)] - dn * rp[static_cast<size_t>(j)];
                if (is_extreme(combo, active)) next.push_back(normalize_ray(combo));
            }
        }
        // Deduplicate (distinct pairs can generate the same extreme ray).
        std::set<std::vector<Rational>> seen;
        rays.clear();
        for (auto& ray : next) {
            auto norm = normalize_ray(ray);
            if (seen.insert(norm).second) rays.push_back(std::move(norm));
        }
    }

    std::sort(rays.begin(), rays.end(), [](const auto& a, const auto& b) {
        auto sa = support(a), sb = support(b);
        if (sa != sb) return sa < sb;
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });

    ExtremeRaySet out;
    out.rays = std::move(rays);
    return out;
}

bool strictly_positive_flux_exists(const ExtremeRaySet& rays, int m) {
    for (int j = 0; j < m; ++j) {
        bool covered = false;
        for (const auto& ray : rays.rays)
            if (ray[static_cast<size_t>(j)] > 0) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return m > 0 || rays.count() == 0;
}

std::optional<std::vector<Rational>> decompose_flux(const std::vector<Rational>& gamma,
                                                    const ExtremeRaySet& rays) {
    size_t m = gamma.size();
    size_t t = static_cast<size_t>(rays.count());
    // Phase-1 simplex over exact rationals: minimize the artificial variables
    // in [R I] [lambda; a] = gamma with everything nonnegative.
    size_t cols = t + m;
    std::vector<std::vector<Rational>> tab(m, std::vector<Rational>(cols + 1, Rational(0)));
    std::vector<size_t> basis(m);
    for (size_t i = 0; i < m; ++i) {
        for (size_t k = 0; k < t; ++k) tab[i][k] = rays.rays[k][i];
        tab[i][t + i] = 1;
        tab[i][cols] = gamma[i];
        basis[i] = t + i;
    }
    // Objective row: sum of artificial rows (to be driven to zero).
    std::vector<Rational> obj(cols + 1, Rational(0));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j <= cols; ++j) obj[j] += tab[i][j];

    while (true) {
        // Bland's rule: first column with positive reduced objective.
        size_t enter = cols;
        for (size_t j = 0; j < t; ++j)
            if (obj[j] > 0) {
                enter = j;
                break;
            }
        if (enter == cols) break;
        size_t leave = m;
        Rational best;
        for (size_t i = 0; i < m; ++i) {
            if (tab[i][enter] <= 0) continue;
            Rational ratio = tab[i][cols] / tab[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) break;  // unbounded cannot happen in phase 1
        Rational inv = 1 / tab[leave][enter];
        for (size_t j = 0; j <= cols; ++j) tab[leave][j] *= inv;
        for (size_t i = 0; i < m; ++i) {
            if (i == leave || tab[i][enter] == 0) continue;
            Rational f = tab[i][enter];
            for (size_t j = 0; j <= cols; ++j) tab[i][j] -= f * tab[leave][j];
        }
        Rational f = obj[enter];
        for (size_t j = 0; j <= cols; ++j) obj[j] -= f * tab[leave][j];
        basis[leave] = enter;
    }

    if (obj[cols] != 0) return std::nullopt;
    std::vector<Rational> lambda(t, Rational(0));
    for (size_t i = 0; i < m; ++i) {
        if (basis[i] < t)
            lambda[basis[i]] = tab[i][cols];
        else if (tab[i][cols] != 0)
            return std::nullopt;  // artificial stuck at a nonzero level
    }
    return lambda;
}

}  // namespace crn
