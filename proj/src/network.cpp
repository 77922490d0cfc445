#include "crn/network.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace crn {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool all_numbered_species(const std::vector<std::string>& names) {
    for (const auto& n : names) {
        if (n.size() < 2 || n[0] != 'X') return false;
        for (size_t i = 1; i < n.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(n[i]))) return false;
    }
    return true;
}

// Species-name -> count map for one side of a reaction.
std::map<std::string, int> parse_complex(const std::string& text, int line_no) {
    std::map<std::string, int> counts;
    std::string t = trim(text);
    if (t.empty())
        throw ParseError("line " + std::to_string(line_no) + ": empty complex");
    if (t == "0") return counts;
    std::istringstream in(t);
    std::string part;
    while (std::getline(in, part, '+')) {
        part = trim(part);
        if (part.empty())
            throw ParseError("line " + std::to_string(line_no) + ": empty species in complex '" + text + "'");
        for (char ch : part)
            if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'))
                throw ParseError("line " + std::to_string(line_no) + ": bad species name '" + part + "'");
        ++counts[part];
    }
    return counts;
}

std::vector<int> to_coefficients(const std::map<std::string, int>& counts,
                                 const std::vector<std::string>& species) {
    std::vector<int> c(species.size(), 0);
    for (const auto& [name, n] : counts) {
        auto it = std::find(species.begin(), species.end(), name);
        c[static_cast<size_t>(it - species.begin())] = n;
    }
    return c;
}

int complex_mask(const Complex& c) {
    int mask = 0;
    for (size_t i = 0; i < c.coefficients.size(); ++i)
        if (c.coefficients[i]) mask |= 1 << i;
    return mask;
}

Complex complex_from_mask(int mask, int s) {
    Complex c;
    c.coefficients.assign(static_cast<size_t>(s), 0);
    for (int i = 0; i < s; ++i)
        if (mask & (1 << i)) c.coefficients[static_cast<size_t>(i)] = 1;
    return c;
}

// (reactant, product) bitmask pair, the sort key for canonicalization.
std::pair<int, int> reaction_key(const Reaction& r) {
    return {complex_mask(r.reactant), complex_mask(r.product)};
}

std::vector<std::string> default_names(int s) {
    std::vector<std::string> names;
    for (int i = 1; i <= s; ++i) names.push_back("X" + std::to_string(i));
    return names;
}

}  // namespace

ReactionNetwork parse_network(const std::string& text, bool allow_general) {
    struct RawReaction {
        std::map<std::string, int> reactant, product;
        int line_no;
    };
    std::vector<RawReaction> raw;
    std::vector<std::string> species;
    bool have_header = false;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    auto note_species = [&](const std::map<std::string, int>& counts) {
        for (const auto& [name, n] : counts)
            if (std::find(species.begin(), species.end(), name) == species.end())
                species.push_back(name);
    };
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream parts(line);
        std::string stmt;
        while (std::getline(parts, stmt, ';')) {
            stmt = trim(stmt);
            if (stmt.empty()) continue;
            if (stmt.rfind("species:", 0) == 0) {
                if (have_header) throw ParseError("line " + std::to_string(line_no) + ": duplicate species header");
                have_header = true;
                std::istringstream hs(stmt.substr(8));
                std::string name;
                while (hs >> name) species.push_back(name);
                if (species.empty())
                    throw ParseError("line " + std::to_string(line_no) + ": empty species header");
                continue;
            }
            bool reversible = false;
            auto arrow = stmt.find("<->");
            size_t arrow_len = 3;
            if (arrow != std::string::npos) {
                reversible = true;
            } else {
                arrow = stmt.find("->");
                arrow_len = 2;
            }
            if (arrow == std::string::npos)
                throw ParseError("line " + std::to_string(line_no) + ": missing arrow in '" + stmt + "'");
            auto lhs = parse_complex(stmt.substr(0, arrow), line_no);
            auto rhs = parse_complex(stmt.substr(arrow + arrow_len), line_no);
            if (lhs == rhs)
                throw ParseError("line " + std::to_string(line_no) + ": reactant equals product in '" + stmt + "'");
            note_species(lhs);
            note_species(rhs);
            raw.push_back({lhs, rhs, line_no});
            if (reversible) raw.push_back({rhs, lhs, line_no});
        }
    }
    if (raw.empty()) throw ParseError("no reactions found");

    if (!have_header && all_numbered_species(species)) {
        std::sort(species.begin(), species.end(), [](const std::string& a, const std::string& b) {
            return std::stoi(a.substr(1)) < std::stoi(b.substr(1));
        });
    }

    ReactionNetwork net;
    net.species_names = species;
    for (const auto& r : raw) {
        Reaction rx{Complex{to_coefficients(r.reactant, species)},
                    Complex{to_coefficients(r.product, species)}};
        for (const auto& [name, n] : r.reactant)
            if (n > 1 && !allow_general)
                throw ParseError("line " + std::to_string(r.line_no) + ": coefficient " + std::to_string(n) +
                                 " violates the zero-one restriction");
        for (const auto& [name, n] : r.product)
            if (n > 1 && !allow_general)
                throw ParseError("line " + std::to_string(r.line_no) + ": coefficient " + std::to_string(n) +
                                 " violates the zero-one restriction");
        if (std::find(net.reactions.begin(), net.reactions.end(), rx) != net.reactions.end())
            throw ParseError("line " + std::to_string(r.line_no) + ": duplicate reaction");
        net.reactions.push_back(std::move(rx));
    }
    net.zero_one = true;
    for (const auto& r : net.reactions)
        for (int c : r.reactant.coefficients)
            if (c > 1) net.zero_one = false;
    for (const auto& r : net.reactions)
        for (int c : r.product.coefficients)
            if (c > 1) net.zero_one = false;
    return net;
}

std::string format_network(const ReactionNetwork& net) {
    std::ostringstream out;
    auto side = [&](const Complex& c) {
        std::string s;
        for (size_t i = 0; i < c.coefficients.size(); ++i) {
            for (int k = 0; k < c.coefficients[i]; ++k) {
                if (!s.empty()) s += " + ";
                s += net.species_names[i];
            }
        }
        return s.empty() ? std::string("0") : s;
    };
    for (const auto& r : net.reactions) out << side(r.reactant) << " -> " << side(r.product) << "\n";
    return out.str();
}

StoichiometricData stoichiometric_data(const ReactionNetwork& net) {
    int s = net.species_count(), m = net.reaction_count();
    StoichiometricData sd;
    sd.N.assign(static_cast<size_t>(s), std::vector<int>(static_cast<size_t>(m), 0));
    sd.Y.assign(static_cast<size_t>(s), std::vector<int>(static_cast<size_t>(m), 0));
    for (int j = 0; j < m; ++j) {
        const Reaction& r = net.reactions[static_cast<size_t>(j)];
        for (int i = 0; i < s; ++i) {
            sd.Y[static_cast<size_t>(i)][static_cast<size_t>(j)] = r.reactant.coefficients[static_cast<size_t>(i)];
            sd.N[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                r.product.coefficients[static_cast<size_t>(i)] - r.reactant.coefficients[static_cast<size_t>(i)];
        }
    }
    sd.rank_N = rank(sd.N);
    sd.W = left_nullspace_rref(to_rational(sd.N));
    for (const auto& row : sd.W) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (row[j] != 0) {
                sd.leading_indices.push_back(static_cast<int>(j));
                break;
            }
        }
    }
    return sd;
}

ReactionNetwork canonical_form(const ReactionNetwork& net) {
    int s = net.species_count();
    std::vector<int> perm(static_cast<size_t>(s));
    std::iota(perm.begin(), perm.end(), 0);

    std::vector<std::pair<int, int>> best;
    bool first = true;
    do {
        std::vector<std::pair<int, int>> keys;
        keys.reserve(net.reactions.size());
        for (const auto& r : net.reactions) {
            Complex ra, pr;
            ra.coefficients.assign(static_cast<size_t>(s), 0);
            pr.coefficients.assign(static_cast<size_t>(s), 0);
            for (int i = 0; i < s; ++i) {
                ra.coefficients[static_cast<size_t>(perm[static_cast<size_t>(i)])] =
                    r.reactant.coefficients[static_cast<size_t>(i)];
                pr.coefficients[static_cast<size_t>(perm[static_cast<size_t>(i)])] =
                    r.product.coefficients[static_cast<size_t>(i)];
            }
            keys.push_back(reaction_key(Reaction{ra, pr}));
        }
        std::sort(keys.begin(), keys.end());
        if (first || keys < best) {
            best = std::move(keys);
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    ReactionNetwork out;
    out.species_names = default_names(s);
    for (const auto& [rm, pm] : best)
        out.reactions.push_back(Reaction{complex_from_mask(rm, s), complex_from_mask(pm, s)});
    out.zero_one = net.zero_one;
    return out;
}

bool is_canonical(const ReactionNetwork& net) {
    ReactionNetwork canon = canonical_form(net);
    std::vector<std::pair<int, int>> a, b;
    for (const auto& r : net.reactions) a.push_back(reaction_key(r));
    std::sort(a.begin(), a.end());
    for (const auto& r : canon.reactions) b.push_back(reaction_key(r));
    return a == b;
}

std::vector<Reaction> reaction_universe(int s) {
    std::vector<Reaction> universe;
    int total = 1 << s;
    for (int rm = 0; rm < total; ++rm)
        for (int pm = 0; pm < total; ++pm)
            if (rm != pm) universe.push_back(Reaction{complex_from_mask(rm, s), complex_from_mask(pm, s)});
    return universe;
}

void enumerate_networks(int s, int m, const EnumerationOptions& opts,
                        const std::function<void(const ReactionNetwork&)>& yield) {
    std::vector<Reaction> universe = reaction_universe(s);
    int n = static_cast<int>(universe.size());
    if (m > n) throw std::invalid_argument("enumerate_networks: m exceeds the reaction universe size");

    std::vector<std::string> names = default_names(s);
    std::vector<int> idx(static_cast<size_t>(m));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        ReactionNetwork net;
        net.species_names = names;
        for (int i : idx) net.reactions.push_back(universe[static_cast<size_t>(i)]);

        bool pass = true;
        if (opts.rank_filter) {
            StoichiometricData sd = stoichiometric_data(net);
            pass = sd.rank_N == *opts.rank_filter;
        }
        if (pass && opts.canonical_only) pass = is_canonical(net);
        if (pass && opts.predicate) pass = opts.predicate(net);
        if (pass) yield(net);

        // Next m-combination in lexicographic order.
        int i = m - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - m + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < m; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

std::uint64_t count_networks(int s, int m, const EnumerationOptions& opts) {
    std::uint64_t count = 0;
    enumerate_networks(s, m, opts, [&](const ReactionNetwork&) { ++count; });
    return count;
}

}  // namespace crn
