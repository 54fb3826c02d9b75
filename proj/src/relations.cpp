#include "pmzv/relations.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <tuple>

#include "pmzv/errors.hpp"
#include "pmzv/regularization.hpp"
#include "pmzv/rings.hpp"
#include "pmzv/shuffle.hpp"

namespace pmzv {

namespace {

constexpr int max_relation_weight = 12;

using GenKey = std::tuple<int, int, std::vector<int>>;

GenKey gen_key(const Generator& g)
{
    const Index i = g.index();
    return {i.weight(), i.depth(), i.entries()};
}

std::vector<GenKey> monomial_key(const Monomial& m)
{
    std::vector<GenKey> out;
    for (const auto& [g, e] : m) {
        for (int k = 0; k < e; ++k) {
            out.push_back(gen_key(g));
        }
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

// Signed zeta value of a convergent word: Phi[w] = (-1)^depth zeta(index(w)).
SymbolPoly word_value(const Word& w, ZetaFlavor flavor)
{
    const Index i = index_of_word(w);
    const SymbolPoly z = zeta_sym(flavor, i);
    return i.depth() % 2 == 0 ? z : -z;
}

SymbolPoly shuffle_side(const Index& i, const Index& j, ZetaFlavor flavor)
{
    const SignedWord u = word_of_index(i);
    const SignedWord v = word_of_index(j);
    SymbolPoly out;
    for (const auto& [t, c] : shuffle_words(u.word, v.word).terms()) {
        out += word_value(t, flavor) * c;
    }
    // zeta(i) zeta(j) = sign_u sign_v Phi[u] Phi[v].
    return out * Rational(u.sign * v.sign);
}

SymbolPoly stuffle_side(const Index& i, const Index& j, ZetaFlavor flavor)
{
    SymbolPoly out;
    for (const auto& [t, c] : stuffle_indices(i, j).terms()) {
        out += zeta_sym(flavor, t) * c;
    }
    return out;
}

// Stuffle expansion of zeta(1) zeta(j) with shuffle-regularized values.
SymbolPoly regularized_stuffle(const Index& j, ZetaFlavor flavor, CharacterExtender<SymbolRing>& reg)
{
    SymbolPoly out;
    for (const auto& [t, c] : stuffle_indices(Index{1}, j).terms()) {
        if (t.admissible()) {
            out += zeta_sym(flavor, t) * c;
        } else {
            const SignedWord sw = word_of_index(t);
            out += reg(sw.word) * Rational(c * sw.sign);
        }
    }
    return out;
}

Monomial leading_monomial(const SymbolPoly& q)
{
    const Monomial* best = nullptr;
    for (const auto& [m, c] : q.terms()) {
        if (best == nullptr || monomial_precedes(*best, m)) {
            best = &m;
        }
    }
    return *best;
}

SymbolPoly normalized(const SymbolPoly& q)
{
    return q * (1 / q.coeff(leading_monomial(q)));
}

SymbolPoly monomial_poly(const Monomial& m)
{
    SymbolPoly out(1);
    for (const auto& [g, e] : m) {
        out *= SymbolPoly(g, e);
    }
    return out;
}

void collect_monomials(int w, ZetaFlavor flavor, const std::vector<Generator>& gens, std::size_t from, Monomial& cur,
                       std::vector<Monomial>& out)
{
    if (w == 0) {
        out.push_back(cur);
        return;
    }
    for (std::size_t g = from; g < gens.size(); ++g) {
        const int gw = gens[g].weight();
        if (gw > w) {
            continue;
        }
        // Collect exponent e >= 1 of gens[g], then only later generators.
        for (int e = 1; e * gw <= w; ++e) {
            cur.emplace_back(gens[g], e);
            collect_monomials(w - e * gw, flavor, gens, g + 1, cur, out);
            cur.pop_back();
        }
    }
}

} // namespace

bool monomial_precedes(const Monomial& a, const Monomial& b)
{
    return monomial_key(a) < monomial_key(b);
}

std::vector<Monomial> zeta_monomials(int w, ZetaFlavor flavor)
{
    std::vector<Generator> gens;
    for (int k = 2; k <= w; ++k) {
        for (const Index& i : admissible_indices(k)) {
            gens.push_back(Generator::zeta(flavor, i));
        }
    }
    // Monomial keeps generators sorted by Generator order.
    std::sort(gens.begin(), gens.end());
    std::vector<Monomial> out;
    Monomial cur;
    collect_monomials(w, flavor, gens, 0, cur, out);
    std::sort(out.begin(), out.end(), monomial_precedes);
    return out;
}

std::vector<RelationRow> generate_double_shuffle(int w, ZetaFlavor flavor)
{
    if (w < 2 || w > max_relation_weight) {
        throw domain_error("generate_double_shuffle: weight must be in [2, " + std::to_string(max_relation_weight) + "]");
    }
    std::vector<RelationRow> raw;
    std::vector<Index> adm;
    for (int k = 2; k < w; ++k) {
        for (const Index& i : admissible_indices(k)) {
            adm.push_back(i);
        }
    }
    for (std::size_t a = 0; a < adm.size(); ++a) {
        for (std::size_t b = a; b < adm.size(); ++b) {
            if (adm[a].weight() + adm[b].weight() != w) {
                continue;
            }
            const std::string pair = "(" + adm[a].str() + ")x(" + adm[b].str() + ")";
            const SymbolPoly st = stuffle_side(adm[a], adm[b], flavor);
            raw.push_back({w, shuffle_side(adm[a], adm[b], flavor) - st, "shuffle-stuffle " + pair});
            raw.push_back({w, zeta_sym(flavor, adm[a]) * zeta_sym(flavor, adm[b]) - st, "product-stuffle " + pair});
        }
    }
    CharacterExtender<SymbolRing> reg(
        SymbolRing{}, [flavor](const Word& t) { return word_value(t, flavor); }, SymbolPoly{}, SymbolPoly{});
    for (const Index& j : admissible_indices(w - 1)) {
        raw.push_back({w, regularized_stuffle(j, flavor, reg), "regularized (1)x(" + j.str() + ")"});
    }
    for (int lower = 2; lower <= w - 2; ++lower) {
        const std::vector<Monomial> cofactors = zeta_monomials(w - lower, flavor);
        for (const RelationRow& r : generate_double_shuffle(lower, flavor)) {
            for (const Monomial& m : cofactors) {
                raw.push_back({w, r.relation * monomial_poly(m), monomial_str(m) + " * [" + r.origin + "]"});
            }
        }
    }
    std::vector<RelationRow> out;
    std::set<SymbolPoly::term_map> seen;
    for (RelationRow& r : raw) {
        if (r.relation.is_zero()) {
            continue;
        }
        r.relation = normalized(r.relation);
        if (seen.insert(r.relation.terms()).second) {
            out.push_back(std::move(r));
        }
    }
    return out;
}

SymbolPoly RelationReduction::reduce(const SymbolPoly& q) const
{
    SymbolPoly out;
    for (const auto& [m, c] : q.terms()) {
        auto it = expression.find(m);
        if (it == expression.end()) {
            throw domain_error("RelationReduction::reduce: monomial " + monomial_str(m) + " outside the column set");
        }
        for (const auto& [b, e] : it->second) {
            out += monomial_poly(b) * (c * e);
        }
    }
    return out;
}

RelationReduction reduce_relations(const std::vector<RelationRow>& rows, int w, ZetaFlavor flavor)
{
    RelationReduction r;
    r.weight = w;
    r.columns = zeta_monomials(w, flavor);
    {
        std::set<Monomial> have(r.columns.begin(), r.columns.end());
        for (const RelationRow& row : rows) {
            for (const auto& [m, c] : row.relation.terms()) {
                if (have.insert(m).second) {
                    r.columns.push_back(m);
                }
            }
        }
        std::sort(r.columns.begin(), r.columns.end(), monomial_precedes);
    }
    std::map<Monomial, int> col;
    for (std::size_t i = 0; i < r.columns.size(); ++i) {
        col.emplace(r.columns[i], static_cast<int>(i));
    }

    // Sparse integer rows, highest column first.
    using Row = std::map<int, Integer, std::greater<>>;
    auto make_primitive = [](Row& v) {
        Integer g = 0;
        for (const auto& [k, c] : v) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        }
        if (v.begin()->second < 0) {
            g = -g;
        }
        for (auto& [k, c] : v) {
            c /= g;
        }
    };
    // a*x - b*y, dropping zeros.
    auto combine = [](const Integer& a, const Row& x, const Integer& b, const Row& y) {
        Row out;
        for (const auto& [k, c] : x) {
            out[k] += a * c;
        }
        for (const auto& [k, c] : y) {
            out[k] -= b * c;
        }
        std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
        return out;
    };
    auto eliminate = [&](Row& v, int k, const Row& piv) {
        const Integer vk = v.at(k);
        const Integer pk = piv.at(k);
        Integer g;
        mpz_gcd(g.get_mpz_t(), vk.get_mpz_t(), pk.get_mpz_t());
        v = combine(pk / g, v, vk / g, piv);
    };

    std::map<int, Row> pivots;
    for (const RelationRow& row : rows) {
        Integer den = 1;
        for (const auto& [m, c] : row.relation.terms()) {
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
        }
        Row v;
        for (const auto& [m, c] : row.relation.terms()) {
            const Rational scaled = c * den;
            v.emplace(col.at(m), scaled.get_num());
        }
        while (!v.empty()) {
            const int lead = v.begin()->first;
            auto it = pivots.find(lead);
            if (it == pivots.end()) {
                make_primitive(v);
                pivots.emplace(lead, std::move(v));
                break;
            }
            eliminate(v, lead, it->second);
        }
    }
    // Back-substitution in ascending pivot order keeps earlier rows reduced.
    for (auto& [lead, v] : pivots) {
        for (;;) {
            int target = -1;
            for (const auto& [k, c] : v) {
                if (k != lead && pivots.count(k) != 0) {
                    target = k;
                    break;
                }
            }
            if (target < 0) {
                break;
            }
            eliminate(v, target, pivots.at(target));
        }
        make_primitive(v);
    }

    r.rank = pivots.size();
    for (std::size_t i = 0; i < r.columns.size(); ++i) {
        const int k = static_cast<int>(i);
        const Monomial& m = r.columns[i];
        auto it = pivots.find(k);
        if (it == pivots.end()) {
            r.basis.push_back(m);
            r.expression[m] = {{m, Rational(1)}};
            continue;
        }
        const Integer& lc = it->second.at(k);
        std::map<Monomial, Rational> e;
        for (const auto& [j, c] : it->second) {
            if (j != k) {
                e[r.columns[static_cast<std::size_t>(j)]] = -Rational(c, lc);
            }
        }
        for (auto& [b, q] : e) {
            q.canonicalize();
        }
        r.expression[m] = std::move(e);
    }
    return r;
}

namespace {

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') {
            out += '"';
        }
        out += ch;
    }
    return out + "\"";
}

} // namespace

std::string relations_csv(const RelationReduction& r)
{
    std::ostringstream os;
    os << "weight,lhs_monomial";
    for (const Monomial& b : r.basis) {
        os << ',' << csv_field(monomial_str(b));
    }
    os << '\n';
    for (const Monomial& m : r.columns) {
        os << r.weight << ',' << csv_field(monomial_str(m));
        const auto& e = r.expression.at(m);
        for (const Monomial& b : r.basis) {
            auto it = e.find(b);
            os << ',' << (it == e.end() ? std::string("0") : to_string(it->second));
        }
        os << '\n';
    }
    return os.str();
}

} // namespace pmzv
