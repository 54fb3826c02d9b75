#include "pmzv/braid.hpp"

#include <algorithm>
#include <array>

namespace pmzv {

namespace {

using Sparse = std::map<std::uint32_t, Rational>;

std::uint32_t ipow5(int e)
{
    std::uint32_t r = 1;
    for (int i = 0; i < e; ++i) {
        r *= 5;
    }
    return r;
}

// Degree-1 expressions of all X_{i,j} in the free generators.
std::array<std::array<BraidVector, 6>, 6> degree_one_table()
{
    std::array<std::array<BraidVector, 6>, 6> t{};
    const std::array<std::pair<int, int>, 5> free = {{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}};
    std::array<std::array<Sparse, 6>, 6> s{};
    for (int g = 0; g < 5; ++g) {
        s[free[g].first][free[g].second][static_cast<std::uint32_t>(g)] = 1;
    }
    // X34 = -(X12 + X13 + X14 + X23 + X24).
    for (std::uint32_t g = 0; g < 5; ++g) {
        s[3][4][g] = -1;
    }
    auto get = [&](int i, int j) -> const Sparse& { return i < j ? s[i][j] : s[j][i]; };
    // X_{i,5} = -sum_{j <= 4, j != i} X_{i,j}.
    for (int i = 1; i <= 4; ++i) {
        Sparse acc;
        for (int j = 1; j <= 4; ++j) {
            if (j == i) {
                continue;
            }
            for (const auto& [g, c] : get(i, j)) {
                acc[g] -= c;
            }
        }
        s[i][5] = acc;
    }
    for (int i = 1; i <= 5; ++i) {
        for (int j = i + 1; j <= 5; ++j) {
            BraidVector v;
            for (const auto& [g, c] : s[i][j]) {
                if (c != 0) {
                    v.emplace_back(BraidWord{1, g}, c);
                }
            }
            t[i][j] = v;
            t[j][i] = v;
        }
    }
    return t;
}

// Eliminates `row` against the pivots (pivot rows normalized to leading 1
// at their largest code) and inserts it if something survives.
void insert_row(Sparse row, std::map<std::uint32_t, Sparse>& pivots)
{
    while (!row.empty()) {
        auto lead = std::prev(row.end());
        auto p = pivots.find(lead->first);
        if (p == pivots.end()) {
            const Rational inv = 1 / lead->second;
            for (auto& [k, c] : row) {
                c *= inv;
            }
            pivots.emplace(lead->first, std::move(row));
            return;
        }
        const Rational f = lead->second;
        for (const auto& [k, c] : p->second) {
            auto it = row.try_emplace(k, 0).first;
            it->second -= f * c;
            if (it->second == 0) {
                row.erase(it);
            }
        }
    }
}

} // namespace

BraidBasis::BraidBasis(int max_degree) : max_degree_(max_degree)
{
    if (max_degree < 0 || max_degree > max_supported_degree) {
        throw domain_error("BraidBasis: degree out of supported range");
    }
    const auto table = degree_one_table();
    // Quadratic relations over the 15 disjoint pairs.
    for (int i = 1; i <= 5; ++i) {
        for (int j = i + 1; j <= 5; ++j) {
            for (int k = 1; k <= 5; ++k) {
                for (int l = k + 1; l <= 5; ++l) {
                    if (k == i || k == j || l == i || l == j || std::make_pair(k, l) < std::make_pair(i, j)) {
                        continue;
                    }
                    Sparse r;
                    for (const auto& [a, ca] : table[i][j]) {
                        for (const auto& [b, cb] : table[k][l]) {
                            r[a.code * 5 + b.code] += ca * cb;
                            r[b.code * 5 + a.code] -= ca * cb;
                        }
                    }
                    BraidVector v;
                    for (const auto& [code, c] : r) {
                        if (c != 0) {
                            v.emplace_back(BraidWord{2, code}, c);
                        }
                    }
                    relations_.push_back(std::move(v));
                }
            }
        }
    }
    pivots_.resize(static_cast<std::size_t>(max_degree) + 1);
    for (int d = 2; d <= max_degree; ++d) {
        std::map<std::uint32_t, Sparse> piv;
        for (int a = 0; a <= d - 2; ++a) {
            const int b = d - 2 - a;
            const std::uint32_t na = ipow5(a);
            const std::uint32_t nb = ipow5(b);
            const std::uint32_t shift_r = nb;
            const std::uint32_t shift_u = ipow5(b + 2);
            for (const auto& rel : relations_) {
                for (std::uint32_t u = 0; u < na; ++u) {
                    for (std::uint32_t v = 0; v < nb; ++v) {
                        Sparse row;
                        for (const auto& [w, c] : rel) {
                            row.emplace(u * shift_u + w.code * shift_r + v, c);
                        }
                        insert_row(std::move(row), piv);
                    }
                }
            }
        }
        // Back-substitution in increasing pivot order gives normal forms in
        // standard monomials only.
        auto& nf = pivots_[static_cast<std::size_t>(d)];
        for (auto& [lead, row] : piv) {
            Sparse acc;
            for (const auto& [k, c] : row) {
                if (k == lead) {
                    continue;
                }
                auto done = nf.find(k);
                if (done == nf.end()) {
                    acc[k] -= c;
                } else {
                    for (const auto& [w, q] : done->second) {
                        acc[w.code] += -c * q;
                    }
                }
            }
            BraidVector v;
            for (const auto& [k, c] : acc) {
                if (c != 0) {
                    v.emplace_back(BraidWord{static_cast<std::uint8_t>(d), k}, c);
                }
            }
            nf.emplace(lead, std::move(v));
        }
    }
}

std::size_t BraidBasis::rank(int degree) const
{
    if (degree < 2) {
        return 0;
    }
    return pivots_.at(static_cast<std::size_t>(degree)).size();
}

std::size_t BraidBasis::dimension(int degree) const
{
    if (degree < 0 || degree > max_degree_) {
        throw domain_error("BraidBasis: degree out of range");
    }
    return ipow5(degree) - rank(degree);
}

bool BraidBasis::is_standard(const BraidWord& w) const
{
    if (w.degree < 2) {
        return true;
    }
    return pivots_.at(w.degree).count(w.code) == 0;
}

BraidVector BraidBasis::normal_form(const BraidWord& w) const
{
    if (w.degree > max_degree_) {
        return {};
    }
    if (is_standard(w)) {
        return {{w, Rational(1)}};
    }
    return pivots_.at(w.degree).at(w.code);
}

BraidVector BraidBasis::generator(int i, int j) const
{
    if (i == j || i < 1 || j < 1 || i > 5 || j > 5) {
        throw domain_error("BraidBasis: generator indices must be distinct in 1..5");
    }
    static const auto table = degree_one_table();
    return table[i][j];
}

BraidVector BraidBasis::reduce(const BraidVector& v) const
{
    std::map<BraidWord, Rational> acc;
    for (const auto& [w, c] : v) {
        for (const auto& [s, q] : normal_form(w)) {
            acc[s] += c * q;
        }
    }
    BraidVector out;
    for (const auto& [w, c] : acc) {
        if (c != 0) {
            out.emplace_back(w, c);
        }
    }
    return out;
}

BraidWord BraidBasis::concat(const BraidWord& a, const BraidWord& b)
{
    return {static_cast<std::uint8_t>(a.degree + b.degree), a.code * ipow5(b.degree) + b.code};
}

std::string BraidBasis::word_str(const BraidWord& w)
{
    static const char* names[5] = {"X12", "X13", "X14", "X23", "X24"};
    if (w.degree == 0) {
        return "1";
    }
    std::string s;
    std::uint32_t code = w.code;
    std::vector<int> digits;
    for (int i = 0; i < w.degree; ++i) {
        digits.push_back(static_cast<int>(code % 5));
        code /= 5;
    }
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        if (!s.empty()) {
            s.push_back('*');
        }
        s += names[*it];
    }
    return s;
}

} // namespace pmzv
