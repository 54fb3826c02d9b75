#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "pmzv/associator.hpp"
#include "pmzv/index.hpp"
#include "pmzv/rings.hpp"
#include "pmzv/series.hpp"
#include "pmzv/symbol_poly.hpp"

namespace pmzv {

using SymSeries = NCSeries<SymbolRing>;

// Lambda tags of the free character coordinates.
inline constexpr std::string_view tag_padic_kz = "KZp";
inline constexpr std::string_view tag_complex_kz = "KZ";
inline constexpr std::string_view tag_generic = "L";

enum class AssociatorFlavor { complex_kz, padic_kz, padic_deligne, minus_kz, symbolic_lambda };

std::string flavor_name(AssociatorFlavor f);
AssociatorFlavor parse_flavor(std::string_view name);

// Group-like series with lambda_tag{l} on each Lyndon word l of weight
// 2..n and 0 on the letters. Lyndon words of weight >= 2 are convergent, so
// lambda_tag{l} = (-1)^depth zeta(index(l)) for the flavor carried by tag.
SymSeries symbolic_associator(std::string_view tag, int n);

// lambda_tag{l} -> (-1)^depth zeta_flavor[index(l)].
SymbolPoly lambda_to_zeta(const SymbolPoly& q, std::string_view tag, ZetaFlavor flavor);

// G0 at the given argument: A -> log, B -> -Li[1], Lyndon l -> (-1)^depth Li[index(l)].
SymSeries g0_symbolic(LiArg arg, int n);

// Rewrite context. Zeta symbols of a flavor are replaced by the signed word
// coefficients of the registered series; Lidag / Liminus symbols likewise
// from the expansions; non-Lyndon plain Li symbols by their expression in
// Lyndon ones; log(z^p) -> p log z (when p is set); log|z|^2 -> log z + log zbar.
struct SymbolContext {
    std::optional<long> p;
    std::map<ZetaFlavor, SymSeries> zeta_series;
    std::optional<SymSeries> dagger;
    std::optional<SymSeries> minus;
};

class Canonicalizer {
public:
    explicit Canonicalizer(SymbolContext ctx) : ctx_(std::move(ctx)) {}

    SymbolPoly operator()(const SymbolPoly& q);
    SymSeries operator()(const SymSeries& f);

private:
    std::optional<SymbolPoly> rewrite(const Generator& g);
    const SymSeries& g0(LiArg arg, int weight);

    SymbolContext ctx_;
    std::map<Generator, SymbolPoly> memo_;
    std::map<LiArg, SymSeries> g0_cache_;
};

SymbolPoly canonicalize(const SymbolPoly& q, const SymbolContext& ctx);

// The symbolic objects of the p-adic side at truncation n.
struct PadicSymbolic {
    long p;
    int truncation;
    SymSeries phi_kz;
    SymSeries phi_de;
    SymSeries g0_z;
    SymSeries g0_zp;
    SymSeries dagger;  // G0^dag
    [[nodiscard]] SymbolContext context() const;
};

// The symbolic objects of the Hodge side at truncation n.
struct HodgeSymbolic {
    int truncation;
    SymSeries phi_kz;
    SymSeries phi_minus;
    SymSeries g0_z;
    SymSeries g0_zbar;
    SymSeries minus;  // G0^-
    [[nodiscard]] SymbolContext context() const;
};

// G0^dag = G0(z) * [G0(A/p, Phi_De^{-1} (B/p) Phi_De)(z^p)]^{-1}.
PadicSymbolic czech_expand(long p, int n);
// G0^- = G0(z) * [G0(-A, Phi^-^{-1} (-B) Phi^-)(zbar)]^{-1}.
HodgeSymbolic moldova_expand(int n);

// (-1)^depth * f[word(index)].
SymbolPoly signed_coefficient(const SymSeries& f, const Index& i);

// Residual of a KZ-type equation split by rational-function factor:
//   over_z / z + over_one_minus_z / (1 - z) + over_zp * z^{p-1} / (1 - z^p).
struct KZResidual {
    SymSeries over_z;
    SymSeries over_one_minus_z;
    SymSeries over_zp;
    [[nodiscard]] bool is_zero() const { return over_z.is_zero() && over_one_minus_z.is_zero() && over_zp.is_zero(); }
};

// dG - (A/z + B/(z-1)) G, canonicalized.
KZResidual verify_kz_equation(const SymSeries& g, const SymbolContext& ctx);
// dG - (A/z + B/(z-1)) G + G (dz^p/z^p A/p + dz^p/(z^p-1) Phi_De^{-1} (B/p) Phi_De) / dz, canonicalized.
KZResidual verify_princeton_equation(const SymSeries& g, const SymSeries& phi_de, long p, const SymbolContext& ctx);

// Closed forms of the worked examples, in zeta / Li / log symbols. zeta(1)
// terms vanish (the regularization with C_B = 0).
namespace closed_form {

SymbolPoly zeta_regularized(ZetaFlavor flavor, const Index& i);

// zeta_p^De(k) expressed in zeta_p.
SymbolPoly deligne_depth1(long p, int k);
// zeta_p^De(a,b), b > 1.
SymbolPoly deligne_depth2(long p, int a, int b);
// Li^dag_k(z).
SymbolPoly dagger_depth1(long p, int k);
// Li^dag_{a,b}(z).
SymbolPoly dagger_depth2(long p, int a, int b);
// Li^-_k(z) with log|z|^2 kept as a symbol.
SymbolPoly minus_depth1(int k);
// Li^-_{a,b}(z).
SymbolPoly minus_depth2(int a, int b);

} // namespace closed_form

} // namespace pmzv
