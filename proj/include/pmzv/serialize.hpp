#pragma once

#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "pmzv/errors.hpp"
#include "pmzv/rings.hpp"
#include "pmzv/series.hpp"

namespace pmzv {

using AnySeries = std::variant<NCSeries<RationalRing>, NCSeries<SymbolRing>, NCSeries<PadicField>, NCSeries<ComplexField>>;

inline constexpr int schema_version = 1;

nlohmann::json ring_to_json(const RationalRing&);
nlohmann::json ring_to_json(const SymbolRing&);
nlohmann::json ring_to_json(const PadicField& r);
nlohmann::json ring_to_json(const ComplexField& r);

// {"ring": {...}, "truncation": N, "terms": [{"word": "AB", "coeff": "..."}]}
// with terms in the canonical word order and the empty word written "".
template <CoefficientRing R>
nlohmann::json series_to_json(const NCSeries<R>& f)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [w, c] : f.terms()) {
        terms.push_back({{"word", w.str()}, {"coeff", f.ring().format(c)}});
    }
    return {{"schema_version", schema_version},
            {"ring", ring_to_json(f.ring())},
            {"truncation", f.truncation()},
            {"terms", std::move(terms)}};
}

nlohmann::json series_to_json(const AnySeries& f);

// Inverse of series_to_json; throws parse_error on malformed input, unknown
// rings, duplicate words, or words beyond the truncation.
AnySeries series_from_json(const nlohmann::json& j);

} // namespace pmzv
