#include "pmzv/serialize.hpp"

#include <set>

namespace pmzv {

nlohmann::json ring_to_json(const RationalRing&)
{
    return {{"name", "rational"}};
}

nlohmann::json ring_to_json(const SymbolRing&)
{
    return {{"name", "symbolic"}};
}

nlohmann::json ring_to_json(const PadicField& r)
{
    return {{"name", "padic"}, {"p", r.p}, {"precision", r.precision}};
}

nlohmann::json ring_to_json(const ComplexField& r)
{
    return {{"name", "complex"}, {"tolerance", r.tolerance}};
}

nlohmann::json series_to_json(const AnySeries& f)
{
    return std::visit([](const auto& s) { return series_to_json(s); }, f);
}

namespace {

template <CoefficientRing R>
NCSeries<R> read_terms(const R& ring, int truncation, const nlohmann::json& terms)
{
    NCSeries<R> out(ring, truncation);
    std::set<Word> seen;
    for (const auto& t : terms) {
        if (!t.is_object() || !t.contains("word") || !t.contains("coeff")) {
            throw parse_error("series: each term needs word and coeff");
        }
        const Word w = Word::parse(t.at("word").get<std::string>());
        if (w.weight() > truncation) {
            throw parse_error("series: word " + w.str() + " beyond truncation");
        }
        if (!seen.insert(w).second) {
            throw parse_error("series: duplicate word " + (w.empty() ? std::string("\"\"") : w.str()));
        }
        out.set(w, ring.parse(t.at("coeff").get<std::string>()));
    }
    return out;
}

} // namespace

AnySeries series_from_json(const nlohmann::json& j)
{
    try {
        const auto& ring = j.at("ring");
        const std::string name = ring.at("name").get<std::string>();
        const int n = j.at("truncation").get<int>();
        const auto& terms = j.at("terms");
        if (!terms.is_array()) {
            throw parse_error("series: terms must be an array");
        }
        if (name == "rational") {
            return read_terms(RationalRing{}, n, terms);
        }
        if (name == "symbolic") {
            return read_terms(SymbolRing{}, n, terms);
        }
        if (name == "padic") {
            return read_terms(PadicField(ring.at("p").get<unsigned long>(), ring.at("precision").get<long>()), n, terms);
        }
        if (name == "complex") {
            return read_terms(ComplexField{ring.at("tolerance").get<double>()}, n, terms);
        }
        throw parse_error("series: unknown ring " + name);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("series: ") + e.what());
    }
}

} // namespace pmzv
