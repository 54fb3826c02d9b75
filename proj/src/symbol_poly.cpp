#include "pmzv/symbol_poly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "pmzv/errors.hpp"

namespace pmzv {

namespace {

std::uint64_t pack_tag(std::string_view tag)
{
    if (tag.empty() || tag.size() > 8) {
        throw domain_error("lambda tag must have 1..8 characters");
    }
    std::uint64_t packed = 0;
    for (char c : tag) {
        if (std::isalnum(static_cast<unsigned char>(c)) == 0) {
            throw domain_error("lambda tag must be alphanumeric");
        }
        packed = (packed << 8U) | static_cast<unsigned char>(c);
    }
    return packed;
}

const char* log_name(LogArg a)
{
    switch (a) {
    case LogArg::z: return "log(z)";
    case LogArg::z_pow_p: return "log(z^p)";
    case LogArg::z_conj: return "log(zbar)";
    case LogArg::one_minus_z: return "log(1-z)";
    case LogArg::one_minus_z_conj: return "log(1-zbar)";
    case LogArg::abs_z_sq: return "log|z|^2";
    }
    return "";
}

const char* li_arg_name(LiArg a)
{
    switch (a) {
    case LiArg::z: return "(z)";
    case LiArg::z_pow_p: return "(z^p)";
    case LiArg::z_conj: return "(zbar)";
    }
    return "";
}

const char* li_name(LiFlavor f)
{
    switch (f) {
    case LiFlavor::plain: return "Li";
    case LiFlavor::dagger: return "Lidag";
    case LiFlavor::minus: return "Liminus";
    }
    return "";
}

const char* zeta_name(ZetaFlavor f)
{
    switch (f) {
    case ZetaFlavor::complex: return "zeta";
    case ZetaFlavor::padic: return "zeta_p";
    case ZetaFlavor::padic_deligne: return "zetaDe_p";
    }
    return "";
}

} // namespace

Generator Generator::zeta(ZetaFlavor flavor, const Index& index)
{
    if (!index.admissible()) {
        throw domain_error("zeta symbol needs an admissible index, got (" + index.str() + ")");
    }
    Generator g;
    g.kind_ = GeneratorKind::zeta;
    g.flavor_ = static_cast<std::uint8_t>(flavor);
    g.word_ = word_of_index(index).word;
    return g;
}

Generator Generator::li(LiFlavor flavor, const Index& index, LiArg arg)
{
    if (index.empty()) {
        throw domain_error("polylog symbol needs a nonempty index");
    }
    Generator g;
    g.kind_ = GeneratorKind::li;
    g.flavor_ = static_cast<std::uint8_t>(flavor);
    g.arg_ = static_cast<std::uint8_t>(arg);
    g.word_ = word_of_index(index).word;
    return g;
}

Generator Generator::log(LogArg arg)
{
    Generator g;
    g.kind_ = GeneratorKind::log;
    g.arg_ = static_cast<std::uint8_t>(arg);
    return g;
}

Generator Generator::lambda(std::string_view tag, const Word& word)
{
    if (word.empty()) {
        throw domain_error("lambda symbol needs a nonempty word");
    }
    Generator g;
    g.kind_ = GeneratorKind::lambda;
    g.tag_ = pack_tag(tag);
    g.word_ = word;
    return g;
}

std::string Generator::tag() const
{
    std::string s;
    for (std::uint64_t t = tag_; t != 0; t >>= 8U) {
        s.insert(s.begin(), static_cast<char>(t & 0xFFU));
    }
    return s;
}

int Generator::weight() const noexcept
{
    return kind_ == GeneratorKind::log ? 1 : word_.weight();
}

std::string Generator::str() const
{
    switch (kind_) {
    case GeneratorKind::zeta:
        return std::string(zeta_name(zeta_flavor())) + "[" + index().str() + "]";
    case GeneratorKind::li:
        return std::string(li_name(li_flavor())) + "[" + index().str() + "]" + li_arg_name(li_arg());
    case GeneratorKind::log:
        return log_name(log_arg());
    case GeneratorKind::lambda:
        return "lambda_" + tag() + "{" + word_.str() + "}";
    }
    return {};
}

Monomial monomial_product(const Monomial& a, const Monomial& b)
{
    Monomial out;
    out.reserve(a.size() + b.size());
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() || j != b.end()) {
        if (j == b.end() || (i != a.end() && i->first < j->first)) {
            out.push_back(*i++);
        } else if (i == a.end() || j->first < i->first) {
            out.push_back(*j++);
        } else {
            out.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    return out;
}

int monomial_weight(const Monomial& m)
{
    int w = 0;
    for (const auto& [g, e] : m) {
        w += g.weight() * e;
    }
    return w;
}

std::string monomial_str(const Monomial& m)
{
    std::string s;
    for (const auto& [g, e] : m) {
        if (!s.empty()) {
            s.push_back('*');
        }
        s += g.str();
        if (e != 1) {
            s += "^" + std::to_string(e);
        }
    }
    return s.empty() ? "1" : s;
}

SymbolPoly::SymbolPoly(const Rational& c)
{
    if (c != 0) {
        terms_.emplace(Monomial{}, c);
    }
}

SymbolPoly::SymbolPoly(const Generator& g, int exponent)
{
    if (exponent < 0) {
        throw domain_error("SymbolPoly: negative exponent");
    }
    if (exponent == 0) {
        terms_.emplace(Monomial{}, 1);
    } else {
        terms_.emplace(Monomial{{g, exponent}}, 1);
    }
}

bool SymbolPoly::is_constant() const noexcept
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational SymbolPoly::constant_term() const
{
    return coeff(Monomial{});
}

Rational SymbolPoly::coeff(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> SymbolPoly::homogeneous_weight() const
{
    if (terms_.empty()) {
        return std::nullopt;
    }
    const int w = monomial_weight(terms_.begin()->first);
    for (const auto& [m, c] : terms_) {
        if (monomial_weight(m) != w) {
            return std::nullopt;
        }
    }
    return w;
}

bool SymbolPoly::contains(const std::function<bool(const Generator&)>& pred) const
{
    for (const auto& [m, c] : terms_) {
        for (const auto& [g, e] : m) {
            if (pred(g)) {
                return true;
            }
        }
    }
    return false;
}

std::vector<Generator> SymbolPoly::generators() const
{
    std::vector<Generator> out;
    for (const auto& [m, c] : terms_) {
        for (const auto& [g, e] : m) {
            out.push_back(g);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void SymbolPoly::add_term(const Monomial& m, const Rational& c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

SymbolPoly SymbolPoly::substitute(const std::function<std::optional<SymbolPoly>(const Generator&)>& rule) const
{
    std::map<Generator, std::optional<SymbolPoly>> cache;
    SymbolPoly out;
    for (const auto& [m, c] : terms_) {
        SymbolPoly term(c);
        Monomial kept;
        for (const auto& [g, e] : m) {
            auto it = cache.find(g);
            if (it == cache.end()) {
                it = cache.emplace(g, rule(g)).first;
            }
            if (it->second) {
                term *= pmzv::pow(*it->second, e);
            } else {
                kept.emplace_back(g, e);
            }
        }
        if (!kept.empty()) {
            SymbolPoly k;
            k.terms_.emplace(std::move(kept), 1);
            term *= k;
        }
        out += term;
    }
    return out;
}

std::string SymbolPoly::str() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string s;
    for (const auto& [m, c] : terms_) {
        Rational a = abs(c);
        if (s.empty()) {
            if (c < 0) {
                s += "-";
            }
        } else {
            s += c < 0 ? " - " : " + ";
        }
        if (m.empty()) {
            s += to_string(a);
        } else {
            if (a != 1) {
                s += to_string(a) + "*";
            }
            s += monomial_str(m);
        }
    }
    return s;
}

SymbolPoly& SymbolPoly::operator+=(const SymbolPoly& o)
{
    for (const auto& [m, c] : o.terms_) {
        add_term(m, c);
    }
    return *this;
}

SymbolPoly& SymbolPoly::operator-=(const SymbolPoly& o)
{
    for (const auto& [m, c] : o.terms_) {
        add_term(m, -c);
    }
    return *this;
}

SymbolPoly& SymbolPoly::operator*=(const SymbolPoly& o)
{
    *this = *this * o;
    return *this;
}

SymbolPoly& SymbolPoly::operator*=(const Rational& s)
{
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) {
        c *= s;
    }
    return *this;
}

SymbolPoly operator*(const SymbolPoly& a, const SymbolPoly& b)
{
    SymbolPoly out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            out.add_term(monomial_product(ma, mb), ca * cb);
        }
    }
    return out;
}

SymbolPoly operator-(SymbolPoly a)
{
    for (auto& [m, c] : a.terms_) {
        c = -c;
    }
    return a;
}

SymbolPoly pow(const SymbolPoly& base, int exponent)
{
    if (exponent < 0) {
        throw domain_error("SymbolPoly pow: negative exponent");
    }
    SymbolPoly r(1);
    for (int i = 0; i < exponent; ++i) {
        r *= base;
    }
    return r;
}

std::ostream& operator<<(std::ostream& os, const SymbolPoly& q)
{
    return os << q.str();
}

SymbolPoly zeta_sym(ZetaFlavor flavor, const Index& index)
{
    return SymbolPoly(Generator::zeta(flavor, index));
}

SymbolPoly li_sym(LiFlavor flavor, const Index& index, LiArg arg)
{
    if (index.empty()) {
        return SymbolPoly(1);
    }
    return SymbolPoly(Generator::li(flavor, index, arg));
}

SymbolPoly log_sym(LogArg arg)
{
    return SymbolPoly(Generator::log(arg));
}

SymbolPoly lambda_sym(std::string_view tag, const Word& word)
{
    return SymbolPoly(Generator::lambda(tag, word));
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    SymbolPoly parse()
    {
        SymbolPoly out;
        skip();
        if (eof()) {
            fail("empty expression");
        }
        bool first = true;
        while (!eof()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            SymbolPoly t = term();
            out += sign < 0 ? -t : t;
            skip();
        }
        return out;
    }

private:
    SymbolPoly term()
    {
        SymbolPoly t(1);
        while (true) {
            t *= factor();
            skip();
            if (!eof() && peek() == '*') {
                ++pos_;
                skip();
                continue;
            }
            return t;
        }
    }

    SymbolPoly factor()
    {
        if (eof()) {
            fail("unexpected end");
        }
        if (std::isdigit(static_cast<unsigned char>(peek())) != 0) {
            const std::size_t start = pos_;
            while (!eof() && (std::isdigit(static_cast<unsigned char>(peek())) != 0 || peek() == '/')) {
                ++pos_;
            }
            return SymbolPoly(parse_rational(text_.substr(start, pos_ - start)));
        }
        const Generator g = generator();
        int e = 1;
        if (!eof() && peek() == '^') {
            ++pos_;
            const std::size_t start = pos_;
            while (!eof() && std::isdigit(static_cast<unsigned char>(peek())) != 0) {
                ++pos_;
            }
            if (start == pos_) {
                fail("expected exponent");
            }
            e = std::stoi(std::string(text_.substr(start, pos_ - start)));
        }
        return SymbolPoly(g, e);
    }

    Generator generator()
    {
        for (LogArg a : {LogArg::abs_z_sq, LogArg::one_minus_z_conj, LogArg::one_minus_z, LogArg::z_pow_p,
                         LogArg::z_conj, LogArg::z}) {
            if (consume(log_name(a))) {
                return Generator::log(a);
            }
        }
        if (consume("lambda_")) {
            const std::size_t start = pos_;
            while (!eof() && std::isalnum(static_cast<unsigned char>(peek())) != 0) {
                ++pos_;
            }
            const std::string tag(text_.substr(start, pos_ - start));
            expect("{");
            const std::size_t ws = pos_;
            while (!eof() && (peek() == 'A' || peek() == 'B')) {
                ++pos_;
            }
            const Word w = Word::parse(text_.substr(ws, pos_ - ws));
            expect("}");
            return Generator::lambda(tag, w);
        }
        for (ZetaFlavor f : {ZetaFlavor::padic_deligne, ZetaFlavor::padic, ZetaFlavor::complex}) {
            if (consume(std::string(zeta_name(f)) + "[")) {
                return Generator::zeta(f, bracket_index());
            }
        }
        for (LiFlavor f : {LiFlavor::minus, LiFlavor::dagger, LiFlavor::plain}) {
            if (consume(std::string(li_name(f)) + "[")) {
                const Index i = bracket_index();
                for (LiArg a : {LiArg::z_pow_p, LiArg::z_conj, LiArg::z}) {
                    if (consume(li_arg_name(a))) {
                        return Generator::li(f, i, a);
                    }
                }
                fail("expected polylog argument");
            }
        }
        fail("unknown symbol");
    }

    Index bracket_index()
    {
        const std::size_t close = text_.find(']', pos_);
        if (close == std::string_view::npos) {
            fail("unterminated index");
        }
        const Index i = Index::parse(text_.substr(pos_, close - pos_));
        pos_ = close + 1;
        return i;
    }

    bool consume(const std::string& s)
    {
        if (text_.substr(pos_, s.size()) == s) {
            pos_ += s.size();
            return true;
        }
        return false;
    }
    void expect(const std::string& s)
    {
        if (!consume(s)) {
            fail("expected '" + s + "'");
        }
    }
    void skip()
    {
        while (!eof() && peek() == ' ') {
            ++pos_;
        }
    }
    [[nodiscard]] bool eof() const { return pos_ >= text_.size(); }
    [[nodiscard]] char peek() const { return text_[pos_]; }
    [[noreturn]] void fail(const std::string& what) const
    {
        throw parse_error("SymbolPoly: " + what + " at offset " + std::to_string(pos_) + " in '" +
                          std::string(text_) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

SymbolPoly SymbolPoly::parse(std::string_view text)
{
    return Parser(text).parse();
}

// -------------------------------------------------------------- derivative

namespace {

ZDerivative generator_derivative(const Generator& g, const Rational* p)
{
    ZDerivative d;
    switch (g.kind()) {
    case GeneratorKind::zeta:
    case GeneratorKind::lambda:
        return d;
    case GeneratorKind::log:
        switch (g.log_arg()) {
        case LogArg::z:
            d.over_z = SymbolPoly(1);
            return d;
        case LogArg::one_minus_z:
            d.over_one_minus_z = SymbolPoly(-1);
            return d;
        case LogArg::z_pow_p:
            if (p == nullptr) {
                break;
            }
            d.over_z = SymbolPoly(*p);
            return d;
        default:
            break;
        }
        throw domain_error("formal_derivative: " + g.str() + " is not differentiable here");
    case GeneratorKind::li: {
        if (g.li_flavor() != LiFlavor::plain || g.li_arg() == LiArg::z_conj ||
            (g.li_arg() == LiArg::z_pow_p && p == nullptr)) {
            throw domain_error("formal_derivative: " + g.str() + " is not differentiable here");
        }
        const Index i = g.index();
        const LiArg arg = g.li_arg();
        const Rational scale = arg == LiArg::z_pow_p ? *p : Rational(1);
        if (i.back() >= 2) {
            d.over_z = li_sym(LiFlavor::plain, i.with_back(i.back() - 1), arg) * scale;
        } else if (arg == LiArg::z) {
            d.over_one_minus_z = li_sym(LiFlavor::plain, i.drop_back(), arg);
        } else {
            d.over_zp = li_sym(LiFlavor::plain, i.drop_back(), arg) * scale;
        }
        return d;
    }
    }
    return d;
}

ZDerivative derivative_impl(const SymbolPoly& q, const Rational* p)
{
    ZDerivative out;
    for (const auto& [m, c] : q.terms()) {
        for (std::size_t k = 0; k < m.size(); ++k) {
            const ZDerivative dg = generator_derivative(m[k].first, p);
            if (dg.is_zero()) {
                continue;
            }
            SymbolPoly rest(c * m[k].second);
            for (std::size_t j = 0; j < m.size(); ++j) {
                const int e = j == k ? m[j].second - 1 : m[j].second;
                if (e > 0) {
                    rest *= SymbolPoly(m[j].first, e);
                }
            }
            out.over_z += rest * dg.over_z;
            out.over_one_minus_z += rest * dg.over_one_minus_z;
            out.over_zp += rest * dg.over_zp;
        }
    }
    return out;
}

} // namespace

ZDerivative formal_derivative(const SymbolPoly& q, const Rational& p)
{
    return derivative_impl(q, &p);
}

ZDerivative formal_derivative(const SymbolPoly& q)
{
    return derivative_impl(q, nullptr);
}

} // namespace pmzv
