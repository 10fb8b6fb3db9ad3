#include "grweyl/text.hpp"

#include <cctype>
#include <sstream>

namespace grweyl {

namespace {

constexpr std::string_view kOPlus = "\xE2\x8A\x95";  // circled plus
constexpr std::string_view kOTimes = "\xE2\x8A\x97"; // circled times

struct Cursor {
    std::string_view s;
    std::size_t pos = 0;
    int depth = 0;

    explicit Cursor(std::string_view text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= s.size();
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    bool try_consume(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    bool try_consume(std::string_view tok) {
        skip_ws();
        if (s.substr(pos, tok.size()) == tok) {
            pos += tok.size();
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!try_consume(c)) fail(std::string("expected '") + c + "' " + what);
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

    bool peek_digit() {
        skip_ws();
        return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
    }

    // Word lookahead: matches iff the identifier at the cursor is exactly `id`.
    bool try_consume_word(std::string_view id) {
        skip_ws();
        if (s.substr(pos, id.size()) != id) return false;
        std::size_t after = pos + id.size();
        if (after < s.size() && std::isalnum(static_cast<unsigned char>(s[after]))) return false;
        pos = after;
        return true;
    }

    Int parse_uint() {
        skip_ws();
        if (!peek_digit()) fail("expected a number");
        std::string digits;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            digits.push_back(s[pos++]);
        return Int(digits);
    }

    Int parse_int() {
        skip_ws();
        bool neg = try_consume('-');
        if (!neg) (void)try_consume('+');
        Int v = parse_uint();
        return neg ? -v : v;
    }

    std::int64_t parse_i64() {
        std::size_t at = pos;
        Int v = parse_int();
        if (v < INT64_MIN || v > INT64_MAX) throw ParseError("integer out of range", at);
        return v.convert_to<std::int64_t>();
    }

    std::uint32_t parse_exponent() {
        std::size_t at = pos;
        Int v = parse_uint();
        if (v > 100000) throw ParseError("exponent too large", at);
        return v.convert_to<std::uint32_t>();
    }

    struct DepthGuard {
        Cursor& c;
        explicit DepthGuard(Cursor& cur) : c(cur) {
            if (++c.depth > 128) c.fail("expression is nested too deeply");
        }
        ~DepthGuard() { --c.depth; }
    };

    Rational parse_rational() {
        Int num = parse_int();
        if (try_consume('/')) {
            std::size_t at = pos;
            Int den = parse_uint();
            if (den == 0) throw ParseError("division by zero", at);
            return Rational(num, den);
        }
        return Rational(num);
    }
};

FinSet parse_finset_at(Cursor& c) {
    c.expect('{', "to open a set");
    std::vector<std::int64_t> elems;
    if (!c.try_consume('}')) {
        std::size_t at = c.pos;
        do {
            at = c.pos;
            elems.push_back(c.parse_i64());
        } while (c.try_consume(','));
        c.expect('}', "to close the set");
        try {
            return FinSet(std::move(elems));
        } catch (const std::invalid_argument&) {
            throw ParseError("duplicate element in set", at);
        }
    }
    return FinSet();
}

Isometry parse_isometry_at(Cursor& c) {
    if (c.try_consume_word("id")) return Isometry::identity();
    if (!c.try_consume_word("n")) c.fail("expected an isometry n->...");
    if (!c.try_consume("->")) c.fail("expected '->' in isometry");
    int eps = c.try_consume('-') ? -1 : 1;
    if (!c.try_consume_word("n")) c.fail("expected 'n' after '->'");
    std::int64_t shift = 0;
    c.skip_ws();
    if (c.peek() == '+' || c.peek() == '-') shift = c.parse_i64();
    return Isometry{eps, shift};
}

// --- ring-element expressions ------------------------------------------
//
// One recursive-descent core evaluated in CElement; polynomials are the
// degree-empty case. Supports + - * / ^, parentheses, and juxtaposition
// with '(' , 'z' and 'x{...}'.

CElement parse_cexpr(Cursor& c);

CElement parse_cprimary(Cursor& c) {
    c.skip_ws();
    char p = c.peek();
    if (p == '(') {
        Cursor::DepthGuard guard(c);
        c.expect('(', "");
        CElement e = parse_cexpr(c);
        c.expect(')', "to close the group");
        return e;
    }
    if (p == 'x') {
        ++c.pos;
        if (c.peek() != '{') c.fail("expected '{' after x");
        return CElement::x(parse_finset_at(c));
    }
    if (c.try_consume_word("z")) return CElement::scalar(Poly::z());
    if (p == '-' || p == '+' || std::isdigit(static_cast<unsigned char>(p)))
        return CElement::scalar(Poly(c.parse_rational()));
    c.fail("expected a ring element");
}

CElement parse_cfactor(Cursor& c) {
    CElement e = parse_cprimary(c);
    if (c.try_consume('^')) e = e.pow(c.parse_exponent());
    return e;
}

bool starts_cfactor(char p) { return p == '(' || p == 'z' || p == 'x'; }

CElement parse_cterm(Cursor& c) {
    CElement acc = parse_cfactor(c);
    while (true) {
        if (c.try_consume('*')) {
            acc *= parse_cfactor(c);
        } else if (c.try_consume('/')) {
            std::size_t at = c.pos;
            CElement rhs = parse_cfactor(c);
            auto deg = rhs.homogeneous_degree();
            if (!rhs.is_zero() && deg && deg->empty() && rhs.component(FinSet()).degree() == 0) {
                acc = acc.scaled(Rational(1) / rhs.component(FinSet()).coeff(0));
            } else {
                throw ParseError("can only divide by a nonzero constant", at);
            }
        } else if (starts_cfactor(c.peek())) {
            acc *= parse_cfactor(c);
        } else {
            break;
        }
    }
    return acc;
}

CElement parse_cexpr(Cursor& c) {
    bool neg = false;
    if (!c.try_consume('+') && c.try_consume('-')) neg = true;
    CElement acc = parse_cterm(c);
    if (neg) acc = -acc;
    while (true) {
        if (c.try_consume('+')) {
            acc += parse_cterm(c);
        } else if (c.try_consume('-')) {
            acc -= parse_cterm(c);
        } else {
            break;
        }
    }
    return acc;
}

// --- Weyl-algebra expressions ------------------------------------------

WeylElem parse_wexpr(Cursor& c);

WeylElem parse_wprimary(Cursor& c) {
    c.skip_ws();
    char p = c.peek();
    if (p == '(') {
        Cursor::DepthGuard guard(c);
        c.expect('(', "");
        WeylElem e = parse_wexpr(c);
        c.expect(')', "to close the group");
        return e;
    }
    if (c.try_consume_word("x")) return WeylElem::x();
    if (c.try_consume_word("y")) return WeylElem::y();
    if (c.try_consume_word("z")) return WeylElem::z();
    if (p == '-' || p == '+' || std::isdigit(static_cast<unsigned char>(p)))
        return WeylElem::from_component(0, Poly(c.parse_rational()));
    c.fail("expected a Weyl-algebra element");
}

WeylElem parse_wfactor(Cursor& c) {
    WeylElem e = parse_wprimary(c);
    if (c.try_consume('^')) e = e.pow(c.parse_exponent());
    return e;
}

bool starts_wfactor(char p) { return p == '(' || p == 'z' || p == 'x' || p == 'y'; }

WeylElem parse_wterm(Cursor& c) {
    WeylElem acc = parse_wfactor(c);
    while (true) {
        if (c.try_consume('*')) {
            acc *= parse_wfactor(c);
        } else if (c.try_consume('/')) {
            std::size_t at = c.pos;
            WeylElem rhs = parse_wfactor(c);
            Poly f = rhs.component(0);
            if (!rhs.is_zero() && rhs.components().size() == 1 && f.degree() == 0) {
                acc = acc.scaled(Rational(1) / f.coeff(0));
            } else {
                throw ParseError("can only divide by a nonzero constant", at);
            }
        } else if (starts_wfactor(c.peek())) {
            acc *= parse_wfactor(c);
        } else {
            break;
        }
    }
    return acc;
}

WeylElem parse_wexpr(Cursor& c) {
    bool neg = false;
    if (!c.try_consume('+') && c.try_consume('-')) neg = true;
    WeylElem acc = parse_wterm(c);
    if (neg) acc = acc.scaled(-1);
    while (true) {
        if (c.try_consume('+')) {
            acc += parse_wterm(c);
        } else if (c.try_consume('-')) {
            acc -= parse_wterm(c);
        } else {
            break;
        }
    }
    return acc;
}

// --- modules and simples -------------------------------------------------

SimpleMod parse_simple_at(Cursor& c) {
    if (c.try_consume_word("X")) {
        c.expect('(', "after X");
        std::int64_t n = c.parse_i64();
        c.expect(')', "after the index");
        return SimpleMod::X(n);
    }
    if (c.try_consume_word("Y")) {
        c.expect('(', "after Y");
        std::int64_t n = c.parse_i64();
        c.expect(')', "after the index");
        return SimpleMod::Y(n);
    }
    if (c.try_consume_word("O")) {
        c.expect('(', "after O");
        Rational lam = c.parse_rational();
        c.expect(')', "after the parameter");
        return SimpleMod::O(lam);
    }
    c.fail("expected a simple module X(n), Y(n) or O(lambda)");
}

CatModule parse_module_at(Cursor& c) {
    c.skip_ws();
    if (c.peek() == '0') {
        ++c.pos;
        return ProjMod();
    }
    std::vector<FinSet> twists;
    std::vector<SimpleMod> simples;
    std::size_t at = c.pos;
    while (true) {
        c.skip_ws();
        at = c.pos;
        if (c.try_consume_word("C")) {
            twists.push_back(parse_finset_at(c));
        } else {
            simples.push_back(parse_simple_at(c));
        }
        if (!c.try_consume('+') && !c.try_consume(kOPlus)) break;
    }
    if (simples.empty()) return ProjMod(std::move(twists));
    if (twists.empty() && simples.size() == 1) return simples[0];
    throw ParseError("simple modules cannot appear in direct sums here", at);
}

// --- group ring / K-theory expressions -----------------------------------

GroupRingExpr parse_gatom(Cursor& c) {
    c.skip_ws();
    if (c.peek() == 'u') {
        ++c.pos;
        if (c.peek() == '{') return GroupRingExpr::u(parse_finset_at(c));
        if (c.peek() == '(') {
            c.expect('(', "");
            std::int64_t m = c.parse_i64();
            c.expect(')', "after the index");
            return GroupRingExpr::u(FinSet::singleton(m));
        }
        if (c.peek_digit()) return GroupRingExpr::u(FinSet::singleton(c.parse_i64()));
        c.fail("expected an index after u");
    }
    if (c.peek() == '-' || c.peek() == '+' || c.peek_digit())
        return GroupRingExpr::u(FinSet(), c.parse_int());
    c.fail("expected a u-term or an integer");
}

GroupRingExpr parse_gterm(Cursor& c) {
    GroupRingExpr acc = parse_gatom(c);
    while (c.try_consume('*')) acc *= parse_gatom(c);
    return acc;
}

GroupRingExpr parse_gexpr(Cursor& c) {
    bool neg = false;
    if (!c.try_consume('+') && c.try_consume('-')) neg = true;
    GroupRingExpr acc = parse_gterm(c);
    if (neg) acc = -acc;
    while (true) {
        if (c.try_consume('+')) {
            acc += parse_gterm(c);
        } else if (c.try_consume('-')) {
            acc -= parse_gterm(c);
        } else {
            break;
        }
    }
    return acc;
}

// --- symmetry words -------------------------------------------------------

template <typename T, typename Compose, typename Invert>
T parse_word_power(Cursor& c, T base, Compose comp, Invert inv, const T& id) {
    if (!c.try_consume('^')) return base;
    std::size_t at = c.pos;
    bool neg = c.try_consume('-');
    Int e = c.parse_uint();
    if (e > 100000) throw ParseError("exponent too large", at);
    if (neg) base = inv(base);
    T acc = id;
    for (Int i = 0; i < e; ++i) acc = comp(acc, base);
    return acc;
}

AlmostAut parse_aaut_primary(Cursor& c) {
    if (c.try_consume_word("tau")) return AlmostAut::tau();
    if (c.try_consume_word("phi")) return AlmostAut::phi();
    if (c.try_consume_word("id")) return AlmostAut::identity();
    c.fail("expected tau, phi or id");
}

AlmostAut parse_aaut_at(Cursor& c) {
    auto comp = [](const AlmostAut& a, const AlmostAut& b) { return compose(a, b); };
    auto inv = [](const AlmostAut& a) { return inverse(a); };
    AlmostAut acc =
        parse_word_power(c, parse_aaut_primary(c), comp, inv, AlmostAut::identity());
    while (c.try_consume('*'))
        acc = compose(acc, parse_word_power(c, parse_aaut_primary(c), comp, inv,
                                            AlmostAut::identity()));
    return acc;
}

PicElem parse_pic_primary(Cursor& c) {
    c.skip_ws();
    if (c.peek() == '(') {
        c.expect('(', "");
        FinSet j = parse_finset_at(c);
        c.expect(',', "between twist and isometry");
        Isometry h = parse_isometry_at(c);
        c.expect(')', "to close the pair");
        return PicElem::make(j, h);
    }
    if (c.try_consume_word("tau")) return PicElem::tau();
    if (c.try_consume_word("phi")) return PicElem::phi();
    if (c.try_consume_word("id")) return PicElem::identity();
    if (c.try_consume_word("twist")) return PicElem::twist_by(parse_finset_at(c));
    c.fail("expected a Picard element");
}

PicElem parse_pic_at(Cursor& c) {
    auto comp = [](const PicElem& a, const PicElem& b) { return pic_compose(a, b); };
    auto inv = [](const PicElem& a) { return pic_invert(a); };
    PicElem acc = parse_word_power(c, parse_pic_primary(c), comp, inv, PicElem::identity());
    while (c.try_consume('*'))
        acc = pic_compose(
            acc, parse_word_power(c, parse_pic_primary(c), comp, inv, PicElem::identity()));
    return acc;
}

// --- bimodule elements ----------------------------------------------------

PElem parse_pelem_at(Cursor& c) {
    c.skip_ws();
    if (c.peek() == '0') {
        ++c.pos;
        return PElem();
    }
    PElem acc;
    bool neg = false;
    if (!c.try_consume('+') && c.try_consume('-')) neg = true;
    while (true) {
        if (!c.try_consume_word("e")) c.fail("expected a basis term e[n]");
        c.expect('[', "after e");
        std::int64_t n = c.parse_i64();
        c.expect(']', "after the index");
        CElement coeff = CElement::one();
        if (c.try_consume('*')) {
            c.expect('(', "around the coefficient");
            coeff = parse_cexpr(c);
            c.expect(')', "to close the coefficient");
        }
        if (neg) coeff = -coeff;
        acc += PElem::from_component(n, coeff);
        if (c.try_consume('+')) {
            neg = false;
        } else if (c.try_consume('-')) {
            neg = true;
        } else {
            break;
        }
    }
    return acc;
}

template <typename T, typename Fn>
T parse_whole(std::string_view text, Fn&& fn) {
    Cursor c(text);
    T v = fn(c);
    if (!c.eof()) c.fail("unexpected trailing input");
    return v;
}

// --- printing helpers -----------------------------------------------------

std::string rat_text(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

// One monomial |c| z^e with c > 0.
std::string mono_text(std::size_t e, const Rational& c) {
    std::string coeff = rat_text(c);
    if (e == 0) return coeff;
    std::string zpow = e == 1 ? "z" : "z^" + std::to_string(e);
    if (c == 1) return zpow;
    return coeff + "*" + zpow;
}

// Appends "sign term" for a signed monomial; used by every sum printer.
void append_term(std::string& out, bool negative, const std::string& term) {
    if (out.empty()) {
        if (negative) out += "-";
        out += term;
    } else {
        out += negative ? " - " : " + ";
        out += term;
    }
}

bool is_single_monomial(const Poly& p) {
    std::size_t nonzero = 0;
    for (const auto& c : p.coeffs())
        if (c != 0) ++nonzero;
    return nonzero == 1;
}

} // namespace

std::string to_text(const Rational& r) { return rat_text(r); }

std::string to_text(const FinSet& s) {
    std::string out = "{";
    bool first = true;
    for (std::int64_t e : s) {
        if (!first) out += ",";
        out += std::to_string(e);
        first = false;
    }
    return out + "}";
}

std::string to_text(const Isometry& g) {
    std::string out = g.eps == 1 ? "n->n" : "n->-n";
    if (g.shift > 0) out += "+" + std::to_string(g.shift);
    if (g.shift < 0) out += std::to_string(g.shift);
    return out;
}

std::string to_text(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::int64_t e = p.degree(); e >= 0; --e) {
        Rational c = p.coeff(static_cast<std::size_t>(e));
        if (c == 0) continue;
        bool neg = c < 0;
        append_term(out, neg, mono_text(static_cast<std::size_t>(e), neg ? -c : c));
    }
    return out;
}

std::string to_text(const CElement& e) {
    if (e.is_zero()) return "0";
    std::string out;
    for (const auto& [j, f] : e.terms()) {
        bool neg = f.leading() < 0;
        Poly g = neg ? -f : f;
        std::string xpart = "x" + to_text(j);
        std::string term;
        if (g.is_one()) {
            term = xpart;
        } else if (is_single_monomial(g)) {
            term = to_text(g) + "*" + xpart;
        } else {
            term = "(" + to_text(g) + ")*" + xpart;
        }
        append_term(out, neg, term);
    }
    return out;
}

std::string to_text(const AlmostAut& a) {
    std::int64_t e = a.tau_exponent();
    std::string tau_part;
    if (e == 1) {
        tau_part = "tau";
    } else if (e != 0) {
        tau_part = "tau^" + std::to_string(e);
    }
    if (!a.has_phi()) return tau_part.empty() ? "id" : tau_part;
    return tau_part.empty() ? "phi" : tau_part + "*phi";
}

std::string to_text(const GradedIdeal& a) {
    if (a.is_zero()) return "0";
    return "(" + to_text(a.d()) + ")*x" + to_text(a.twist());
}

std::string to_text(const SimpleMod& s) {
    switch (s.family()) {
        case SimpleMod::Family::X: return "X(" + std::to_string(s.index()) + ")";
        case SimpleMod::Family::Y: return "Y(" + std::to_string(s.index()) + ")";
        case SimpleMod::Family::O: return "O(" + rat_text(s.lambda()) + ")";
    }
    return {};
}

std::string to_text(const ProjMod& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& j : p.twists()) {
        if (!out.empty()) out += "+";
        out += "C" + to_text(j);
    }
    return out;
}

std::string to_text(const CatModule& m) {
    return std::visit([](const auto& v) { return to_text(v); }, m);
}

std::string to_text(const K0Elem& a) {
    if (a.is_zero()) return "0";
    auto point_atom = [](std::int64_t m) {
        return m < 0 ? "u(" + std::to_string(m) + ")" : "u" + std::to_string(m);
    };
    std::string out;
    auto emit = [&](bool positives) {
        for (const auto& [m, c] : a.point_coeffs()) {
            if ((c > 0) != positives) continue;
            Int mag = positives ? c : Int(-c);
            std::string term = point_atom(m);
            if (mag != 1) term = mag.str() + "*" + term;
            append_term(out, !positives, term);
        }
        if ((a.unit_coeff() > 0) == positives && a.unit_coeff() != 0) {
            Int mag = positives ? a.unit_coeff() : Int(-a.unit_coeff());
            append_term(out, !positives, mag.str());
        }
    };
    emit(true);
    emit(false);
    return out;
}

std::string to_text(const PicElem& f) {
    return "(" + to_text(f.twist_part()) + "," + to_text(f.simple_action()) + ")";
}

std::string to_text(const WeylElem& w) {
    if (w.is_zero()) return "0";
    std::string out;
    for (auto it = w.components().rbegin(); it != w.components().rend(); ++it) {
        const auto& [n, f] = *it;
        bool neg = f.leading() < 0;
        Poly g = neg ? -f : f;
        std::string term;
        if (n == 0) {
            term = "(" + to_text(g) + ")";
        } else {
            std::string base = n > 0 ? "x" : "y";
            std::int64_t k = n > 0 ? n : -n;
            if (k != 1) base += "^" + std::to_string(k);
            term = g.is_one() ? base : base + "*(" + to_text(g) + ")";
        }
        append_term(out, neg, term);
    }
    return out;
}

std::string to_text(const BElem& b) {
    return "(" + to_text(b.f()) + ")@" + to_text(b.twist());
}

std::string to_text(const PElem& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [n, c] : p.components()) {
        std::string term = "e[" + std::to_string(n) + "]";
        if (!(c == CElement::one())) term += "*(" + to_text(c) + ")";
        append_term(out, false, term);
    }
    return out;
}

std::string to_text(const ASimple& t) {
    return (t.family() == ASimple::Family::X ? "X(" : "Y(") + std::to_string(t.index()) + ")";
}

// --- parser entry points --------------------------------------------------

FinSet parse_finset(std::string_view text) {
    return parse_whole<FinSet>(text, [](Cursor& c) { return parse_finset_at(c); });
}

Isometry parse_isometry(std::string_view text) {
    return parse_whole<Isometry>(text, [](Cursor& c) { return parse_isometry_at(c); });
}

Poly parse_poly(std::string_view text) {
    CElement e = parse_celement(text);
    if (e.is_zero()) return {};
    auto deg = e.homogeneous_degree();
    if (!deg || !deg->empty()) throw ParseError("expected a polynomial in z", 0);
    return e.component(FinSet());
}

CElement parse_celement(std::string_view text) {
    return parse_whole<CElement>(text, [](Cursor& c) { return parse_cexpr(c); });
}

AlmostAut parse_aaut(std::string_view text) {
    return parse_whole<AlmostAut>(text, [](Cursor& c) { return parse_aaut_at(c); });
}

std::vector<std::pair<Poly, FinSet>> parse_ideal_generators(std::string_view text) {
    Cursor c(text);
    std::vector<std::pair<Poly, FinSet>> gens;
    do {
        CElement e = parse_cexpr(c);
        for (const auto& [j, f] : e.terms()) gens.emplace_back(f, j);
    } while (c.try_consume(';'));
    if (!c.eof()) c.fail("unexpected trailing input");
    return gens;
}

GradedIdeal parse_ideal(std::string_view text) {
    Cursor probe(text);
    if (probe.try_consume('0') && probe.eof()) return GradedIdeal::zero_ideal();
    return GradedIdeal::normalize(parse_ideal_generators(text));
}

SimpleMod parse_simple(std::string_view text) {
    return parse_whole<SimpleMod>(text, [](Cursor& c) { return parse_simple_at(c); });
}

CatModule parse_module(std::string_view text) {
    return parse_whole<CatModule>(text, [](Cursor& c) { return parse_module_at(c); });
}

GroupRingExpr parse_groupring(std::string_view text) {
    return parse_whole<GroupRingExpr>(text, [](Cursor& c) { return parse_gexpr(c); });
}

K0Elem parse_k0(std::string_view text) { return k0_reduce(parse_groupring(text)); }

PicElem parse_pic(std::string_view text) {
    return parse_whole<PicElem>(text, [](Cursor& c) { return parse_pic_at(c); });
}

WeylElem parse_weyl(std::string_view text) {
    return parse_whole<WeylElem>(text, [](Cursor& c) { return parse_wexpr(c); });
}

BElem parse_belem(std::string_view text) {
    Cursor c(text);
    CElement num = parse_cexpr(c);
    c.expect('@', "between the coordinate and the twist");
    FinSet j = parse_finset_at(c);
    if (!c.eof()) c.fail("unexpected trailing input");
    if (num.is_zero()) return BElem(j, Poly());
    auto deg = num.homogeneous_degree();
    if (!deg || !deg->empty()) throw ParseError("the coordinate must be a polynomial in z", 0);
    return BElem(j, num.component(FinSet()));
}

PElem parse_pelem(std::string_view text) {
    return parse_whole<PElem>(text, [](Cursor& c) { return parse_pelem_at(c); });
}

ASimple parse_asimple(std::string_view text) {
    return parse_whole<ASimple>(text, [](Cursor& c) -> ASimple {
        if (c.try_consume_word("X")) {
            c.expect('(', "after X");
            std::int64_t n = c.parse_i64();
            c.expect(')', "after the index");
            return ASimple::X(n);
        }
        if (c.try_consume_word("Y")) {
            c.expect('(', "after Y");
            std::int64_t n = c.parse_i64();
            c.expect(')', "after the index");
            return ASimple::Y(n);
        }
        c.fail("expected X(n) or Y(n)");
    });
}

} // namespace grweyl
