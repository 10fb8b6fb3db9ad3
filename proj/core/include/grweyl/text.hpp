#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "grweyl/almost_aut.hpp"
#include "grweyl/bridge.hpp"
#include "grweyl/graded_ideal.hpp"
#include "grweyl/k0.hpp"
#include "grweyl/pic.hpp"

namespace grweyl {

/// Parse failure, carrying the byte offset of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

// Canonical text forms. Every printer/parser pair round-trips:
// parse(to_text(v)) compares equal to v.
std::string to_text(const Rational& r);
std::string to_text(const FinSet& s);        // {1,3,-2} or {}
std::string to_text(const Isometry& g);      // n->n+3, n->-n+1, n->n
std::string to_text(const Poly& p);          // z^2 - 3*z + 1/2
std::string to_text(const CElement& c);      // (z-1)*x{1,3} + 2*x{}
std::string to_text(const AlmostAut& a);     // tau^3*phi, phi, id
std::string to_text(const GradedIdeal& a);   // (d)*x{J} or 0
std::string to_text(const SimpleMod& s);     // X(3), Y(-1), O(1/2)
std::string to_text(const ProjMod& p);       // C{1}+C{2} or 0
std::string to_text(const CatModule& m);
std::string to_text(const K0Elem& a);        // u1 + u2 - 1
std::string to_text(const PicElem& f);       // ({0,1},n->-n+1)
std::string to_text(const WeylElem& w);      // x^2*(z-1) + (z^2) + y*(z+3)
std::string to_text(const BElem& b);         // (z-1)@{1}
std::string to_text(const PElem& p);         // e[0]*(x{1}) + e[-1]*((z-2)*x{})
std::string to_text(const ASimple& t);       // X(3), Y(-1)

// Whole-string parsers; reject trailing input; throw ParseError.
FinSet parse_finset(std::string_view text);
Isometry parse_isometry(std::string_view text);
Poly parse_poly(std::string_view text);
CElement parse_celement(std::string_view text);
AlmostAut parse_aaut(std::string_view text);     // words over tau, phi, id with ^ and *
/// Semicolon-separated ring elements; the homogeneous components of each
/// become generators.
std::vector<std::pair<Poly, FinSet>> parse_ideal_generators(std::string_view text);
/// parse_ideal_generators followed by normalization ("0" is the zero ideal).
GradedIdeal parse_ideal(std::string_view text);
SimpleMod parse_simple(std::string_view text);
CatModule parse_module(std::string_view text);   // C{..}+..., a simple, or 0
GroupRingExpr parse_groupring(std::string_view text); // u{1,2} - 2*u{} + 3
K0Elem parse_k0(std::string_view text);          // group-ring grammar, reduced
PicElem parse_pic(std::string_view text);        // literals and words over tau, phi, twist{...}
WeylElem parse_weyl(std::string_view text);
BElem parse_belem(std::string_view text);
PElem parse_pelem(std::string_view text);
ASimple parse_asimple(std::string_view text);

} // namespace grweyl
