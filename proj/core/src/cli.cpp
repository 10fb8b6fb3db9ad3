#include "grweyl/cli.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "grweyl/text.hpp"

namespace grweyl {

using nlohmann::json;

namespace {

json value_json(const FinSet& s) {
    json a = json::array();
    for (std::int64_t e : s) a.push_back(e);
    return a;
}

json value_json(const Poly& p) {
    json a = json::array();
    for (std::int64_t e = 0; e <= p.degree(); ++e) {
        Rational c = p.coeff(static_cast<std::size_t>(e));
        if (c != 0) a.push_back(json::array({e, to_text(c)}));
    }
    return a;
}

json value_json(const CElement& c) {
    json a = json::array();
    for (const auto& [j, f] : c.terms())
        a.push_back(json{{"degree", value_json(j)}, {"coeff", value_json(f)}});
    return a;
}

json value_json(const SimpleMod& s) {
    switch (s.family()) {
        case SimpleMod::Family::X: return json{{"family", "X"}, {"n", s.index()}};
        case SimpleMod::Family::Y: return json{{"family", "Y"}, {"n", s.index()}};
        case SimpleMod::Family::O: return json{{"family", "O"}, {"lambda", to_text(s.lambda())}};
    }
    return {};
}

json value_json(const ProjMod& p) {
    json a = json::array();
    for (const auto& j : p.twists()) a.push_back(value_json(j));
    return a;
}

json value_json(const GradedIdeal& a) {
    if (a.is_zero()) return json{{"zero", true}};
    return json{{"d", value_json(a.d())}, {"twist", value_json(a.twist())}};
}

json value_json(const K0Elem& a) {
    json pts = json::array();
    for (const auto& [m, c] : a.point_coeffs()) pts.push_back(json::array({m, c.str()}));
    return json{{"unit", a.unit_coeff().str()}, {"points", pts}};
}

json value_json(const PicElem& f) {
    return json{{"twist", value_json(f.twist_part())},
                {"eps", f.simple_action().eps},
                {"shift", f.simple_action().shift}};
}

json value_json(const WeylElem& w) {
    json a = json::array();
    for (const auto& [n, f] : w.components()) a.push_back(json::array({n, value_json(f)}));
    return a;
}

json value_json(const BElem& b) {
    return json{{"twist", value_json(b.twist())}, {"f", value_json(b.f())}};
}

json value_json(const ASimple& t) {
    return json{{"family", t.family() == ASimple::Family::X ? "X" : "Y"}, {"n", t.index()}};
}

struct Emitter {
    bool as_json = false;
    CliResult result;

    template <typename T>
    void value(const char* kind, const T& v) {
        if (as_json) {
            result.out = json{{"kind", kind}, {"value", value_json(v)}}.dump() + "\n";
        } else {
            result.out = to_text(v) + "\n";
        }
    }

    void module(const CatModule& m) {
        if (const ProjMod* p = std::get_if<ProjMod>(&m))
            value("projmod", *p);
        else
            value("simple", std::get<SimpleMod>(m));
    }

    void boolean(bool b) {
        if (as_json) {
            result.out = json{{"kind", "bool"}, {"value", b}}.dump() + "\n";
        } else {
            result.out = b ? "true\n" : "false\n";
        }
        if (!b) result.exit_code = 1;
    }

    void nat(unsigned n) {
        if (as_json) {
            result.out = json{{"kind", "nat"}, {"value", n}}.dump() + "\n";
        } else {
            result.out = std::to_string(n) + "\n";
        }
    }

    void integer(const Int& n) {
        if (as_json) {
            result.out = json{{"kind", "int"}, {"value", n.str()}}.dump() + "\n";
        } else {
            result.out = n.str() + "\n";
        }
    }
};

[[noreturn]] void usage_error(const std::string& msg) { throw ParseError("usage: " + msg, 0); }

std::int64_t flag_i64(const std::string& v) {
    std::size_t used = 0;
    std::int64_t n;
    try {
        n = std::stoll(v, &used);
    } catch (const std::exception&) {
        throw ParseError("expected an integer flag value, got '" + v + "'", 0);
    }
    if (used != v.size()) throw ParseError("expected an integer flag value, got '" + v + "'", 0);
    return n;
}

// Splits a single-argument form "A <op> B" on a top-level separator
// (depth-0 with respect to (), {}, []). Returns {text} if absent.
std::vector<std::string> split_top_level(const std::string& text,
                                         const std::vector<std::string>& seps) {
    int depth = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if (ch == '(' || ch == '{' || ch == '[') ++depth;
        if (ch == ')' || ch == '}' || ch == ']') --depth;
        if (depth != 0) continue;
        for (const auto& sep : seps) {
            if (text.compare(i, sep.size(), sep) == 0)
                return {text.substr(0, i), text.substr(i + sep.size())};
        }
    }
    return {text};
}

std::vector<FinSet> parse_finset_list(const std::string& text) {
    std::vector<FinSet> out;
    std::size_t start = 0;
    while (true) {
        std::size_t semi = text.find(';', start);
        std::string piece = text.substr(start, semi == std::string::npos ? semi : semi - start);
        out.push_back(parse_finset(piece));
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    return out;
}

std::string bridge_word_text(const ABridgeWord& w) {
    std::vector<std::string> parts;
    if (!w.iota_set.empty()) parts.push_back("iota" + to_text(w.iota_set));
    if (w.shift != 0) parts.push_back("shift^" + std::to_string(w.shift));
    if (w.sigma) parts.push_back("sigma");
    if (parts.empty()) return "id";
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += " * ";
        out += p;
    }
    return out;
}

std::string render_picture(std::int64_t lo, std::int64_t hi) {
    std::vector<std::string> xlab, ylab;
    std::size_t width = 0;
    for (std::int64_t n = lo; n <= hi; ++n) {
        xlab.push_back(to_text(ASimple::X(n)));
        ylab.push_back(to_text(ASimple::Y(n)));
        width = std::max({width, xlab.back().size(), ylab.back().size()});
    }
    std::size_t step = width + 3;
    std::size_t count = static_cast<std::size_t>(hi - lo + 1);
    auto place = [&](const std::vector<std::string>& labels) {
        std::string line(2 + step * count, ' ');
        for (std::size_t i = 0; i < count; ++i)
            line.replace(2 + i * step, labels[i].size(), labels[i]);
        while (!line.empty() && line.back() == ' ') line.pop_back();
        return line;
    };
    std::string colons(2 + step * (count - 1) + 1, ' ');
    for (std::size_t i = 0; i < count; ++i) colons[2 + i * step] = ':';
    std::string axis(2 + step * (count - 1) + 4, '-');
    for (std::size_t i = 0; i < count; ++i) axis[2 + i * step] = '+';
    axis += ">  z";

    std::string out;
    out += place(xlab) + "\n";
    out += colons + "\n";
    out += axis + "\n";
    out += colons + "\n";
    out += place(ylab) + "\n";
    return out;
}

CliResult dispatch(const std::string& cmd, const std::vector<std::string>& pos,
                   const std::map<std::string, std::string>& flags, bool as_json) {
    Emitter e;
    e.as_json = as_json;

    auto arity = [&](std::size_t lo, std::size_t hi, const char* usage) {
        if (pos.size() < lo || pos.size() > hi) usage_error(usage);
    };

    if (cmd == "cmul") {
        arity(1, 2, "cmul <element> [<element>]");
        CElement a = parse_celement(pos[0]);
        if (pos.size() == 2) a *= parse_celement(pos[1]);
        e.value("celement", a);
    } else if (cmd == "capply") {
        arity(2, 2, "capply <tau/phi word> <element>");
        e.value("celement", parse_aaut(pos[0]).apply(parse_celement(pos[1])));
    } else if (cmd == "ideal-normalize") {
        arity(1, 1, "ideal-normalize \"<elem> ; <elem> ; ...\"");
        e.value("ideal", GradedIdeal::normalize(parse_ideal_generators(pos[0])));
    } else if (cmd == "ideal-member") {
        arity(2, 2, "ideal-member <element> <ideal>");
        e.boolean(ideal_member(parse_celement(pos[0]), parse_ideal(pos[1])));
    } else if (cmd == "ideal-op") {
        arity(3, 3, "ideal-op sum|product|intersect <ideal> <ideal>");
        GradedIdeal a = parse_ideal(pos[1]), b = parse_ideal(pos[2]);
        if (pos[0] == "sum")
            e.value("ideal", ideal_sum(a, b));
        else if (pos[0] == "product")
            e.value("ideal", ideal_product(a, b));
        else if (pos[0] == "intersect")
            e.value("ideal", ideal_intersect(a, b));
        else
            usage_error("ideal-op sum|product|intersect <ideal> <ideal>");
    } else if (cmd == "hom-dim") {
        arity(2, 2, "hom-dim <finset> <simple>");
        e.nat(hom_dim(parse_finset(pos[0]), parse_simple(pos[1])));
    } else if (cmd == "twist") {
        arity(2, 2, "twist <module> <finset>");
        e.module(twist(parse_module(pos[0]), parse_finset(pos[1])));
    } else if (cmd == "tensor") {
        std::vector<std::string> sides = pos;
        if (pos.size() == 1) sides = split_top_level(pos[0], {"\xE2\x8A\x97", "*"});
        if (sides.size() != 2) usage_error("tensor <module> <module>");
        e.module(tensor(parse_module(sides[0]), parse_module(sides[1])));
    } else if (cmd == "proj-iso") {
        arity(2, 2, "proj-iso <projective> <projective>");
        CatModule a = parse_module(pos[0]), b = parse_module(pos[1]);
        const ProjMod* p = std::get_if<ProjMod>(&a);
        const ProjMod* q = std::get_if<ProjMod>(&b);
        if (!p || !q) throw std::domain_error("proj-iso: expected projective modules");
        e.boolean(proj_iso(*p, *q));
    } else if (cmd == "proj-canon") {
        arity(1, 1, "proj-canon <projective>");
        CatModule a = parse_module(pos[0]);
        const ProjMod* p = std::get_if<ProjMod>(&a);
        if (!p) throw std::domain_error("proj-canon: expected a projective module");
        e.value("projmod", proj_canonical_chain(*p));
    } else if (cmd == "surjects") {
        arity(3, 3, "surjects <finset I> <finset J> <finset K>");
        e.boolean(surjects_onto_twist(parse_finset(pos[0]), parse_finset(pos[1]),
                                      parse_finset(pos[2])));
    } else if (cmd == "generates") {
        arity(2, 2, "generates \"<finset> ; <finset> ; ...\" <finset K>");
        e.boolean(generates(parse_finset_list(pos[0]), parse_finset(pos[1])));
    } else if (cmd == "k0-reduce") {
        arity(1, 1, "k0-reduce <group-ring expr>");
        e.value("k0", k0_reduce(parse_groupring(pos[0])));
    } else if (cmd == "k0-mul") {
        arity(2, 2, "k0-mul <k0 expr> <k0 expr>");
        e.value("k0", parse_k0(pos[0]) * parse_k0(pos[1]));
    } else if (cmd == "k0-class") {
        arity(1, 1, "k0-class <module>");
        e.value("k0", class_of(parse_module(pos[0])));
    } else if (cmd == "k0-rank") {
        arity(1, 1, "k0-rank <k0 expr>");
        e.integer(parse_k0(pos[0]).rank());
    } else if (cmd == "pic-compose") {
        if (pos.size() == 1) {
            e.value("pic", parse_pic(pos[0]));
        } else if (pos.size() == 2) {
            e.value("pic", pic_compose(parse_pic(pos[0]), parse_pic(pos[1])));
        } else {
            usage_error("pic-compose \"<pic> * <pic>\"");
        }
    } else if (cmd == "pic-invert") {
        arity(1, 1, "pic-invert <pic>");
        e.value("pic", pic_invert(parse_pic(pos[0])));
    } else if (cmd == "pic-act") {
        arity(2, 2, "pic-act <pic> <simple|module|k0 expr>");
        PicElem f = parse_pic(pos[0]);
        std::size_t i = pos[1].find_first_not_of(" \t");
        char lead = i == std::string::npos ? '\0' : pos[1][i];
        if (lead == 'X' || lead == 'Y' || lead == 'O') {
            e.value("simple", pic_act(f, parse_simple(pos[1])));
        } else if (lead == 'C' || lead == '0') {
            e.module(pic_act(f, parse_module(pos[1])));
        } else {
            e.value("k0", pic_act_k0(f, parse_k0(pos[1])));
        }
    } else if (cmd == "wmul") {
        arity(1, 2, "wmul <weyl element> [<weyl element>]");
        WeylElem a = parse_weyl(pos[0]);
        if (pos.size() == 2) a *= parse_weyl(pos[1]);
        e.value("weyl", a);
    } else if (cmd == "iota-component") {
        arity(2, 2, "iota-component <finset> <degree>");
        e.value("poly", iota_component(parse_finset(pos[0]), flag_i64(pos[1])));
    } else if (cmd == "bmul") {
        arity(2, 2, "bmul <belem> <belem>");
        e.value("belem", b_mul(parse_belem(pos[0]), parse_belem(pos[1])));
    } else if (cmd == "bridge-simple") {
        arity(1, 1, "bridge-simple [--from-a] <simple>");
        if (flags.count("from-a"))
            e.value("simple", match_simple_a_to_c(parse_asimple(pos[0])));
        else
            e.value("asimple", match_simple_c_to_a(parse_simple(pos[0])));
    } else if (cmd == "bridge-functor") {
        arity(1, 1, "bridge-functor <pic> [--window N]");
        std::int64_t window = 16;
        if (auto it = flags.find("window"); it != flags.end()) window = flag_i64(it->second);
        if (window < 0) usage_error("bridge-functor: window must be nonnegative");
        PicElem f = parse_pic(pos[0]);
        ABridgeWord w = bridge_word(f);
        auto table = bridge_table(f, window);
        if (as_json) {
            json jt = json::array();
            for (const auto& [in, out] : table)
                jt.push_back(json::array({value_json(in), value_json(out)}));
            json v{{"iota", value_json(w.iota_set)},
                   {"shift", w.shift},
                   {"sigma", w.sigma},
                   {"window", window},
                   {"table", jt}};
            e.result.out = json{{"kind", "bridge"}, {"value", v}}.dump() + "\n";
        } else {
            std::string out = bridge_word_text(w) + "\n";
            for (const auto& [in, to] : table)
                out += to_text(in) + " -> " + to_text(to) + "\n";
            e.result.out = out;
        }
    } else if (cmd == "ext1") {
        arity(2, 2, "ext1 <simple> <simple>");
        e.nat(ext1_dim(parse_simple(pos[0]), parse_simple(pos[1])));
    } else if (cmd == "picture") {
        arity(0, 0, "picture [--min a] [--max b]");
        std::int64_t lo = -4, hi = 4;
        if (auto it = flags.find("min"); it != flags.end()) lo = flag_i64(it->second);
        if (auto it = flags.find("max"); it != flags.end()) hi = flag_i64(it->second);
        if (lo > hi) usage_error("picture: --min must not exceed --max");
        if (hi - lo > 200) usage_error("picture: window too wide");
        if (as_json) {
            json pts = json::array();
            for (std::int64_t n = lo; n <= hi; ++n)
                pts.push_back(json::array(
                    {n, to_text(ASimple::X(n)), to_text(ASimple::Y(n))}));
            json v{{"min", lo}, {"max", hi}, {"points", pts}};
            e.result.out = json{{"kind", "picture"}, {"value", v}}.dump() + "\n";
        } else {
            e.result.out = render_picture(lo, hi);
        }
    } else {
        throw ParseError("unknown subcommand '" + cmd + "'", 0);
    }
    return e.result;
}

} // namespace

CliResult run_command(const std::vector<std::string>& args) {
    CliResult r;
    bool as_json = false;
    std::vector<std::string> pos;
    std::map<std::string, std::string> flags;

    std::size_t i = 0;
    try {
        if (args.empty()) usage_error("grweyl <subcommand> [args...] [--json]");
        std::string cmd = args[0];
        for (i = 1; i < args.size(); ++i) {
            const std::string& a = args[i];
            if (a == "--json") {
                as_json = true;
            } else if (a == "--from-a") {
                flags["from-a"] = "";
            } else if (a == "--window" || a == "--min" || a == "--max") {
                if (i + 1 >= args.size()) usage_error(a + " needs a value");
                flags[a.substr(2)] = args[++i];
            } else {
                pos.push_back(a);
            }
        }
        return dispatch(cmd, pos, flags, as_json);
    } catch (const ParseError& ex) {
        r.exit_code = 2;
        r.err = std::string("error: ") + ex.what() + "\n";
    } catch (const std::domain_error& ex) {
        r.exit_code = 1;
        r.err = std::string("error: ") + ex.what() + "\n";
    } catch (const std::invalid_argument& ex) {
        r.exit_code = 1;
        r.err = std::string("error: ") + ex.what() + "\n";
    } catch (const std::logic_error& ex) {
        // verification failures that contradict a structure theorem
        r.exit_code = 70;
        r.err = std::string("internal error: ") + ex.what() + "\n";
    } catch (const std::exception& ex) {
        r.exit_code = 1;
        r.err = std::string("error: ") + ex.what() + "\n";
    }
    return r;
}

} // namespace grweyl
