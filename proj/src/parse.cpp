#include "lieflag/parse.hpp"
#include "lieflag/errors.hpp"

#include <algorithm>
#include <cctype>
#include <regex>

namespace lieflag {

namespace {

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

int to_int(const std::string& s, const std::string& what) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '-'; }))
        throw Error(ErrorKind::ParseError, "expected an integer in " + what + ", got '" + s + "'");
    try {
        return std::stoi(s);
    } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "integer out of range in " + what);
    }
}

}  // namespace

RationalTuple parse_tuple(const std::string& text) {
    RationalTuple t;
    if (trim(text).empty()) throw Error(ErrorKind::ParseError, "empty tuple");
    for (const std::string& s : split(text, ',')) {
        try {
            t.push_back(parse_rational(s));
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            throw Error(ErrorKind::ParseError, "bad rational '" + s + "'");
        }
    }
    return t;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    if (trim(text).empty()) return out;
    for (const std::string& s : split(text, ',')) out.push_back(to_int(s, "integer list"));
    return out;
}

CenterVectors parse_center(const std::string& text) {
    CenterVectors c;
    if (trim(text).empty()) return c;
    for (const std::string& v : split(text, ';')) c.push_back(parse_tuple(v));
    return c;
}

Factor parse_factor(const std::string& text) {
    static const std::regex re(R"(\s*(sl|so|sp|gl|e6|g2)\s*\(\s*(\d+)\s*\)\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, re)) throw Error(ErrorKind::ParseError, "bad factor '" + text + "'");
    Factor f;
    const std::string t = m[1];
    f.type = t == "sl" ? FactorType::sl : t == "so" ? FactorType::so : t == "sp" ? FactorType::sp
           : t == "gl" ? FactorType::gl : t == "e6" ? FactorType::e6 : FactorType::g2;
    f.n = to_int(m[2], "factor");
    return f;
}

std::vector<Factor> parse_factors(const std::string& text) {
    std::vector<Factor> out;
    for (const std::string& s : split(text, '+')) out.push_back(parse_factor(s));
    return out;
}

ModuleSpec parse_module(const std::string& text) {
    static const std::regex on_re(R"(\s+on\s+)");
    std::smatch m;
    const std::string t = trim(text);
    if (!std::regex_search(t, m, on_re)) {
        ModuleSpec spec = natural_sum(parse_factors(t));
        spec.validate();
        return spec;
    }
    ModuleSpec spec;
    spec.factors = parse_factors(m.prefix().str());
    const std::string rhs = m.suffix().str();
    std::vector<bool> used(spec.factors.size(), false);
    static const std::regex part_re(R"((nat|natural|dual|sym2|wedge2|spin-|spin)\s*(?:\(\s*(\d+)\s*\))?)");
    static const std::regex c_re(R"(C(\d*))");
    for (const std::string& summand_text : split(rhs, '+')) {
        Summand summand;
        for (const std::string& raw : split(summand_text, 'x')) {
            std::smatch pm;
            if (std::regex_match(raw, pm, c_re)) {
                if (pm[1].str().empty()) continue;  // trivial factor C
                const int n = to_int(pm[1], "module");
                size_t k = 0;
                while (k < spec.factors.size() && (used[k] || spec.factors[k].n != n)) ++k;
                if (k == spec.factors.size()) {
                    if (n == 1) continue;
                    throw Error(ErrorKind::ParseError, "no unused factor with natural dimension " + std::to_string(n));
                }
                used[k] = true;
                summand.parts.push_back({static_cast<int>(k), RepTag::Natural, false});
                continue;
            }
            if (!std::regex_match(raw, pm, part_re)) throw Error(ErrorKind::ParseError, "bad module part '" + raw + "'");
            int index = 0;
            if (pm[2].matched) {
                index = to_int(pm[2], "module") - 1;
            } else if (spec.factors.size() != 1) {
                throw Error(ErrorKind::ParseError, "part '" + raw + "' needs a factor index");
            }
            if (index < 0 || index >= static_cast<int>(spec.factors.size()))
                throw Error(ErrorKind::ParseError, "factor index out of range in '" + raw + "'");
            const std::string tag = pm[1];
            RepPart part;
            part.factor = index;
            part.dual = tag == "dual";
            part.tag = tag == "sym2" ? RepTag::Sym2 : tag == "wedge2" ? RepTag::Wedge2 : tag == "spin" ? RepTag::Spin
                     : tag == "spin-" ? RepTag::SpinMinus : RepTag::Natural;
            used[static_cast<size_t>(index)] = true;
            summand.parts.push_back(part);
        }
        spec.summands.push_back(summand);
    }
    try {
        spec.validate();
    } catch (const Error& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
    return spec;
}

MonodromyClass parse_monodromy(const std::string& text) {
    const std::string t = trim(text);
    if (t == "generic") return MonodromyClass::generic_class("generic");
    try {
        return MonodromyClass::of_residue(parse_rational(t));
    } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "bad monodromy '" + t + "'");
    }
}

}  // namespace lieflag
