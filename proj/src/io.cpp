#include "gblab/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace gblab {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> splitCommas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

// Recursive-descent parser for "3*x1^2*x2 - x3 + 5" style input.
class PolyParser {
public:
    PolyParser(const std::string& text, const Ring& ring,
               const std::vector<std::string>& names)
        : s_(text), ring_(ring), names_(names) {}

    Polynomial parse() {
        Polynomial p = parseExpr();
        skipWs();
        if (pos_ != s_.size()) fail("trailing input");
        return p;
    }

private:
    void skipWs() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw ParseError("parse error at position " + std::to_string(pos_) + ": " + what +
                         " in \"" + s_ + "\"");
    }

    bool accept(char c) {
        skipWs();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial parseExpr() {
        Polynomial acc(ring_);
        bool negative = accept('-');
        for (;;) {
            Polynomial t = parseTerm();
            acc = negative ? acc - t : acc + t;
            if (accept('+')) {
                negative = false;
            } else if (accept('-')) {
                negative = true;
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial parseTerm() {
        const PrimeField F = ring_.field();
        std::uint32_t coeff = 1;
        std::vector<std::uint16_t> exps(ring_.nvars, 0);
        bool sawFactor = false;
        for (;;) {
            skipWs();
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                coeff = F.mul(coeff, static_cast<std::uint32_t>(parseRawNumber() %
                                                               ring_.modulus));
                sawFactor = true;
            } else if (pos_ < s_.size() &&
                       (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
                std::size_t v = parseVariable();
                std::uint64_t e = 1;
                if (accept('^')) e = parseRawNumber();
                if (e > 1000 || exps[v] + e > 1000) fail("exponent too large");
                exps[v] = static_cast<std::uint16_t>(exps[v] + e);
                sawFactor = true;
            } else {
                break;
            }
            if (!accept('*')) break;
        }
        if (!sawFactor) fail("expected a term");
        if (coeff == 0) return Polynomial(ring_);
        return Polynomial(ring_, {Term{Monomial(std::move(exps)), coeff}});
    }

    std::uint64_t parseRawNumber() {
        skipWs();
        std::uint64_t v = 0;
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
            if (v > (1ull << 62)) fail("number too large");
            ++pos_;
        }
        if (pos_ == start) fail("expected a number");
        return v;
    }

    std::size_t parseVariable() {
        skipWs();
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                    s_[pos_] == '_'))
            ++pos_;
        const std::string name = s_.substr(start, pos_ - start);
        auto it = std::find(names_.begin(), names_.end(), name);
        if (it == names_.end()) fail("unknown variable '" + name + "'");
        return static_cast<std::size_t>(it - names_.begin());
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    Ring ring_;
    const std::vector<std::string>& names_;
};

} // namespace

Polynomial parsePolynomial(const std::string& text, const Ring& ring,
                           const std::vector<std::string>& varNames) {
    return PolyParser(text, ring, varNames).parse();
}

NamedSystem parseSystemText(std::istream& in) {
    std::string line;
    Ring ring;
    std::vector<std::string> names;
    bool haveHeader = false;
    std::vector<Polynomial> polys;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        if (!haveHeader) {
            std::istringstream hs(line);
            std::string kw, qkv, varskv;
            hs >> kw >> qkv >> varskv;
            if (kw != "ring" || qkv.rfind("q=", 0) != 0 || varskv.rfind("vars=", 0) != 0)
                throw ParseError("expected header 'ring q=<prime> vars=...', got: " + line);
            ring.modulus = static_cast<std::uint32_t>(std::stoul(qkv.substr(2)));
            names = splitCommas(varskv.substr(5));
            ring.nvars = static_cast<std::uint32_t>(names.size());
            ring.field(); // validates the modulus
            haveHeader = true;
            continue;
        }
        Polynomial p = parsePolynomial(line, ring, names);
        if (p.isZero()) throw ParseError("zero polynomial rejected: " + line);
        if (p.isConstant()) throw ParseError("constant polynomial rejected: " + line);
        polys.push_back(std::move(p));
    }
    if (!haveHeader) throw ParseError("missing ring header");
    if (polys.empty()) throw ParseError("no polynomials");
    return NamedSystem{PolySystem(ring, std::move(polys)), std::move(names)};
}

NamedSystem parseSystemText(const std::string& text) {
    std::istringstream in(text);
    return parseSystemText(in);
}

NamedSystem parseSystemJson(const std::string& text) {
    const json j = json::parse(text);
    Ring ring;
    ring.modulus = j.at("ring").at("q").get<std::uint32_t>();
    std::vector<std::string> names = j.at("ring").at("vars").get<std::vector<std::string>>();
    ring.nvars = static_cast<std::uint32_t>(names.size());
    ring.field();
    const PrimeField F = ring.field();
    std::vector<Polynomial> polys;
    for (const auto& jp : j.at("polys")) {
        std::vector<Term> terms;
        for (const auto& jt : jp) {
            const auto exps = jt.at(0).get<std::vector<int>>();
            if (exps.size() != ring.nvars) throw ParseError("exponent vector length mismatch");
            std::vector<std::uint16_t> e;
            e.reserve(exps.size());
            for (int x : exps) {
                if (x < 0 || x > 1000) throw ParseError("exponent out of range in JSON input");
                e.push_back(static_cast<std::uint16_t>(x));
            }
            terms.push_back(Term{Monomial(std::move(e)), F.reduce(jt.at(1).get<long long>())});
        }
        Polynomial p(ring, std::move(terms));
        if (p.isZero() || p.isConstant())
            throw ParseError("zero or constant polynomial rejected in JSON input");
        polys.push_back(std::move(p));
    }
    return NamedSystem{PolySystem(ring, std::move(polys)), std::move(names)};
}

std::string writeSystemJson(const NamedSystem& s) {
    json j;
    j["ring"]["q"] = s.system.ring.modulus;
    j["ring"]["vars"] = s.varNames;
    json jpolys = json::array();
    for (const auto& p : s.system.gens) {
        json jp = json::array();
        for (const auto& t : p.terms()) {
            json je = json::array();
            for (auto e : t.mono.exponents()) je.push_back(e);
            jp.push_back(json::array({je, t.coeff}));
        }
        jpolys.push_back(jp);
    }
    j["polys"] = jpolys;
    return j.dump(2);
}

std::string monomialToString(const Monomial& m, const std::vector<std::string>& varNames) {
    if (m.isOne()) return "1";
    std::string out;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m.exp(i) == 0) continue;
        if (!out.empty()) out += "*";
        out += varNames[i];
        if (m.exp(i) > 1) out += "^" + std::to_string(m.exp(i));
    }
    return out;
}

std::string polyToString(const Polynomial& f, const std::vector<std::string>& varNames) {
    if (f.isZero()) return "0";
    std::string out;
    for (const auto& t : f.terms()) {
        if (!out.empty()) out += " + ";
        if (t.mono.isOne()) {
            out += std::to_string(t.coeff);
        } else {
            if (t.coeff != 1) out += std::to_string(t.coeff) + "*";
            out += monomialToString(t.mono, varNames);
        }
    }
    return out;
}

std::string writeSystemText(const NamedSystem& s) {
    std::string out = "ring q=" + std::to_string(s.system.ring.modulus) + " vars=";
    for (std::size_t i = 0; i < s.varNames.size(); ++i) {
        if (i) out += ",";
        out += s.varNames[i];
    }
    out += "\n";
    for (const auto& p : s.system.gens) out += polyToString(p, s.varNames) + "\n";
    return out;
}

std::vector<std::string> homogenizedNames(std::vector<std::string> names) {
    std::string y = "y";
    while (std::find(names.begin(), names.end(), y) != names.end()) y += "_";
    names.push_back(y);
    return names;
}

NamedSystem loadSystemFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    if (path.size() > 5 && path.substr(path.size() - 5) == ".json")
        return parseSystemJson(buf.str());
    return parseSystemText(buf.str());
}

} // namespace gblab
