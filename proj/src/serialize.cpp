#include "thf/serialize.hpp"
#include "thf/snf.hpp"

#include <cctype>
#include <memory>
#include <sstream>

namespace thf {

// ---------------------------------------------------------------------------
// printing

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::exception&) {
        fail("parse", "bad rational literal: " + s);
    }
}

static std::string exp_str(char var, const Rational& e) {
    if (e == Rational(1)) return std::string(1, var);
    std::string var_s(1, var);
    if (is_integer(e) && e.num >= 0) return var_s + "^" + to_string(e);
    return var_s + "^{" + to_string(e) + "}";
}

std::string print_coeff(const BigInt& x) { return x.str(); }

std::string print_coeff(const F2Poly& x) {
    if (x.is_zero()) return "0";
    std::string out;
    for (long e = x.degree(); e >= 0; --e) {
        if (!x.coeff(e)) continue;
        if (!out.empty()) out += "+";
        out += (e == 0) ? "1" : exp_str('t', Rational(e));
    }
    return out;
}

std::string print_coeff(const LaurentPoly& x) {
    if (x.is_zero()) return "0";
    std::string out;
    for (long e = x.max_exp(); e >= x.min_exp(); --e) {
        if (!x.coeff(e)) continue;
        if (!out.empty()) out += "+";
        out += (e == 0) ? "1" : exp_str('t', Rational(e));
    }
    return out;
}

std::string print_coeff(const RatFunc& x) {
    if (is_zero(x)) return "0";
    std::string num = print_coeff(x.num);
    if (x.den.is_one()) return num;
    std::string den = print_coeff(x.den);
    // parenthesize multi-term parts: "(t+1)/t"
    auto multi = [](const F2Poly& p) { return p.degree() > p.low(); };
    if (multi(x.num)) num = "(" + num + ")";
    if (multi(x.den)) den = "(" + den + ")";
    return num + "/" + den;
}

std::string print_coeff(const UPoly& x) {
    if (is_zero(x)) return "0";
    std::string out;
    for (long k = x.degree(); k >= 0; --k) {
        RatFunc c = x.coeff(k);
        if (is_zero(c)) continue;
        if (!out.empty()) out += "+";
        if (k == 0) {
            out += print_coeff(c);
            continue;
        }
        std::string u = exp_str('U', Rational(k));
        if (c == RatFunc(1)) {
            out += u;
        } else {
            std::string cs = print_coeff(c);
            bool wrap = cs.find('+') != std::string::npos || cs.find('/') != std::string::npos;
            out += (wrap ? "(" + cs + ")" : cs) + "*" + u;
        }
    }
    return out;
}

std::string print_coeff(const NovikovElem& x) {
    if (x.is_zero()) return "0";
    std::string out;
    for (auto it = x.exps.rbegin(); it != x.exps.rend(); ++it) {
        if (!out.empty()) out += "+";
        out += is_zero(*it) ? "1" : exp_str('t', *it);
    }
    return out;
}

// ---------------------------------------------------------------------------
// parsing: tokenizer + small expression tree shared by all coefficient rings

namespace {

struct Expr {
    enum Kind { Num, Var, Add, Mul, Div, Pow } kind;
    BigInt num;                    // Num
    char var = 0;                  // Var ('t' or 'U')
    Rational exp{1};               // Pow exponent
    std::vector<std::shared_ptr<Expr>> kids;
};
using PExpr = std::shared_ptr<Expr>;

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& str) : s(str) {}

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void err(const std::string& msg) {
        fail("parse", msg + " at column " + std::to_string(pos + 1) + " of \"" + s + "\"");
    }

    BigInt number() {
        skip();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos || (pos - start == 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            err("expected a number");
        return BigInt(s.substr(start, pos - start));
    }

    Rational exponent() {
        if (eat('{')) {
            BigInt n = number();
            Rational r(n);
            if (eat('/')) r = Rational(n, number());
            if (!eat('}')) err("expected '}'");
            return r;
        }
        return Rational(number());
    }

    PExpr atom() {
        skip();
        if (pos >= s.size()) err("unexpected end of input");
        char c = s[pos];
        auto e = std::make_shared<Expr>();
        if (c == '(') {
            ++pos;
            PExpr inner = expr();
            if (!eat(')')) err("expected ')'");
            return inner;
        }
        if (c == 't' || c == 'U') {
            ++pos;
            e->kind = Expr::Var;
            e->var = c;
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
            e->kind = Expr::Num;
            e->num = number();
            return e;
        }
        err("unexpected character");
    }

    PExpr factor() {
        PExpr base = atom();
        if (eat('^')) {
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Pow;
            e->exp = exponent();
            e->kids.push_back(base);
            return e;
        }
        return base;
    }

    PExpr term() {
        PExpr left = factor();
        for (;;) {
            if (eat('*')) {
                auto e = std::make_shared<Expr>();
                e->kind = Expr::Mul;
                e->kids = {left, factor()};
                left = e;
            } else if (eat('/')) {
                auto e = std::make_shared<Expr>();
                e->kind = Expr::Div;
                e->kids = {left, factor()};
                left = e;
            } else {
                break;
            }
        }
        return left;
    }

    PExpr expr() {
        PExpr left = term();
        for (;;) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos;
                auto e = std::make_shared<Expr>();
                e->kind = Expr::Add;
                e->kids = {left, term()};
                left = e;
            } else {
                break;
            }
        }
        return left;
    }

    PExpr parse_all() {
        PExpr e = expr();
        skip();
        if (pos != s.size()) err("trailing input");
        return e;
    }
};

// evaluation hooks per target ring; ops shared generically
template <class R, class Hooks>
R eval(const PExpr& e) {
    switch (e->kind) {
        case Expr::Num: return Hooks::from_int(e->num);
        case Expr::Var: return Hooks::variable(e->var, Rational(1));
        case Expr::Add: return eval<R, Hooks>(e->kids[0]) + eval<R, Hooks>(e->kids[1]);
        case Expr::Mul: return eval<R, Hooks>(e->kids[0]) * eval<R, Hooks>(e->kids[1]);
        case Expr::Div: return Hooks::div(eval<R, Hooks>(e->kids[0]), eval<R, Hooks>(e->kids[1]));
        case Expr::Pow: {
            const PExpr& base = e->kids[0];
            if (base->kind != Expr::Var) fail("parse", "exponent allowed on variables only");
            return Hooks::variable(base->var, e->exp);
        }
    }
    fail("parse", "unreachable");
}

long int_exp(const Rational& r, const char* what) {
    if (!is_integer(r)) fail("parse", std::string(what) + " requires integer exponents");
    return static_cast<long>(r.num);
}

struct BigIntHooks {
    static BigInt from_int(const BigInt& n) { return n; }
    static BigInt variable(char, const Rational&) {
        fail("parse", "integer entries admit no variables");
    }
    static BigInt div(const BigInt& a, const BigInt& b) {
        if (b == 0 || a % b != 0) fail("parse", "non-integer division in integer entry");
        return a / b;
    }
};

struct F2PolyHooks {
    static F2Poly from_int(const BigInt& n) { return F2Poly(static_cast<int>(n % 2)); }
    static F2Poly variable(char v, const Rational& e) {
        if (v != 't') fail("parse", "F2[t] entries use the variable t only");
        long k = int_exp(e, "F2[t]");
        if (k < 0) fail("parse", "negative exponent outside F2[t]");
        return F2Poly::monomial(k);
    }
    static F2Poly div(const F2Poly&, const F2Poly&) {
        fail("parse", "division outside F2[t]");
    }
};

struct LaurentHooks {
    static LaurentPoly from_int(const BigInt& n) { return LaurentPoly(static_cast<int>(n % 2)); }
    static LaurentPoly variable(char v, const Rational& e) {
        if (v != 't') fail("parse", "F2[t,t^-1] entries use the variable t only");
        return LaurentPoly::monomial(int_exp(e, "F2[t,t^-1]"));
    }
    static LaurentPoly div(const LaurentPoly& a, const LaurentPoly& b) {
        auto [q, r] = euclid<LaurentPoly>::divmod(a, b);
        if (!is_zero(r)) fail("parse", "inexact division in F2[t,t^-1]");
        return q;
    }
};

struct RatFuncHooks {
    static RatFunc from_int(const BigInt& n) { return RatFunc(static_cast<int>(n % 2)); }
    static RatFunc variable(char v, const Rational& e) {
        if (v != 't') fail("parse", "F2(t) entries use the variable t only");
        return ratfunc_t(int_exp(e, "F2(t)"));
    }
    static RatFunc div(const RatFunc& a, const RatFunc& b) { return a / b; }
};

struct UPolyHooks {
    static UPoly from_int(const BigInt& n) { return UPoly(static_cast<int>(n % 2)); }
    static UPoly variable(char v, const Rational& e) {
        long k = int_exp(e, "F2(t)[U]");
        if (v == 'U') {
            if (k < 0) fail("parse", "negative U exponent");
            return UPoly::monomial(RatFunc(1), k);
        }
        return UPoly(ratfunc_t(k));
    }
    static UPoly div(const UPoly& a, const UPoly& b) {
        if (b.degree() > 0) fail("parse", "division by U-terms is not allowed");
        if (b.is_zero()) fail("parse", "division by zero");
        RatFunc inv = field_inv(b.coeff(0));
        UPoly r = a;
        for (auto& c : r.coeffs) c = c * inv;
        return r;
    }
};

struct NovikovHooks {
    static NovikovElem from_int(const BigInt& n) {
        return NovikovElem(static_cast<int>(n % 2));
    }
    static NovikovElem variable(char v, const Rational& e) {
        if (v != 't') fail("parse", "Novikov entries use the variable t only");
        return NovikovElem::monomial(e);
    }
    static NovikovElem div(const NovikovElem&, const NovikovElem&) {
        fail("parse", "division of Novikov elements is truncated-only; not in the grammar");
    }
};

template <class R, class Hooks>
R parse_with(const std::string& s) {
    Parser p(s);
    return eval<R, Hooks>(p.parse_all());
}

}  // namespace

BigInt parse_bigint_coeff(const std::string& s) { return parse_with<BigInt, BigIntHooks>(s); }
F2Poly parse_f2poly(const std::string& s) { return parse_with<F2Poly, F2PolyHooks>(s); }
LaurentPoly parse_laurent(const std::string& s) {
    return parse_with<LaurentPoly, LaurentHooks>(s);
}
RatFunc parse_ratfunc(const std::string& s) { return parse_with<RatFunc, RatFuncHooks>(s); }
UPoly parse_upoly(const std::string& s) { return parse_with<UPoly, UPolyHooks>(s); }
NovikovElem parse_novikov(const std::string& s) {
    return parse_with<NovikovElem, NovikovHooks>(s);
}

// ---------------------------------------------------------------------------
// JSON documents

using nlohmann::json;

namespace {

template <class R>
Matrix<R> matrix_from_entries(const json& j, R (*parse)(const std::string&)) {
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    Matrix<R> m(rows, cols);
    for (const auto& e : j.value("entries", json::array())) {
        std::size_t r = e.at("row").get<std::size_t>();
        std::size_t c = e.at("col").get<std::size_t>();
        if (r >= rows || c >= cols) fail("parse", "matrix entry out of range");
        m.at(r, c) = parse(e.at("coeff").get<std::string>());
    }
    return m;
}

Rational grading_from_json(const json& g) {
    if (g.is_number_integer()) return Rational(BigInt(g.get<long long>()));
    return parse_rational(g.get<std::string>());
}

template <class R>
ChainComplex<R> complex_from_json(const json& j, R (*parse)(const std::string&)) {
    ChainComplex<R> c;
    for (const auto& g : j.at("generators"))
        c.gens.push_back({g.at("name").get<std::string>(), grading_from_json(g.at("grading"))});
    std::size_t n = c.gens.size();
    c.diff = Matrix<R>(n, n);
    for (const auto& e : j.value("entries", json::array())) {
        std::size_t r = e.at("row").get<std::size_t>();
        std::size_t col = e.at("col").get<std::size_t>();
        if (r >= n || col >= n) fail("parse", "complex entry out of range");
        c.diff.at(r, col) = parse(e.at("coeff").get<std::string>());
    }
    c.u_var = j.value("u_var", std::string());
    return c;
}

F2 parse_f2_entry(const std::string& s) {
    BigInt v = parse_bigint_coeff(s);
    return F2(static_cast<int>(v % 2));
}

}  // namespace

MatrixDoc parse_matrix_json(const json& j) {
    std::string ring = j.at("ring").get<std::string>();
    if (ring == "Z") return {ring, matrix_from_entries<BigInt>(j, parse_bigint_coeff)};
    if (ring == "F2[t]") return {ring, matrix_from_entries<F2Poly>(j, parse_f2poly)};
    if (ring == "F2[t,t^-1]") return {ring, matrix_from_entries<LaurentPoly>(j, parse_laurent)};
    if (ring == "F2(t)[U]") return {ring, matrix_from_entries<UPoly>(j, parse_upoly)};
    fail("ring-not-euclidean", "unsupported matrix ring: " + ring);
}

nlohmann::json snf_to_json(const MatrixDoc& doc) {
    json out;
    out["ring"] = doc.ring;
    std::visit(
        [&](const auto& m) {
            auto res = smith_normal_form(m);
            json diag = json::array();
            for (const auto& d : res.diag) diag.push_back(print_coeff(d));
            out["diagonal"] = diag;
            out["rank"] = res.rank;
            if constexpr (std::is_same_v<std::decay_t<decltype(m)>, Matrix<BigInt>>) {
                if (m.rows == m.cols && m == m.transpose()) out["signature"] = signature(m);
            }
        },
        doc.matrix);
    return out;
}

ComplexDoc parse_complex_json(const json& j) {
    std::string ring = j.at("ring").get<std::string>();
    if (ring == "F2") return {ring, complex_from_json<F2>(j, parse_f2_entry)};
    if (ring == "F2(t)") return {ring, complex_from_json<RatFunc>(j, parse_ratfunc)};
    if (ring == "F2(t)[U]" || ring == "Lambda[U]")
        return {ring, complex_from_json<UPoly>(j, parse_upoly)};
    fail("unsupported", "homology supports rings F2, F2(t), F2(t)[U]");
}

nlohmann::json dims_to_json(const GradedDims& d) {
    json out;
    out["ring"] = ring_name(d.ring);
    json table = json::object();
    for (const auto& [g, dim] : d.dims) table[to_string(g)] = dim;
    out["dims"] = table;
    return out;
}

nlohmann::json module_to_json(const GradedModule& m) {
    json arr = json::array();
    for (const auto& s : m.summands) {
        json js;
        switch (s.kind) {
            case Summand::FreeField:
                js["type"] = "free_field";
                js["ring"] = ring_name(s.ring);
                js["rank"] = s.rank;
                break;
            case Summand::Tower:
                js["type"] = "tower";
                if (s.rank != 1) js["rank"] = s.rank;
                break;
            case Summand::UTorsion:
                js["type"] = "u_torsion";
                js["k"] = s.k;
                js["rank"] = s.rank;
                break;
        }
        if (s.has_grading) js["grading"] = to_string(s.grading);
        arr.push_back(js);
    }
    json out;
    out["summands"] = arr;
    return out;
}

nlohmann::json homology_to_json(const ComplexDoc& doc) {
    json out;
    out["ring"] = doc.ring;
    if (const auto* c = std::get_if<ChainComplex<F2>>(&doc.complex)) {
        GradedDims h = homology_field(*c, RingTag::F2);
        GradedModule m;
        for (const auto& [g, d] : h.dims)
            m.summands.push_back(GradedModule::free_field(RingTag::F2, d, g));
        out["homology"] = module_to_json(m);
    } else if (const auto* c = std::get_if<ChainComplex<RatFunc>>(&doc.complex)) {
        GradedDims h = homology_field(*c, RingTag::RatFuncT);
        GradedModule m;
        for (const auto& [g, d] : h.dims)
            m.summands.push_back(GradedModule::free_field(RingTag::RatFuncT, d, g));
        out["homology"] = module_to_json(m);
    } else {
        const auto& cu = std::get<ChainComplex<UPoly>>(doc.complex);
        out["homology"] = module_to_json(homology_upoly(cu));
    }
    return out;
}

nlohmann::json knot_complex_to_json(const KnotComplex& k) {
    json gens = json::array();
    for (const auto& g : k.gens)
        gens.push_back({{"name", g.name},
                        {"grading", std::to_string(g.M)},
                        {"alexander", g.A}});
    json arrows = json::array();
    for (const auto& a : k.arrows)
        arrows.push_back({{"row", a.to},
                          {"col", a.from},
                          {"coeff", "1"},
                          {"i_drop", a.i_drop},
                          {"j_drop", a.j_drop}});
    json out;
    out["ring"] = "F2";
    out["generators"] = gens;
    out["entries"] = arrows;
    return out;
}

nlohmann::json log_to_json(const DerivationLog& log) {
    json arr = json::array();
    for (const auto& st : log)
        arr.push_back({{"step", st.step},
                       {"paper_anchor", st.anchor},
                       {"input_summary", st.input_summary},
                       {"output_summary", st.output_summary}});
    return arr;
}

// ---------------------------------------------------------------------------
// TOML subset: flat "key = value" lines; integers, quoted strings, rationals
// like 1/2, and arrays of integers.

namespace {

struct TomlValue {
    enum Kind { Int, Str, Array } kind = Int;
    long long i = 0;
    std::string s;
    std::vector<long long> arr;
};

std::map<std::string, TomlValue> parse_toml_subset(const std::string& text) {
    std::map<std::string, TomlValue> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto notspace = line.find_first_not_of(" \t\r");
        if (notspace == std::string::npos) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            fail("parse", "line " + std::to_string(lineno) + ": expected key = value");
        auto trim = [](std::string v) {
            auto b = v.find_first_not_of(" \t\r");
            auto e = v.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : v.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        TomlValue tv;
        if (!val.empty() && val.front() == '"') {
            if (val.size() < 2 || val.back() != '"')
                fail("parse", "line " + std::to_string(lineno) + ": unterminated string");
            tv.kind = TomlValue::Str;
            tv.s = val.substr(1, val.size() - 2);
        } else if (!val.empty() && val.front() == '[') {
            if (val.back() != ']')
                fail("parse", "line " + std::to_string(lineno) + ": unterminated array");
            tv.kind = TomlValue::Array;
            std::istringstream items(val.substr(1, val.size() - 2));
            std::string item;
            while (std::getline(items, item, ',')) {
                item = trim(item);
                if (item.empty()) continue;
                tv.arr.push_back(std::stoll(item));
            }
        } else if (val.find('/') != std::string::npos) {
            tv.kind = TomlValue::Str;  // rationals carried as strings
            tv.s = val;
        } else {
            try {
                tv.i = std::stoll(val);
            } catch (const std::exception&) {
                fail("parse", "line " + std::to_string(lineno) + ": bad value " + val);
            }
        }
        out[key] = tv;
    }
    return out;
}

Rational toml_rational(const TomlValue& v) {
    if (v.kind == TomlValue::Int) return Rational(BigInt(v.i));
    if (v.kind == TomlValue::Str) return parse_rational(v.s);
    fail("parse", "expected a rational value");
}

}  // namespace

ThinKnotSpec parse_thin_spec(const std::string& text, bool toml) {
    ThinKnotSpec spec;
    if (toml) {
        auto kv = parse_toml_subset(text);
        if (!kv.count("alexander") || kv["alexander"].kind != TomlValue::Array)
            fail("parse", "thin spec needs alexander = [..]");
        for (long long a : kv["alexander"].arr) spec.alexander.push_back(a);
        if (!kv.count("sigma")) fail("parse", "thin spec needs sigma");
        spec.sigma = kv["sigma"].i;
    } else {
        json j = json::parse(text);
        for (const auto& a : j.at("alexander")) spec.alexander.push_back(a.get<long>());
        spec.sigma = j.at("sigma").get<long>();
    }
    return spec;
}

FamilySpec parse_family_spec(const std::string& text, bool toml) {
    std::string family;
    long m = 0, n = 0;
    int clasp = 1;
    Rational d(1);
    if (toml) {
        auto kv = parse_toml_subset(text);
        if (!kv.count("family") || kv["family"].kind != TomlValue::Str)
            fail("parse", "family spec needs family = \"...\"");
        family = kv["family"].s;
        if (kv.count("m")) m = kv["m"].i;
        if (kv.count("n")) n = kv["n"].i;
        if (kv.count("clasp")) clasp = static_cast<int>(kv["clasp"].i);
        if (kv.count("d")) d = toml_rational(kv["d"]);
    } else {
        json j = json::parse(text);
        family = j.at("family").get<std::string>();
        m = j.value("m", 0ll);
        n = j.value("n", 0ll);
        clasp = j.value("clasp", 1);
        if (j.contains("d")) {
            if (j["d"].is_number_integer())
                d = Rational(BigInt(j["d"].get<long long>()));
            else
                d = parse_rational(j["d"].get<std::string>());
        }
    }
    FamilySpec spec;
    spec.omega = TwistClass{d};
    if (family == "twist-knot")
        spec.family = TwistKnotZeroSurgery{n};
    else if (family == "whitehead")
        spec.family = WhiteheadZeroSurgery{n};
    else if (family == "borromean")
        spec.family = BorromeanZeroSurgery{m, n};
    else if (family == "two-bridge")
        spec.family = TwoBridge{m, clasp, n};
    else
        fail("parse", "unknown family: " + family);
    return spec;
}

}  // namespace thf
