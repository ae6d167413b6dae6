#include "hdw/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "hdw/fixtures.hpp"

namespace hdw {

namespace {

enum class Tok { Ident, Int, Str, Punct, End };

struct Token {
    Tok kind;
    std::string text;
    long long num = 0;
    int line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }
    [[noreturn]] void error(const std::string& msg) const {
        throw ConfigError(tok_.line, tok_.col, msg);
    }

private:
    void advance() {
        skip_ws();
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= src_.size()) {
            tok_ = {Tok::End, "", 0, line_, col_};
            return;
        }
        char c = src_[pos_];
        if (std::isalpha((unsigned char)c) || c == '_') {
            std::string s;
            while (pos_ < src_.size() &&
                   (std::isalnum((unsigned char)src_[pos_]) || src_[pos_] == '_'))
                s += get();
            tok_ = {Tok::Ident, s, 0, tok_.line, tok_.col};
        } else if (std::isdigit((unsigned char)c)) {
            std::string s;
            while (pos_ < src_.size() && std::isdigit((unsigned char)src_[pos_])) s += get();
            tok_ = {Tok::Int, s, std::stoll(s), tok_.line, tok_.col};
        } else if (c == '"') {
            get();
            std::string s;
            while (pos_ < src_.size() && src_[pos_] != '"') s += get();
            if (pos_ >= src_.size()) throw ConfigError(tok_.line, tok_.col, "unterminated string");
            get();
            tok_ = {Tok::Str, s, 0, tok_.line, tok_.col};
        } else {
            std::string s(1, get());
            tok_ = {Tok::Punct, s, 0, tok_.line, tok_.col};
        }
    }
    void skip_ws() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') get();
            } else if (std::isspace((unsigned char)c)) {
                get();
            } else {
                break;
            }
        }
    }
    char get() {
        char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    const std::string& src_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

class Parser {
public:
    Parser(const std::string& src) : lex_(src) {}

    WorkbenchConfig parse() {
        std::optional<int> m;
        bool have_datum = false;
        // first assignment must fix the field order
        while (lex_.peek().kind != Tok::End) {
            Token t = expect_ident("top-level key");
            if (t.text == "m") {
                expect_punct("=");
                m = (int)expect_int("field order");
                if (*m < 1) err(t, "m must be >= 1");
                cfg_.fld = CycField::make(*m);
            } else if (t.text == "datum") {
                if (!m) err(t, "m must be declared before the datum block");
                parse_datum_block();
                have_datum = true;
            } else if (t.text == "comodule_algebra") {
                if (!have_datum) err(t, "comodule_algebra block requires a datum block first");
                parse_comodalg_block();
            } else if (t.text == "cleft") {
                if (!have_datum) err(t, "cleft block requires a datum block first");
                parse_cleft_block();
            } else {
                err(t, "unknown top-level key '" + t.text + "'");
            }
        }
        if (!have_datum) throw ConfigError(1, 1, "missing datum block");
        return cfg_;
    }

private:
    [[noreturn]] void err(const Token& t, const std::string& msg) {
        throw ConfigError(t.line, t.col, msg);
    }
    Token expect_ident(const std::string& what) {
        Token t = lex_.take();
        if (t.kind != Tok::Ident) err(t, "expected " + what);
        return t;
    }
    void expect_punct(const std::string& p) {
        Token t = lex_.take();
        if (t.kind != Tok::Punct || t.text != p) err(t, "expected '" + p + "'");
    }
    bool peek_punct(const std::string& p) {
        return lex_.peek().kind == Tok::Punct && lex_.peek().text == p;
    }
    long long expect_int(const std::string& what) {
        bool neg = false;
        if (peek_punct("-")) {
            lex_.take();
            neg = true;
        }
        Token t = lex_.take();
        if (t.kind != Tok::Int) err(t, "expected integer (" + what + ")");
        return neg ? -t.num : t.num;
    }
    std::string expect_string(const std::string& what) {
        Token t = lex_.take();
        if (t.kind != Tok::Str) err(t, "expected string (" + what + ")");
        return t.text;
    }
    std::vector<long long> parse_int_list() {
        expect_punct("[");
        std::vector<long long> out;
        if (!peek_punct("]")) {
            out.push_back(expect_int("list entry"));
            while (peek_punct(",")) {
                lex_.take();
                out.push_back(expect_int("list entry"));
            }
        }
        expect_punct("]");
        return out;
    }

    // scalar grammar over the session field
    CycNum parse_scalar_expr() {
        CycNum v = parse_scalar_term();
        while (peek_punct("+") || peek_punct("-")) {
            bool plus = lex_.take().text == "+";
            CycNum w = parse_scalar_term();
            v = plus ? v + w : v - w;
        }
        return v;
    }
    CycNum parse_scalar_term() {
        CycNum v = parse_scalar_factor();
        while (peek_punct("*")) {
            lex_.take();
            v = v * parse_scalar_factor();
        }
        return v;
    }
    CycNum parse_scalar_factor() {
        const Field& F = cfg_.fld;
        if (peek_punct("-")) {
            lex_.take();
            return -parse_scalar_factor();
        }
        if (peek_punct("(")) {
            lex_.take();
            CycNum v = parse_scalar_expr();
            expect_punct(")");
            return v;
        }
        Token t = lex_.take();
        if (t.kind == Tok::Int) return F->from_int(t.num);
        if (t.kind == Tok::Ident && t.text == "rat") {
            expect_punct("(");
            long long p = expect_int("numerator");
            long long q = 1;
            if (peek_punct("/")) {
                lex_.take();
                q = expect_int("denominator");
            }
            expect_punct(")");
            return F->from_rational(Rational(p, q));
        }
        if (t.kind == Tok::Ident && t.text == "zeta") {
            expect_punct("(");
            long long k = expect_int("zeta exponent");
            expect_punct(")");
            return F->zeta((int)(((k % F->m()) + F->m()) % F->m()));
        }
        err(t, "expected scalar literal: rat(p/q), zeta(k), integer, or parentheses");
    }
    Vec parse_scalar_list(int expect_len, const char* what) {
        Token open = lex_.peek();
        expect_punct("[");
        Vec out;
        if (!peek_punct("]")) {
            out.push_back(parse_scalar_expr());
            while (peek_punct(",")) {
                lex_.take();
                out.push_back(parse_scalar_expr());
            }
        }
        expect_punct("]");
        if (expect_len >= 0 && (int)out.size() != expect_len)
            err(open, std::string(what) + ": expected " + std::to_string(expect_len) +
                          " entries, got " + std::to_string(out.size()));
        return out;
    }
    std::vector<std::vector<CycNum>> parse_matrix(int dim, const char* what) {
        Token open = lex_.peek();
        expect_punct("[");
        std::vector<std::vector<CycNum>> rows;
        if (!peek_punct("]")) {
            rows.push_back(parse_scalar_list(dim, what));
            while (peek_punct(",")) {
                lex_.take();
                rows.push_back(parse_scalar_list(dim, what));
            }
        }
        expect_punct("]");
        if ((int)rows.size() != dim)
            err(open, std::string(what) + ": expected " + std::to_string(dim) + " rows");
        return rows;
    }

    int parse_group_element() {
        Token t = expect_ident("group element: word(\"...\") or index(i)");
        if (t.text == "word") {
            expect_punct("(");
            std::string w = expect_string("group word");
            expect_punct(")");
            try {
                return parse_group_word(w, cfg_.group);
            } catch (const std::exception& e) {
                err(t, e.what());
            }
        }
        if (t.text == "index") {
            expect_punct("(");
            long long i = expect_int("element index");
            expect_punct(")");
            if (i < 0 || i >= cfg_.group.order) err(t, "element index out of range");
            return (int)i;
        }
        err(t, "expected word(\"...\") or index(i)");
    }

    void parse_datum_block() {
        expect_punct("{");
        bool have_group = false, have_chi = false, have_z = false, have_l = false, have_q = false;
        while (!peek_punct("}")) {
            Token key = expect_ident("datum key");
            expect_punct("=");
            if (key.text == "group") {
                Token kind = expect_ident("group constructor");
                if (kind.text == "cyclic") {
                    expect_punct("(");
                    auto orders = parse_int_list();
                    expect_punct(")");
                    std::vector<int> o(orders.begin(), orders.end());
                    try {
                        cfg_.group = FiniteGroup::from_cyclic_factors(o);
                    } catch (const std::exception& e) {
                        err(kind, e.what());
                    }
                } else if (kind.text == "table") {
                    expect_punct("(");
                    expect_punct("[");
                    std::vector<std::vector<int>> tbl;
                    if (!peek_punct("]")) {
                        auto row = parse_int_list();
                        tbl.emplace_back(row.begin(), row.end());
                        while (peek_punct(",")) {
                            lex_.take();
                            auto r2 = parse_int_list();
                            tbl.emplace_back(r2.begin(), r2.end());
                        }
                    }
                    expect_punct("]");
                    expect_punct(")");
                    try {
                        cfg_.group = FiniteGroup::from_table(tbl);
                    } catch (const std::exception& e) {
                        err(kind, e.what());
                    }
                } else {
                    err(kind, "expected cyclic([...]) or table([[...]])");
                }
                have_group = true;
            } else if (key.text == "character") {
                if (!have_group) err(key, "character requires group first");
                Token kind = expect_ident("character constructor");
                expect_punct("(");
                auto exps = parse_int_list();
                expect_punct(")");
                std::vector<int> e(exps.begin(), exps.end());
                try {
                    if (kind.text == "exponents")
                        cfg_.chi = Character::from_generator_exponents(cfg_.group, cfg_.fld->m(), e);
                    else if (kind.text == "values")
                        cfg_.chi = Character::from_values(cfg_.group, cfg_.fld->m(), e);
                    else
                        err(kind, "expected exponents([...]) or values([...])");
                } catch (const std::exception& e2) {
                    err(kind, e2.what());
                }
                have_chi = true;
            } else if (key.text == "z") {
                if (!have_group) err(key, "z requires group first");
                cfg_.z = parse_group_element();
                have_z = true;
            } else if (key.text == "lambda") {
                cfg_.lambda = parse_scalar_expr();
                have_l = true;
            } else if (key.text == "q") {
                cfg_.q = parse_scalar_expr();
                have_q = true;
            } else {
                err(key, "unknown datum key '" + key.text + "'");
            }
        }
        expect_punct("}");
        if (!(have_group && have_chi && have_z && have_l && have_q))
            throw ConfigError(1, 1, "datum block needs group, character, z, lambda and q");
    }

    int basis_index(const ComodalgConfig& cfg, const std::string& lbl, const Token& at) {
        for (size_t i = 0; i < cfg.basis.size(); ++i)
            if (cfg.basis[i] == lbl) return (int)i;
        err(at, "unknown basis label '" + lbl + "'");
    }

    void parse_comodalg_block() {
        ComodalgConfig cfg;
        expect_punct("{");
        while (!peek_punct("}")) {
            Token key = expect_ident("comodule_algebra key");
            if (key.text == "regular") {
                expect_punct("=");
                Token v = expect_ident("boolean");
                cfg.regular = v.text == "true";
            } else if (key.text == "basis") {
                expect_punct("=");
                expect_punct("[");
                if (!peek_punct("]")) {
                    cfg.basis.push_back(expect_string("basis label"));
                    while (peek_punct(",")) {
                        lex_.take();
                        cfg.basis.push_back(expect_string("basis label"));
                    }
                }
                expect_punct("]");
            } else if (key.text == "unit") {
                expect_punct("=");
                cfg.unit = parse_scalar_list((int)cfg.basis.size(), "unit");
            } else if (key.text == "mult") {
                expect_punct("(");
                std::string a = expect_string("basis label");
                expect_punct(",");
                std::string b = expect_string("basis label");
                expect_punct(")");
                expect_punct("=");
                int ia = basis_index(cfg, a, key), ib = basis_index(cfg, b, key);
                cfg.mult[{ia, ib}] = parse_scalar_list((int)cfg.basis.size(), "mult entry");
            } else if (key.text == "degree") {
                expect_punct("(");
                std::string lbl = expect_string("basis label");
                expect_punct(")");
                expect_punct("=");
                expect_punct("(");
                std::string w = expect_string("group word");
                expect_punct(",");
                long long ai = expect_int("automorphism index");
                expect_punct(")");
                int u = basis_index(cfg, lbl, key);
                cfg.deg_g.resize(cfg.basis.size(), -1);
                cfg.deg_aut.resize(cfg.basis.size(), -1);
                try {
                    cfg.deg_g[u] = parse_group_word(w, cfg_.group);
                } catch (const std::exception& e) {
                    err(key, e.what());
                }
                cfg.deg_aut[u] = (int)ai;
            } else if (key.text == "alpha") {
                expect_punct("=");
                cfg.alpha = parse_matrix((int)cfg.basis.size(), "alpha");
            } else if (key.text == "ladder") {
                expect_punct("=");
                cfg.ladder = parse_matrix((int)cfg.basis.size(), "ladder");
            } else {
                err(key, "unknown comodule_algebra key '" + key.text + "'");
            }
        }
        expect_punct("}");
        cfg_.comodalg = std::move(cfg);
    }

    void parse_cleft_block() {
        CleftConfig cfg;
        expect_punct("{");
        while (!peek_punct("}")) {
            Token key = expect_ident("cleft key");
            if (key.text == "regular") {
                expect_punct("=");
                Token v = expect_ident("boolean");
                cfg.regular = v.text == "true";
            } else if (key.text == "b_x") {
                expect_punct("=");
                cfg.b_x = parse_scalar_list(-1, "b_x");
            } else if (key.text == "b") {
                expect_punct("(");
                std::string w = expect_string("group word");
                expect_punct(")");
                expect_punct("=");
                int g = -1;
                try {
                    g = parse_group_word(w, cfg_.group);
                } catch (const std::exception& e) {
                    err(key, e.what());
                }
                cfg.b_g[g] = parse_scalar_list(-1, "b entry");
            } else {
                err(key, "unknown cleft key '" + key.text + "'");
            }
        }
        expect_punct("}");
        cfg_.cleft = std::move(cfg);
    }

    Lexer lex_;
    WorkbenchConfig cfg_;
};

} // namespace

CycNum parse_scalar(const std::string& text, const Field& fld) {
    std::string wrapped = "m = " + std::to_string(fld->m()) +
                          "\ndatum { group = cyclic([1]) character = values([0]) z = index(0) "
                          "lambda = " +
                          text + " q = 1 }";
    WorkbenchConfig cfg = parse_config(wrapped);
    return cfg.lambda;
}

int parse_group_word(const std::string& text, const FiniteGroup& G) {
    // word := "1" | part ("*" part)*, part := name ["^" int]
    size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
    };
    auto fail = [&](const std::string& msg) -> int {
        throw std::invalid_argument("group word '" + text + "': " + msg);
    };
    int acc = G.identity;
    skip();
    if (pos >= text.size()) fail("empty");
    while (true) {
        skip();
        std::string name;
        while (pos < text.size() &&
               (std::isalnum((unsigned char)text[pos]) || text[pos] == '_'))
            name += text[pos++];
        if (name.empty()) fail("expected element name");
        int el = -1;
        if (name == "1") {
            el = G.identity;
        } else if (name.size() > 1 && name[0] == 'g' &&
                   std::isdigit((unsigned char)name[1])) {
            int k = std::stoi(name.substr(1));
            if (k < 1 || k > (int)G.generators.size()) fail("no generator " + name);
            el = G.generators[k - 1];
        } else {
            for (int i = 0; i < G.order; ++i)
                if (G.label(i) == name) el = i;
            if (el < 0) fail("unknown element '" + name + "'");
        }
        long long e = 1;
        skip();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            skip();
            bool neg = false;
            if (pos < text.size() && text[pos] == '-') {
                neg = true;
                ++pos;
            }
            std::string num;
            while (pos < text.size() && std::isdigit((unsigned char)text[pos])) num += text[pos++];
            if (num.empty()) fail("expected exponent");
            e = std::stoll(num);
            if (neg) e = -e;
        }
        acc = G.mul(acc, G.pow(el, e));
        skip();
        if (pos >= text.size()) break;
        if (text[pos] != '*') fail("expected '*'");
        ++pos;
    }
    return acc;
}

WorkbenchConfig parse_config(const std::string& text, const std::string&) {
    Parser p(text);
    return p.parse();
}

WorkbenchConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), path);
}

ComoduleAlgebraData realize_comodalg(const ComodalgConfig& cfg, const HDAlgebra& HD,
                                     const AutContext& ctx) {
    if (cfg.regular) return regular_comodalg(HD, ctx);
    const Field& F = HD.field();
    int d = (int)cfg.basis.size();
    if (d == 0) throw std::invalid_argument("comodule_algebra: empty basis");
    ComoduleAlgebraData data;
    data.B.fld = F;
    data.B.basis.labels = cfg.basis;
    data.B.mult.assign((size_t)d * d, {});
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            auto it = cfg.mult.find({i, j});
            if (it == cfg.mult.end())
                throw std::invalid_argument("comodule_algebra: missing mult(\"" + cfg.basis[i] +
                                            "\", \"" + cfg.basis[j] + "\")");
            data.B.mult[(size_t)i * d + j] = to_terms(it->second);
        }
    if ((int)cfg.unit.size() != d) throw std::invalid_argument("comodule_algebra: missing unit");
    data.B.unit = to_terms(cfg.unit);
    if ((int)cfg.deg_g.size() != d || (int)cfg.deg_aut.size() != d)
        throw std::invalid_argument("comodule_algebra: missing degree assignments");
    data.deg_g = cfg.deg_g;
    data.deg_aut = cfg.deg_aut;
    auto to_map = [&](const std::vector<std::vector<CycNum>>& rows, const char* what) {
        if ((int)rows.size() != d)
            throw std::invalid_argument(std::string("comodule_algebra: missing ") + what);
        LinMap m(d, d, F);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) m.at(r, c) = rows[r][c];
        return m;
    };
    data.alpha = to_map(cfg.alpha, "alpha");
    data.ladder = to_map(cfg.ladder, "ladder");
    return data;
}

CleftDatum realize_cleft(const CleftConfig& cfg, const HDAlgebra& HD) {
    if (cfg.regular) return regular_cleft_datum(HD);
    CleftDatum d;
    if (!cfg.b_x) throw std::invalid_argument("cleft: missing b_x");
    d.b_x = *cfg.b_x;
    d.b_g.resize(HD.gcount);
    for (int g = 0; g < HD.gcount; ++g) {
        auto it = cfg.b_g.find(g);
        if (it == cfg.b_g.end())
            throw std::invalid_argument("cleft: missing b(\"" + HD.group().label(g) + "\")");
        d.b_g[g] = it->second;
    }
    return d;
}

} // namespace hdw
