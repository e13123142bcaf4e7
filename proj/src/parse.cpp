#include "thomas/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace thomas {

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    explicit Lexer(const std::string& str) : s(str) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            throw ParseError(std::string("expected '") + c + "' at offset " + std::to_string(pos) +
                             " in \"" + s + "\"");
    }
    bool ident_ahead() {
        char c = peek();
        return std::isalpha((unsigned char)c) || c == '_';
    }
    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && (std::isalnum((unsigned char)s[pos]) || s[pos] == '_')) ++pos;
        if (start == pos) throw ParseError("expected identifier in \"" + s + "\"");
        return s.substr(start, pos - start);
    }
    bool int_ahead() { return std::isdigit((unsigned char)peek()); }
    mpz_class integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (start == pos) throw ParseError("expected integer in \"" + s + "\"");
        return mpz_class(s.substr(start, pos - start));
    }
};

struct ExprParser {
    Lexer lex;
    Context& ctx;

    ExprParser(const std::string& s, Context& c) : lex(s), ctx(c) {}

    Poly parse() {
        Poly p = expr();
        if (!lex.eof())
            throw ParseError("trailing input at offset " + std::to_string(lex.pos) + " in \"" +
                             lex.s + "\"");
        return p;
    }

    Poly expr() {
        Poly p = lex.accept('-') ? -term() : term();
        while (true) {
            if (lex.accept('+')) p = p + term();
            else if (lex.accept('-')) p = p - term();
            else return p;
        }
    }

    Poly term() {
        Poly p = factor();
        while (lex.accept('*')) p = p * factor();
        return p;
    }

    Poly factor() {
        Poly b = base();
        if (lex.accept('^')) {
            mpz_class e = lex.integer();
            if (e < 0 || e > 1000) throw ParseError("exponent out of range");
            b = b.pow((std::uint32_t)e.get_ui());
        }
        return b;
    }

    Poly base() {
        if (lex.accept('-')) return -factor();
        if (lex.accept('(')) {
            Poly p = expr();
            lex.expect(')');
            return p;
        }
        if (lex.int_ahead()) {
            mpz_class num = lex.integer();
            if (lex.peek() == '/') {
                ++lex.pos;
                mpz_class den = lex.integer();
                if (den == 0) throw ParseError("zero denominator");
                return Poly::constant(make_rational(num, den));
            }
            return Poly::constant(Rational(num));
        }
        if (lex.ident_ahead()) return symbol();
        throw ParseError("unexpected character at offset " + std::to_string(lex.pos) + " in \"" +
                         lex.s + "\"");
    }

    Poly symbol() {
        std::string name = lex.ident();
        const Context::Symbol* sym = ctx.find(name);
        if (!sym) throw ParseError("undeclared symbol: " + name);
        if (lex.peek() == '[') {
            if (sym->kind != VarKind::Der)
                throw ParseError("derivative brackets on non-indeterminate: " + name);
            lex.expect('[');
            std::vector<int> jet;
            if (!lex.accept(']')) {
                do {
                    mpz_class j = lex.integer();
                    if (j < 0 || j > 100000) throw ParseError("derivative index out of range");
                    jet.push_back((int)j.get_si());
                } while (lex.accept(','));
                lex.expect(']');
            }
            if (jet.size() != ctx.n_indep())
                throw ParseError("derivative of " + name + " needs " +
                                 std::to_string(ctx.n_indep()) + " indices");
            return Poly::var(ctx.dervar(sym->index, MultiIndex(std::move(jet))));
        }
        switch (sym->kind) {
        case VarKind::Der:
            return Poly::var(ctx.dervar(sym->index, MultiIndex(ctx.n_indep())));
        case VarKind::KConst:
        case VarKind::KIndep:
        case VarKind::Alg:
            return Poly::var(sym->vid);
        }
        throw ParseError("unreachable");
    }
};

std::vector<std::string> split_names(std::istringstream& in) {
    std::vector<std::string> names;
    std::string w;
    while (in >> w) names.push_back(w);
    return names;
}

} // namespace

Poly parse_poly(const std::string& text, Context& ctx) {
    return ExprParser(text, ctx).parse();
}

SystemFile parse_system_text(const std::string& text) {
    SystemFile sf;
    sf.ctx = std::make_shared<Context>();
    Context& ctx = *sf.ctx;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::vector<std::pair<bool, std::string>> member_lines; // is_equation, expr
    std::vector<std::string> rank_line;
    bool saw_rank = false;
    std::string rank_text;
    try {
        while (std::getline(in, line)) {
            ++lineno;
            auto hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            std::istringstream ls(line);
            std::string kw;
            if (!(ls >> kw)) continue;
            if (kw == "indep") {
                for (const std::string& n : split_names(ls)) ctx.add_indep(n);
            } else if (kw == "const") {
                for (const std::string& n : split_names(ls)) ctx.add_constant(n);
            } else if (kw == "indets" || kw == "indet") {
                for (const std::string& n : split_names(ls)) ctx.add_indet(n);
            } else if (kw == "rank") {
                if (saw_rank) throw ParseError("duplicate rank line");
                saw_rank = true;
                std::getline(ls, rank_text);
            } else if (kw == "eq" || kw == "ineq") {
                std::string rest;
                std::getline(ls, rest);
                member_lines.push_back({kw == "eq", rest});
            } else {
                throw ParseError("unknown directive '" + kw + "'");
            }
        }
        if (ctx.n_indep() == 0) throw ParseError("no independent variables declared");
        if (ctx.n_indets() == 0) throw ParseError("no indeterminates declared");

        if (saw_rank) {
            // rank [a,b] > [c] > [d,e]
            Lexer lex(rank_text);
            std::vector<bool> seen(ctx.n_indets(), false);
            while (true) {
                lex.expect('[');
                std::vector<int> block;
                if (!lex.accept(']')) {
                    do {
                        int idx = ctx.indet_index(lex.ident());
                        if (seen[(std::size_t)idx]) throw ParseError("indeterminate ranked twice");
                        seen[(std::size_t)idx] = true;
                        block.push_back(idx);
                    } while (lex.accept(','));
                    lex.expect(']');
                }
                if (block.empty()) throw ParseError("empty ranking block");
                sf.ranking.blocks.push_back(std::move(block));
                if (!lex.accept('>')) break;
            }
            if (!lex.eof()) throw ParseError("trailing input on rank line");
            for (std::size_t i = 0; i < seen.size(); ++i)
                if (!seen[i]) throw ParseError("indeterminate missing from ranking: " + ctx.indet_name((int)i));
        }

        for (auto& [is_eq, expr] : member_lines) {
            Poly p = parse_poly(expr, ctx);
            (is_eq ? sf.equations : sf.inequations).push_back(p);
        }
    } catch (ParseError& e) {
        throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
    return sf;
}

SystemFile parse_system_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open input file: " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_system_text(buf.str());
}

} // namespace thomas
