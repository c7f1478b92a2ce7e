#include "c1ke/syntax.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace c1ke {

SyntaxError::SyntaxError(std::string message, std::size_t offset, std::vector<std::string> expected)
    : std::runtime_error(std::move(message)), offset(offset), expected(std::move(expected)) {}

namespace {

// ── lexer ───────────────────────────────────────────────────────────────────

enum class Tok : std::uint8_t { Atom, Neg, Cons, And, Or, Imp, LParen, RParen, Comma, Turnstile, End };

const char* tok_spelling(Tok t) {
    switch (t) {
        case Tok::Atom: return "atom";
        case Tok::Neg: return "'~'";
        case Tok::Cons: return "'@'";
        case Tok::And: return "'&'";
        case Tok::Or: return "'|'";
        case Tok::Imp: return "'->'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::Comma: return "','";
        case Tok::Turnstile: return "'|-'";
        case Tok::End: return "end of input";
    }
    return "?";
}

struct Lexer {
    std::string_view text;
    std::size_t pos = 0;
    Tok tok = Tok::End;
    std::size_t tok_pos = 0;
    std::string_view tok_text;

    explicit Lexer(std::string_view t) : text(t) { advance(); }

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        std::ostringstream os;
        os << "syntax error at offset " << tok_pos << ": unexpected " << tok_spelling(tok);
        if (tok == Tok::Atom) os << " '" << std::string(tok_text) << "'";
        if (!expected.empty()) {
            os << ", expected ";
            for (std::size_t i = 0; i < expected.size(); ++i)
                os << (i ? " or " : "") << expected[i];
        }
        throw SyntaxError(os.str(), tok_pos, std::move(expected));
    }

    void advance() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r'))
            ++pos;
        tok_pos = pos;
        if (pos >= text.size()) {
            tok = Tok::End;
            return;
        }
        char c = text[pos];
        auto alpha = [](char x) { return (x >= 'A' && x <= 'Z') || (x >= 'a' && x <= 'z'); };
        auto alnum = [&](char x) { return alpha(x) || (x >= '0' && x <= '9') || x == '_'; };
        if (alpha(c)) {
            std::size_t end = pos + 1;
            while (end < text.size() && alnum(text[end])) ++end;
            tok = Tok::Atom;
            tok_text = text.substr(pos, end - pos);
            pos = end;
            return;
        }
        switch (c) {
            case '~':
            case '!': tok = Tok::Neg; pos += 1; return;
            case '@': tok = Tok::Cons; pos += 1; return;
            case '&': tok = Tok::And; pos += 1; return;
            case '(': tok = Tok::LParen; pos += 1; return;
            case ')': tok = Tok::RParen; pos += 1; return;
            case ',': tok = Tok::Comma; pos += 1; return;
            case '|':
                if (pos + 1 < text.size() && text[pos + 1] == '-') {
                    tok = Tok::Turnstile;
                    pos += 2;
                } else {
                    tok = Tok::Or;
                    pos += 1;
                }
                return;
            case '-':
                if (pos + 1 < text.size() && text[pos + 1] == '>') {
                    tok = Tok::Imp;
                    pos += 2;
                    return;
                }
                break;
            default: break;
        }
        std::ostringstream os;
        os << "syntax error at offset " << pos << ": stray character '" << c << "'";
        throw SyntaxError(os.str(), pos, {"atom", "'~'", "'@'", "'('"});
    }
};

// ── recursive-descent parser ────────────────────────────────────────────────

struct Parser {
    Lexer lex;
    explicit Parser(std::string_view text) : lex(text) {}

    FormulaId parse_imp() {
        FormulaId lhs = parse_or();
        if (lex.tok == Tok::Imp) {
            lex.advance();
            return mk_imp(lhs, parse_imp());  // right-associative
        }
        return lhs;
    }

    FormulaId parse_or() {
        FormulaId lhs = parse_and();
        if (lex.tok == Tok::Or) {
            lex.advance();
            return mk_or(lhs, parse_or());
        }
        return lhs;
    }

    FormulaId parse_and() {
        FormulaId lhs = parse_unary();
        if (lex.tok == Tok::And) {
            lex.advance();
            return mk_and(lhs, parse_and());
        }
        return lhs;
    }

    FormulaId parse_unary() {
        if (lex.tok == Tok::Neg) {
            lex.advance();
            return mk_neg(parse_unary());
        }
        if (lex.tok == Tok::Cons) {
            lex.advance();
            return mk_cons(parse_unary());
        }
        return parse_primary();
    }

    FormulaId parse_primary() {
        if (lex.tok == Tok::Atom) {
            FormulaId f = mk_atom(lex.tok_text);
            lex.advance();
            return f;
        }
        if (lex.tok == Tok::LParen) {
            lex.advance();
            FormulaId f = parse_imp();
            expect(Tok::RParen);
            return f;
        }
        lex.fail({"atom", "'~'", "'@'", "'('"});
    }

    void expect(Tok t) {
        if (lex.tok != t) lex.fail({tok_spelling(t)});
        lex.advance();
    }
};

// ── printer ─────────────────────────────────────────────────────────────────

struct OpSpelling {
    const char* neg;
    const char* cons;
    const char* and_;
    const char* or_;
    const char* imp;
};

OpSpelling spelling(PrintStyle style) {
    switch (style) {
        case PrintStyle::Unicode: return {"¬", "∘", " ∧ ", " ∨ ", " → "};
        case PrintStyle::Latex: return {"\\neg ", "\\circ ", " \\wedge ", " \\vee ", " \\to "};
        case PrintStyle::Ascii:
        default: return {"~", "@", " & ", " | ", " -> "};
    }
}

// Binding strength of the node's top constructor; parentheses are needed
// exactly where reparsing at this level would regroup.
int level(FormulaId f) {
    switch (kind(f)) {
        case Kind::Atom: return 4;
        case Kind::Neg:
        case Kind::Cons: return 3;
        case Kind::And: return 2;
        case Kind::Or: return 1;
        case Kind::Imp: return 0;
    }
    return 4;
}

void print_rec(std::string& out, FormulaId f, const OpSpelling& sp) {
    auto child = [&](FormulaId c, bool need_parens) {
        if (need_parens) {
            out += '(';
            print_rec(out, c, sp);
            out += ')';
        } else {
            print_rec(out, c, sp);
        }
    };
    int lv = level(f);
    switch (kind(f)) {
        case Kind::Atom:
            out += atom_name(f);
            break;
        case Kind::Neg:
            out += sp.neg;
            child(left(f), level(left(f)) < 3);
            break;
        case Kind::Cons:
            out += sp.cons;
            child(left(f), level(left(f)) < 3);
            break;
        case Kind::And:
        case Kind::Or:
        case Kind::Imp: {
            const char* op = kind(f) == Kind::And ? sp.and_ : kind(f) == Kind::Or ? sp.or_ : sp.imp;
            // right-associative: a left child at the same level regroups
            child(left(f), level(left(f)) <= lv);
            out += op;
            child(right(f), level(right(f)) < lv);
            break;
        }
    }
}

std::string trim(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

}  // namespace

FormulaId parse_formula(std::string_view text) {
    Parser p(text);
    FormulaId f = p.parse_imp();
    if (p.lex.tok != Tok::End) p.lex.fail({"end of input"});
    return f;
}

Sequent parse_sequent(std::string_view text) {
    Parser p(text);
    Sequent s;
    if (p.lex.tok == Tok::Turnstile) {
        p.lex.advance();
        s.conclusion = p.parse_imp();
    } else {
        FormulaId first = p.parse_imp();
        std::vector<FormulaId> items{first};
        while (p.lex.tok == Tok::Comma) {
            p.lex.advance();
            items.push_back(p.parse_imp());
        }
        p.expect(Tok::Turnstile);
        s.premises = std::move(items);
        s.conclusion = p.parse_imp();
    }
    if (p.lex.tok != Tok::End) p.lex.fail({"end of input"});
    return s;
}

std::string print_formula(FormulaId f, PrintStyle style) {
    std::string out;
    print_rec(out, f, spelling(style));
    return out;
}

std::string print_sequent(const Sequent& s, PrintStyle style) {
    std::string out;
    for (std::size_t i = 0; i < s.premises.size(); ++i) {
        if (i) out += ", ";
        out += print_formula(s.premises[i], style);
    }
    if (!s.premises.empty()) out += ' ';
    out += style == PrintStyle::Unicode ? "⊢ " : style == PrintStyle::Latex ? "\\vdash " : "|- ";
    out += print_formula(s.conclusion, style);
    return out;
}

std::vector<ProblemLine> parse_problem_text(std::string_view content) {
    std::vector<ProblemLine> out;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= content.size()) {
        std::size_t nl = content.find('\n', start);
        std::string_view line = content.substr(start, nl == std::string_view::npos ? content.size() - start : nl - start);
        ++line_no;

        std::optional<bool> expected;
        std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) {
            std::string comment = trim(line.substr(hash + 1));
            if (comment.rfind("expect:", 0) == 0) {
                std::string v = trim(comment.substr(7));
                if (v == "valid") expected = true;
                else if (v == "invalid") expected = false;
            }
            line = line.substr(0, hash);
        }
        std::string body = trim(line);
        if (!body.empty()) {
            ProblemLine pl;
            try {
                pl.sequent = parse_sequent(body);
            } catch (const SyntaxError& e) {
                throw SyntaxError("line " + std::to_string(line_no) + ": " + e.what(), e.offset,
                                  e.expected);
            }
            pl.expected_valid = expected;
            pl.line_no = line_no;
            pl.text = body;
            out.push_back(std::move(pl));
        }
        if (nl == std::string_view::npos) break;
        start = nl + 1;
    }
    return out;
}

std::vector<ProblemLine> parse_problem_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open problem file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_problem_text(ss.str());
}

std::string format_problem_line(const ProblemLine& line) {
    std::string out = line.text.empty() ? print_sequent(line.sequent) : line.text;
    if (line.expected_valid)
        out += *line.expected_valid ? "  # expect: valid" : "  # expect: invalid";
    return out;
}

}  // namespace c1ke
