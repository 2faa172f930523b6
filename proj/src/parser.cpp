#include "coalp/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace coalp {

namespace {

struct Token {
    enum Kind { Ident, VarIdent, LParen, RParen, Comma, Dot, Arrow, End, Bad } kind;
    std::string text;
    int line;
    int col;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    Token next() {
        skipWs();
        int line = line_, col = col_;
        if (pos_ >= text_.size()) return {Token::End, "", line, col};
        char c = text_[pos_];
        if (c == '(') { advance(); return {Token::LParen, "(", line, col}; }
        if (c == ')') { advance(); return {Token::RParen, ")", line, col}; }
        if (c == ',') { advance(); return {Token::Comma, ",", line, col}; }
        if (c == '.') { advance(); return {Token::Dot, ".", line, col}; }
        if (c == ':' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
            advance();
            advance();
            return {Token::Arrow, ":-", line, col};
        }
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
            std::string s;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                s += text_[pos_];
                advance();
            }
            bool isVar = std::isupper(static_cast<unsigned char>(s[0])) || s[0] == '_';
            return {isVar ? Token::VarIdent : Token::Ident, s, line, col};
        }
        advance();
        return {Token::Bad, std::string(1, c), line, col};
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skipWs() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    Parser(const std::string& text, const Program* arityContext)
        : lexer_(text) {
        if (arityContext) {
            predArity_ = arityContext->predArity;
            funcArity_ = arityContext->funcArity;
        }
        bump();
    }

    std::vector<Diagnostic> diags;

    std::optional<Program> parseProgramText() {
        Program p;
        while (tok_.kind != Token::End) {
            auto clause = parseClause();
            if (!clause) {
                sync();
                continue;
            }
            p.clauses.push_back(std::move(*clause));
        }
        if (hasError()) return std::nullopt;
        p.predArity = predArity_;
        p.funcArity = funcArity_;
        return p;
    }

    std::optional<Atom> parseGoalText() {
        auto a = parseAtom();
        if (!a) return std::nullopt;
        if (tok_.kind == Token::Comma) {
            error(tok_, "conjunctive goals are not supported: a goal is a single atom");
            return std::nullopt;
        }
        expect(Token::Dot, "expected '.' after goal");
        if (tok_.kind != Token::End) error(tok_, "trailing input after goal");
        if (hasError()) return std::nullopt;
        return a;
    }

private:
    void bump() { tok_ = lexer_.next(); }

    bool hasError() const {
        for (const auto& d : diags)
            if (d.severity == Severity::Error) return true;
        return false;
    }

    void error(const Token& at, const std::string& msg) {
        diags.push_back({Severity::Error, at.line, at.col, msg});
    }

    bool expect(Token::Kind k, const std::string& msg) {
        if (tok_.kind != k) {
            error(tok_, msg);
            return false;
        }
        bump();
        return true;
    }

    // Skips to just past the next '.' so one bad clause does not cascade.
    void sync() {
        while (tok_.kind != Token::Dot && tok_.kind != Token::End) bump();
        if (tok_.kind == Token::Dot) bump();
    }

    bool checkArity(std::map<std::string, int>& table, const std::string& name, int arity,
                    const Token& at, const char* what) {
        auto [it, inserted] = table.emplace(name, arity);
        if (!inserted && it->second != arity) {
            std::ostringstream os;
            os << what << " '" << name << "' used with arity " << arity
               << " but previously used with arity " << it->second;
            error(at, os.str());
            return false;
        }
        return true;
    }

    std::optional<TermPtr> parseTerm() {
        if (tok_.kind == Token::VarIdent) {
            Var v{tok_.text, 0};
            bump();
            return Term::makeVar(v);
        }
        if (tok_.kind != Token::Ident) {
            error(tok_, "expected a term");
            return std::nullopt;
        }
        Token name = tok_;
        bump();
        std::vector<TermPtr> args;
        if (tok_.kind == Token::LParen) {
            bump();
            while (true) {
                auto t = parseTerm();
                if (!t) return std::nullopt;
                args.push_back(std::move(*t));
                if (tok_.kind == Token::Comma) {
                    bump();
                    continue;
                }
                break;
            }
            if (!expect(Token::RParen, "expected ')'")) return std::nullopt;
        }
        int arity = static_cast<int>(args.size());
        if (!checkArity(funcArity_, name.text, arity, name, "function symbol"))
            return std::nullopt;
        return Term::makeApp(Symbol{name.text, arity}, std::move(args));
    }

    std::optional<Atom> parseAtom() {
        if (tok_.kind != Token::Ident) {
            error(tok_, "expected a predicate name");
            return std::nullopt;
        }
        Token name = tok_;
        bump();
        std::vector<TermPtr> args;
        if (tok_.kind == Token::LParen) {
            bump();
            while (true) {
                auto t = parseTerm();
                if (!t) return std::nullopt;
                args.push_back(std::move(*t));
                if (tok_.kind == Token::Comma) {
                    bump();
                    continue;
                }
                break;
            }
            if (!expect(Token::RParen, "expected ')'")) return std::nullopt;
        }
        int arity = static_cast<int>(args.size());
        if (!checkArity(predArity_, name.text, arity, name, "predicate"))
            return std::nullopt;
        return Atom{Symbol{name.text, arity}, std::move(args)};
    }

    std::optional<Clause> parseClause() {
        Token start = tok_;
        auto head = parseAtom();
        if (!head) return std::nullopt;
        Clause c;
        c.head = std::move(*head);
        if (tok_.kind == Token::Arrow) {
            bump();
            while (true) {
                Token bodyTok = tok_;
                auto b = parseAtom();
                if (!b) return std::nullopt;
                for (const auto& prev : c.body) {
                    if (atomEq(prev, *b)) {
                        error(bodyTok, "duplicate atom in clause body: body atoms must be distinct");
                        return std::nullopt;
                    }
                }
                c.body.push_back(std::move(*b));
                if (tok_.kind == Token::Comma) {
                    bump();
                    continue;
                }
                break;
            }
        }
        if (!expect(Token::Dot, "expected '.' at end of clause")) return std::nullopt;
        (void)start;
        return c;
    }

    Lexer lexer_;
    Token tok_{};
    std::map<std::string, int> predArity_;
    std::map<std::string, int> funcArity_;
};

}  // namespace

ParseResult parseProgram(const std::string& text) {
    Parser p(text, nullptr);
    ParseResult r;
    r.program = p.parseProgramText();
    r.diagnostics = std::move(p.diags);
    return r;
}

GoalResult parseGoal(const std::string& text, const Program* context) {
    Parser p(text, context);
    GoalResult r;
    r.goal = p.parseGoalText();
    r.diagnostics = std::move(p.diags);
    return r;
}

ParseResult parseProgramFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        ParseResult r;
        r.diagnostics.push_back({Severity::Error, 1, 1, "cannot open file: " + path});
        return r;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parseProgram(buf.str());
}

}  // namespace coalp
