#include "relplan/pddl.h"

#include "pddl_lexer.h"
#include "relplan/errors.h"

#include <algorithm>
#include <set>

namespace relplan {

namespace {

const std::set<std::string> kSupportedRequirements = {
    ":strips", ":typing", ":negative-preconditions", ":equality"};

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

    DomainAst parse_domain() {
        DomainAst d;
        expect(TokenKind::LParen);
        expect_symbol("define");
        expect(TokenKind::LParen);
        expect_symbol("domain");
        d.name = expect(TokenKind::Symbol).text;
        expect(TokenKind::RParen);
        while (peek().kind == TokenKind::LParen) {
            expect(TokenKind::LParen);
            const Token &section = expect(TokenKind::Keyword);
            if (section.text == ":requirements") {
                parse_requirements(d.requirements);
            } else if (section.text == ":types") {
                d.types = parse_typed_list();
            } else if (section.text == ":constants") {
                d.constants = parse_typed_list();
            } else if (section.text == ":predicates") {
                while (peek().kind == TokenKind::LParen)
                    d.predicates.push_back(parse_predicate_decl());
                expect(TokenKind::RParen);
            } else if (section.text == ":action") {
                d.actions.push_back(parse_action());
            } else {
                throw ParseError(section.pos.line, section.pos.column,
                                 "unsupported domain section " + section.text);
            }
        }
        expect(TokenKind::RParen);
        expect(TokenKind::End);
        return d;
    }

    ProblemAst parse_problem() {
        ProblemAst p;
        expect(TokenKind::LParen);
        expect_symbol("define");
        expect(TokenKind::LParen);
        expect_symbol("problem");
        p.name = expect(TokenKind::Symbol).text;
        expect(TokenKind::RParen);
        while (peek().kind == TokenKind::LParen) {
            expect(TokenKind::LParen);
            const Token &section = expect(TokenKind::Keyword);
            if (section.text == ":domain") {
                p.domain_name = expect(TokenKind::Symbol).text;
                expect(TokenKind::RParen);
            } else if (section.text == ":requirements") {
                std::vector<std::string> ignored;
                parse_requirements(ignored);
            } else if (section.text == ":objects") {
                p.objects = parse_typed_list();
            } else if (section.text == ":init") {
                while (peek().kind == TokenKind::LParen)
                    p.init.push_back(parse_ground_atom());
                expect(TokenKind::RParen);
            } else if (section.text == ":goal") {
                parse_goal(p.goal);
                expect(TokenKind::RParen);
            } else {
                throw ParseError(section.pos.line, section.pos.column,
                                 "unsupported problem section " + section.text);
            }
        }
        expect(TokenKind::RParen);
        expect(TokenKind::End);
        return p;
    }

private:
    std::vector<Token> tokens_;
    size_t pos_ = 0;

    const Token &peek(int ahead = 0) const {
        size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
        return tokens_[i];
    }
    const Token &next() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }

    const Token &expect(TokenKind kind) {
        const Token &t = next();
        if (t.kind != kind)
            throw ParseError(t.pos.line, t.pos.column,
                             "unexpected token '" + t.text + "', expected " +
                                 kind_name(kind));
        return t;
    }

    void expect_symbol(const std::string &text) {
        const Token &t = next();
        if (t.kind != TokenKind::Symbol || t.text != text)
            throw ParseError(t.pos.line, t.pos.column,
                             "unexpected token '" + t.text + "', expected '" +
                                 text + "'");
    }

    static std::string kind_name(TokenKind kind) {
        switch (kind) {
        case TokenKind::LParen: return "'('";
        case TokenKind::RParen: return "')'";
        case TokenKind::Symbol: return "a symbol";
        case TokenKind::Keyword: return "a ':' keyword";
        case TokenKind::Variable: return "a '?' variable";
        case TokenKind::Dash: return "'-'";
        case TokenKind::End: return "end of input";
        }
        return "?";
    }

    void parse_requirements(std::vector<std::string> &out) {
        while (peek().kind == TokenKind::Keyword) {
            const Token &t = next();
            if (!kSupportedRequirements.count(t.text))
                throw UnsupportedRequirementError(t.text);
            out.push_back(t.text);
        }
        expect(TokenKind::RParen);
    }

    // Names optionally followed by "- type", repeated; trailing ')' consumed.
    std::vector<TypedName> parse_typed_list() {
        std::vector<TypedName> out;
        std::vector<size_t> pending;
        for (;;) {
            const Token &t = peek();
            if (t.kind == TokenKind::RParen) {
                next();
                return out;
            }
            if (t.kind == TokenKind::Dash) {
                next();
                const Token &type = expect(TokenKind::Symbol);
                for (size_t i : pending)
                    out[i].type = type.text;
                pending.clear();
                continue;
            }
            if (t.kind != TokenKind::Symbol && t.kind != TokenKind::Variable)
                throw ParseError(t.pos.line, t.pos.column,
                                 "unexpected token '" + t.text +
                                     "' in typed list");
            next();
            pending.push_back(out.size());
            out.push_back(TypedName{t.text, "object", t.pos});
        }
    }

    PredicateDecl parse_predicate_decl() {
        PredicateDecl decl;
        const Token &open = expect(TokenKind::LParen);
        decl.pos = open.pos;
        decl.name = expect(TokenKind::Symbol).text;
        decl.params = parse_typed_list();
        return decl;
    }

    ActionSchema parse_action() {
        ActionSchema schema;
        const Token &name = expect(TokenKind::Symbol);
        schema.name = name.text;
        schema.pos = name.pos;
        while (peek().kind == TokenKind::Keyword) {
            const Token &part = next();
            if (part.text == ":parameters") {
                expect(TokenKind::LParen);
                schema.params = parse_typed_list();
            } else if (part.text == ":precondition") {
                parse_condition(schema.preconditions, /*allow_equality=*/true);
            } else if (part.text == ":effect") {
                parse_condition(schema.effects, /*allow_equality=*/false);
            } else {
                throw ParseError(part.pos.line, part.pos.column,
                                 "unsupported action part " + part.text);
            }
        }
        expect(TokenKind::RParen);
        return schema;
    }

    // Either a single literal or (and literal*). Stores conjuncts in order.
    void parse_condition(std::vector<Literal> &out, bool allow_equality) {
        expect(TokenKind::LParen);
        const Token &head = peek();
        if (head.kind == TokenKind::RParen) {
            next();
            return;
        }
        if (head.kind == TokenKind::Symbol && head.text == "and") {
            next();
            while (peek().kind == TokenKind::LParen) {
                expect(TokenKind::LParen);
                out.push_back(parse_literal(allow_equality));
            }
            expect(TokenKind::RParen);
        } else {
            out.push_back(parse_literal(allow_equality));
        }
    }

    // Called just after the literal's '(' has been consumed.
    Literal parse_literal(bool allow_equality) {
        Literal lit;
        const Token &head = peek();
        lit.pos = head.pos;
        if (head.kind == TokenKind::Symbol && head.text == "not") {
            next();
            expect(TokenKind::LParen);
            lit = parse_literal(allow_equality);
            lit.negated = true;
            expect(TokenKind::RParen);
            return lit;
        }
        const Token &name = expect(TokenKind::Symbol);
        if (name.text == "=") {
            if (!allow_equality)
                throw ParseError(name.pos.line, name.pos.column,
                                 "equality is only allowed in preconditions");
            lit.is_equality = true;
        } else {
            lit.predicate = name.text;
        }
        while (peek().kind == TokenKind::Symbol ||
               peek().kind == TokenKind::Variable)
            lit.args.push_back(next().text);
        expect(TokenKind::RParen);
        if (lit.is_equality && lit.args.size() != 2)
            throw ParseError(lit.pos.line, lit.pos.column,
                             "equality takes exactly two arguments");
        return lit;
    }

    GroundAtom parse_ground_atom() {
        GroundAtom atom;
        const Token &open = expect(TokenKind::LParen);
        atom.pos = open.pos;
        atom.predicate = expect(TokenKind::Symbol).text;
        while (peek().kind == TokenKind::Symbol)
            atom.args.push_back(next().text);
        expect(TokenKind::RParen);
        return atom;
    }

    // Goal: (<atom>), ((and) treated as empty), or (and atom*). Negative
    // goals are not part of the supported subset.
    void parse_goal(std::vector<GroundAtom> &out) {
        expect(TokenKind::LParen);
        const Token &head = peek();
        if (head.kind == TokenKind::RParen) {
            next();
            return;
        }
        if (head.kind == TokenKind::Symbol && head.text == "and") {
            next();
            while (peek().kind == TokenKind::LParen) {
                expect(TokenKind::LParen);
                out.push_back(parse_goal_atom());
            }
            expect(TokenKind::RParen);
            return;
        }
        out.push_back(parse_goal_atom());
    }

    GroundAtom parse_goal_atom() {
        GroundAtom atom;
        const Token &name = expect(TokenKind::Symbol);
        if (name.text == "not")
            throw ParseError(name.pos.line, name.pos.column,
                             "negative goals are not supported");
        atom.pos = name.pos;
        atom.predicate = name.text;
        while (peek().kind == TokenKind::Symbol)
            atom.args.push_back(next().text);
        expect(TokenKind::RParen);
        return atom;
    }
};

} // namespace

DomainAst parse_domain(std::string_view text) {
    return Parser(text).parse_domain();
}

ProblemAst parse_problem(std::string_view text) {
    return Parser(text).parse_problem();
}

} // namespace relplan
