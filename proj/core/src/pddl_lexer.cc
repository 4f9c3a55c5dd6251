#include "pddl_lexer.h"

#include "relplan/errors.h"

#include <cctype>

namespace relplan {

namespace {

bool is_symbol_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' ||
           c == '_' || c == '=';
}

} // namespace

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    int line = 1, column = 1;
    size_t i = 0;
    auto advance = [&](char c) {
        if (c == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    };
    while (i < text.size()) {
        char c = text[i];
        if (static_cast<unsigned char>(c) > 127)
            throw ParseError(line, column, "non-ASCII byte in input");
        if (c == ';') {
            while (i < text.size() && text[i] != '\n') {
                advance(text[i]);
                ++i;
            }
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(c);
            ++i;
            continue;
        }
        SourcePos pos{line, column};
        if (c == '(') {
            tokens.push_back({TokenKind::LParen, "(", pos});
            advance(c);
            ++i;
            continue;
        }
        if (c == ')') {
            tokens.push_back({TokenKind::RParen, ")", pos});
            advance(c);
            ++i;
            continue;
        }
        if (c == '-' && (i + 1 >= text.size() ||
                         !is_symbol_char(text[i + 1]))) {
            tokens.push_back({TokenKind::Dash, "-", pos});
            advance(c);
            ++i;
            continue;
        }
        TokenKind kind = TokenKind::Symbol;
        std::string word;
        if (c == ':') {
            kind = TokenKind::Keyword;
            word += ':';
            advance(c);
            ++i;
        } else if (c == '?') {
            kind = TokenKind::Variable;
            word += '?';
            advance(c);
            ++i;
        }
        size_t start = i;
        while (i < text.size() && is_symbol_char(text[i])) {
            advance(text[i]);
            ++i;
        }
        if (i == start)
            throw ParseError(line, column,
                             std::string("unexpected character '") + c + "'");
        for (size_t j = start; j < i; ++j)
            word += static_cast<char>(
                std::tolower(static_cast<unsigned char>(text[j])));
        tokens.push_back({kind, std::move(word), pos});
    }
    tokens.push_back({TokenKind::End, "", {line, column}});
    return tokens;
}

} // namespace relplan
