#ifndef RELPLAN_PDDL_LEXER_H
#define RELPLAN_PDDL_LEXER_H

#include "relplan/pddl_ast.h"

#include <string>
#include <string_view>
#include <vector>

namespace relplan {

enum class TokenKind { LParen, RParen, Symbol, Keyword, Variable, Dash, End };

struct Token {
    TokenKind kind;
    std::string text; // lower-cased; keywords keep the leading ':'
    SourcePos pos;
};

// Tokenizes PDDL text: parentheses, '-', ':keywords', '?variables' and bare
// symbols. ';' starts a comment to end of line. Rejects non-ASCII bytes.
std::vector<Token> tokenize(std::string_view text);

} // namespace relplan

#endif
