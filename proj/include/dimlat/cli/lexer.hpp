#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dimlat::cli {

struct Pos {
    int line = 1;
    int col = 1;
    friend bool operator==(const Pos&, const Pos&) = default;
};

enum class ErrorKind { Lexical, Syntax, Binding, Domain };

/// Diagnostic with a source position. what() is "line L, col C: <kind> error: <message>".
class ParseError : public std::runtime_error {
  public:
    ParseError(ErrorKind kind, Pos pos, const std::string& message);
    [[nodiscard]] ErrorKind kind() const { return kind_; }
    [[nodiscard]] Pos pos() const { return pos_; }
    [[nodiscard]] const std::string& message() const { return message_; }

  private:
    ErrorKind kind_;
    Pos pos_;
    std::string message_;
};

const char* kind_name(ErrorKind k);

enum class Tok {
    Ident,
    Int,      ///< digits
    Rational, ///< digits "/" digits, no spaces
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    LParen,
    RParen,
    Colon,
    Semi,
    Comma,
    Equals,
    DotDot,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    Pos pos;
};

/// Splits UTF-8 source into tokens. Whitespace and comments ("#" or "//" to end of
/// line) are skipped. Throws ParseError(Lexical) on characters outside the grammar,
/// decimal literals and zero denominators.
std::vector<Token> lex(std::string_view src);

std::string describe(Tok t);

} // namespace dimlat::cli
