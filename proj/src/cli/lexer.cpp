#include "dimlat/cli/lexer.hpp"

#include <cctype>

namespace dimlat::cli {

ParseError::ParseError(ErrorKind kind, Pos pos, const std::string& message)
    : std::runtime_error("line " + std::to_string(pos.line) + ", col " + std::to_string(pos.col) + ": " +
                         kind_name(kind) + " error: " + message),
      kind_{kind}, pos_{pos}, message_{message} {}

const char* kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::Lexical:
        return "lexical";
    case ErrorKind::Syntax:
        return "syntax";
    case ErrorKind::Binding:
        return "binding";
    case ErrorKind::Domain:
        return "domain";
    }
    return "unknown";
}

std::string describe(Tok t) {
    switch (t) {
    case Tok::Ident:
        return "identifier";
    case Tok::Int:
        return "integer";
    case Tok::Rational:
        return "rational";
    case Tok::LBrace:
        return "'{'";
    case Tok::RBrace:
        return "'}'";
    case Tok::LBracket:
        return "'['";
    case Tok::RBracket:
        return "']'";
    case Tok::LParen:
        return "'('";
    case Tok::RParen:
        return "')'";
    case Tok::Colon:
        return "':'";
    case Tok::Semi:
        return "';'";
    case Tok::Comma:
        return "','";
    case Tok::Equals:
        return "'='";
    case Tok::DotDot:
        return "'..'";
    case Tok::End:
        return "end of input";
    }
    return "token";
}

namespace {

class Lexer {
  public:
    explicit Lexer(std::string_view src) : src_{src} {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_space();
            Pos start = pos_;
            if (at_end()) {
                out.push_back(Token{Tok::End, "", start});
                return out;
            }
            char c = peek();
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string s;
                while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
                    s += advance();
                out.push_back(Token{Tok::Ident, s, start});
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                out.push_back(number(start));
            } else {
                out.push_back(punct(start));
            }
        }
    }

  private:
    bool at_end() const { return i_ >= src_.size(); }
    char peek(std::size_t k = 0) const { return i_ + k < src_.size() ? src_[i_ + k] : '\0'; }

    char advance() {
        char c = src_[i_++];
        if (c == '\n') {
            ++pos_.line;
            pos_.col = 1;
        } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
            ++pos_.col;
        }
        return c;
    }

    void skip_space() {
        while (!at_end()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else if (c == '#' || (c == '/' && peek(1) == '/')) {
                while (!at_end() && peek() != '\n')
                    advance();
            } else {
                break;
            }
        }
    }

    std::string digits() {
        std::string s;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            s += advance();
        return s;
    }

    Token number(Pos start) {
        std::string s = digits();
        if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))
            throw ParseError(ErrorKind::Lexical, start, "decimal literals are not supported; write k/n");
        if (peek() == '/' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
            advance();
            Pos den_pos = pos_;
            std::string d = digits();
            if (d.find_first_not_of('0') == std::string::npos)
                throw ParseError(ErrorKind::Lexical, den_pos, "zero denominator in '" + s + "/" + d + "'");
            if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))
                throw ParseError(ErrorKind::Lexical, start, "decimal literals are not supported; write k/n");
            return Token{Tok::Rational, s + "/" + d, start};
        }
        return Token{Tok::Int, s, start};
    }

    Token punct(Pos start) {
        char c = advance();
        switch (c) {
        case '{':
            return Token{Tok::LBrace, "{", start};
        case '}':
            return Token{Tok::RBrace, "}", start};
        case '[':
            return Token{Tok::LBracket, "[", start};
        case ']':
            return Token{Tok::RBracket, "]", start};
        case '(':
            return Token{Tok::LParen, "(", start};
        case ')':
            return Token{Tok::RParen, ")", start};
        case ':':
            return Token{Tok::Colon, ":", start};
        case ';':
            return Token{Tok::Semi, ";", start};
        case ',':
            return Token{Tok::Comma, ",", start};
        case '=':
            return Token{Tok::Equals, "=", start};
        case '.':
            if (peek() == '.') {
                advance();
                return Token{Tok::DotDot, "..", start};
            }
            break;
        default:
            break;
        }
        std::string shown(1, c);
        if ((static_cast<unsigned char>(c) & 0x80) != 0) {
            while (!at_end() && (static_cast<unsigned char>(peek()) & 0xC0) == 0x80)
                shown += advance();
        }
        throw ParseError(ErrorKind::Lexical, start, "unexpected character '" + shown + "'");
    }

    std::string_view src_;
    std::size_t i_ = 0;
    Pos pos_;
};

} // namespace

std::vector<Token> lex(std::string_view src) { return Lexer{src}.run(); }

} // namespace dimlat::cli
