#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "adomian/errors.hpp"
#include "adomian/rational.hpp"

namespace adomian::detail {

enum class Tok { number, ident, plus, minus, star, caret, lparen, rparen, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  std::size_t pos = 0;
};

/// Tokenizer shared by the polynomial and nonlinear-expression parsers.
class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

  bool accept(Tok k) {
    if (tok_.kind != k) return false;
    advance();
    return true;
  }

  Token expect(Tok k, const char* what) {
    if (tok_.kind != k) fail(std::string("expected ") + what);
    return take();
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(tok_.pos) + " in '" + std::string(src_) + "'");
  }

  /// Integer literal with optional sign, e.g. the exponent in `u^-3`.
  long signed_integer() {
    bool neg = false;
    if (accept(Tok::minus)) neg = true;
    else accept(Tok::plus);
    bool paren = false;
    if (!neg && accept(Tok::lparen)) {
      paren = true;
      if (accept(Tok::minus)) neg = true;
    }
    Token t = expect(Tok::number, "integer");
    if (t.text.find_first_not_of("0123456789") != std::string::npos) fail("expected integer, got '" + t.text + "'");
    long v = std::stol(t.text);
    if (paren) expect(Tok::rparen, "')'");
    return neg ? -v : v;
  }

 private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    tok_ = Token{};
    tok_.pos = pos_;
    if (pos_ >= src_.size()) return;
    const char ch = src_[pos_];
    auto single = [&](Tok k) {
      tok_.kind = k;
      tok_.text = std::string(1, ch);
      ++pos_;
    };
    switch (ch) {
      case '+': return single(Tok::plus);
      case '-': return single(Tok::minus);
      case '*': return single(Tok::star);
      case '^': return single(Tok::caret);
      case '(': return single(Tok::lparen);
      case ')': return single(Tok::rparen);
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
      std::size_t end = pos_;
      auto digits = [&] {
        while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) ++end;
      };
      digits();
      if (end < src_.size() && src_[end] == '.') {
        ++end;
        digits();
      }
      if (end < src_.size() && (src_[end] == 'e' || src_[end] == 'E') && end + 1 < src_.size() &&
          (std::isdigit(static_cast<unsigned char>(src_[end + 1])) ||
           ((src_[end + 1] == '-' || src_[end + 1] == '+') && end + 2 < src_.size() &&
            std::isdigit(static_cast<unsigned char>(src_[end + 2]))))) {
        end += 2;
        digits();
      } else if (end < src_.size() && src_[end] == '/' && end + 1 < src_.size() &&
                 std::isdigit(static_cast<unsigned char>(src_[end + 1]))) {
        ++end;
        digits();
      }
      tok_.kind = Tok::number;
      tok_.text = std::string(src_.substr(pos_, end - pos_));
      pos_ = end;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t end = pos_;
      while (end < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_')) ++end;
      tok_.kind = Tok::ident;
      tok_.text = std::string(src_.substr(pos_, end - pos_));
      pos_ = end;
      return;
    }
    throw ParseError(std::string("unexpected character '") + ch + "' at position " + std::to_string(pos_) +
                     " in '" + std::string(src_) + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Token tok_;
};

}  // namespace adomian::detail
