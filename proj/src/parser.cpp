#include "ipc/formula.hpp"

namespace ipc {

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("syntax error at position " + std::to_string(position) + ": " + message),
      position_(position) {}

namespace {

constexpr std::string_view kHorseshoe = "\xE2\x8A\x83";  // U+2283

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula run() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError(pos_, "empty input");
    Formula f = formula();
    skip_space();
    if (pos_ != text_.size()) throw ParseError(pos_, "unexpected trailing input");
    return f;
  }

 private:
  Formula formula() {
    Formula lhs = atom();
    skip_space();
    if (!arrow()) return lhs;
    return imp(std::move(lhs), formula());
  }

  Formula atom() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError(pos_, "expected a variable or '('");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Formula inner = formula();
      skip_space();
      if (pos_ == text_.size() || text_[pos_] != ')') throw ParseError(pos_, "expected ')'");
      ++pos_;
      return inner;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_], pos_ == start)) ++pos_;
    if (pos_ == start) throw ParseError(pos_, std::string("unexpected character '") + c + "'");
    return Formula::var(std::string(text_.substr(start, pos_ - start)));
  }

  bool arrow() {
    if (text_.substr(pos_, 2) == "->") {
      pos_ += 2;
      return true;
    }
    if (text_.substr(pos_, kHorseshoe.size()) == kHorseshoe) {
      pos_ += kHorseshoe.size();
      return true;
    }
    return false;
  }

  static bool ident_char(char c, bool first) {
    bool alpha = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
    if (first) return alpha;
    return alpha || (c >= '0' && c <= '9') || c == '_';
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' || text_[pos_] == '\r'))
      ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse(std::string_view text) { return Parser(text).run(); }

}  // namespace ipc
