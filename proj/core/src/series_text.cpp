// Recursive-descent reader for the canonical series rendering.
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor ('*' factor)*
//   factor  := primary ['^' integer]
//   primary := integer | 'q' | 'L' | 't' | '(' expr ')'

#include <cctype>
#include <stdexcept>
#include <string>

#include "qhilb/series.hpp"

namespace qhilb {

namespace {

class SeriesReader {
 public:
  SeriesReader(std::string_view text, std::size_t order, bool allow_t)
      : text_(text), order_(order), allow_t_(allow_t) {}

  TruncatedSeries read() {
    TruncatedSeries value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

  bool saw_q() const { return saw_q_; }
  bool saw_l() const { return saw_l_; }

 private:
  // Coefficients are accumulated in a placeholder variable and renamed by the caller.
  static constexpr Variable kScratch = Variable::L;

  TruncatedSeries expr() {
    skip_space();
    bool negate = false;
    if (peek('+') || peek('-')) negate = text_[pos_++] == '-';
    TruncatedSeries acc = term();
    if (negate) acc = TruncatedSeries(kScratch, order_) - acc;
    for (;;) {
      skip_space();
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  TruncatedSeries term() {
    TruncatedSeries acc = factor();
    for (;;) {
      skip_space();
      if (!peek('*')) return acc;
      ++pos_;
      acc = acc * factor();
    }
  }

  TruncatedSeries factor() {
    TruncatedSeries base = primary();
    skip_space();
    if (!peek('^')) return base;
    ++pos_;
    skip_space();
    const unsigned long e = integer_literal().get_ui();
    TruncatedSeries result = TruncatedSeries::one(kScratch, order_);
    for (unsigned long k = 0; k < e; ++k) {
      result = result * base;
      if (is_zero(result)) break;
    }
    return result;
  }

  TruncatedSeries primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return constant(IntPolynomial(std::vector<Integer>{integer_literal()}));
    }
    if (c == '(') {
      ++pos_;
      TruncatedSeries inner = expr();
      skip_space();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    ++pos_;
    switch (c) {
      case 'q':
        saw_q_ = true;
        return constant(IntPolynomial::variable());
      case 'L':
        saw_l_ = true;
        return constant(IntPolynomial::variable());
      case 't': {
        if (!allow_t_) fail("'t' is not allowed in a polynomial");
        TruncatedSeries s(kScratch, order_);
        if (order_ >= 1) s = TruncatedSeries(kScratch, order_, {IntPolynomial(0), IntPolynomial(1)});
        return s;
      }
      default:
        --pos_;
        fail("unexpected '" + std::string(1, c) + "'");
    }
  }

  Integer integer_literal() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  TruncatedSeries constant(IntPolynomial p) const {
    return TruncatedSeries(kScratch, order_, {std::move(p)});
  }

  static bool is_zero(const TruncatedSeries& s) {
    for (const auto& c : s.coefficients()) {
      if (!c.is_zero()) return false;
    }
    return true;
  }

  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error at column " + std::to_string(pos_ + 1) + ": " +
                                what);
  }

  std::string_view text_;
  std::size_t order_;
  bool allow_t_;
  std::size_t pos_ = 0;
  bool saw_q_ = false;
  bool saw_l_ = false;
};

Variable resolve_variable(const SeriesReader& reader, std::optional<Variable> requested) {
  if (reader.saw_q() && reader.saw_l()) {
    throw std::invalid_argument("parse error: mixes the variables q and L");
  }
  std::optional<Variable> seen;
  if (reader.saw_q()) seen = Variable::q;
  if (reader.saw_l()) seen = Variable::L;
  if (requested && seen && *requested != *seen) {
    throw std::invalid_argument("parse error: expected variable " +
                                std::string(symbol(*requested)) + ", found " +
                                std::string(symbol(*seen)));
  }
  return requested.value_or(seen.value_or(Variable::L));
}

}  // namespace

TruncatedSeries parse_series(std::string_view text, std::size_t order,
                             std::optional<Variable> var) {
  SeriesReader reader(text, order, true);
  TruncatedSeries s = reader.read();
  return s.renamed(resolve_variable(reader, var));
}

IntPolynomial parse_polynomial(std::string_view text, Variable var) {
  SeriesReader reader(text, 0, false);
  TruncatedSeries s = reader.read();
  resolve_variable(reader, var);
  return s[0];
}

}  // namespace qhilb
