#include "detgb/expr.hpp"

#include <cctype>

namespace detgb {

IdealExpr IdealExpr::minors(MinorsIdealSpec spec, SourceSpan span) {
  IdealExpr e;
  e.kind_ = Kind::minors;
  e.spec_ = spec;
  e.span_ = span;
  return e;
}

IdealExpr IdealExpr::principal(Polynomial poly, SourceSpan span) {
  IdealExpr e;
  e.kind_ = Kind::principal;
  e.poly_ = std::move(poly);
  e.span_ = span;
  return e;
}

IdealExpr IdealExpr::sum_of(std::vector<IdealExpr> children, SourceSpan span) {
  if (children.size() == 1) return std::move(children.front());
  if (children.empty()) throw DomainError("sum node needs children");
  IdealExpr e;
  e.kind_ = Kind::sum;
  e.span_ = span;
  for (IdealExpr& c : children) {
    if (c.kind_ == Kind::sum) {
      for (IdealExpr& gc : c.children_) e.children_.push_back(std::move(gc));
    } else {
      e.children_.push_back(std::move(c));
    }
  }
  return e;
}

IdealExpr IdealExpr::intersect_of(std::vector<IdealExpr> children,
                                  SourceSpan span) {
  if (children.size() == 1) return std::move(children.front());
  if (children.empty()) throw DomainError("intersect node needs children");
  IdealExpr e;
  e.kind_ = Kind::intersect;
  e.span_ = span;
  for (IdealExpr& c : children) {
    if (c.kind_ == Kind::intersect) {
      for (IdealExpr& gc : c.children_) e.children_.push_back(std::move(gc));
    } else {
      e.children_.push_back(std::move(c));
    }
  }
  return e;
}

IdealExpr IdealExpr::colon_of(IdealExpr numerator, IdealExpr denominator,
                              SourceSpan span) {
  IdealExpr e;
  e.kind_ = Kind::colon;
  e.span_ = span;
  e.children_.push_back(std::move(numerator));
  e.children_.push_back(std::move(denominator));
  return e;
}

const MinorsIdealSpec& IdealExpr::minors_spec() const {
  if (kind_ != Kind::minors) throw DomainError("not a minors node");
  return spec_;
}

const Polynomial& IdealExpr::principal_poly() const {
  if (kind_ != Kind::principal || !poly_.has_value()) {
    throw DomainError("not a principal node");
  }
  return *poly_;
}

std::string IdealExpr::print(std::uint32_t m, std::uint32_t n) const {
  switch (kind_) {
    case Kind::minors:
      return spec_.to_string(m, n);
    case Kind::principal:
      return "poly(" + poly_->to_string() + ")";
    case Kind::sum: {
      std::string s;
      for (std::size_t k = 0; k < children_.size(); ++k) {
        if (k > 0) s += " + ";
        s += children_[k].print(m, n);
      }
      return s;
    }
    case Kind::intersect: {
      std::string s;
      for (std::size_t k = 0; k < children_.size(); ++k) {
        if (k > 0) s += " & ";
        const IdealExpr& c = children_[k];
        if (c.kind_ == Kind::sum) {
          s += "(" + c.print(m, n) + ")";
        } else {
          s += c.print(m, n);
        }
      }
      return s;
    }
    case Kind::colon:
      return "colon(" + children_[0].print(m, n) + ", " +
             children_[1].print(m, n) + ")";
  }
  return "";
}

bool IdealExpr::operator==(const IdealExpr& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case Kind::minors:
      return spec_ == other.spec_;
    case Kind::principal:
      return *poly_ == *other.poly_;
    default:
      if (children_.size() != other.children_.size()) return false;
      for (std::size_t k = 0; k < children_.size(); ++k) {
        if (children_[k] != other.children_[k]) return false;
      }
      return true;
  }
}

namespace {

struct Token {
  enum class Type { word, integer, lparen, rparen, lbracket, rbracket, comma,
                    plus, amp, equals, dotdot, end };
  Type type = Type::end;
  std::string text;
  std::uint32_t value = 0;
  std::size_t begin = 0, end = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& current() const { return current_; }

  void advance() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    current_ = Token{};
    current_.begin = pos_;
    if (pos_ >= text_.size()) {
      current_.type = Token::Type::end;
      current_.end = pos_;
      return;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      current_.type = Token::Type::word;
      current_.text = std::string(text_.substr(start, pos_ - start));
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      std::uint64_t value = 0;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        value = value * 10 + (text_[pos_] - '0');
        if (value > 0xffffffffull) value = 0xffffffffull;
        ++pos_;
      }
      current_.type = Token::Type::integer;
      current_.value = static_cast<std::uint32_t>(value);
      current_.text = std::string(text_.substr(start, pos_ - start));
    } else if (c == '.' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '.') {
      pos_ += 2;
      current_.type = Token::Type::dotdot;
    } else {
      ++pos_;
      switch (c) {
        case '(': current_.type = Token::Type::lparen; break;
        case ')': current_.type = Token::Type::rparen; break;
        case '[': current_.type = Token::Type::lbracket; break;
        case ']': current_.type = Token::Type::rbracket; break;
        case ',': current_.type = Token::Type::comma; break;
        case '+': current_.type = Token::Type::plus; break;
        case '&': current_.type = Token::Type::amp; break;
        case '=': current_.type = Token::Type::equals; break;
        default:
          current_.type = Token::Type::end;
          current_.text = std::string(1, c);
          current_.end = pos_;
          fail(ParseError::Code::syntax,
               "unexpected character '" + std::string(1, c) + "'",
               current_.begin);
      }
    }
    current_.end = pos_;
  }

  [[noreturn]] void fail(ParseError::Code code, const std::string& message,
                         std::size_t offset) const {
    std::size_t line = 1, column = 1;
    for (std::size_t k = 0; k < offset && k < text_.size(); ++k) {
      if (text_[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(code, line, column, offset,
                     message + " at line " + std::to_string(line) + ", column " +
                         std::to_string(column));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_;
};

class Parser {
 public:
  Parser(std::string_view text, std::uint32_t m, std::uint32_t n)
      : lexer_(text), m_(m), n_(n) {}

  IdealExpr run() {
    IdealExpr e = expr();
    if (lexer_.current().type != Token::Type::end) {
      lexer_.fail(ParseError::Code::syntax, "trailing input after expression",
                  lexer_.current().begin);
    }
    return e;
  }

 private:
  Token expect(Token::Type type, const std::string& what) {
    Token tok = lexer_.current();
    if (tok.type != type) {
      lexer_.fail(ParseError::Code::syntax, "expected " + what, tok.begin);
    }
    lexer_.advance();
    return tok;
  }

  bool accept(Token::Type type) {
    if (lexer_.current().type == type) {
      lexer_.advance();
      return true;
    }
    return false;
  }

  IdealExpr expr() {
    std::size_t begin = lexer_.current().begin;
    std::vector<IdealExpr> terms;
    terms.push_back(term());
    while (accept(Token::Type::plus)) terms.push_back(term());
    std::size_t end = terms.back().span().end;
    return IdealExpr::sum_of(std::move(terms), SourceSpan{begin, end});
  }

  IdealExpr term() {
    std::size_t begin = lexer_.current().begin;
    std::vector<IdealExpr> factors;
    factors.push_back(factor());
    while (accept(Token::Type::amp)) factors.push_back(factor());
    std::size_t end = factors.back().span().end;
    return IdealExpr::intersect_of(std::move(factors), SourceSpan{begin, end});
  }

  IdealExpr factor() {
    const Token& tok = lexer_.current();
    if (tok.type == Token::Type::lparen) {
      lexer_.advance();
      IdealExpr inner = expr();
      expect(Token::Type::rparen, "')'");
      return inner;
    }
    if (tok.type == Token::Type::word && tok.text == "I") return minors();
    if (tok.type == Token::Type::word && tok.text == "colon") return colon();
    lexer_.fail(ParseError::Code::syntax,
                "expected 'I(', 'colon(' or a parenthesized expression",
                tok.begin);
  }

  IdealExpr minors() {
    std::size_t begin = lexer_.current().begin;
    expect(Token::Type::word, "'I'");
    expect(Token::Type::lparen, "'('");
    Token t_tok = expect(Token::Type::integer, "minor size");
    expect(Token::Type::comma, "','");
    RegionSpec region = this->region();
    Token close = expect(Token::Type::rparen, "')'");

    MinorsIdealSpec spec{t_tok.value, region};
    if (t_tok.value < 1 || t_tok.value > region.row_count() ||
        t_tok.value > region.col_count()) {
      lexer_.fail(ParseError::Code::minor_too_large,
                  "minor size " + t_tok.text + " exceeds region " +
                      region.to_string(m_, n_),
                  t_tok.begin);
    }
    return IdealExpr::minors(spec, SourceSpan{begin, close.end});
  }

  IdealExpr colon() {
    std::size_t begin = lexer_.current().begin;
    expect(Token::Type::word, "'colon'");
    expect(Token::Type::lparen, "'('");
    IdealExpr numerator = expr();
    expect(Token::Type::comma, "','");
    IdealExpr denominator = expr();
    Token close = expect(Token::Type::rparen, "')'");
    return IdealExpr::colon_of(std::move(numerator), std::move(denominator),
                               SourceSpan{begin, close.end});
  }

  RegionSpec region() {
    Token x = expect(Token::Type::word, "'X'");
    if (x.text != "X") {
      lexer_.fail(ParseError::Code::syntax, "expected 'X'", x.begin);
    }
    RegionSpec region = RegionSpec::full(m_, n_);
    if (!accept(Token::Type::lbracket)) return region;

    bool saw_rows = false, saw_cols = false;
    while (true) {
      Token key = expect(Token::Type::word, "'rows' or 'cols'");
      if (key.text != "rows" && key.text != "cols") {
        lexer_.fail(ParseError::Code::syntax, "expected 'rows' or 'cols'",
                    key.begin);
      }
      bool rows = key.text == "rows";
      if ((rows && saw_rows) || (!rows && saw_cols)) {
        lexer_.fail(ParseError::Code::syntax,
                    "duplicate '" + key.text + "' key", key.begin);
      }
      (rows ? saw_rows : saw_cols) = true;

      expect(Token::Type::equals, "'='");
      Token lo = expect(Token::Type::integer, "interval start");
      expect(Token::Type::dotdot, "'..'");
      Token hi = expect(Token::Type::integer, "interval end");

      std::uint32_t bound = rows ? m_ : n_;
      if (lo.value < 1 || lo.value > hi.value || hi.value > bound) {
        lexer_.fail(ParseError::Code::region_out_of_range,
                    "interval " + lo.text + ".." + hi.text + " out of range 1.." +
                        std::to_string(bound),
                    lo.begin);
      }
      if (rows) {
        region.row_lo = lo.value;
        region.row_hi = hi.value;
      } else {
        region.col_lo = lo.value;
        region.col_hi = hi.value;
      }
      if (accept(Token::Type::rbracket)) break;
      expect(Token::Type::comma, "',' or ']'");
    }
    return region;
  }

  Lexer lexer_;
  std::uint32_t m_, n_;
};

}  // namespace

IdealExpr parse_ideal_expr(std::string_view text, std::uint32_t m,
                           std::uint32_t n) {
  if (m == 0 || n == 0) throw DomainError("matrix dimensions must be positive");
  return Parser(text, m, n).run();
}

IdealHandle evaluate(const IdealExpr& ast, const RingPtr& ctx,
                     const ResourceLimits& limits) {
  switch (ast.kind()) {
    case IdealExpr::Kind::minors:
      return minors_ideal(ctx, ast.minors_spec());
    case IdealExpr::Kind::principal: {
      std::vector<Polynomial> gens;
      gens.push_back(ast.principal_poly().in_ring(ctx));
      return IdealHandle::from_generators(
          ctx, std::move(gens), ast.print(ctx->rows(), ctx->cols()));
    }
    case IdealExpr::Kind::sum: {
      IdealHandle acc = evaluate(ast.children()[0], ctx, limits);
      for (std::size_t k = 1; k < ast.children().size(); ++k) {
        acc = sum(acc, evaluate(ast.children()[k], ctx, limits));
      }
      return acc;
    }
    case IdealExpr::Kind::intersect: {
      IdealHandle acc = evaluate(ast.children()[0], ctx, limits);
      for (std::size_t k = 1; k < ast.children().size(); ++k) {
        acc = intersect(acc, evaluate(ast.children()[k], ctx, limits), limits);
      }
      return acc;
    }
    case IdealExpr::Kind::colon:
      return quotient(evaluate(ast.children()[0], ctx, limits),
                      evaluate(ast.children()[1], ctx, limits), limits);
  }
  throw Error("internal: unknown expression node");
}

bool is_pure_minors_sum(const IdealExpr& ast) {
  if (ast.kind() == IdealExpr::Kind::minors) return true;
  if (ast.kind() != IdealExpr::Kind::sum) return false;
  for (const IdealExpr& c : ast.children()) {
    if (c.kind() != IdealExpr::Kind::minors) return false;
  }
  return true;
}

std::vector<MinorsIdealSpec> minors_summands(const IdealExpr& ast) {
  if (!is_pure_minors_sum(ast)) {
    throw DomainError("expression is not a pure sum of minors ideals");
  }
  std::vector<MinorsIdealSpec> specs;
  if (ast.kind() == IdealExpr::Kind::minors) {
    specs.push_back(ast.minors_spec());
  } else {
    for (const IdealExpr& c : ast.children()) specs.push_back(c.minors_spec());
  }
  return specs;
}

}  // namespace detgb
