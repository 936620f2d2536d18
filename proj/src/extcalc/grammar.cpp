#include "jforge/extcalc/grammar.hpp"

#include <cctype>

#include "jforge/extcalc/calculus.hpp"

namespace jforge {

namespace {

enum class Tok { Number, Name, Differential, Vector, Op, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;  // 1-based
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto skip_ws = [&](std::size_t k) {
    while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k]))) ++k;
    return k;
  };
  auto read_ident = [&](std::size_t k) {
    std::size_t e = k;
    while (e < s.size() && ident_char(s[e])) ++e;
    return e;
  };
  while (true) {
    i = skip_ws(i);
    if (i >= s.size()) break;
    const char c = s[i];
    const std::size_t col = i + 1;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t e = i;
      while (e < s.size() && std::isdigit(static_cast<unsigned char>(s[e]))) ++e;
      if (e < s.size() && ident_char(s[e])) throw ParseError("malformed number", col);
      out.push_back({Tok::Number, std::string(s.substr(i, e - i)), col});
      i = e;
    } else if (ident_start(c)) {
      std::size_t e = read_ident(i);
      std::string name(s.substr(i, e - i));
      std::size_t next = skip_ws(e);
      if (name == "d" && next < s.size() && ident_start(s[next])) {
        std::size_t e2 = read_ident(next);
        out.push_back({Tok::Differential, std::string(s.substr(next, e2 - next)), col});
        i = e2;
      } else {
        out.push_back({Tok::Name, std::move(name), col});
        i = e;
      }
    } else if (c == '@') {
      std::size_t next = skip_ws(i + 1);
      if (next >= s.size() || !ident_start(s[next])) throw ParseError("expected coordinate after '@'", col);
      std::size_t e = read_ident(next);
      out.push_back({Tok::Vector, std::string(s.substr(next, e - next)), col});
      i = e;
    } else if (c == '+' || c == '-' || c == '*' || c == '/' || c == '^') {
      out.push_back({Tok::Op, std::string(1, c), col});
      ++i;
    } else if (c == '(') {
      out.push_back({Tok::LParen, "(", col});
      ++i;
    } else if (c == ')') {
      out.push_back({Tok::RParen, ")", col});
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", col);
    }
  }
  out.push_back({Tok::End, "", s.size() + 1});
  return out;
}

int degree_of(const Expr& e) {
  return std::visit(
      [](const auto& v) -> int {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, ScalarField>) return 0;
        else return v.degree();
      },
      e);
}

class Parser {
 public:
  Parser(std::string_view text, ChartPtr chart, const SymbolTable* symbols)
      : toks_(tokenize(text)), chart_(std::move(chart)), symbols_(symbols) {}

  Expr run() {
    if (peek().kind == Tok::End) throw ParseError("empty expression", peek().column);
    Expr e = expr();
    if (peek().kind != Tok::End) {
      const Token& t = peek();
      if (t.kind == Tok::RParen) throw ParseError("unbalanced ')'", t.column);
      throw ParseError("unexpected '" + t.text + "' (juxtaposition needs '*' or '^')", t.column);
    }
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool at_op(char c) const { return peek().kind == Tok::Op && peek().text[0] == c; }
  const Token& take() { return toks_[pos_++]; }

  Expr expr() {
    Expr acc = term();
    while (at_op('+') || at_op('-')) {
      const Token& op = take();
      Expr rhs = term();
      acc = add(acc, rhs, op.text[0] == '-', op.column);
    }
    return acc;
  }

  Expr term() {
    Expr acc = unary();
    while (at_op('*') || at_op('/')) {
      const Token& op = take();
      Expr rhs = unary();
      acc = op.text[0] == '*' ? mul(acc, rhs, op.column) : div(acc, rhs, op.column);
    }
    return acc;
  }

  Expr unary() {
    if (at_op('-')) {
      take();
      return negate(unary());
    }
    if (at_op('+')) {
      take();
      return unary();
    }
    return power();
  }

  Expr power() {
    Expr base = atom();
    if (at_op('^')) {
      const Token& op = take();
      Expr rhs = unary();
      return caret(base, rhs, op.column);
    }
    return base;
  }

  Expr atom() {
    const Token& t = take();
    switch (t.kind) {
      case Tok::Number:
        return ScalarField::constant(chart_, Rational(mpq_class(mpz_class(t.text))));
      case Tok::Name: {
        if (auto i = chart_->index_of(t.text)) return ScalarField::coordinate(chart_, *i);
        if (symbols_) {
          auto it = symbols_->find(t.text);
          if (it != symbols_->end()) return it->second;
        }
        throw UnknownCoordinate(t.text);
      }
      case Tok::Differential:
        return dx(chart_, coord(t));
      case Tok::Vector:
        return partial_vector(chart_, coord(t));
      case Tok::LParen: {
        Expr e = expr();
        if (peek().kind != Tok::RParen) throw ParseError("expected ')'", peek().column);
        take();
        return e;
      }
      case Tok::End:
        throw ParseError("unexpected end of expression", t.column);
      default:
        throw ParseError("unexpected '" + t.text + "'", t.column);
    }
  }

  int coord(const Token& t) const {
    if (auto i = chart_->index_of(t.text)) return *i;
    throw UnknownCoordinate(t.text);
  }

  static Expr negate(const Expr& e) {
    return std::visit([](const auto& v) -> Expr { return -v; }, e);
  }

  static Expr add(const Expr& a, const Expr& b, bool minus, std::size_t col) {
    if (a.index() != b.index() || degree_of(a) != degree_of(b))
      throw ParseError("cannot add elements of different kind or degree", col);
    return std::visit(
        [&](const auto& x) -> Expr {
          using T = std::decay_t<decltype(x)>;
          const T& y = std::get<T>(b);
          return minus ? T(x - y) : T(x + y);
        },
        a);
  }

  static Expr scale(const ScalarField& s, const Expr& g) {
    return std::visit(
        [&](const auto& v) -> Expr {
          using T = std::decay_t<decltype(v)>;
          return T(s * v);
        },
        g);
  }

  static Expr mul(const Expr& a, const Expr& b, std::size_t col) {
    if (const auto* s = std::get_if<ScalarField>(&a)) return scale(*s, b);
    if (const auto* s = std::get_if<ScalarField>(&b)) return scale(*s, a);
    throw ParseError("'*' between graded factors; use '^' for the wedge product", col);
  }

  static Expr div(const Expr& a, const Expr& b, std::size_t col) {
    const auto* s = std::get_if<ScalarField>(&b);
    if (!s) throw ParseError("division by a graded element", col);
    if (s->is_zero()) throw DivisionByZero();
    return scale(s->inverse(), a);
  }

  static Expr caret(const Expr& a, const Expr& b, std::size_t col) {
    const auto* sa = std::get_if<ScalarField>(&a);
    const auto* sb = std::get_if<ScalarField>(&b);
    if (sa && sb) {
      if (!sb->is_constant() || !sb->constant_value().is_integer())
        throw ParseError("exponent must be an integer constant", col);
      const mpz_class n = sb->constant_value().num();
      if (!n.fits_sint_p() || abs(n) > 255) throw ParseError("exponent out of range", col);
      if (sa->is_zero() && n < 0) throw DivisionByZero();
      return sa->pow(static_cast<int>(n.get_si()));
    }
    if (sa) return scale(*sa, b);
    if (sb) return scale(*sb, a);
    if (a.index() != b.index()) throw ParseError("wedge of a form with a multivector", col);
    return std::visit(
        [&](const auto& x) -> Expr {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, ScalarField>) return x;
          else return wedge(x, std::get<T>(b));
        },
        a);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  ChartPtr chart_;
  const SymbolTable* symbols_;
};

template <class Tag>
std::string serialize_graded(const BasicGraded<Tag, ScalarField>& g) {
  constexpr bool form = std::is_same_v<Tag, FormTag>;
  if (g.is_zero()) return "0";
  if (g.degree() == 0) return g.terms().begin()->second.str();
  std::string out;
  bool first = true;
  for (const auto& [idx, c] : g.terms()) {
    bool negative = c.num().leading().c.sign() < 0;
    ScalarField a = negative ? -c : c;
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    first = false;
    std::string basis;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (k) basis += " ^ ";
      basis += (form ? "d " : "@") + g.chart()->name(idx[k]);
    }
    if (a.is_one()) {
      out += basis;
      continue;
    }
    std::string cs = a.str();
    if (a.is_polynomial() && a.num().size() > 1) cs = "(" + cs + ")";
    out += cs + "*" + basis;
  }
  return out;
}

}  // namespace

Expr parse_expression(std::string_view text, const ChartPtr& chart, const SymbolTable* symbols) {
  if (!chart) throw DomainError("parsing needs a chart");
  return Parser(text, chart, symbols).run();
}

ScalarField parse_scalar(std::string_view text, const ChartPtr& chart, const SymbolTable* symbols) {
  Expr e = parse_expression(text, chart, symbols);
  if (auto* s = std::get_if<ScalarField>(&e)) return s->with_chart(chart);
  throw ParseError("expected a scalar expression", 1);
}

DifferentialForm parse_form(std::string_view text, const ChartPtr& chart, const SymbolTable* symbols,
                            int zero_degree) {
  Expr e = parse_expression(text, chart, symbols);
  if (auto* s = std::get_if<ScalarField>(&e))
    return s->is_zero() ? DifferentialForm(chart, zero_degree) : as_form(chart, *s);
  if (auto* f = std::get_if<DifferentialForm>(&e)) return *f;
  throw ParseError("expected a differential form", 1);
}

MultiVectorField parse_multivector(std::string_view text, const ChartPtr& chart, const SymbolTable* symbols,
                                   int zero_degree) {
  Expr e = parse_expression(text, chart, symbols);
  if (auto* s = std::get_if<ScalarField>(&e))
    return s->is_zero() ? MultiVectorField(chart, zero_degree) : as_multivector(chart, *s);
  if (auto* v = std::get_if<MultiVectorField>(&e)) return *v;
  throw ParseError("expected a multivector field", 1);
}

std::string serialize(const ScalarField& f) { return f.str(); }
std::string serialize(const DifferentialForm& w) { return serialize_graded(w); }
std::string serialize(const MultiVectorField& A) { return serialize_graded(A); }
std::string serialize(const Expr& e) {
  return std::visit([](const auto& v) { return serialize(v); }, e);
}

std::ostream& operator<<(std::ostream& os, const DifferentialForm& w) { return os << serialize(w); }
std::ostream& operator<<(std::ostream& os, const MultiVectorField& A) { return os << serialize(A); }

}  // namespace jforge
