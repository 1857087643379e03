#include "quadid/dsl.hpp"

#include "quadid/sampling.hpp"

#include <cctype>
#include <functional>
#include <sstream>

namespace quadid::dsl {

namespace {

bool is_factor(const Node& n) {
  return n.op == Op::Literal || n.op == Op::Point || n.op == Op::Area;
}

bool is_sum(const Node& n) { return n.op == Op::Add || n.op == Op::Sub; }

bool is_zero_literal(const Node& n) { return n.op == Op::Literal && n.value.is_zero(); }

NodePtr make_leaf(Op op, Type type, Rational value, std::array<char, 3> letters) {
  return std::make_shared<const Node>(Node{op, type, std::move(value), letters, nullptr, nullptr});
}

NodePtr make_unary(const NodePtr& child) {
  return std::make_shared<const Node>(Node{Op::Neg, child->type, Rational{}, {}, child, nullptr});
}

NodePtr make_binary(Op op, const NodePtr& l, const NodePtr& r) {
  Type type = Type::Scalar;
  if (op == Op::Mul) {
    if (l->type == Type::Vector && r->type == Type::Vector) {
      Node tmp{op, Type::Vector, Rational{}, {}, l, r};
      throw TypeError("product of two vectors", print(tmp));
    }
    type = (l->type == Type::Vector || r->type == Type::Vector) ? Type::Vector : Type::Scalar;
  } else {
    if (l->type != r->type) {
      Node tmp{op, l->type, Rational{}, {}, l, r};
      throw TypeError("sum mixes scalar and vector terms", print(tmp));
    }
    type = l->type;
  }
  return std::make_shared<const Node>(Node{op, type, Rational{}, {}, l, r});
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  IdentityAst identity() {
    NodePtr lhs = expr();
    skip_ws();
    if (!consume("==") && !consume("=")) fail("expected '==' or '='");
    NodePtr rhs = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");

    if (lhs->type == rhs->type) {
      return {lhs->type == Type::Vector ? IdentityKind::Vector : IdentityKind::Scalar, lhs, rhs};
    }
    // A bare 0 stands for the zero vector opposite a vector side.
    if (is_zero_literal(*rhs) || is_zero_literal(*lhs)) {
      return {IdentityKind::Vector, lhs, rhs};
    }
    throw TypeError("sides of the identity have different types",
                    print(lhs->type == Type::Scalar ? *lhs : *rhs));
  }

 private:
  NodePtr expr() {
    NodePtr acc = term();
    for (;;) {
      skip_ws();
      if (consume("+")) {
        acc = make_binary(Op::Add, acc, term());
      } else if (peek() == '-' ) {
        ++pos_;
        acc = make_binary(Op::Sub, acc, term());
      } else {
        return acc;
      }
    }
  }

  NodePtr term() {
    skip_ws();
    if (consume("-")) return make_unary(term());
    NodePtr acc = factor();
    for (;;) {
      skip_ws();
      if (!consume("*")) return acc;
      acc = make_binary(Op::Mul, acc, factor());
    }
  }

  NodePtr factor() {
    skip_ws();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      NodePtr inner = expr();
      skip_ws();
      if (!consume(")")) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return literal();
    if (c >= 'A' && c <= 'Z') {
      ++pos_;
      if (c == 'K') {
        const std::size_t save = pos_;
        skip_ws();
        if (consume("[")) return area();
        pos_ = save;
      }
      return make_leaf(Op::Point, Type::Vector, Rational{}, {c, 0, 0});
    }
    if (pos_ >= text_.size()) fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }

  NodePtr area() {
    std::array<char, 3> letters{};
    for (char& l : letters) {
      skip_ws();
      const char c = peek();
      if (c < 'A' || c > 'Z') fail("expected a point letter inside K[...]");
      l = c;
      ++pos_;
    }
    skip_ws();
    if (!consume("]")) fail("expected ']' after three point letters");
    return make_leaf(Op::Area, Type::Scalar, Rational{}, letters);
  }

  NodePtr literal() {
    const std::size_t start = pos_;
    auto digits = [&] {
      const std::size_t from = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return pos_ > from;
    };
    digits();
    if (peek() == '.' || peek() == '/') {
      const std::size_t sep = pos_++;
      if (!digits()) {
        pos_ = sep + 1;
        fail("expected digits");
      }
    }
    try {
      return make_leaf(Op::Literal, Type::Scalar, parse_rational(text_.substr(start, pos_ - start)),
                       {});
    } catch (const DivisionByZero&) {
      pos_ = start;
      fail("zero denominator in literal");
    }
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  bool consume(std::string_view tok) {
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void print_expr(std::ostream& os, const Node& n);

void print_term(std::ostream& os, const Node& n) {
  switch (n.op) {
    case Op::Literal:
      os << n.value.str();
      return;
    case Op::Point:
      os << n.letters[0];
      return;
    case Op::Area:
      os << "K[" << n.letters[0] << n.letters[1] << n.letters[2] << ']';
      return;
    case Op::Neg:
      os << '-';
      if (is_sum(*n.lhs)) {
        os << '(';
        print_expr(os, *n.lhs);
        os << ')';
      } else {
        print_term(os, *n.lhs);
      }
      return;
    case Op::Mul:
      if (n.lhs->op == Op::Mul || is_factor(*n.lhs)) {
        print_term(os, *n.lhs);
      } else {
        os << '(';
        print_expr(os, *n.lhs);
        os << ')';
      }
      os << '*';
      if (is_factor(*n.rhs)) {
        print_term(os, *n.rhs);
      } else {
        os << '(';
        print_expr(os, *n.rhs);
        os << ')';
      }
      return;
    case Op::Add:
    case Op::Sub:
      os << '(';
      print_expr(os, n);
      os << ')';
      return;
  }
}

void print_expr(std::ostream& os, const Node& n) {
  if (!is_sum(n)) {
    print_term(os, n);
    return;
  }
  print_expr(os, *n.lhs);
  os << (n.op == Op::Add ? " + " : " - ");
  print_term(os, *n.rhs);  // a sum on the right gets parenthesized
}

void collect_letters(const Node& n, std::set<char>& out) {
  switch (n.op) {
    case Op::Point:
      out.insert(n.letters[0]);
      break;
    case Op::Area:
      out.insert(n.letters.begin(), n.letters.end());
      break;
    default:
      if (n.lhs) collect_letters(*n.lhs, out);
      if (n.rhs) collect_letters(*n.rhs, out);
  }
}

using Value = Residual;

const Point2<Rational>& lookup(const Assignment& a, char letter) {
  const auto it = a.find(letter);
  if (it == a.end()) throw MissingAssignment(letter);
  return it->second;
}

Value eval(const Node& n, const Assignment& a) {
  switch (n.op) {
    case Op::Literal:
      return n.value;
    case Op::Point:
      return lookup(a, n.letters[0]).position();
    case Op::Area:
      return signed_area(lookup(a, n.letters[0]), lookup(a, n.letters[1]),
                         lookup(a, n.letters[2]));
    case Op::Neg:
      return std::visit([](const auto& v) -> Value { return -v; }, eval(*n.lhs, a));
    case Op::Add:
    case Op::Sub: {
      const Value l = eval(*n.lhs, a);
      const Value r = eval(*n.rhs, a);
      return std::visit(
          [&](const auto& x, const auto& y) -> Value {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, std::decay_t<decltype(y)>>) {
              return n.op == Op::Add ? Value(x + y) : Value(x - y);
            } else {
              throw std::logic_error("ill-typed sum reached the evaluator");
            }
          },
          l, r);
    }
    case Op::Mul: {
      const Value l = eval(*n.lhs, a);
      const Value r = eval(*n.rhs, a);
      if (const auto* ls = std::get_if<Rational>(&l)) {
        if (const auto* rs = std::get_if<Rational>(&r)) return *ls * *rs;
        return *ls * std::get<Vec2<Rational>>(r);
      }
      return std::get<Rational>(r) * std::get<Vec2<Rational>>(l);
    }
  }
  throw std::logic_error("unknown node");
}

// Sum of scalar weights carried by point leaves of a vector expression.
Rational point_weight(const Node& n, const Assignment& a) {
  switch (n.op) {
    case Op::Point:
      return 1;
    case Op::Neg:
      return -point_weight(*n.lhs, a);
    case Op::Add:
      return point_weight(*n.lhs, a) + point_weight(*n.rhs, a);
    case Op::Sub:
      return point_weight(*n.lhs, a) - point_weight(*n.rhs, a);
    case Op::Mul:
      if (n.lhs->type == Type::Vector) return point_weight(*n.lhs, a) * std::get<Rational>(eval(*n.rhs, a));
      return std::get<Rational>(eval(*n.lhs, a)) * point_weight(*n.rhs, a);
    default:
      return 0;  // scalar leaves, including a bare 0 standing for the zero vector
  }
}

}  // namespace

bool structurally_equal(const Node& a, const Node& b) {
  if (a.op != b.op || a.type != b.type) return false;
  switch (a.op) {
    case Op::Literal:
      return a.value == b.value;
    case Op::Point:
      return a.letters[0] == b.letters[0];
    case Op::Area:
      return a.letters == b.letters;
    case Op::Neg:
      return structurally_equal(*a.lhs, *b.lhs);
    default:
      return structurally_equal(*a.lhs, *b.lhs) && structurally_equal(*a.rhs, *b.rhs);
  }
}

IdentityAst parse_identity(std::string_view text) { return Parser(text).identity(); }

std::string print(const Node& node) {
  std::ostringstream os;
  print_expr(os, node);
  return os.str();
}

std::string print(const IdentityAst& ast) { return print(*ast.lhs) + " == " + print(*ast.rhs); }

std::set<char> point_letters(const IdentityAst& ast) {
  std::set<char> out;
  collect_letters(*ast.lhs, out);
  collect_letters(*ast.rhs, out);
  return out;
}

bool is_zero(const Residual& r) {
  return std::visit([](const auto& v) { return v.is_zero(); }, r);
}

std::string format_residual(const Residual& r) {
  if (const auto* s = std::get_if<Rational>(&r)) return s->str();
  std::ostringstream os;
  os << std::get<Vec2<Rational>>(r);
  return os.str();
}

Residual eval_identity(const IdentityAst& ast, const Assignment& assignment) {
  // Resolve every letter up front so a missing one is reported even when the
  // side it sits on would short-circuit to zero.
  for (char c : point_letters(ast)) lookup(assignment, c);

  if (ast.kind == IdentityKind::Scalar) {
    return std::get<Rational>(eval(*ast.lhs, assignment)) -
           std::get<Rational>(eval(*ast.rhs, assignment));
  }
  auto as_vector = [&](const Node& side) -> Vec2<Rational> {
    if (side.type == Type::Scalar) return {};  // bare 0
    return std::get<Vec2<Rational>>(eval(side, assignment));
  };
  return as_vector(*ast.lhs) - as_vector(*ast.rhs);
}

Rational weight_imbalance(const IdentityAst& ast, const Assignment& assignment) {
  if (ast.kind == IdentityKind::Scalar) return 0;
  for (char c : point_letters(ast)) lookup(assignment, c);
  return point_weight(*ast.lhs, assignment) - point_weight(*ast.rhs, assignment);
}

Assignment draw_assignment(const std::set<char>& letters, std::uint64_t seed,
                           std::uint64_t sample, std::int64_t range) {
  const CounterRng rng(seed);
  Assignment out;
  for (char c : letters) {
    const auto slot = static_cast<std::uint64_t>(c - 'A') * 2;
    out[c] = {Rational(static_cast<long>(rng.symmetric(sample, slot, range))),
              Rational(static_cast<long>(rng.symmetric(sample, slot + 1, range)))};
  }
  return out;
}

VerifyReport verify_identity(const IdentityAst& ast, const VerifyOptions& options) {
  if (options.samples < 1) throw std::invalid_argument("samples must be at least 1");
  if (options.range < 2) throw std::invalid_argument("coordinate range must be at least 2");

  VerifyReport report{print(ast), options.samples, options.seed, options.range, std::nullopt, {}};
  const auto letters = point_letters(ast);

  bool balanced = true;
  for (std::uint64_t i = 0; i < options.samples; ++i) {
    auto assignment = draw_assignment(letters, options.seed, i, options.range);
    if (balanced && !weight_imbalance(ast, assignment).is_zero()) balanced = false;
    Residual r = eval_identity(ast, assignment);
    if (!is_zero(r)) {
      report.refutation = Refutation{i, std::move(assignment), std::move(r)};
      break;
    }
  }
  if (!balanced) {
    report.warnings.emplace_back("total point weight differs between the two sides");
  }
  return report;
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  os << "identity: " << identity << '\n'
     << "samples: " << samples << '\n'
     << "seed: " << seed << '\n'
     << "range: " << range << '\n';
  if (!refutation) {
    os << "result: verified\n";
  } else {
    os << "result: refuted\n"
       << "sample: " << refutation->sample << '\n'
       << "counterexample:";
    for (const auto& [letter, p] : refutation->counterexample) os << ' ' << letter << '=' << p;
    os << '\n' << "residual: " << format_residual(refutation->residual) << '\n';
  }
  for (const auto& w : warnings) os << "warning: " << w << '\n';
  return os.str();
}

}  // namespace quadid::dsl
