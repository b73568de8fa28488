#include "carleson/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace carleson {

namespace {

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += xs[i];
  }
  return out;
}

}  // namespace

parse_error::parse_error(std::string message, size_t offset, std::vector<std::string> expected)
    : std::runtime_error(message + " at offset " + std::to_string(offset) +
                         " (expected: " + join(expected) + ")"),
      offset_(offset),
      expected_(std::move(expected)) {}

struct Expression::Node {
  enum class Kind { constant, variable, unary, binary } kind;
  double constant = 0;
  size_t var_index = 0;
  char op = 0;  // unary: n,a,e,l,s ; binary: + - * / ^
  std::shared_ptr<const Node> lhs, rhs;

  double eval(const std::vector<double>& v) const {
    switch (kind) {
      case Kind::constant: return constant;
      case Kind::variable: return v[var_index];
      case Kind::unary: {
        const double x = lhs->eval(v);
        switch (op) {
          case 'n': return -x;
          case 'a': return std::fabs(x);
          case 'e': return std::exp(x);
          case 'l': return std::log(x);
          case 's': return std::sqrt(x);
        }
        return NAN;
      }
      case Kind::binary: {
        const double a = lhs->eval(v), b = rhs->eval(v);
        switch (op) {
          case '+': return a + b;
          case '-': return a - b;
          case '*': return a * b;
          case '/': return a / b;
          case '^': return std::pow(a, b);
        }
        return NAN;
      }
    }
    return NAN;
  }
};

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make_const(double c) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::constant;
  n->constant = c;
  return n;
}

NodePtr make_var(size_t i) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::variable;
  n->var_index = i;
  return n;
}

NodePtr make_unary(char op, NodePtr x) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::unary;
  n->op = op;
  n->lhs = std::move(x);
  return n;
}

NodePtr make_binary(char op, NodePtr a, NodePtr b) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::binary;
  n->op = op;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return n;
}

class Parser {
 public:
  Parser(const std::string& src, const std::vector<std::string>& vars)
      : src_(src), vars_(vars) {}

  NodePtr run() {
    if (src_.empty()) throw parse_error("empty expression", 0, {"expression"});
    NodePtr e = sum();
    skip_ws();
    if (pos_ != src_.size())
      throw parse_error("trailing input", pos_, {"operator", "end of input"});
    return e;
  }

 private:
  const std::string& src_;
  const std::vector<std::string>& vars_;
  size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  NodePtr sum() {
    NodePtr e = product();
    for (;;) {
      if (eat('+'))
        e = make_binary('+', e, product());
      else if (eat('-'))
        e = make_binary('-', e, product());
      else
        return e;
    }
  }

  NodePtr product() {
    NodePtr e = unary();
    for (;;) {
      if (eat('*'))
        e = make_binary('*', e, unary());
      else if (eat('/'))
        e = make_binary('/', e, unary());
      else
        return e;
    }
  }

  NodePtr unary() {
    if (eat('-')) return make_unary('n', unary());
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    if (eat('^')) return make_binary('^', base, unary());  // right-assoc, unary allowed
    return base;
  }

  NodePtr atom() {
    skip_ws();
    if (pos_ >= src_.size())
      throw parse_error("unexpected end of input", pos_,
                        {"number", "variable", "function", "("});
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr e = sum();
      if (!eat(')')) throw parse_error("unbalanced parenthesis", pos_, {")"});
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    throw parse_error("unexpected character", pos_, {"number", "variable", "function", "("});
  }

  NodePtr number() {
    const char* begin = src_.c_str() + pos_;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) throw parse_error("malformed number", pos_, {"number"});
    pos_ += size_t(end - begin);
    return make_const(v);
  }

  NodePtr identifier() {
    const size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      ++pos_;
    const std::string name = src_.substr(start, pos_ - start);
    static const struct { const char* name; char op; } funcs[] = {
        {"abs", 'a'}, {"exp", 'e'}, {"log", 'l'}, {"sqrt", 's'}};
    for (const auto& f : funcs) {
      if (name == f.name) {
        if (!eat('(')) throw parse_error("function call needs parentheses", pos_, {"("});
        NodePtr arg = sum();
        if (!eat(')')) throw parse_error("unbalanced parenthesis", pos_, {")"});
        return make_unary(f.op, arg);
      }
    }
    for (size_t i = 0; i < vars_.size(); ++i)
      if (name == vars_[i]) return make_var(i);
    std::vector<std::string> expected = {"abs", "exp", "log", "sqrt"};
    expected.insert(expected.end(), vars_.begin(), vars_.end());
    throw parse_error("unknown identifier '" + name + "'", start, expected);
  }
};

}  // namespace

Expression::Expression(std::shared_ptr<const Node> root, std::string source, size_t nvars)
    : root_(std::move(root)), source_(std::move(source)), nvars_(nvars) {}

Expression Expression::parse(const std::string& src, const std::vector<std::string>& vars) {
  Parser p(src, vars);
  return Expression(p.run(), src, vars.size());
}

double Expression::eval(const std::vector<double>& values) const {
  if (values.size() != nvars_)
    throw std::invalid_argument("Expression::eval: wrong number of variable bindings");
  return root_->eval(values);
}

size_t Expression::variable_count() const { return nvars_; }

}  // namespace carleson
