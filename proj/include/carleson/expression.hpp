#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace carleson {

// Syntax error with the byte offset of the failure and the tokens that would
// have been accepted there.
class parse_error : public std::runtime_error {
 public:
  parse_error(std::string message, size_t offset, std::vector<std::string> expected);
  size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  size_t offset_;
  std::vector<std::string> expected_;
};

// Arithmetic expressions over a declared variable set.  Nodes: constants,
// variables, unary {neg, abs, exp, log, sqrt}, binary {+,-,*,/,pow}.
// Precedence: pow > unary > mul/div > add/sub; pow is right-associative.
class Expression {
 public:
  // vars restricts the accepted identifiers, e.g. {"x","y"} for densities or
  // {"t"} for boundary data.
  static Expression parse(const std::string& src, const std::vector<std::string>& vars);

  // Evaluate with variables bound in declaration order.  Non-finite results
  // are returned as-is; callers decide whether that is an error.
  double eval(const std::vector<double>& values) const;
  double eval1(double v) const { return eval({v}); }
  double eval2(double a, double b) const { return eval({a, b}); }

  const std::string& source() const { return source_; }
  size_t variable_count() const;

  struct Node;

 private:
  Expression(std::shared_ptr<const Node> root, std::string source, size_t nvars);
  std::shared_ptr<const Node> root_;
  std::string source_;
  size_t nvars_;
};

}  // namespace carleson
