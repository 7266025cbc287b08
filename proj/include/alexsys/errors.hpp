#pragma once

#include <stdexcept>
#include <string>

namespace alexsys {

// Exit-code classes for the CLI. Certificates handle accept/reject verdicts;
// exceptions are reserved for violated preconditions and environment failures.
enum class ErrorKind {
  Usage = 1,        // bad invocation / InvalidConfig
  Syntax = 2,       // DSL syntax error
  Semantic = 3,     // DSL semantic error
  Verification = 4, // pipeline stopped on a mandatory reject
  Budget = 5,       // depth/budget exceeded
  Io = 6,           // filesystem
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

struct FiniteTypeInput : Error {
  explicit FiniteTypeInput(const std::string& m) : Error(ErrorKind::Usage, m) {}
};
struct DepthUnsupported : Error {
  explicit DepthUnsupported(const std::string& m) : Error(ErrorKind::Budget, m) {}
};
struct UnsupportedEndTree : Error {
  explicit UnsupportedEndTree(const std::string& m) : Error(ErrorKind::Semantic, m) {}
};
struct UnverifiedPlan : Error {
  explicit UnverifiedPlan(const std::string& m) : Error(ErrorKind::Verification, m) {}
};
struct UnsupportedSignature : Error {
  explicit UnsupportedSignature(const std::string& m) : Error(ErrorKind::Usage, m) {}
};
struct NonEmbeddedPath : Error {
  explicit NonEmbeddedPath(const std::string& m) : Error(ErrorKind::Usage, m) {}
};
struct TriplePoint : Error {
  explicit TriplePoint(const std::string& m) : Error(ErrorKind::Usage, m) {}
};
struct InvalidPath : Error {
  explicit InvalidPath(const std::string& m) : Error(ErrorKind::Usage, m) {}
};
struct InvalidArrangement : Error {
  explicit InvalidArrangement(const std::string& m) : Error(ErrorKind::Usage, m) {}
};
struct TwistAlongArc : Error {
  explicit TwistAlongArc(const std::string& m) : Error(ErrorKind::Usage, m) {}
};
struct NonMember : Error {
  explicit NonMember(const std::string& m) : Error(ErrorKind::Usage, m) {}
};
struct DepthExceeded : Error {
  explicit DepthExceeded(const std::string& m) : Error(ErrorKind::Budget, m) {}
};
struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& m) : Error(ErrorKind::Budget, m) {}
};
struct SyntaxError : Error {
  SyntaxError(int line, int col, const std::string& m)
      : Error(ErrorKind::Syntax, "syntax error at " + std::to_string(line) + ":" +
                                     std::to_string(col) + ": " + m),
        line(line), col(col) {}
  int line, col;
};
struct SemanticError : Error {
  SemanticError(int line, int col, const std::string& m)
      : Error(ErrorKind::Semantic, "semantic error at " + std::to_string(line) + ":" +
                                       std::to_string(col) + ": " + m),
        line(line), col(col) {}
  int line, col;
};
struct IoError : Error {
  explicit IoError(const std::string& m) : Error(ErrorKind::Io, m) {}
};
struct InvalidConfig : Error {
  explicit InvalidConfig(const std::string& m) : Error(ErrorKind::Usage, m) {}
};

} // namespace alexsys
