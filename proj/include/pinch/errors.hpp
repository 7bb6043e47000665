#pragma once

#include <stdexcept>
#include <string>

namespace pinch {

// Exit-code convention used by the CLI: 2 = parse error, 3 = unsupported
// diagram shape, 4 = violated precondition. Library callers catch by type;
// name() identifies the kind in CLI diagnostics.
class Error : public std::runtime_error {
public:
    Error(const std::string& msg, int exit_code, const char* name)
        : std::runtime_error(msg), exit_code_(exit_code), name_(name) {}
    int exitCode() const noexcept { return exit_code_; }
    const char* name() const noexcept { return name_; }

private:
    int exit_code_;
    const char* name_;
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg, 2, "ParseError") {}
};

class UnsupportedShape : public Error {
public:
    explicit UnsupportedShape(const std::string& msg) : Error(msg, 3, "UnsupportedShape") {}
};

class Precondition : public Error {
public:
    explicit Precondition(const std::string& msg) : Error(msg, 4, "Precondition") {}

protected:
    Precondition(const std::string& msg, const char* name) : Error(msg, 4, name) {}
};

class ZeroDenominator : public Precondition {
public:
    explicit ZeroDenominator(const std::string& msg) : Precondition(msg, "ZeroDenominator") {}
};

class DivisionByZero : public Precondition {
public:
    explicit DivisionByZero(const std::string& msg) : Precondition(msg, "DivisionByZero") {}
};

// Extended Euclid against the extension modulus found a nontrivial common
// factor: the user-supplied modulus was not irreducible.
class ReducibleModulus : public Precondition {
public:
    explicit ReducibleModulus(const std::string& msg) : Precondition(msg, "ReducibleModulus") {}
};

class DimensionMismatch : public Precondition {
public:
    explicit DimensionMismatch(const std::string& msg) : Precondition(msg, "DimensionMismatch") {}
};

class NotZeroDimensional : public Precondition {
public:
    explicit NotZeroDimensional(const std::string& msg)
        : Precondition(msg, "NotZeroDimensional") {}
};

class NotSquarefree : public Precondition {
public:
    explicit NotSquarefree(const std::string& msg) : Precondition(msg, "NotSquarefree") {}
};

class NotMonic : public Precondition {
public:
    explicit NotMonic(const std::string& msg) : Precondition(msg, "NotMonic") {}
};

class PointOffVariety : public Precondition {
public:
    explicit PointOffVariety(const std::string& msg) : Precondition(msg, "PointOffVariety") {}
};

class DuplicatePoint : public Precondition {
public:
    explicit DuplicatePoint(const std::string& msg) : Precondition(msg, "DuplicatePoint") {}
};

class PointNotOnVariety : public Precondition {
public:
    explicit PointNotOnVariety(const std::string& msg)
        : Precondition(msg, "PointNotOnVariety") {}
};

class ZeroDirection : public Precondition {
public:
    explicit ZeroDirection(const std::string& msg) : Precondition(msg, "ZeroDirection") {}
};

class IllFormedMap : public Precondition {
public:
    explicit IllFormedMap(const std::string& msg) : Precondition(msg, "IllFormedMap") {}
};

}  // namespace pinch
