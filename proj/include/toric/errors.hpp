#pragma once

#include <stdexcept>
#include <string>

namespace toric {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// exact-arithmetic failures
class OverflowError : public Error { public: using Error::Error; };
class DimensionError : public Error { public: using Error::Error; };
class ShapeError : public Error { public: using Error::Error; };
class NotUnimodularError : public Error { public: using Error::Error; };
class ZeroVectorError : public Error { public: using Error::Error; };

// fan construction / validation
class ValidationError : public Error { public: using Error::Error; };
class NonPrimitiveRay : public ValidationError { public: using ValidationError::ValidationError; };
class NonUnimodularCone : public ValidationError { public: using ValidationError::ValidationError; };
class DanglingWall : public ValidationError { public: using ValidationError::ValidationError; };
class IncompleteFan : public ValidationError { public: using ValidationError::ValidationError; };

class ConeError : public Error { public: using Error::Error; };
class ParameterError : public Error { public: using Error::Error; };
class FanMismatchError : public Error { public: using Error::Error; };

// support function / polytope
class NotConvexError : public Error { public: using Error::Error; };
class NotKConvexError : public Error { public: using Error::Error; };
class NotASectionError : public Error { public: using Error::Error; };

// jet specs
class SpecError : public Error { public: using Error::Error; };
class PreconditionError : public Error { public: using Error::Error; };

// Raised when two routes that must agree by construction do not.
// Signals an implementation bug, never a property of valid input.
class InconsistencyError : public Error { public: using Error::Error; };

class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& message)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                ": " + message),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace toric
