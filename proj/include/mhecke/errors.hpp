#pragma once

#include <stdexcept>
#include <string>

namespace mhecke {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& what = "division by zero") : Error(what) {}
};

// Coercion would need three or more independent square roots.
struct IncompatibleTower : Error {
    explicit IncompatibleTower(const std::string& what) : Error(what) {}
};

struct NotAUnit : Error {
    explicit NotAUnit(const std::string& what) : Error(what) {}
};

struct NonzeroConstant : Error {
    explicit NonzeroConstant(const std::string& what) : Error(what) {}
};

struct LeadingNotOne : Error {
    explicit LeadingNotOne(const std::string& what) : Error(what) {}
};

struct FractionalOffset : Error {
    explicit FractionalOffset(const std::string& what) : Error(what) {}
};

struct InsufficientTruncation : Error {
    explicit InsufficientTruncation(const std::string& what) : Error(what) {}
};

struct UnsupportedLevel : Error {
    explicit UnsupportedLevel(const std::string& what) : Error(what) {}
};

struct CuspNotOfLevel : Error {
    explicit CuspNotOfLevel(const std::string& what) : Error(what) {}
};

struct InconsistentSquareCondition : Error {
    explicit InconsistentSquareCondition(const std::string& what) : Error(what) {}
};

struct SearchExhausted : Error {
    explicit SearchExhausted(const std::string& what) : Error(what) {}
};

struct PrecisionLoss : Error {
    explicit PrecisionLoss(const std::string& what) : Error(what) {}
};

struct RecognitionFailed : Error {
    explicit RecognitionFailed(const std::string& what) : Error(what) {}
};

struct BadInput : Error {
    explicit BadInput(const std::string& what) : Error(what) {}
};

} // namespace mhecke
