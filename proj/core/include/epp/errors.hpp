#pragma once

#include <stdexcept>
#include <string>

namespace epp {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Search-space budget ran out before the search space did.
struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& what = "search budget exceeded") : Error(what) {}
};

struct InvariantViolation : Error {
    explicit InvariantViolation(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

struct SameVertex : Error {
    explicit SameVertex(const std::string& what = "source and target coincide") : Error(what) {}
};

struct Disconnected : Error {
    explicit Disconnected(const std::string& what = "graph is not connected") : Error(what) {}
};

struct NotATree : Error {
    explicit NotATree(const std::string& what = "graph is not a tree") : Error(what) {}
};

struct TooSmall : Error {
    explicit TooSmall(const std::string& what = "input too small") : Error(what) {}
};

struct NotTwoConnected : Error {
    explicit NotTwoConnected(const std::string& what = "graph is not 2-connected") : Error(what) {}
};

struct InvalidSize : Error {
    explicit InvalidSize(const std::string& what = "invalid size parameter") : Error(what) {}
};

struct InvalidParams : Error {
    explicit InvalidParams(const std::string& what = "invalid parameters") : Error(what) {}
};

struct InvalidChunk : Error {
    explicit InvalidChunk(const std::string& what = "chunk index out of range") : Error(what) {}
};

struct TooFewMarks : Error {
    explicit TooFewMarks(const std::string& what = "not enough marked vertices") : Error(what) {}
};

// A construction backed by a proven lemma failed; the harness treats this as
// a test failure, not a recoverable condition.
struct NotFound : Error {
    explicit NotFound(const std::string& what) : Error(what) {}
};

struct AssumptionViolated : Error {
    explicit AssumptionViolated(const std::string& what) : Error(what) {}
};

struct DanglingReference : Error {
    explicit DanglingReference(const std::string& what) : Error(what) {}
};

}  // namespace epp
