#pragma once

#include <stdexcept>
#include <string>

namespace censym {

enum class ErrorCode {
    Parse,
    RankDeficient,
    NotBipartite,
    NotConnected,
    ApexNotUniversalForOddCycles,
    PreconditionViolated,
    NotDecomposable,
    NoPositiveGrading,
    SizeLimit,
    ResourceLimit,
};

/// All library errors derive from this; `code()` distinguishes precondition
/// failures (CLI exit 2) from blown budgets (CLI exit 3).
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }
    bool is_resource_limit() const {
        return code_ == ErrorCode::SizeLimit || code_ == ErrorCode::ResourceLimit;
    }

private:
    ErrorCode code_;
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(ErrorCode::Parse, what) {}
};
struct RankDeficientError : Error {
    explicit RankDeficientError(const std::string& what = "matrix is rank deficient")
        : Error(ErrorCode::RankDeficient, what) {}
};
struct NotBipartiteError : Error {
    explicit NotBipartiteError(const std::string& what = "graph is not bipartite")
        : Error(ErrorCode::NotBipartite, what) {}
};
struct NotConnectedError : Error {
    explicit NotConnectedError(const std::string& what = "graph is not connected")
        : Error(ErrorCode::NotConnected, what) {}
};
struct ApexError : Error {
    explicit ApexError(const std::string& what)
        : Error(ErrorCode::ApexNotUniversalForOddCycles, what) {}
};
struct PreconditionError : Error {
    explicit PreconditionError(const std::string& what)
        : Error(ErrorCode::PreconditionViolated, what) {}
};
struct NotDecomposableError : Error {
    explicit NotDecomposableError(const std::string& what) : Error(ErrorCode::NotDecomposable, what) {}
};
struct NoPositiveGradingError : Error {
    explicit NoPositiveGradingError(const std::string& what)
        : Error(ErrorCode::NoPositiveGrading, what) {}
};
struct SizeLimitError : Error {
    explicit SizeLimitError(const std::string& what) : Error(ErrorCode::SizeLimit, what) {}
};
struct ResourceLimitError : Error {
    explicit ResourceLimitError(const std::string& what) : Error(ErrorCode::ResourceLimit, what) {}
};

}  // namespace censym
