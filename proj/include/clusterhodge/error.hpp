#pragma once

#include <stdexcept>
#include <string>

namespace clusterhodge {

enum class ErrorKind {
    ShapeMismatch,
    NotSkewSymmetric,
    IndexOutOfRange,
    NotFullRank,
    NotReallyFullRank,
    NotAcyclic,
    NotAnticlique,
    ColumnsDependent,
    CycleTooSmall,
    NotAForest,
    NotAnEdge,
    VertexInX,
    NotPrincipal,
    NotConnected,
    TooLarge,
    ParseError,
    InvalidArgument,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail);
    ErrorKind kind() const noexcept { return kind_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

}  // namespace clusterhodge
