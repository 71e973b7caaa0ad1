#include "clusterhodge/error.hpp"

namespace clusterhodge {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::NotSkewSymmetric: return "NotSkewSymmetric";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::NotFullRank: return "NotFullRank";
        case ErrorKind::NotReallyFullRank: return "NotReallyFullRank";
        case ErrorKind::NotAcyclic: return "NotAcyclic";
        case ErrorKind::NotAnticlique: return "NotAnticlique";
        case ErrorKind::ColumnsDependent: return "ColumnsDependent";
        case ErrorKind::CycleTooSmall: return "CycleTooSmall";
        case ErrorKind::NotAForest: return "NotAForest";
        case ErrorKind::NotAnEdge: return "NotAnEdge";
        case ErrorKind::VertexInX: return "VertexInX";
        case ErrorKind::NotPrincipal: return "NotPrincipal";
        case ErrorKind::NotConnected: return "NotConnected";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + (detail.empty() ? "" : ": " + detail)),
      kind_(kind),
      detail_(detail) {}

}  // namespace clusterhodge
