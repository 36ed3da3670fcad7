#pragma once

#include <stdexcept>
#include <string>

namespace tcurve {

enum class ErrorKind {
    InvalidParams,
    IndexOutOfRange,
    Incompatible,
    TrivialFiltration,
    Degenerate,
    HypothesisUnmet,
    NotAdmissible,
    IrrationalAngle,
    SelfCrossing,
    DomainError,
    QuadratureFailure,
    DegenerateEdge,
    Io,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace tcurve
