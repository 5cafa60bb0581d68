#pragma once

#include <stdexcept>
#include <string>

namespace rieszlab {

// Every library error carries a stable short code (the class name) so the
// CLI and sweep runner can report failures without string matching on what().
struct Error : std::runtime_error {
    std::string code;
    Error(std::string c, const std::string& msg)
        : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

#define RIESZLAB_DEFINE_ERROR(Name)                                     \
    struct Name : Error {                                               \
        explicit Name(const std::string& msg) : Error(#Name, msg) {}    \
    }

RIESZLAB_DEFINE_ERROR(Overflow);
RIESZLAB_DEFINE_ERROR(InvalidArgument);
RIESZLAB_DEFINE_ERROR(ZeroLengthArc);
RIESZLAB_DEFINE_ERROR(OutOfRange);
RIESZLAB_DEFINE_ERROR(SchemeOverdelete);
RIESZLAB_DEFINE_ERROR(BadDescriptor);
RIESZLAB_DEFINE_ERROR(TooFewPoints);
RIESZLAB_DEFINE_ERROR(WindowTooSmall);
RIESZLAB_DEFINE_ERROR(EmptyIndexSet);
RIESZLAB_DEFINE_ERROR(ConvergenceFailure);
RIESZLAB_DEFINE_ERROR(NonPositive);
RIESZLAB_DEFINE_ERROR(NotSyndetic);
RIESZLAB_DEFINE_ERROR(ThresholdTooHigh);
RIESZLAB_DEFINE_ERROR(BadDelta);
RIESZLAB_DEFINE_ERROR(NoArcFound);
RIESZLAB_DEFINE_ERROR(GridTooCoarse);
RIESZLAB_DEFINE_ERROR(ParseError);
RIESZLAB_DEFINE_ERROR(ValidationError);
RIESZLAB_DEFINE_ERROR(IoError);

#undef RIESZLAB_DEFINE_ERROR

} // namespace rieszlab
