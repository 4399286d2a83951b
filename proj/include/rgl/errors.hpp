// Error hierarchy shared by all modules. Every domain error carries a stable
// name (printed by the CLI on stderr) plus a human-readable message.
#pragma once

#include <stdexcept>
#include <string>

namespace rgl {

class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

#define RGL_DEFINE_ERROR(NAME)                                        \
    class NAME : public Error {                                       \
    public:                                                           \
        explicit NAME(const std::string& what = "") : Error(#NAME, what) {} \
    }

// graph
RGL_DEFINE_ERROR(EmptyGraph);
RGL_DEFINE_ERROR(TooLarge);
RGL_DEFINE_ERROR(PatternTooLarge);
RGL_DEFINE_ERROR(NotATree);
// logic
RGL_DEFINE_ERROR(SyntaxError);
RGL_DEFINE_ERROR(UnboundVariable);
// eval
RGL_DEFINE_ERROR(GraphTooLargeForMSO);
RGL_DEFINE_ERROR(NotAForest);
// game
RGL_DEFINE_ERROR(NonTerminal);
RGL_DEFINE_ERROR(KindMismatch);
// subset classification
RGL_DEFINE_ERROR(VertexOutOfRange);
RGL_DEFINE_ERROR(DegenerateSubset);
RGL_DEFINE_ERROR(AlphaOutOfRange);
// strategy
RGL_DEFINE_ERROR(NotAdmissible);
RGL_DEFINE_ERROR(InsufficientRichness);
RGL_DEFINE_ERROR(NoValidResponse);
RGL_DEFINE_ERROR(PreconditionViolated);
RGL_DEFINE_ERROR(TypeMismatch);
// spectrum
RGL_DEFINE_ERROR(NotAtThreshold);
RGL_DEFINE_ERROR(NotStrictlyBalanced);
RGL_DEFINE_ERROR(UnknownProbe);

#undef RGL_DEFINE_ERROR

} // namespace rgl
