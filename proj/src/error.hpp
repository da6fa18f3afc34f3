#pragma once

#include <stdexcept>
#include <string>

namespace ghp {

enum class Err {
    InvalidArgument,
    DegreeCapExceeded,
    NonConvergence,
    DomainError,
    TurningPointCollision,
    LabelAmbiguity,
    BranchSuspect,
    ContourDegenerate,
    NewtonDiverged,
    OutsideK,
    CutCrossing,
    BranchJump,
    LogSingular,
    TraceLost,
    EdgeMismatch,
    ClassificationFailure,
    MatchingAmbiguous,
    FitDegenerate,
    IoError,
    Internal,
};

const char* err_name(Err e);

// Carried across the C boundary as {error, module, detail}.
class Error : public std::runtime_error {
public:
    Error(Err code, std::string module, std::string detail)
        : std::runtime_error(std::string(err_name(code)) + " [" + module + "]: " + detail),
          code_(code), module_(std::move(module)), detail_(std::move(detail)) {}

    Err code() const noexcept { return code_; }
    const std::string& module() const noexcept { return module_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    Err code_;
    std::string module_;
    std::string detail_;
};

[[noreturn]] inline void fail(Err code, const char* module, const std::string& detail) {
    throw Error(code, module, detail);
}

} // namespace ghp
