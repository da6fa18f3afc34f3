#include "error.hpp"

namespace ghp {

const char* err_name(Err e) {
    switch (e) {
        case Err::InvalidArgument: return "InvalidArgument";
        case Err::DegreeCapExceeded: return "DegreeCapExceeded";
        case Err::NonConvergence: return "NonConvergence";
        case Err::DomainError: return "DomainError";
        case Err::TurningPointCollision: return "TurningPointCollision";
        case Err::LabelAmbiguity: return "LabelAmbiguity";
        case Err::BranchSuspect: return "BranchSuspect";
        case Err::ContourDegenerate: return "ContourDegenerate";
        case Err::NewtonDiverged: return "NewtonDiverged";
        case Err::OutsideK: return "OutsideK";
        case Err::CutCrossing: return "CutCrossing";
        case Err::BranchJump: return "BranchJump";
        case Err::LogSingular: return "LogSingular";
        case Err::TraceLost: return "TraceLost";
        case Err::EdgeMismatch: return "EdgeMismatch";
        case Err::ClassificationFailure: return "ClassificationFailure";
        case Err::MatchingAmbiguous: return "MatchingAmbiguous";
        case Err::FitDegenerate: return "FitDegenerate";
        case Err::IoError: return "IoError";
        case Err::Internal: return "Internal";
    }
    return "Unknown";
}

} // namespace ghp
