#include "lkit/errors.hpp"

namespace lkit {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::EmptyWord: return "EmptyWord";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::NonzeroFinalStrands: return "NonzeroFinalStrands";
        case ErrorCode::MultiComponent: return "MultiComponent";
        case ErrorCode::InvalidSite: return "InvalidSite";
        case ErrorCode::BadCutWidth: return "BadCutWidth";
        case ErrorCode::DisconnectedPiece: return "DisconnectedPiece";
        case ErrorCode::TooManyCrossings: return "TooManyCrossings";
        case ErrorCode::BadToken: return "BadToken";
        case ErrorCode::UnknownBucket: return "UnknownBucket";
        case ErrorCode::BadBudget: return "BadBudget";
        case ErrorCode::BadReport: return "BadReport";
        case ErrorCode::BadStyle: return "BadStyle";
    }
    return "Error";
}

}  // namespace lkit
