#include "cyclotome/errors.hpp"

namespace cyclotome {

const char* to_string(Errc c) {
    switch (c) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::BadDegree: return "BadDegree";
        case Errc::GcdViolation: return "GcdViolation";
        case Errc::NotPrimitive: return "NotPrimitive";
        case Errc::TableTooLarge: return "TableTooLarge";
        case Errc::ZeroElement: return "ZeroElement";
        case Errc::ZeroV: return "ZeroV";
        case Errc::WrongParity: return "WrongParity";
        case Errc::DegenerateCosets: return "DegenerateCosets";
        case Errc::TooLarge: return "TooLarge";
        case Errc::InternalInconsistency: return "InternalInconsistency";
        case Errc::NonIntegerSum: return "NonIntegerSum";
        case Errc::NonDivisibleValue: return "NonDivisibleValue";
    }
    return "UnknownError";
}

}  // namespace cyclotome
