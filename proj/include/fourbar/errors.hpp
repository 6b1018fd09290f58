#pragma once

#include <stdexcept>
#include <string>

namespace fourbar {

// code is one of the fixed names below; detail is free text
struct Error : std::runtime_error {
    std::string code;
    Error(std::string c, const std::string& detail)
        : std::runtime_error(c + ": " + detail), code(std::move(c)) {}
};

namespace err {
inline constexpr const char* NonPositiveLength = "NonPositiveLength";
inline constexpr const char* QuadrilateralInequalityViolated = "QuadrilateralInequalityViolated";
inline constexpr const char* WrongClass = "WrongClass";
inline constexpr const char* ModulusOutOfRange = "ModulusOutOfRange";
inline constexpr const char* NearPole = "NearPole";
inline constexpr const char* TargetOutOfRange = "TargetOutOfRange";
inline constexpr const char* OutOfDomain = "OutOfDomain";
inline constexpr const char* SnapPoint = "SnapPoint";
inline constexpr const char* ResidualTooLarge = "ResidualTooLarge";
inline constexpr const char* DegenerateIdentically = "DegenerateIdentically";
inline constexpr const char* AngleAtInfinityOrZero = "AngleAtInfinityOrZero";
inline constexpr const char* ImaginaryResidue = "ImaginaryResidue";
}

// lengths that fail validation; everything else is a computation failure
inline bool is_length_error(const Error& e)
{
    return e.code == err::NonPositiveLength || e.code == err::QuadrilateralInequalityViolated;
}

} // namespace fourbar
