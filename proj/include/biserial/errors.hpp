#pragma once

#include <stdexcept>
#include <string>

namespace biserial {

class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

#define BISERIAL_ERROR(Name)                                                 \
    class Name : public Error {                                              \
    public:                                                                  \
        explicit Name(const std::string& msg) : Error(#Name, msg) {}         \
    }

BISERIAL_ERROR(InvalidParameter);
BISERIAL_ERROR(UnknownArrow);
BISERIAL_ERROR(InvalidString);
BISERIAL_ERROR(PeakDeepViolation);
BISERIAL_ERROR(ZeroLambda);
BISERIAL_ERROR(NotABand);
BISERIAL_ERROR(FieldMismatch);
BISERIAL_ERROR(ProjectiveCenter);
BISERIAL_ERROR(NotUniserial);
BISERIAL_ERROR(DimensionMismatch);

#undef BISERIAL_ERROR

class TauUndefined : public Error {
public:
    TauUndefined(char condition, const std::string& msg)
        : Error("TauUndefined", std::string("condition (") + condition + ") fails: " + msg),
          condition_(condition) {}
    char condition() const { return condition_; }

private:
    char condition_;
};

class HypothesisFailed : public Error {
public:
    HypothesisFailed(std::string which, const std::string& msg)
        : Error("HypothesisFailed", which + ": " + msg), which_(std::move(which)) {}
    const std::string& which() const { return which_; }

private:
    std::string which_;
};

}  // namespace biserial
