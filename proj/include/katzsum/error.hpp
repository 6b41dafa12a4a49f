#pragma once

#include <stdexcept>
#include <string>

namespace katzsum {

enum class Errc {
    NotPrime,
    WrongResidue,
    TooLarge,
    ZeroArgument,
    NotFourthPower,
    BadArgument,
    ZeroParameter,
    FourthPowerTrivial,
    ZeroX,
    ZeroJ,
    MuNotQuartic,
    ConfigError,
    IoError,
};

const char* errc_name(Errc code) noexcept;

/// Error raised by every fallible operation in the library; `code()` names the failure.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace katzsum
