#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lisrc {

enum class Errc {
    DuplicateValue,
    IndexOutOfRange,
    NotMaximum,
    SizeMismatch,
    Infeasible,
    TooLarge,
    ParseError,
    GenerationFailed,
    InvalidArgument,
};

std::string_view errc_name(Errc code);

/// Every recoverable failure in the library is reported as an Error carrying
/// one of the codes above.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace lisrc
