#include "lisrc/error.hpp"

namespace lisrc {

std::string_view errc_name(Errc code)
{
    switch (code) {
    case Errc::DuplicateValue: return "duplicate_value";
    case Errc::IndexOutOfRange: return "index_out_of_range";
    case Errc::NotMaximum: return "not_maximum";
    case Errc::SizeMismatch: return "size_mismatch";
    case Errc::Infeasible: return "infeasible";
    case Errc::TooLarge: return "too_large";
    case Errc::ParseError: return "parse_error";
    case Errc::GenerationFailed: return "generation_failed";
    case Errc::InvalidArgument: return "invalid_argument";
    }
    return "unknown";
}

} // namespace lisrc
