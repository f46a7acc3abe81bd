#pragma once

#include "lisrc/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fixture {

struct Result {
    int status;
    std::string out;
    std::string err;
};

inline Result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "lisrc");
    std::ostringstream out, err;
    int status = lisrc::cli::run(args, out, err);
    return Result{status, out.str(), err.str()};
}

/// Writes `text` to a fresh file under the temp directory and returns its path.
inline std::string write_temp(const std::string& name, const std::string& text)
{
    auto dir = std::filesystem::temp_directory_path() / "lisrc_tests";
    std::filesystem::create_directories(dir);
    auto path = dir / name;
    std::ofstream(path) << text;
    return path.string();
}

inline std::string first_line(const std::string& s)
{
    return s.substr(0, s.find('\n'));
}

} // namespace fixture
