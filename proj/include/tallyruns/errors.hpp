#pragma once

#include <stdexcept>
#include <string>

namespace tallyruns {

/// Malformed input file (transcript, scenario, config, report). Messages
/// carry 1-based line numbers where applicable.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what) {}
};

} // namespace tallyruns
