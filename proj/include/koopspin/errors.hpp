#pragma once

#include <stdexcept>
#include <string>

namespace koopspin {

// Exit-code mapping for the CLI: config_error -> 1, numeric_error -> 2, io_error -> 3.

struct config_error : std::runtime_error {
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct io_error : std::runtime_error {
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace koopspin
