// Copyright (c) 2026 The atlas developers.
// This file is part of atlas, released under the Apache License 2.0.

#pragma once

#include <stdexcept>
#include <string>

namespace atlas {

/// Input or validation failure. The CLI maps this to exit code 1;
/// anything else escaping a command is an internal error (exit code 2).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace atlas
