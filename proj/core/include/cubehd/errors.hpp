#pragma once

#include <stdexcept>
#include <string>

namespace cubehd {

/// Thrown when an input is within contract but over an enumeration guard
/// (e.g. pairwise verification beyond d = 14). The message names the
/// cheaper alternative when one exists.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input data: unparsable JSON, wrong string lengths, vertices
/// out of range. Maps to exit 65 in the CLI.
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem trouble: unreadable or unwritable paths. Maps to exit 74.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cubehd
