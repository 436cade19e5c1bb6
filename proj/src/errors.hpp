#pragma once

#include <stdexcept>
#include <string>

namespace pickseq {

/// Raised when an exhaustive enumeration or search would exceed its
/// configured resource cap. Never truncates silently.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pickseq
