#pragma once

#include <stdexcept>
#include <string>

namespace adf {

// Thrown when a request exceeds a configured size/memory cap, as opposed to
// being mathematically invalid (std::domain_error covers that).
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace adf
