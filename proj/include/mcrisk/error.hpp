#pragma once

#include <stdexcept>
#include <string>

namespace mcrisk {

/// A precondition or invariant was broken by the caller. The CLI maps this to exit status 3.
class ContractViolation : public std::logic_error {
public:
    explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace mcrisk
