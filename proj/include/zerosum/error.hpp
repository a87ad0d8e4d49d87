#pragma once

#include <stdexcept>
#include <string>

namespace zerosum {

// Malformed input: bad group/sequence literal, invalid element, violated precondition.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A configured size cap would be exceeded; raised before the work starts.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace zerosum
