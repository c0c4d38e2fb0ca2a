#pragma once

#include <stdexcept>
#include <string>

namespace tindep {

/// Malformed input: out-of-range ids, overlapping sets, bad files.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A brute-force cap or search budget was exceeded. The question is undecided.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition of a construction or verifier does not hold.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace tindep
