#pragma once

#include <stdexcept>
#include <string>

namespace pmzv {

// Operands live over different coefficient rings (or different primes).
class ring_mismatch_error : public std::invalid_argument {
public:
    explicit ring_mismatch_error(const std::string& what) : std::invalid_argument(what) {}
};

// A documented precondition on an argument was violated (non-unit constant
// term, |z|_p >= 1, inadmissible index, ...).
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// The coefficient ring lacks a capability the operation needs (rational
// scalars for exp/log, characters, inversion of factorials).
class capability_error : public std::invalid_argument {
public:
    explicit capability_error(const std::string& what) : std::invalid_argument(what) {}
};

// Input data contradicts an algebraic law it is required to satisfy.
class inconsistent_data_error : public std::runtime_error {
public:
    explicit inconsistent_data_error(const std::string& what) : std::runtime_error(what) {}
};

// Text could not be parsed in the canonical grammar.
class parse_error : public std::invalid_argument {
public:
    explicit parse_error(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace pmzv
