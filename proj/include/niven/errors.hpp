#pragma once

#include <stdexcept>
#include <string>

namespace niven {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
public:
    using Error::Error;
};

/// A digit outside [0, base) was supplied.
class DigitOutOfRange : public Error {
public:
    using Error::Error;
};

/// Niven-ness of 0 is undefined: s_b(0) = 0.
class ZeroInput : public Error {
public:
    using Error::Error;
};

/// A closed form or proof step was requested for parameters outside its hypotheses.
class PreconditionViolated : public Error {
public:
    using Error::Error;
};

/// The requested construction would exceed the configured digit budget.
class CapExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace niven
