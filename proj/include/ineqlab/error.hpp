#pragma once

#include <stdexcept>
#include <string>

namespace ineqlab {

/// Base of all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad input data or configuration (CLI exit code 2).
class InputError : public Error {
public:
    using Error::Error;
};

/// Numeric or domain failure on otherwise valid input (CLI exit code 3).
class NumericError : public Error {
public:
    using Error::Error;
};

class EmptyPopulation : public InputError {
public:
    EmptyPopulation() : InputError("empty dataset") {}
};

class DegeneratePopulation : public InputError {
public:
    explicit DegeneratePopulation(const std::string& what = "population mean is zero")
        : InputError(what) {}
};

class UnknownAttribute : public InputError {
public:
    explicit UnknownAttribute(const std::string& name)
        : InputError("unknown attribute '" + name + "'") {}
};

class TooManyAttributes : public InputError {
public:
    using InputError::InputError;
};

class ConfigError : public InputError {
public:
    using InputError::InputError;
};

class NegativeComponent : public NumericError {
public:
    using NumericError::NumericError;
};

class DomainError : public NumericError {
public:
    using NumericError::NumericError;
};

class InfiniteMeasure : public NumericError {
public:
    using NumericError::NumericError;
};

} // namespace ineqlab
