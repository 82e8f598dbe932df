#pragma once

#include <stdexcept>
#include <string>

namespace fragdiff {

// Failures reading or interpreting data files. CLI maps these to exit 2.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input file content (names the offending location where known).
class ParseError : public DataError {
public:
    using DataError::DataError;
};

// Persisted database declares an unsupported format version.
class VersionError : public DataError {
public:
    using DataError::DataError;
};

// Persisted database fails its integrity checks.
class CorruptionError : public DataError {
public:
    using DataError::DataError;
};

// An operation had nothing usable to work with (e.g. zero usable fragments).
class NoDataError : public DataError {
public:
    using DataError::DataError;
};

// A runtime contract was violated (e.g. a denoiser produced rows that are
// not probability distributions). CLI maps these to exit 3.
class ContractError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace fragdiff
