#pragma once

#include <stdexcept>
#include <string>

namespace lfmove {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// input text violates the terminator convention
class InvalidText : public Error {
public:
    using Error::Error;
};

// more symbols than the block store can index
class UnsupportedAlphabet : public Error {
public:
    using Error::Error;
};

class FormatError : public Error {
public:
    using Error::Error;
};

class BadMagic : public FormatError {
public:
    using FormatError::FormatError;
};

class VersionMismatch : public FormatError {
public:
    using FormatError::FormatError;
};

class TruncatedSection : public FormatError {
public:
    using FormatError::FormatError;
};

} // namespace lfmove
