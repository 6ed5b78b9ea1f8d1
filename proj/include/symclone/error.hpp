#pragma once

#include <stdexcept>
#include <string>

namespace symclone {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain (bad profile, arity mismatch, ...).
class DomainError : public Error
{
public:
  using Error::Error;
};

/// Malformed literal, formula, signature or descriptor text.
class ParseError : public Error
{
public:
  using Error::Error;
};

} // namespace symclone
