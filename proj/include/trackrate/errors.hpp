#pragma once

#include <stdexcept>
#include <string>

namespace trackrate {

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Two words or letter sequences over different edge alphabets were combined.
class AlphabetMismatchError : public Error {
public:
  using Error::Error;
};

// A morphism was applied to an edge it has no image for.
class UndefinedEdgeError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

class ParameterError : public Error {
public:
  using Error::Error;
};

class PreconditionError : public Error {
public:
  using Error::Error;
};

// Root search found no real root in the requested range.
class NoRootError : public Error {
public:
  using Error::Error;
};

class InternalError : public Error {
public:
  using Error::Error;
};

}  // namespace trackrate
