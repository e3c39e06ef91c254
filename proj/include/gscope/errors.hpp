#pragma once

#include <stdexcept>
#include <string>

namespace gscope {

// Exit-code classes used by the CLI: usage/domain problems map to 2,
// resource caps to 3, anything else to 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A group construction failed its verification certificate.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace gscope
