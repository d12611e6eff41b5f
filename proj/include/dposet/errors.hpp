#pragma once

#include <stdexcept>
#include <string>

namespace dposet {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A generator set closes to something that is not antisymmetric.
class CycleError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class NotPlaneError : public Error {
 public:
  using Error::Error;
};

class NotWNError : public Error {
 public:
  using Error::Error;
};

class NotHConnectedError : public Error {
 public:
  using Error::Error;
};

class EmptyInputError : public Error {
 public:
  using Error::Error;
};

class EmptyListError : public Error {
 public:
  using Error::Error;
};

class SizeMismatchError : public Error {
 public:
  using Error::Error;
};

class BasisNotIotaClosedError : public Error {
 public:
  using Error::Error;
};

class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

class LabelError : public Error {
 public:
  using Error::Error;
};

// Text input did not match the grammar. The message names the production.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace dposet
