#pragma once

#include <stdexcept>
#include <string>

namespace homlie {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class SingularMatrix : public Error {
public:
  using Error::Error;
};

/// A linear system that was expected to be uniquely solvable is not.
class SingularSystem : public Error {
public:
  using Error::Error;
};

class DegenerateForm : public Error {
public:
  using Error::Error;
};

class SingularTwist : public Error {
public:
  using Error::Error;
};

class NonInvolutiveTwist : public Error {
public:
  using Error::Error;
};

class OddDimension : public Error {
public:
  using Error::Error;
};

class DependentBasis : public Error {
public:
  using Error::Error;
};

class NotLeftSymmetric : public Error {
public:
  using Error::Error;
};

class NotAdmissible : public Error {
public:
  using Error::Error;
};

class NoComplexStructure : public Error {
public:
  using Error::Error;
};

/// A documented precondition (other than the dedicated cases above) does not hold.
class PreconditionFailed : public Error {
public:
  using Error::Error;
};

}  // namespace homlie
