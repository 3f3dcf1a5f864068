#pragma once

#include <stdexcept>
#include <string>

namespace tbraid {

// Base class for every error raised by the library.
class BraidError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class StrandMismatch : public BraidError {
 public:
  using BraidError::BraidError;
};

class InvalidStrands : public BraidError {
 public:
  using BraidError::BraidError;
};

class InvalidLetter : public BraidError {
 public:
  using BraidError::BraidError;
};

class NotPositive : public BraidError {
 public:
  using BraidError::BraidError;
};

class NotSimple : public BraidError {
 public:
  using BraidError::BraidError;
};

// Cycling or decycling a power of the half twist.
class ZeroLength : public BraidError {
 public:
  using BraidError::BraidError;
};

class NotAutomorphism : public BraidError {
 public:
  using BraidError::BraidError;
};

class TrivialElement : public BraidError {
 public:
  using BraidError::BraidError;
};

class ParseError : public BraidError {
 public:
  using BraidError::BraidError;
};

}  // namespace tbraid
