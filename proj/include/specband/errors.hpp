#pragma once

#include <stdexcept>
#include <string>

namespace specband {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct FormatError : Error {
  using Error::Error;
};

// --- measure validation ---

struct NonPSDWeight : Error {
  NonPSDWeight(int atom, double eigenvalue)
      : Error("weight matrix of atom " + std::to_string(atom) +
              " has negative eigenvalue " + std::to_string(eigenvalue)),
        atom(atom),
        eigenvalue(eigenvalue) {}
  int atom;
  double eigenvalue;
};

struct SingularS0 : Error {
  explicit SingularS0(double cond)
      : Error("zeroth moment is numerically singular (cond = " +
              std::to_string(cond) + ")"),
        cond(cond) {}
  double cond;
};

// --- band matrix class pattern ---

struct BadSignPattern : Error {
  BadSignPattern(int diagonal, int index, const std::string& what_wrong)
      : Error("diagonal " + std::to_string(diagonal) + ", index " +
              std::to_string(index) + ": " + what_wrong),
        diagonal(diagonal),
        index(index) {}
  int diagonal;
  int index;
};

struct BadGap : Error {
  BadGap(int m_prev, int m_next)
      : Error("degeneration indices too close: m=" + std::to_string(m_next) +
              " after m=" + std::to_string(m_prev)),
        m_prev(m_prev),
        m_next(m_next) {}
  int m_prev;
  int m_next;
};

struct TooManyDegenerations : Error {
  using Error::Error;
};

struct TailTooShort : Error {
  using Error::Error;
};

// --- recurrence / reconstruction ---

struct ZeroLeadingCoefficient : Error {
  using Error::Error;
};

struct InsufficientPrefix : Error {
  using Error::Error;
};

struct NoConvergence : Error {
  using Error::Error;
};

struct ToleranceAmbiguous : Error {
  ToleranceAmbiguous(int canonical_index, double relative_norm2)
      : Error("zero/nonzero decision unreliable at canonical index " +
              std::to_string(canonical_index) +
              " (relative squared norm = " + std::to_string(relative_norm2) +
              ")"),
        canonical_index(canonical_index),
        relative_norm2(relative_norm2) {}
  int canonical_index;
  double relative_norm2;
};

struct ClassViolation : Error {
  using Error::Error;
};

struct NoMatchingHeight : Error {
  using Error::Error;
};

}  // namespace specband
