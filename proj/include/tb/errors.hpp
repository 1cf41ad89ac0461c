// Exception types shared by all tburn modules.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tb {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Cayley table fails a group axiom; message carries a witness.
struct NotAGroup : Error {
  using Error::Error;
};

// A construction would exceed the configured order cap.
struct TooLarge : Error {
  using Error::Error;
};

// Two generator words for one element map to different images.
struct NotWellDefined : Error {
  using Error::Error;
};

// An image table violates image(xy) = image(x)image(y); carries a witness pair.
struct NotAHomomorphism : Error {
  NotAHomomorphism(const std::string& msg, std::uint32_t x, std::uint32_t y)
      : Error(msg), witness_x(x), witness_y(y) {}
  std::uint32_t witness_x;
  std::uint32_t witness_y;
};

// No prime p = 1 mod exponent(G) with p^2 > 4|G|^3 below the search bound.
struct PrimeSearchFailed : Error {
  using Error::Error;
};

// Simultaneous eigenspace refinement did not reach one-dimensional spaces.
struct EigenSplitFailed : Error {
  using Error::Error;
};

// The mod-p and complex decisions of a fixed-point test disagree.
struct ModPComplexDisagreement : Error {
  using Error::Error;
};

// A cross-check that must hold by construction failed (broken action, bad sum).
struct InternalInconsistency : Error {
  using Error::Error;
};

// Random commutant element produced colliding eigenvalue clusters.
struct SplitDegenerate : Error {
  using Error::Error;
};

// Singular values fall inside the guard band around the rank cutoff.
struct RankUnstable : Error {
  using Error::Error;
};

// Text input could not be parsed; line is 1-based.
struct ParseError : Error {
  ParseError(int line_, const std::string& msg)
      : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
  int line;
};

}  // namespace tb
