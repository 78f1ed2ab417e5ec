#pragma once

#include <stdexcept>
#include <string>

namespace qdl {

/** Machine-readable failure categories surfaced by the library.
 *
 * Every throwing operation documents which kinds it can raise; the CLI maps
 * any Error to exit code 2 with the kind name and message on stderr.
 */
enum class ErrorKind {
  OutOfRange,       // argument outside [0,1]
  Undefined,        // operation has no value (e.g. left limit at 0)
  NotApplicable,    // witness requested for a non-offending component
  ShapeError,       // ragged or inconsistent matrix data
  UnknownElement,   // label not present in the carrier
  ClosureOverflow,  // t-norm closure exceeded the element cap
  CapExceeded,      // enumeration would exceed the configured cap
  Mismatch,         // functor/map endpoints disagree
  NotSeparated,     // checker needs a separated category
  NotComplete,      // checker needs a complete category
  NotIntegral,      // checker needs unit = top
  NotDirected,      // index/subset fails directedness
  ParseError,       // malformed textual input
};

const char* to_string(ErrorKind kind);

struct Error : std::runtime_error {
  ErrorKind kind;
  Error(ErrorKind k, const std::string& message)
      : std::runtime_error(std::string(to_string(k)) + ": " + message), kind(k) {}
};

}  // namespace qdl
