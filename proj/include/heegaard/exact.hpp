#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace heegaard {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Every failure mode surfaced to callers carries one of these codes; the CLI
// prints the code name so scripted callers can dispatch without parsing text.
enum class Code {
  Syntax,
  BadReference,
  SlotUse,
  ArcUseCount,
  CurveCycle,
  Corner,
  Euler,
  RegionGenus,
  FamilyCount,
  CutComponent,
  MarkedPlacement,
  Disconnected,
  BadMove,
  Separating,
  BadClass,
  DisconnectedCover,
  Precondition,
  Internal,
};

const char* code_name(Code c);

class Error : public std::runtime_error {
 public:
  Error(Code code, const std::string& what)
      : std::runtime_error(std::string(code_name(code)) + ": " + what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

[[noreturn]] inline void fail(Code code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, Code code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace heegaard
