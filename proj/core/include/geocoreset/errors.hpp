#pragma once

#include <stdexcept>
#include <string>

namespace geocoreset {

// Every structured failure in the library throws Error with one of these
// codes. The code is stable API; the message is human-readable detail.
enum class Errc {
  TooFewVertices,
  DuplicateVertex,
  CollinearRun,
  SelfIntersecting,
  OriginOutside,
  PointOutside,
  DegeneratePath,
  AntipodalEndpoints,
  TooFewPoints,
  BadEpsilon,
  DegenerateAnchor,
  EmptyCoreset,
  GenerationFailed,
  IoError,
  Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

private:
  Errc code_;
};

} // namespace geocoreset
