#ifndef SCHREIER_ERRORS_HPP_
#define SCHREIER_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace schreier {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two consecutive label sets intersect. `position` is the index of the
// junction (the offending left set) in the assembled segment.
struct AdmissibilityViolation : Error {
  explicit AdmissibilityViolation(std::size_t pos)
      : Error("admissibility violation at set index " + std::to_string(pos)),
        position(pos) {}
  std::size_t position;
};

struct RuleReferenceError : Error {
  using Error::Error;
};

struct UnknownSystem : Error {
  explicit UnknownSystem(std::string const& name)
      : Error("unknown system: " + name) {}
};

struct InvalidAlpha : Error {
  using Error::Error;
};

struct WordTooLong : Error {
  WordTooLong(std::size_t len, std::size_t radius)
      : Error("word of length " + std::to_string(len)
              + " exceeds radius " + std::to_string(radius)) {}
};

// The action of a symbol at a vertex needs a label set outside the truncation.
struct BoundaryUndecidable : Error {
  using Error::Error;
};

struct BoundaryTooClose : Error {
  using Error::Error;
};

// Subword sets kept changing up to the generation cap.
struct NoStabilization : Error {
  explicit NoStabilization(int max_generation)
      : Error("window set did not stabilize by generation "
              + std::to_string(max_generation)),
        max_generation(max_generation) {}
  int max_generation;
};

struct InsufficientAmbient : Error {
  using Error::Error;
};

struct PerfectLabelingViolation : Error {
  PerfectLabelingViolation(std::string const& what, int vertex)
      : Error(what), vertex(vertex) {}
  int vertex;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace schreier

#endif
