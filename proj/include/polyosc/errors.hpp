#ifndef POLYOSC_ERRORS_HPP
#define POLYOSC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polyosc {

enum class Errc {
  NonPositiveMultiplier,
  KappaOutOfRange,
  UnexpectedKappa,
  ContextMismatch,
  NoFamilies,
  SizeOverflow,
  EmptyMask,
  DimensionMismatch,
  UnsupportedSystem,
  GridTooCoarse,
  ConvergenceFailure,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace polyosc

#endif
