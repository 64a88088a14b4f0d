#include "polyosc/errors.hpp"

namespace polyosc {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::NonPositiveMultiplier:
      return "NonPositiveMultiplier";
    case Errc::KappaOutOfRange:
      return "KappaOutOfRange";
    case Errc::UnexpectedKappa:
      return "UnexpectedKappa";
    case Errc::ContextMismatch:
      return "ContextMismatch";
    case Errc::NoFamilies:
      return "NoFamilies";
    case Errc::SizeOverflow:
      return "SizeOverflow";
    case Errc::EmptyMask:
      return "EmptyMask";
    case Errc::DimensionMismatch:
      return "DimensionMismatch";
    case Errc::UnsupportedSystem:
      return "UnsupportedSystem";
    case Errc::GridTooCoarse:
      return "GridTooCoarse";
    case Errc::ConvergenceFailure:
      return "ConvergenceFailure";
  }
  return "UnknownError";
}

}  // namespace polyosc
