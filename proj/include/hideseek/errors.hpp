#ifndef HIDESEEK_ERRORS_HPP_
#define HIDESEEK_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace hideseek {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define HIDESEEK_DEFINE_ERROR(Name)        \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

HIDESEEK_DEFINE_ERROR(InvalidArgument);
HIDESEEK_DEFINE_ERROR(DegenerateRegion);
HIDESEEK_DEFINE_ERROR(DegenerateMeasurement);
HIDESEEK_DEFINE_ERROR(GenerationFailed);
HIDESEEK_DEFINE_ERROR(TooManyPoints);
HIDESEEK_DEFINE_ERROR(InvalidTreasure);
HIDESEEK_DEFINE_ERROR(Exhausted);
HIDESEEK_DEFINE_ERROR(NumericalFailure);
HIDESEEK_DEFINE_ERROR(ConfigError);

#undef HIDESEEK_DEFINE_ERROR

}  // namespace hideseek

#endif  // HIDESEEK_ERRORS_HPP_
