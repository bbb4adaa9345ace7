#pragma once

#include <stdexcept>
#include <string>

namespace laxwb {

// Every failure the workbench can report derives from Error so front ends can
// map them onto exit codes without enumerating the concrete types.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define LAXWB_DEFINE_ERROR(Name)            \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

LAXWB_DEFINE_ERROR(ZeroLeadingCoefficient);
LAXWB_DEFINE_ERROR(InsufficientPrecision);
LAXWB_DEFINE_ERROR(ExpansionFailure);
LAXWB_DEFINE_ERROR(ZeroElement);
LAXWB_DEFINE_ERROR(InvalidTyurin);
LAXWB_DEFINE_ERROR(NonGenericDegree);
LAXWB_DEFINE_ERROR(NotMember);
LAXWB_DEFINE_ERROR(DecompositionOverflow);
LAXWB_DEFINE_ERROR(NoConnectionForm);
LAXWB_DEFINE_ERROR(PositiveLevelNonzero);
LAXWB_DEFINE_ERROR(ConfigError);

#undef LAXWB_DEFINE_ERROR

}  // namespace laxwb
