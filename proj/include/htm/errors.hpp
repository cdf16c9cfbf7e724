// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace htm {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

#define HTM_DEFINE_ERROR(Name)                  \
    class Name : public Error {                 \
      public:                                   \
        using Error::Error;                     \
    }

HTM_DEFINE_ERROR(DepthLimitExceeded);
HTM_DEFINE_ERROR(InvalidVector);
HTM_DEFINE_ERROR(InvalidId);
HTM_DEFINE_ERROR(InvalidName);
HTM_DEFINE_ERROR(InvalidEdge);
HTM_DEFINE_ERROR(DegenerateCircle);
HTM_DEFINE_ERROR(MalformedBoundary);
HTM_DEFINE_ERROR(EmptyPatch);
HTM_DEFINE_ERROR(NotHemispheric);
HTM_DEFINE_ERROR(TooFewPoints);
HTM_DEFINE_ERROR(InvalidBudget);
HTM_DEFINE_ERROR(InvalidRadius);
HTM_DEFINE_ERROR(ParseError);

#undef HTM_DEFINE_ERROR

}  // namespace htm
