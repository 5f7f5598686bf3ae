// Copyright 2026 The qcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <stdexcept>
#include <string>

namespace qcorr {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

#define QCORR_DEFINE_ERROR(Name)                                               \
    class Name : public Error {                                                \
      public:                                                                  \
        using Error::Error;                                                    \
    }

QCORR_DEFINE_ERROR(NonFinite);
QCORR_DEFINE_ERROR(DimensionMismatch);
QCORR_DEFINE_ERROR(NotHermitian);
QCORR_DEFINE_ERROR(NoConvergence);
QCORR_DEFINE_ERROR(NotPSD);
QCORR_DEFINE_ERROR(NotADistribution);
QCORR_DEFINE_ERROR(InvalidState);
QCORR_DEFINE_ERROR(Unphysical);
QCORR_DEFINE_ERROR(ParamOutOfRange);
QCORR_DEFINE_ERROR(MapUnavailable);
QCORR_DEFINE_ERROR(InvalidSweep);

#undef QCORR_DEFINE_ERROR

} // namespace qcorr
