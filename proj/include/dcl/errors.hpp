// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace dcl {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define DCL_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                    \
   public:                                                       \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

DCL_DEFINE_ERROR(InvalidBox);
DCL_DEFINE_ERROR(UnknownCategory);
DCL_DEFINE_ERROR(TooManyInstances);
DCL_DEFINE_ERROR(EmptyLayout);
DCL_DEFINE_ERROR(EmptyRaster);
DCL_DEFINE_ERROR(InvalidCategorySet);
DCL_DEFINE_ERROR(ManifestParseError);
DCL_DEFINE_ERROR(MissingImageFile);
DCL_DEFINE_ERROR(BoxOutOfBounds);
DCL_DEFINE_ERROR(ShapeMismatch);
DCL_DEFINE_ERROR(DegenerateBatch);
DCL_DEFINE_ERROR(ConfigMismatch);
DCL_DEFINE_ERROR(ConfigError);
DCL_DEFINE_ERROR(NonFiniteLoss);
DCL_DEFINE_ERROR(MissingBranch);
DCL_DEFINE_ERROR(EmptyMatrix);
DCL_DEFINE_ERROR(IOError);
DCL_DEFINE_ERROR(CheckpointError);

#undef DCL_DEFINE_ERROR

}  // namespace dcl
