#pragma once

#include <stdexcept>
#include <string>

namespace flip {

enum class Errc {
  NBelowTwo,
  EmptyAttach,
  AttachOutOfRange,
  VertexOutOfRange,
  IllegalMove,
  BadConfig,
  Parse,
  CapExceeded,
  InternalRankError,
};

const char* errc_name(Errc code) noexcept;

// All domain failures surface as flip::Error; the C API maps code() onto
// flip_status values.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace flip
