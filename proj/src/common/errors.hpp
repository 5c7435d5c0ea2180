#pragma once

#include <stdexcept>
#include <string>

namespace vsrchart {

// Error categories shared by the C++ core, the C API status codes and the
// CLI exit codes.
enum class ErrorCode {
  kUsage,
  kConfig,
  kIo,
  kEndpoint,
  kProtocol,
  kGeneration,
  kOutOfRange,
  kLayout,
  kInternal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(ErrorCode::kUsage, what) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(ErrorCode::kConfig, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorCode::kIo, what) {}
};

// Remote endpoint transport failure (after retries).
class EndpointError : public Error {
 public:
  explicit EndpointError(const std::string& what) : Error(ErrorCode::kEndpoint, what) {}
};

// Endpoint reachable but the reply could not be interpreted; carries the raw
// reply text for diagnosis.
class ProtocolError : public Error {
 public:
  ProtocolError(const std::string& what, std::string raw_reply)
      : Error(ErrorCode::kProtocol, what), raw_reply_(std::move(raw_reply)) {}
  const std::string& raw_reply() const { return raw_reply_; }

 private:
  std::string raw_reply_;
};

class GenerationError : public Error {
 public:
  explicit GenerationError(const std::string& what) : Error(ErrorCode::kGeneration, what) {}
};

class OutOfRangeError : public Error {
 public:
  explicit OutOfRangeError(const std::string& what) : Error(ErrorCode::kOutOfRange, what) {}
};

class LayoutError : public Error {
 public:
  explicit LayoutError(const std::string& what) : Error(ErrorCode::kLayout, what) {}
};

}  // namespace vsrchart
