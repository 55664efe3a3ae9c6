#pragma once

#include <cstddef>
#include <exception>
#include <stdexcept>
#include <string>

namespace hnlg {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

// ---- template-dsl -------------------------------------------------------

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class UnknownSlot : public SyntaxError {
 public:
  UnknownSlot(std::string name, std::size_t line, std::size_t column)
      : SyntaxError(line, column, "unknown slot '" + name + "'"), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class DuplicateTemplate : public SyntaxError {
 public:
  DuplicateTemplate(std::string name, std::size_t line, std::size_t column)
      : SyntaxError(line, column, "duplicate template '" + name + "'"), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

// ---- rule-realizer ------------------------------------------------------

class NoApplicableTemplate : public Error {
 public:
  explicit NoApplicableTemplate(std::size_t event_index)
      : Error("no applicable template for event " + std::to_string(event_index)),
        event_index_(event_index) {}

  std::size_t event_index() const noexcept { return event_index_; }

 private:
  std::size_t event_index_;
};

// ---- paraphrase-engine --------------------------------------------------

class RemoteUnavailable : public Error {
 public:
  RemoteUnavailable(std::string endpoint, const std::string& detail)
      : Error("paraphrase service unavailable at " + endpoint + ": " + detail),
        endpoint_(std::move(endpoint)) {}

  const std::string& endpoint() const noexcept { return endpoint_; }

 private:
  std::string endpoint_;
};

// ---- baseline-generator -------------------------------------------------

class EmptyCorpus : public Error {
 public:
  EmptyCorpus() : Error("cannot train an n-gram model on an empty corpus") {}
};

// ---- hmcu-metrics -------------------------------------------------------

class EmptyDocumentSet : public Error {
 public:
  EmptyDocumentSet() : Error("TF-IDF needs at least one document") {}
};

class ZeroVector : public Error {
 public:
  ZeroVector() : Error("cosine of a zero-norm term vector") {}
};

class GroupTooSmall : public Error {
 public:
  explicit GroupTooSmall(std::size_t size)
      : Error("machine-style similarity needs at least 2 documents, got " + std::to_string(size)) {}
};

// ---- corpus-io ----------------------------------------------------------

class FileNotFound : public Error {
 public:
  explicit FileNotFound(const std::string& path) : Error("file not found: " + path) {}
};

class MalformedRecord : public Error {
 public:
  MalformedRecord(std::size_t line, const std::string& reason)
      : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class InsufficientRecords : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// ---- pipeline -----------------------------------------------------------

/// Wraps an error raised inside one pipeline stage; `cause()` rethrows the original.
class StageError : public Error {
 public:
  StageError(std::string stage, const std::string& message, std::exception_ptr cause)
      : Error(stage + ": " + message), stage_(std::move(stage)), cause_(std::move(cause)) {}

  const std::string& stage() const noexcept { return stage_; }
  std::exception_ptr cause() const noexcept { return cause_; }

 private:
  std::string stage_;
  std::exception_ptr cause_;
};

}  // namespace hnlg
