#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace botlint {

enum class LoadErrorKind {
    NotFound,      // file does not exist or is unreadable
    NoProjectEntry,// zip archive without a project.json entry
    MalformedJson, // undecodable content
};

class LoadError : public std::runtime_error {
public:
    LoadError(LoadErrorKind kind, std::string path, std::string detail,
              std::size_t byte_offset = 0)
        : std::runtime_error(path + ": " + detail),
          kind_(kind),
          path_(std::move(path)),
          detail_(std::move(detail)),
          byte_offset_(byte_offset) {}

    LoadErrorKind kind() const { return kind_; }
    const std::string& path() const { return path_; }
    const std::string& detail() const { return detail_; }
    std::size_t byte_offset() const { return byte_offset_; }

private:
    LoadErrorKind kind_;
    std::string path_;
    std::string detail_;
    std::size_t byte_offset_;
};

class RegistryError : public std::runtime_error {
public:
    explicit RegistryError(const std::string& what) : std::runtime_error(what) {}
};

class UnknownDeviceError : public std::runtime_error {
public:
    explicit UnknownDeviceError(const std::string& device)
        : std::runtime_error("unknown device: " + device) {}
};

class UnknownPatternError : public std::runtime_error {
public:
    explicit UnknownPatternError(const std::string& pattern_id)
        : std::runtime_error("no hint template for pattern: " + pattern_id) {}
};

class EmptySampleError : public std::runtime_error {
public:
    EmptySampleError() : std::runtime_error("statistic requires non-empty samples") {}
};

class EmptyCorpusError : public std::runtime_error {
public:
    explicit EmptyCorpusError(const std::string& dir)
        : std::runtime_error("no analyzable projects in: " + dir) {}
};

} // namespace botlint
