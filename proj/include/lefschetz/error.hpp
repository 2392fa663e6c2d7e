#ifndef LEFSCHETZ_ERROR_HPP
#define LEFSCHETZ_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lefschetz {

/// Broad category of a failure; the CLI maps each to an exit status.
enum class ErrorKind { input, resource, algorithm };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

/// Malformed input: bad permutations, bad files, violated preconditions.
class InputError : public Error {
public:
  explicit InputError(const std::string& what) : Error(ErrorKind::input, what) {}
};

/// A configured bound (element count, lattice size) was exceeded.
class ResourceError : public Error {
public:
  explicit ResourceError(const std::string& what)
      : Error(ErrorKind::resource, what) {}
};

/// An internal consistency check failed.
class AlgorithmError : public Error {
public:
  explicit AlgorithmError(const std::string& what)
      : Error(ErrorKind::algorithm, what) {}
};

} // namespace lefschetz

#endif // LEFSCHETZ_ERROR_HPP
