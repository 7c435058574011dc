#pragma once

#include <stdexcept>
#include <string>

namespace origami {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A caller violated a documented precondition (bad parameter range, wrong
/// parity, malformed word...). The CLI maps these to exit code 1.
class precondition_error : public error {
public:
  using error::error;
};

/// A numerical or combinatorial computation could not complete. The CLI maps
/// these to exit code 2.
class computation_error : public error {
public:
  using error::error;
};

class degenerate_circle_error : public computation_error {
public:
  degenerate_circle_error() : computation_error("degenerate image circle") {}
};

class pairing_search_error : public computation_error {
public:
  explicit pairing_search_error(double best_margin)
      : computation_error("pairing search failed (best margin " +
                          std::to_string(best_margin) + ")"),
        best_margin_(best_margin) {}

  double best_margin() const noexcept { return best_margin_; }

private:
  double best_margin_;
};

class enumeration_overflow_error : public computation_error {
public:
  enumeration_overflow_error(const std::string& what, std::size_t reached)
      : computation_error(what), reached_(reached) {}

  /// Number of cosets (or elements) alive when the cap was hit.
  std::size_t reached() const noexcept { return reached_; }

private:
  std::size_t reached_;
};

inline void require(bool condition, const std::string& message) {
  if (!condition)
    throw precondition_error(message);
}

}  // namespace origami
