#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qdq/matrix.hpp"
#include "qdq/ratfunc.hpp"

namespace qdq {

/// First point of disagreement in a failed check. For matrix identities the
/// coordinates are 0-based (row, col) and lhs/rhs the two entries there.
struct Witness {
  std::vector<std::size_t> coords;
  std::optional<RatFunc> lhs;
  std::optional<RatFunc> rhs;
  std::string detail;
};

/// Outcome of one identity check. A witness is present exactly when the check failed.
struct Report {
  std::string check;
  nlohmann::json params = nlohmann::json::object();
  bool pass = false;
  std::optional<Witness> witness;
  nlohmann::json info = nlohmann::json::object();
  std::vector<Report> children;
  double ms = 0.0;

  void succeed() {
    pass = true;
    witness.reset();
  }
  void fail(Witness w) {
    pass = false;
    witness = std::move(w);
  }
  void fail(std::string detail) { fail(Witness{{}, std::nullopt, std::nullopt, std::move(detail)}); }

  /// Append a child; the parent fails with the first failing child's witness.
  void absorb(Report child);
};

/// Report for an exact matrix identity lhs == rhs.
Report compare_matrices(std::string check, const Matrix& lhs, const Matrix& rhs);

/// Wall-clock milliseconds since construction.
class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace qdq
