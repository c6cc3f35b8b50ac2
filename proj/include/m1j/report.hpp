#pragma once

#include <chrono>
#include <cstdint>
#include <string>

#include "json.hpp"

namespace m1j {

// Outcome of one identity check. pass <=> max_residual <= tolerance.
struct OpReport {
  std::string check_name;
  double max_residual = 0.0;
  std::string witness;
  bool pass = false;
  std::int64_t elapsed_ms = 0;

  static OpReport make(std::string name, double residual, std::string witness, double tolerance,
                       std::int64_t elapsed_ms = 0) {
    return {std::move(name), residual, std::move(witness), residual <= tolerance, elapsed_ms};
  }
};

inline nlohmann::json to_json(const OpReport &r) {
  nlohmann::json j;
  j["check_name"] = r.check_name;
  j["max_residual"] = r.max_residual;
  j["witness"] = r.witness;
  j["pass"] = r.pass;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

// Wall-clock milliseconds since construction.
class Stopwatch {
public:
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

} // namespace m1j
