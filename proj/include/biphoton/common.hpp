#ifndef BIPHOTON_COMMON_HPP
#define BIPHOTON_COMMON_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace biphoton {

inline constexpr double pi = std::numbers::pi;

// sin(x)/x with the removable singularity handled; first zero at x = pi.
inline double sinc(double x) {
  if (std::abs(x) < 1e-6) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

inline double deg_to_rad(double deg) { return deg * pi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / pi; }

// All library errors carry a machine-readable category, surfaced by the CLI
// as "error: category=<...>" with a nonzero exit code.
class error : public std::runtime_error {
 public:
  error(std::string category, const std::string& what)
      : std::runtime_error(what), category_(std::move(category)) {}
  const std::string& category() const noexcept { return category_; }

 private:
  std::string category_;
};

struct config_error : error {
  explicit config_error(const std::string& w) : error("config", w) {}
};
struct resolution_error : error {
  explicit resolution_error(const std::string& w) : error("resolution", w) {}
};
struct shape_error : error {
  explicit shape_error(const std::string& w) : error("shape", w) {}
};
struct io_error : error {
  explicit io_error(const std::string& w) : error("io", w) {}
};
struct numeric_error : error {
  explicit numeric_error(const std::string& w) : error("numeric", w) {}
};
struct unidentifiable_error : error {
  explicit unidentifiable_error(const std::string& w) : error("unidentifiable", w) {}
};

}  // namespace biphoton

#endif
