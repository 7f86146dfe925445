#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "polyreal/char_table.hpp"
#include "polyreal/cyclo.hpp"
#include "polyreal/group.hpp"
#include "polyreal/rational.hpp"
#include "polyreal/realization.hpp"

namespace polyreal {

/// x + y sqrt(5), exact.
class QSqrt5 {
 public:
  QSqrt5() = default;
  QSqrt5(Rational x, Rational y = 0) : x_(std::move(x)), y_(std::move(y)) {}
  QSqrt5(long x) : x_(x) {}

  static QSqrt5 sqrt5() { return QSqrt5(0, 1); }

  const Rational& rational_part() const noexcept { return x_; }
  const Rational& sqrt5_part() const noexcept { return y_; }
  bool is_zero() const { return x_ == 0 && y_ == 0; }

  QSqrt5 conj() const { return QSqrt5(x_, -y_); }
  /// Throws DivisionByZero on zero.
  QSqrt5 inverse() const;
  double to_double() const;
  Cyclo to_cyclo() const;
  std::string to_string() const;

  friend QSqrt5 operator+(const QSqrt5& a, const QSqrt5& b) { return QSqrt5(a.x_ + b.x_, a.y_ + b.y_); }
  friend QSqrt5 operator-(const QSqrt5& a, const QSqrt5& b) { return QSqrt5(a.x_ - b.x_, a.y_ - b.y_); }
  friend QSqrt5 operator-(const QSqrt5& a) { return QSqrt5(-a.x_, -a.y_); }
  friend QSqrt5 operator*(const QSqrt5& a, const QSqrt5& b) {
    return QSqrt5(a.x_ * b.x_ + 5 * a.y_ * b.y_, a.x_ * b.y_ + a.y_ * b.x_);
  }
  friend QSqrt5 operator/(const QSqrt5& a, const QSqrt5& b) { return a * b.inverse(); }
  friend bool operator==(const QSqrt5& a, const QSqrt5& b) { return a.x_ == b.x_ && a.y_ == b.y_; }
  /// Lexicographic on (x, y); a storage order, not the real order.
  friend bool operator<(const QSqrt5& a, const QSqrt5& b) {
    return a.x_ != b.x_ ? a.x_ < b.x_ : a.y_ < b.y_;
  }

 private:
  Rational x_;
  Rational y_;
};

/// w + x i + y j + z k over Q(sqrt 5).
struct QuatQ5 {
  QSqrt5 w, x, y, z;

  QuatQ5 conj() const { return {w, -x, -y, -z}; }
  QSqrt5 norm() const { return w * w + x * x + y * y + z * z; }

  friend QuatQ5 operator*(const QuatQ5& a, const QuatQ5& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z, a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x, a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }
  friend QuatQ5 operator-(const QuatQ5& a) { return {-a.w, -a.x, -a.y, -a.z}; }
  friend bool operator==(const QuatQ5& a, const QuatQ5& b) {
    return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
  }
  friend bool operator<(const QuatQ5& a, const QuatQ5& b);
};

/// a = (-1 + sqrt 5)/2, b = (-1 - sqrt 5)/2.
QSqrt5 golden_a();
QSqrt5 golden_b();

/// alpha_1 = j, alpha_2 = (a i + b j - k)/2, alpha_3 = k, alpha_4 = (a + b i - k)/2.
std::array<QuatQ5, 4> root_system_h4();

/// x -> -alpha conj(x) alpha.
QuatQ5 reflect(const QuatQ5& alpha, const QuatQ5& x);

/// Closure of alpha_1, alpha_2, alpha_3 and -1, sorted. Throws ClosureOverflow
/// past 120 elements.
std::vector<QuatQ5> icosian_group();

/// The reflection group generated by s_1..s_4 permuting the icosians.
struct H4Model {
  std::vector<QuatQ5> points;  // icosians, sorted; point i is points[i]
  std::shared_ptr<const Group> group;
  std::array<Index, 4> reflections{};
  Point one = 0;  // the point 1
};
H4Model h4_model();
Group h4_group();

/// The icosians acting on themselves by right multiplication.
Group icosian_regular_group(const std::vector<QuatQ5>& icosians);

struct OneTwentyCellReport {
  std::size_t group_order = 0;
  std::size_t stabilizer_order = 0;
  std::size_t vertices = 0;
  std::size_t layers = 0;
  std::size_t multiplicity_one = 0;
  std::vector<long> multiplicity_two_degrees;    // sorted
  std::vector<long> multiplicity_three_degrees;  // sorted
  bool all_real = false;
  std::size_t half_lines = 0;  // subcones of dimension 1
  std::size_t psd2 = 0;        // PSD 2x2 subcones
  std::size_t psd3 = 0;        // PSD 3x3 subcones
  ConeReport cone;

  bool profile_matches() const noexcept;
};

/// Vertices = cosets of <s_2, s_3, s_4> in the H4 group.
OneTwentyCellReport validate_120cell(const TableOptions& options = {});

struct CrossCheckReport {
  std::size_t h4_layers = 0;
  std::size_t wreath_layers = 0;
  bool stabilizer_is_s123 = false;
  bool layer_sizes_match = false;
  bool profiles_match = false;
  bool cosine_tables_match = false;
  /// The cosine vector of the geometric 600-cell (real parts of the layer
  /// representatives) is one of the pure cosine vectors.
  bool geometric_row_found = false;
  /// The icosians and SL(2,5) share order, center, class sizes and degrees.
  bool icosian_invariants = false;
  std::vector<std::vector<Cyclo>> h4_cosines;  // rows: pure sigma, columns: layers

  bool passes() const noexcept {
    return stabilizer_is_s123 && layer_sizes_match && profiles_match && cosine_tables_match && geometric_row_found &&
           icosian_invariants;
  }
};

CrossCheckReport cross_check_600cell(const TableOptions& options = {});

/// True when some column permutation preserving `sizes_a`/`sizes_b` makes the
/// row multisets equal.
bool cosine_tables_equivalent(const std::vector<std::size_t>& sizes_a, const std::vector<std::vector<Cyclo>>& a,
                              const std::vector<std::size_t>& sizes_b, const std::vector<std::vector<Cyclo>>& b);

/// [{"w": ["x", "y"], "i": [...], ...}] with x + y sqrt 5 per coordinate.
nlohmann::json icosians_to_json(const std::vector<QuatQ5>& icosians);

}  // namespace polyreal
