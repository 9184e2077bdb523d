#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace brieskorn {

using Complex = std::complex<double>;

/// A point of C^n. Coordinates of library points are in canonical order
/// (see ExponentData); use ExponentData::to_canonical / to_user to convert.
using ComplexPoint = std::vector<Complex>;

/// Exponent vectors (a, b) of f_{a,b} = sum_i z_i^{a_i+b_i} conj(z_i)^{b_i}.
///
/// Pairs (a_i, b_i) are stored sorted lexicographically, so a is nondecreasing
/// and, among equal a_i, b is nondecreasing. perm()[i] is the user index of
/// canonical slot i.
///
/// Rejected at construction: empty or mismatched vectors, negative entries,
/// a = 0 identically, and any pair (a_i, b_i) = (0, 0), whose term is the
/// constant 1 and does not vanish at the origin.
class ExponentData {
 public:
  ExponentData(std::vector<int> a, std::vector<int> b) : user_a_(std::move(a)), user_b_(std::move(b)) {
    if (user_a_.empty()) throw std::invalid_argument("exponent vectors must be non-empty");
    if (user_a_.size() != user_b_.size())
      throw std::invalid_argument("exponent vectors a and b differ in length");
    bool some_positive = false;
    for (std::size_t i = 0; i < user_a_.size(); ++i) {
      if (user_a_[i] < 0 || user_b_[i] < 0) throw std::invalid_argument("exponents must be nonnegative");
      if (user_a_[i] >= 1) some_positive = true;
      if (user_a_[i] == 0 && user_b_[i] == 0)
        throw std::invalid_argument("pair (a_i, b_i) = (0, 0) gives a constant term");
    }
    if (!some_positive) throw std::invalid_argument("degenerate family: every a_i is zero");

    perm_.resize(user_a_.size());
    std::iota(perm_.begin(), perm_.end(), std::size_t{0});
    std::stable_sort(perm_.begin(), perm_.end(), [&](std::size_t x, std::size_t y) {
      return std::pair(user_a_[x], user_b_[x]) < std::pair(user_a_[y], user_b_[y]);
    });
    a_.reserve(perm_.size());
    b_.reserve(perm_.size());
    for (std::size_t p : perm_) {
      a_.push_back(user_a_[p]);
      b_.push_back(user_b_[p]);
    }
  }

  [[nodiscard]] std::size_t n() const { return a_.size(); }
  [[nodiscard]] const std::vector<int>& a() const { return a_; }
  [[nodiscard]] const std::vector<int>& b() const { return b_; }
  [[nodiscard]] int a(std::size_t i) const { return a_.at(i); }
  [[nodiscard]] int b(std::size_t i) const { return b_.at(i); }
  [[nodiscard]] const std::vector<int>& user_a() const { return user_a_; }
  [[nodiscard]] const std::vector<int>& user_b() const { return user_b_; }
  [[nodiscard]] const std::vector<std::size_t>& perm() const { return perm_; }

  /// a_i + 2 b_i in canonical order.
  [[nodiscard]] int m(std::size_t i) const { return a_.at(i) + 2 * b_.at(i); }
  [[nodiscard]] std::vector<int> multiplicities() const {
    std::vector<int> out(n());
    for (std::size_t i = 0; i < n(); ++i) out[i] = m(i);
    return out;
  }

  [[nodiscard]] std::size_t zero_count() const {
    return static_cast<std::size_t>(std::count(a_.begin(), a_.end(), 0));
  }
  [[nodiscard]] bool has_unit_exponent() const { return std::find(a_.begin(), a_.end(), 1) != a_.end(); }
  [[nodiscard]] bool b_is_zero() const {
    return std::all_of(b_.begin(), b_.end(), [](int v) { return v == 0; });
  }

  [[nodiscard]] ComplexPoint to_canonical(const ComplexPoint& user) const {
    check_dim(user.size());
    ComplexPoint out(n());
    for (std::size_t i = 0; i < n(); ++i) out[i] = user[perm_[i]];
    return out;
  }
  [[nodiscard]] ComplexPoint to_user(const ComplexPoint& canonical) const {
    check_dim(canonical.size());
    ComplexPoint out(n());
    for (std::size_t i = 0; i < n(); ++i) out[perm_[i]] = canonical[i];
    return out;
  }

  /// Same germ up to relabeling of coordinates.
  friend bool operator==(const ExponentData& x, const ExponentData& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

  [[nodiscard]] std::string describe() const {
    std::ostringstream os;
    os << "a=(";
    for (std::size_t i = 0; i < n(); ++i) os << (i ? "," : "") << user_a_[i];
    os << "), b=(";
    for (std::size_t i = 0; i < n(); ++i) os << (i ? "," : "") << user_b_[i];
    os << ")";
    return os.str();
  }

  void check_dim(std::size_t dim) const {
    if (dim != n())
      throw std::invalid_argument("dimension mismatch: expected " + std::to_string(n()) + ", got " +
                                  std::to_string(dim));
  }

 private:
  std::vector<int> user_a_;
  std::vector<int> user_b_;
  std::vector<std::size_t> perm_;
  std::vector<int> a_;
  std::vector<int> b_;
};

inline void require_same_n(const ExponentData& x, const ExponentData& y) {
  if (x.n() != y.n())
    throw std::invalid_argument("dimension mismatch: n=" + std::to_string(x.n()) + " vs n=" +
                                std::to_string(y.n()));
}

}  // namespace brieskorn
