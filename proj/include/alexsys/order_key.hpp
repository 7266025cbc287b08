#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>

namespace alexsys {

// Exact rational used purely as an order key for crossing positions along a
// base edge. Keys are compared, averaged (midpoint insertion) and offset by
// integers; no other arithmetic is needed. cpp_int keeps repeated midpoint
// insertion exact at any depth.
class OrderKey {
public:
  using Int = boost::multiprecision::cpp_int;

  OrderKey() : num_(0), den_(1) {}
  OrderKey(long long n) : num_(n), den_(1) {} // NOLINT(google-explicit-constructor)
  OrderKey(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

  static OrderKey midpoint(const OrderKey& a, const OrderKey& b) {
    return OrderKey(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_ * 2);
  }
  // a + (b - a) * i / n, for layered parallel offsets with 0 < i < n.
  static OrderKey between(const OrderKey& a, const OrderKey& b, long long i, long long n) {
    Int num = a.num_ * b.den_ * (n - i) + b.num_ * a.den_ * i;
    return OrderKey(std::move(num), a.den_ * b.den_ * n);
  }

  OrderKey offset(long long delta) const { return OrderKey(num_ + den_ * delta, den_); }

  std::strong_ordering operator<=>(const OrderKey& o) const {
    Int lhs = num_ * o.den_;
    Int rhs = o.num_ * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  bool operator==(const OrderKey& o) const { return (*this <=> o) == 0; }

  std::string str() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
  }

  // Parses "n" or "n/d". Returns false on malformed input.
  static bool parse(const std::string& text, OrderKey& out);

private:
  void normalize();

  Int num_;
  Int den_; // > 0
};

} // namespace alexsys
