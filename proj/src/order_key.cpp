#include "alexsys/order_key.hpp"

namespace alexsys {

void OrderKey::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (den_ == 0) den_ = 1; // defensive; callers never pass 0
  Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

bool OrderKey::parse(const std::string& text, OrderKey& out) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      out = OrderKey(Int(text), 1);
    } else {
      Int d(text.substr(slash + 1));
      if (d == 0) return false;
      out = OrderKey(Int(text.substr(0, slash)), std::move(d));
    }
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

} // namespace alexsys
