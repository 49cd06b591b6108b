#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <utility>

#include "fq/rational.hpp"

namespace fq {

// Finite formal linear combination of basis elements of type B with exact
// rational coefficients.  Zero coefficients are pruned eagerly, so equality
// of sums is plain equality of the underlying ordered maps and iteration
// order is deterministic.
template <class B, class Less = std::less<B>>
class FormalSum {
 public:
  using Terms = std::map<B, Rat, Less>;

  FormalSum() = default;
  explicit FormalSum(const B& b) { add(b, 1); }
  FormalSum(const B& b, const Rat& c) { add(b, c); }

  void add(const B& b, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add_scaled(const FormalSum& other, const Rat& scale) {
    if (scale == 0) return;
    for (const auto& [b, c] : other.terms_) add(b, c * scale);
  }

  Rat coeff(const B& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  bool contains(const B& b) const { return terms_.count(b) != 0; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  FormalSum& operator+=(const FormalSum& o) {
    add_scaled(o, 1);
    return *this;
  }
  FormalSum& operator-=(const FormalSum& o) {
    add_scaled(o, -1);
    return *this;
  }
  FormalSum& operator*=(const Rat& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [b, v] : terms_) v *= c;
    return *this;
  }

  friend FormalSum operator+(FormalSum a, const FormalSum& b) {
    a += b;
    return a;
  }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) {
    a -= b;
    return a;
  }
  friend FormalSum operator*(const Rat& c, FormalSum a) {
    a *= c;
    return a;
  }
  friend FormalSum operator-(FormalSum a) {
    a *= -1;
    return a;
  }
  friend bool operator==(const FormalSum& a, const FormalSum& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Terms terms_;
};

}  // namespace fq
