#pragma once

#include <algorithm>
#include <vector>

#include "mahlerlab/numeric.hpp"

namespace mahlerlab {

// Truncated Laurent series q^val (c_0 + c_1 q + ...), known modulo O(q^prec).
template <class T>
class QSeries {
 public:
  QSeries() = default;
  QSeries(long val, std::vector<T> c, long prec) : val_(val), c_(std::move(c)), prec_(prec) { trim(); }
  static QSeries constant(const T& a, long prec) { return QSeries(0, {a}, prec); }
  static QSeries monomial(const T& a, long e, long prec) { return QSeries(e, {a}, prec); }

  long valuation() const { return val_; }
  long precision() const { return prec_; }
  // coefficient of q^n, n < precision()
  T operator[](long n) const {
    long k = n - val_;
    if (k < 0 || k >= static_cast<long>(c_.size())) return T(0);
    return c_[k];
  }
  bool is_zero() const { return c_.empty(); }

  QSeries operator+(const QSeries& o) const {
    long v = std::min(val_, o.val_), p = std::min(prec_, o.prec_);
    std::vector<T> out(std::max(0L, p - v), T(0));
    for (size_t k = 0; k < out.size(); ++k) out[k] = (*this)[v + k] + o[v + k];
    return QSeries(v, std::move(out), p);
  }
  QSeries operator-() const {
    QSeries r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  QSeries operator-(const QSeries& o) const { return *this + (-o); }
  QSeries operator*(const T& s) const {
    QSeries r = *this;
    for (auto& x : r.c_) x = x * s;
    r.trim();
    return r;
  }
  QSeries operator*(const QSeries& o) const {
    if (is_zero() || o.is_zero()) {
      long p = std::min(prec_ + (o.is_zero() ? 0 : o.val_), o.prec_ + (is_zero() ? 0 : val_));
      return QSeries(p, {}, p);
    }
    long v = val_ + o.val_;
    long p = std::min(val_ + o.prec_, o.val_ + prec_);
    std::vector<T> out(std::max(0L, p - v), T(0));
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == T(0)) continue;
      for (size_t j = 0; j < o.c_.size() && i + j < out.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    }
    return QSeries(v, std::move(out), p);
  }
  // needs an invertible leading coefficient
  QSeries inverse() const {
    if (is_zero()) throw Error("inverse of a zero series");
    long rel = prec_ - val_;
    T inv0 = T(1) / c_[0];
    if (!(inv0 * c_[0] == T(1))) throw Error("leading coefficient is not invertible");
    std::vector<T> out(rel, T(0));
    if (rel > 0) out[0] = inv0;
    for (long n = 1; n < rel; ++n) {
      T acc(0);
      for (long k = 1; k <= n && k < static_cast<long>(c_.size()); ++k) acc += c_[k] * out[n - k];
      out[n] = -acc * inv0;
    }
    return QSeries(-val_, std::move(out), -val_ + rel);
  }
  QSeries pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    QSeries r = constant(T(1), prec_ - val_ + 0);
    r.prec_ = prec_ - val_;  // relative precision is preserved
    QSeries b = *this;
    bool first = true;
    while (e > 0) {
      if (e & 1) {
        r = first ? b : r * b;
        first = false;
      }
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  }
  // q d/dq
  QSeries theta() const {
    QSeries r = *this;
    for (size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = r.c_[k] * T(val_ + static_cast<long>(k));
    r.trim();
    return r;
  }
  QSeries truncated(long prec) const {
    QSeries r = *this;
    if (prec < r.prec_) {
      r.prec_ = prec;
      if (static_cast<long>(r.c_.size()) > prec - r.val_) r.c_.resize(std::max(0L, prec - r.val_));
    }
    return r;
  }

 private:
  void trim() {
    long drop = 0;
    while (drop < static_cast<long>(c_.size()) && c_[drop] == T(0)) ++drop;
    if (drop == static_cast<long>(c_.size())) {
      val_ = prec_;
      c_.clear();
      return;
    }
    if (drop) c_.erase(c_.begin(), c_.begin() + drop);
    val_ += drop;
    if (static_cast<long>(c_.size()) > prec_ - val_) c_.resize(std::max(0L, prec_ - val_));
  }

  long val_ = 0;
  std::vector<T> c_;
  long prec_ = 0;
};

}  // namespace mahlerlab
