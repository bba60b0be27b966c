#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

#include "hnlab/poly.hpp"

namespace hnlab {

/// Every algebra handled here is 4-dimensional; the frame is {e1, e2, e3, e4}.
inline constexpr std::size_t kDim = 4;

constexpr std::size_t ipow(std::size_t base, std::size_t e) { return e == 0 ? 1 : base * ipow(base, e - 1); }

/// Dense array of frame components, indexed 0-based by frame index.
template <class T, std::size_t Rank>
class Tensor {
 public:
  static constexpr std::size_t kRank = Rank;
  static constexpr std::size_t kSize = ipow(kDim, Rank);
  using Index = std::array<std::size_t, Rank>;

  Tensor() = default;
  explicit Tensor(const T& fill) { data_.fill(fill); }

  template <class... I>
  T& operator()(I... idx) {
    static_assert(sizeof...(I) == Rank);
    return data_[flat({static_cast<std::size_t>(idx)...})];
  }
  template <class... I>
  const T& operator()(I... idx) const {
    static_assert(sizeof...(I) == Rank);
    return data_[flat({static_cast<std::size_t>(idx)...})];
  }
  T& at(const Index& idx) { return data_[flat(idx)]; }
  const T& at(const Index& idx) const { return data_[flat(idx)]; }

  T& flat_at(std::size_t k) { return data_[k]; }
  const T& flat_at(std::size_t k) const { return data_[k]; }

  static constexpr std::size_t flat(const Index& idx) {
    std::size_t k = 0;
    for (std::size_t r = 0; r < Rank; ++r) k = k * kDim + idx[r];
    return k;
  }
  static constexpr Index unflat(std::size_t k) {
    Index idx{};
    for (std::size_t r = Rank; r-- > 0;) {
      idx[r] = k % kDim;
      k /= kDim;
    }
    return idx;
  }

  /// Visits every index tuple in lexicographic order.
  template <class F>
  static void for_each_index(F&& f) {
    for (std::size_t k = 0; k < kSize; ++k) f(unflat(k));
  }

  template <class U, class F>
  Tensor<U, Rank> map(F&& f) const {
    Tensor<U, Rank> out;
    for (std::size_t k = 0; k < kSize; ++k) out.flat_at(k) = f(data_[k]);
    return out;
  }

  friend bool operator==(const Tensor& x, const Tensor& y) { return x.data_ == y.data_; }

  auto begin() const { return data_.begin(); }
  auto end() const { return data_.end(); }

 private:
  std::array<T, kSize> data_{};
};

template <std::size_t Rank>
using PolyTensor = Tensor<Poly, Rank>;

/// Vector in the frame {e1..e4}.
using Vector = PolyTensor<1>;

template <std::size_t Rank>
bool is_zero(const PolyTensor<Rank>& t) {
  for (const auto& p : t)
    if (!p.is_zero()) return false;
  return true;
}

template <std::size_t Rank>
PolyTensor<Rank> evaluated(const PolyTensor<Rank>& t, const Assignment& at) {
  return t.template map<Poly>([&](const Poly& p) { return p.evaluated(at); });
}

/// Flattened coefficients, for feeding symbolic tensors through rational maps.
template <std::size_t Rank>
std::vector<Poly> flatten(const PolyTensor<Rank>& t) {
  return std::vector<Poly>(t.begin(), t.end());
}

template <std::size_t Rank>
PolyTensor<Rank> unflatten(const std::vector<Poly>& v) {
  PolyTensor<Rank> t;
  for (std::size_t k = 0; k < PolyTensor<Rank>::kSize; ++k) t.flat_at(k) = v.at(k);
  return t;
}

}  // namespace hnlab
