#pragma once

#include <concepts>

namespace heisurf {

// Scalar fields used as coefficient domains: Rational, ModP, Cyclotomic.
// Each element carries its field descriptor, so zeros and ones can be
// produced from any element without global state.
template <class F>
concept FieldElement = requires(const F& a, const F& b) {
  typename F::Field;
  { a.field() } -> std::same_as<typename F::Field>;
  { F::zero(a.field()) } -> std::same_as<F>;
  { F::one(a.field()) } -> std::same_as<F>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.inverse() } -> std::same_as<F>;
  { a + b } -> std::same_as<F>;
  { a - b } -> std::same_as<F>;
  { a * b } -> std::same_as<F>;
  { a / b } -> std::same_as<F>;
  { -a } -> std::same_as<F>;
  { a == b } -> std::convertible_to<bool>;
};

template <FieldElement F>
F zero_like(const F& x) { return F::zero(x.field()); }

template <FieldElement F>
F one_like(const F& x) { return F::one(x.field()); }

template <FieldElement F>
bool is_zero(const F& x) { return x.is_zero(); }

template <FieldElement F>
F exact_divide(const F& a, const F& b) { return a / b; }

}  // namespace heisurf
