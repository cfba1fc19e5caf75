#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "heisurf/errors.hpp"
#include "heisurf/exactmath/ring.hpp"

namespace heisurf {

using Exponents = std::vector<std::uint32_t>;

enum class MonomialOrder { grevlex, lex };

/// -1, 0, +1 as a is smaller, equal, larger than b in the given order.
inline int compare_monomials(const Exponents& a, const Exponents& b, MonomialOrder order) {
  if (order == MonomialOrder::grevlex) {
    std::uint64_t da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    return 0;
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

inline bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(s[0])) return false;
  for (char c : s)
    if (!alpha(c) && !digit(c)) return false;
  return true;
}

/// Ordered list of distinct variable names; positions are fixed for the life of the table.
class VarTable {
 public:
  VarTable() = default;
  explicit VarTable(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!is_identifier(names_[i]) || names_[i] == "zeta")
        throw Error("invalid variable name '" + names_[i] + "'");
      if (!index_.emplace(names_[i], i).second) throw Error("duplicate variable name '" + names_[i] + "'");
    }
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::size_t> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t index(std::string_view name) const {
    auto i = find(name);
    if (!i) throw UnknownVariable(std::string(name));
    return *i;
  }

  friend bool operator==(const VarTable& a, const VarTable& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

template <FieldElement F>
struct PolyRing {
  using FieldType = F;
  VarTable vars;
  typename F::Field field;
  MonomialOrder order = MonomialOrder::grevlex;

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.order == b.order && a.field == b.field && a.vars == b.vars;
  }
};

template <FieldElement F>
using RingPtr = std::shared_ptr<const PolyRing<F>>;

template <FieldElement F>
RingPtr<F> make_ring(std::vector<std::string> names, typename F::Field field = {},
                     MonomialOrder order = MonomialOrder::grevlex) {
  return std::make_shared<const PolyRing<F>>(PolyRing<F>{VarTable(std::move(names)), field, order});
}

/// Same variables and field, different monomial order.
template <FieldElement F>
RingPtr<F> with_order(const RingPtr<F>& r, MonomialOrder order) {
  if (r->order == order) return r;
  return std::make_shared<const PolyRing<F>>(PolyRing<F>{r->vars, r->field, order});
}

template <FieldElement F>
bool same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace heisurf
