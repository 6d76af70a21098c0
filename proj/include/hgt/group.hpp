#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hgt {

// An element is its coordinate tuple: one residue per cyclic factor for
// product groups, (rotation, reflection bit) for dihedral groups, and a
// single word index for the small hardcoded families.
using Element = std::vector<std::int64_t>;

enum class GroupKind { AbelianProduct, Dihedral, Symmetric3, Quaternion8 };

inline constexpr std::int64_t kMaxGroupOrder = std::int64_t{1} << 24;

// A finite group: a product of cyclic factors or one of the built-in
// non-Abelian families. Elements are addressed by a dense index in
// [0, order); index order equals lexicographic order on coordinates, which
// is the canonical element ordering everywhere in this library.
class Group {
 public:
  static Group abelian(std::vector<std::int64_t> factors);
  static Group dihedral(std::int64_t n);
  static Group symmetric3();
  static Group quaternion8();

  GroupKind kind() const { return kind_; }
  bool is_abelian() const { return kind_ == GroupKind::AbelianProduct; }
  std::int64_t order() const { return order_; }
  std::int64_t exponent() const { return exponent_; }
  const std::vector<std::int64_t>& factors() const { return factors_; }

  std::int64_t identity() const { return 0; }
  std::int64_t mul(std::int64_t a, std::int64_t b) const;
  std::int64_t inv(std::int64_t a) const;
  std::int64_t conj(std::int64_t g, std::int64_t h) const {
    return mul(mul(g, h), inv(g));
  }
  std::int64_t element_order(std::int64_t a) const;

  Element coords(std::int64_t idx) const;
  std::int64_t index_of(const Element& e) const;

  // A small generating set of the whole group (used for conjugation
  // closures and normality checks).
  std::vector<std::int64_t> generating_set() const;

  // Exact character pairing for the Abelian kind: chi_y(x) is the root of
  // unity exp(2*pi*i*t / exponent); this returns t in [0, exponent).
  std::int64_t character_phase(std::int64_t y, std::int64_t x) const;
  std::complex<double> character(std::int64_t y, std::int64_t x) const;

  std::string to_string() const;
  std::string format_element(std::int64_t idx) const;
  std::int64_t parse_element(std::string_view text) const;

  friend bool operator==(const Group& a, const Group& b) {
    return a.kind_ == b.kind_ && a.factors_ == b.factors_;
  }

 private:
  Group() = default;

  GroupKind kind_ = GroupKind::AbelianProduct;
  std::vector<std::int64_t> factors_;  // Abelian kind only
  std::int64_t order_ = 1;
  std::int64_t exponent_ = 1;
  std::int64_t dihedral_n_ = 0;
  std::vector<std::int8_t> mul_table_;  // S3 / Q8 only
  std::vector<std::int8_t> inv_table_;
};

// Parses the group grammar Z<n>(xZ<n>)* | D<n> | S3 | Q8. Throws
// std::invalid_argument on malformed text and std::overflow_error when the
// order exceeds max_order.
Group parse_group(std::string_view text, std::int64_t max_order = kMaxGroupOrder);

}  // namespace hgt
