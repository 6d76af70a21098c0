#include "hgt/group.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hgt {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  return a / std::gcd(a, b) * b;
}

// S3 as the six permutations of {0,1,2} in lexicographic one-line order.
constexpr std::array<std::array<int, 3>, 6> kPerm3 = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

int perm3_index(const std::array<int, 3>& p) {
  for (int i = 0; i < 6; ++i) {
    if (kPerm3[i] == p) return i;
  }
  throw std::logic_error("perm3_index: not a permutation");
}

// Q8 indices: 0..3 = +1,+i,+j,+k and 4..7 = -1,-i,-j,-k.
std::int8_t q8_mul(std::int8_t a, std::int8_t b) {
  const int sa = a / 4, ua = a % 4;
  const int sb = b / 4, ub = b % 4;
  int sign = sa ^ sb;
  int axis;
  if (ua == 0) {
    axis = ub;
  } else if (ub == 0) {
    axis = ua;
  } else if (ua == ub) {
    axis = 0;
    sign ^= 1;  // i*i = j*j = k*k = -1
  } else {
    // cyclic: i*j=k, j*k=i, k*i=j; reversed order flips the sign
    static constexpr int next[4] = {0, 2, 3, 1};
    if (next[ua] == ub) {
      axis = 6 - ua - ub;
    } else {
      axis = 6 - ua - ub;
      sign ^= 1;
    }
  }
  return static_cast<std::int8_t>(sign * 4 + axis);
}

}  // namespace

Group Group::abelian(std::vector<std::int64_t> factors) {
  if (factors.empty()) factors.push_back(1);
  Group g;
  g.kind_ = GroupKind::AbelianProduct;
  g.order_ = 1;
  g.exponent_ = 1;
  for (std::int64_t n : factors) {
    if (n < 1) throw std::invalid_argument("cyclic factor must be positive");
    if (g.order_ > kMaxGroupOrder / n) {
      throw std::overflow_error("group order exceeds maximum");
    }
    g.order_ *= n;
    g.exponent_ = lcm64(g.exponent_, n);
  }
  g.factors_ = std::move(factors);
  return g;
}

Group Group::dihedral(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("dihedral parameter must be positive");
  if (n > kMaxGroupOrder / 2) throw std::overflow_error("group order exceeds maximum");
  Group g;
  g.kind_ = GroupKind::Dihedral;
  g.dihedral_n_ = n;
  g.order_ = 2 * n;
  g.exponent_ = lcm64(n, 2);
  return g;
}

Group Group::symmetric3() {
  Group g;
  g.kind_ = GroupKind::Symmetric3;
  g.order_ = 6;
  g.exponent_ = 6;
  g.mul_table_.resize(36);
  g.inv_table_.resize(6);
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c;
      for (int x = 0; x < 3; ++x) c[x] = kPerm3[a][kPerm3[b][x]];
      g.mul_table_[a * 6 + b] = static_cast<std::int8_t>(perm3_index(c));
    }
  }
  for (int a = 0; a < 6; ++a) {
    std::array<int, 3> inv;
    for (int x = 0; x < 3; ++x) inv[kPerm3[a][x]] = x;
    g.inv_table_[a] = static_cast<std::int8_t>(perm3_index(inv));
  }
  return g;
}

Group Group::quaternion8() {
  Group g;
  g.kind_ = GroupKind::Quaternion8;
  g.order_ = 8;
  g.exponent_ = 4;
  g.mul_table_.resize(64);
  g.inv_table_.resize(8);
  for (std::int8_t a = 0; a < 8; ++a) {
    for (std::int8_t b = 0; b < 8; ++b) g.mul_table_[a * 8 + b] = q8_mul(a, b);
  }
  for (std::int8_t a = 0; a < 8; ++a) {
    // unit axes are order 4: (-x) is the inverse of x; +/-1 are involutions
    g.inv_table_[a] = (a % 4 == 0) ? a : static_cast<std::int8_t>(a ^ 4);
  }
  return g;
}

std::int64_t Group::mul(std::int64_t a, std::int64_t b) const {
  if (a < 0 || a >= order_ || b < 0 || b >= order_) {
    throw std::out_of_range("Group::mul: element index out of range");
  }
  switch (kind_) {
    case GroupKind::AbelianProduct: {
      std::int64_t idx = 0;
      std::int64_t ra = a, rb = b;
      // mixed-radix add, most significant coordinate first
      std::int64_t place = order_;
      for (std::int64_t n : factors_) {
        place /= n;
        const std::int64_t ca = ra / place, cb = rb / place;
        ra %= place;
        rb %= place;
        idx += ((ca + cb) % n) * place;
      }
      return idx;
    }
    case GroupKind::Dihedral: {
      const std::int64_t n = dihedral_n_;
      const std::int64_t r1 = a / 2, s1 = a % 2;
      const std::int64_t r2 = b / 2, s2 = b % 2;
      const std::int64_t r = s1 ? (r1 - r2 % n + n) % n : (r1 + r2) % n;
      return 2 * r + (s1 ^ s2);
    }
    case GroupKind::Symmetric3:
      return mul_table_[a * 6 + b];
    case GroupKind::Quaternion8:
      return mul_table_[a * 8 + b];
  }
  throw std::logic_error("unreachable");
}

std::int64_t Group::inv(std::int64_t a) const {
  if (a < 0 || a >= order_) throw std::out_of_range("Group::inv: element index out of range");
  switch (kind_) {
    case GroupKind::AbelianProduct: {
      std::int64_t idx = 0;
      std::int64_t ra = a;
      std::int64_t place = order_;
      for (std::int64_t n : factors_) {
        place /= n;
        const std::int64_t c = ra / place;
        ra %= place;
        idx += ((n - c) % n) * place;
      }
      return idx;
    }
    case GroupKind::Dihedral: {
      const std::int64_t n = dihedral_n_;
      const std::int64_t r = a / 2, s = a % 2;
      return s ? a : 2 * ((n - r) % n);
    }
    case GroupKind::Symmetric3:
      return inv_table_[a];
    case GroupKind::Quaternion8:
      return inv_table_[a];
  }
  throw std::logic_error("unreachable");
}

std::int64_t Group::element_order(std::int64_t a) const {
  if (a < 0 || a >= order_) throw std::out_of_range("element index out of range");
  if (kind_ == GroupKind::AbelianProduct) {
    std::int64_t ord = 1;
    std::int64_t ra = a;
    std::int64_t place = order_;
    for (std::int64_t n : factors_) {
      place /= n;
      const std::int64_t c = ra / place;
      ra %= place;
      ord = lcm64(ord, n / std::gcd(c, n));
    }
    return ord;
  }
  std::int64_t ord = 1;
  std::int64_t cur = a;
  while (cur != identity()) {
    cur = mul(cur, a);
    ++ord;
  }
  return ord;
}

Element Group::coords(std::int64_t idx) const {
  if (idx < 0 || idx >= order_) throw std::out_of_range("element index out of range");
  switch (kind_) {
    case GroupKind::AbelianProduct: {
      Element e(factors_.size());
      std::int64_t place = order_;
      for (std::size_t j = 0; j < factors_.size(); ++j) {
        place /= factors_[j];
        e[j] = idx / place;
        idx %= place;
      }
      return e;
    }
    case GroupKind::Dihedral:
      return {idx / 2, idx % 2};
    case GroupKind::Symmetric3:
    case GroupKind::Quaternion8:
      return {idx};
  }
  throw std::logic_error("unreachable");
}

std::int64_t Group::index_of(const Element& e) const {
  switch (kind_) {
    case GroupKind::AbelianProduct: {
      if (e.size() != factors_.size()) {
        throw std::invalid_argument("element arity does not match group");
      }
      std::int64_t idx = 0;
      for (std::size_t j = 0; j < factors_.size(); ++j) {
        if (e[j] < 0 || e[j] >= factors_[j]) {
          throw std::out_of_range("element coordinate out of range");
        }
        idx = idx * factors_[j] + e[j];
      }
      return idx;
    }
    case GroupKind::Dihedral: {
      if (e.size() != 2) throw std::invalid_argument("dihedral element needs (rotation, reflection)");
      if (e[0] < 0 || e[0] >= dihedral_n_ || e[1] < 0 || e[1] > 1) {
        throw std::out_of_range("element coordinate out of range");
      }
      return 2 * e[0] + e[1];
    }
    case GroupKind::Symmetric3:
    case GroupKind::Quaternion8: {
      if (e.size() != 1) throw std::invalid_argument("element needs a single word index");
      if (e[0] < 0 || e[0] >= order_) throw std::out_of_range("element coordinate out of range");
      return e[0];
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<std::int64_t> Group::generating_set() const {
  switch (kind_) {
    case GroupKind::AbelianProduct: {
      std::vector<std::int64_t> gens;
      std::int64_t place = order_;
      for (std::int64_t n : factors_) {
        place /= n;
        if (n > 1) gens.push_back(place);  // unit in this coordinate
      }
      return gens;
    }
    case GroupKind::Dihedral: {
      std::vector<std::int64_t> gens;
      if (dihedral_n_ > 1) gens.push_back(2);  // rotation (1,0)
      gens.push_back(1);                       // reflection (0,1)
      return gens;
    }
    case GroupKind::Symmetric3:
      return {1, 3};  // a transposition and a 3-cycle
    case GroupKind::Quaternion8:
      return {1, 2};  // i and j
  }
  throw std::logic_error("unreachable");
}

std::int64_t Group::character_phase(std::int64_t y, std::int64_t x) const {
  if (kind_ != GroupKind::AbelianProduct) {
    throw std::logic_error("character_phase is defined for Abelian groups only");
  }
  const std::int64_t L = exponent_;
  std::int64_t t = 0;
  std::int64_t place = order_;
  std::int64_t ry = y, rx = x;
  for (std::int64_t n : factors_) {
    place /= n;
    const std::int64_t cy = ry / place, cx = rx / place;
    ry %= place;
    rx %= place;
    t = (t + (cx * cy) % n * (L / n)) % L;
  }
  return t;
}

std::complex<double> Group::character(std::int64_t y, std::int64_t x) const {
  const std::int64_t t = character_phase(y, x);
  if (t == 0) return {1.0, 0.0};
  return std::polar(1.0, kTwoPi * static_cast<double>(t) / static_cast<double>(exponent_));
}

std::string Group::to_string() const {
  switch (kind_) {
    case GroupKind::AbelianProduct: {
      std::string s;
      for (std::size_t j = 0; j < factors_.size(); ++j) {
        if (j) s += "x";
        s += "Z" + std::to_string(factors_[j]);
      }
      return s;
    }
    case GroupKind::Dihedral:
      return "D" + std::to_string(dihedral_n_);
    case GroupKind::Symmetric3:
      return "S3";
    case GroupKind::Quaternion8:
      return "Q8";
  }
  throw std::logic_error("unreachable");
}

std::string Group::format_element(std::int64_t idx) const {
  const Element e = coords(idx);
  std::string s = "(";
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (j) s += ",";
    s += std::to_string(e[j]);
  }
  s += ")";
  return s;
}

std::int64_t Group::parse_element(std::string_view text) const {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
    throw std::invalid_argument("element must be a parenthesized coordinate tuple");
  }
  text.remove_prefix(1);
  text.remove_suffix(1);
  Element e;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                ? std::string_view::npos
                                                : comma - pos);
    if (tok.empty()) throw std::invalid_argument("empty element coordinate");
    std::int64_t v = 0;
    for (char c : tok) {
      if (c < '0' || c > '9') throw std::invalid_argument("element coordinate is not a number");
      v = v * 10 + (c - '0');
      if (v > kMaxGroupOrder) throw std::out_of_range("element coordinate out of range");
    }
    e.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return index_of(e);
}

Group parse_group(std::string_view text, std::int64_t max_order) {
  if (text == "S3") return Group::symmetric3();
  if (text == "Q8") return Group::quaternion8();
  auto parse_num = [](std::string_view tok) -> std::int64_t {
    if (tok.empty()) throw std::invalid_argument("missing group parameter");
    std::int64_t v = 0;
    for (char c : tok) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad group parameter");
      v = v * 10 + (c - '0');
      if (v > kMaxGroupOrder) throw std::overflow_error("group order exceeds maximum");
    }
    if (v < 1) throw std::invalid_argument("group parameter must be positive");
    return v;
  };
  if (!text.empty() && text.front() == 'D') {
    const std::int64_t n = parse_num(text.substr(1));
    if (2 * n > max_order) throw std::overflow_error("group order exceeds maximum");
    return Group::dihedral(n);
  }
  std::vector<std::int64_t> factors;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != 'Z') throw std::invalid_argument("expected Z<n> factor");
    std::size_t end = text.find('x', pos);
    std::string_view tok = text.substr(pos + 1, end == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : end - pos - 1);
    factors.push_back(parse_num(tok));
    if (end == std::string_view::npos) break;
    pos = end + 1;
    if (pos >= text.size()) throw std::invalid_argument("trailing 'x' in group spec");
  }
  if (factors.empty()) throw std::invalid_argument("empty group spec");
  __int128 order = 1;
  for (std::int64_t n : factors) {
    order *= n;
    if (order > max_order) throw std::overflow_error("group order exceeds maximum");
  }
  return Group::abelian(std::move(factors));
}

}  // namespace hgt
