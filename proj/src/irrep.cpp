#include "hgt/irrep.hpp"

#include <array>
#include <stdexcept>

namespace hgt {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::complex<double> unit_root(std::int64_t num, std::int64_t den) {
  num %= den;
  if (num == 0) return {1.0, 0.0};
  return std::polar(1.0, kTwoPi * static_cast<double>(num) / static_cast<double>(den));
}

// S3 word index -> dihedral D3 coordinates under the isomorphism that sends
// the 3-cycle (0 1 2) to the rotation and the transposition (1 2) to the
// reflection.
constexpr std::array<std::array<std::int64_t, 2>, 6> kS3AsD3 = {{
    {0, 0},  // [0,1,2]
    {0, 1},  // [0,2,1]
    {1, 1},  // [1,0,2]
    {1, 0},  // [1,2,0]
    {2, 0},  // [2,0,1]
    {2, 1},  // [2,1,0]
}};

constexpr std::array<int, 6> kS3Parity = {0, 1, 1, 0, 0, 1};  // 1 = odd

std::vector<std::complex<double>> dihedral_plane(std::int64_t j, std::int64_t rot,
                                                 std::int64_t refl, std::int64_t n) {
  const std::complex<double> w = unit_root(j * rot % n, n);
  const std::complex<double> wbar = std::conj(w);
  if (refl == 0) return {w, {0, 0}, {0, 0}, wbar};
  return {{0, 0}, w, wbar, {0, 0}};
}

const std::complex<double> kI{0.0, 1.0};

// Q8 two-dimensional irrep on the unit quaternions.
std::vector<std::complex<double>> quat_plane(std::int64_t x) {
  const double s = x < 4 ? 1.0 : -1.0;
  switch (x % 4) {
    case 0: return {s, {0, 0}, {0, 0}, s};                    // +-1
    case 1: return {s * kI, {0, 0}, {0, 0}, -s * kI};         // +-i
    case 2: return {{0, 0}, std::complex<double>(s), -s, {0, 0}};  // +-j
    default: return {{0, 0}, s * kI, s * kI, {0, 0}};         // +-k
  }
}

}  // namespace

std::vector<std::complex<double>> Irrep::eval(const Group& g, std::int64_t x) const {
  switch (form_) {
    case Form::AbelianChar:
      return {g.character(a_, x)};
    case Form::DihedralSign: {
      const Element e = g.coords(x);
      const std::int64_t s = a_ * e[0] + b_ * e[1];
      return {std::complex<double>(s % 2 == 0 ? 1.0 : -1.0)};
    }
    case Form::DihedralPlane: {
      const Element e = g.coords(x);
      return dihedral_plane(a_, e[0], e[1], g.order() / 2);
    }
    case Form::Perm3: {
      if (a_ == 0) return {{1.0, 0.0}};
      if (a_ == 1) return {std::complex<double>(kS3Parity[x] ? -1.0 : 1.0)};
      const auto& d3 = kS3AsD3[static_cast<std::size_t>(x)];
      return dihedral_plane(1, d3[0], d3[1], 3);
    }
    case Form::Quat: {
      if (a_ == 0) return {{1.0, 0.0}};
      if (a_ <= 3) {
        const std::int64_t axis = x % 4;
        const bool plus = axis == 0 || axis == a_;
        return {std::complex<double>(plus ? 1.0 : -1.0)};
      }
      return quat_plane(x);
    }
  }
  throw std::logic_error("unreachable");
}

bool Irrep::trivial_at(const Group& g, std::int64_t x) const {
  switch (form_) {
    case Form::AbelianChar:
      return g.character_phase(a_, x) == 0;
    case Form::DihedralSign: {
      const Element e = g.coords(x);
      return (a_ * e[0] + b_ * e[1]) % 2 == 0;
    }
    case Form::DihedralPlane: {
      const Element e = g.coords(x);
      return e[1] == 0 && (a_ * e[0]) % (g.order() / 2) == 0;
    }
    case Form::Perm3:
      if (a_ == 0) return true;
      if (a_ == 1) return kS3Parity[x] == 0;
      return x == 0;
    case Form::Quat:
      if (a_ == 0) return true;
      if (a_ <= 3) return x % 4 == 0 || x % 4 == a_;
      return x == 0;
  }
  throw std::logic_error("unreachable");
}

std::vector<Irrep> irrep_table(const Group& g) {
  std::vector<Irrep> table;
  switch (g.kind()) {
    case GroupKind::AbelianProduct: {
      for (std::int64_t y = 0; y < g.order(); ++y) {
        table.emplace_back("chi" + g.format_element(y), 1, Irrep::Form::AbelianChar, y, 0);
      }
      break;
    }
    case GroupKind::Dihedral: {
      const std::int64_t n = g.order() / 2;
      table.emplace_back("triv", 1, Irrep::Form::DihedralSign, 0, 0);
      table.emplace_back("sgn_s", 1, Irrep::Form::DihedralSign, 0, 1);
      if (n % 2 == 0) {
        table.emplace_back("sgn_r", 1, Irrep::Form::DihedralSign, 1, 0);
        table.emplace_back("sgn_rs", 1, Irrep::Form::DihedralSign, 1, 1);
      }
      for (std::int64_t j = 1; j <= (n - 1) / 2; ++j) {
        table.emplace_back("rho" + std::to_string(j), 2, Irrep::Form::DihedralPlane, j, 0);
      }
      break;
    }
    case GroupKind::Symmetric3: {
      table.emplace_back("triv", 1, Irrep::Form::Perm3, 0, 0);
      table.emplace_back("sgn", 1, Irrep::Form::Perm3, 1, 0);
      table.emplace_back("std", 2, Irrep::Form::Perm3, 2, 0);
      break;
    }
    case GroupKind::Quaternion8: {
      table.emplace_back("triv", 1, Irrep::Form::Quat, 0, 0);
      table.emplace_back("sgn_i", 1, Irrep::Form::Quat, 1, 0);
      table.emplace_back("sgn_j", 1, Irrep::Form::Quat, 2, 0);
      table.emplace_back("sgn_k", 1, Irrep::Form::Quat, 3, 0);
      table.emplace_back("rho2", 2, Irrep::Form::Quat, 4, 0);
      break;
    }
  }
  std::int64_t dim_sq = 0;
  for (auto& rep : table) {
    dim_sq += rep.dim() * rep.dim();
    std::vector<std::int64_t> kernel_elems;
    for (std::int64_t x = 0; x < g.order(); ++x) {
      if (rep.trivial_at(g, x)) kernel_elems.push_back(x);
    }
    rep.kernel_ = subgroup_from_elements(g, std::move(kernel_elems));
  }
  if (dim_sq != g.order()) throw std::logic_error("irrep dimensions do not sum to |G|");
  return table;
}

}  // namespace hgt
