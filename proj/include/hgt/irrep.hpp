#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "hgt/group.hpp"
#include "hgt/subgroup.hpp"

namespace hgt {

// An irreducible unitary representation, evaluated on demand from its
// closed form. Matrices are row-major dim x dim.
class Irrep {
 public:
  enum class Form : std::uint8_t {
    AbelianChar,    // param_a = character label y
    DihedralSign,   // value (-1)^(param_a * rot + param_b * refl)
    DihedralPlane,  // 2-dim rotation block, param_a = frequency j
    Perm3,          // param_a: 0 trivial, 1 parity, 2 standard 2-dim
    Quat,           // param_a: 0 trivial, 1..3 sign characters, 4 the 2-dim
  };

  Irrep(std::string label, std::int64_t dim, Form form, std::int64_t a,
        std::int64_t b)
      : label_(std::move(label)), dim_(dim), form_(form), a_(a), b_(b) {}

  const std::string& label() const { return label_; }
  std::int64_t dim() const { return dim_; }
  const Subgroup& kernel() const { return kernel_; }

  std::vector<std::complex<double>> eval(const Group& g, std::int64_t x) const;

  // Exact test for rho(x) == identity; no floating-point tolerance involved.
  bool trivial_at(const Group& g, std::int64_t x) const;

  // rho in H^perp, i.e. H <= ker rho.
  bool trivial_on(const Subgroup& h) const { return kernel_.contains_all(h); }

 private:
  friend std::vector<Irrep> irrep_table(const Group& g);

  std::string label_;
  std::int64_t dim_;
  Form form_;
  std::int64_t a_;
  std::int64_t b_;
  Subgroup kernel_;
};

// Complete table of inequivalent irreducible unitary representations, in
// canonical order (1-dim first). Construction verifies sum(dim^2) == |G| and
// computes every kernel. Abelian tables enumerate all |G| characters, so
// keep the order at desk scale.
std::vector<Irrep> irrep_table(const Group& g);

}  // namespace hgt
