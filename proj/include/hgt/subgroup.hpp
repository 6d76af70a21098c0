#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hgt/group.hpp"

namespace hgt {

// Thrown when an enumeration exceeds its configured work cap; callers should
// reduce the group, k or t (CLI exit code 3).
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::int64_t kDefaultTupleBudget = 10'000'000;

// A subgroup is kept in dual form: a reduced generator list plus the full
// enumerated element set, sorted by element index. The sorted set makes
// equality, containment and deduplication deterministic.
struct Subgroup {
  std::vector<std::int64_t> elems;  // sorted, contains the identity
  std::vector<std::int64_t> gens;   // sorted reduced generating set
  bool normal = false;

  std::int64_t order() const { return static_cast<std::int64_t>(elems.size()); }
  bool contains(std::int64_t idx) const;
  bool contains_all(const Subgroup& other) const;  // other <= this
  bool same_as(const Subgroup& other) const { return elems == other.elems; }
};

Subgroup trivial_subgroup(const Group& g);
Subgroup full_subgroup(const Group& g);

// Smallest subgroup containing gens; empty gens give the trivial subgroup.
Subgroup subgroup_close(const Group& g, const std::vector<std::int64_t>& gens);

// Wraps an already-closed element set, computing a reduced generating set.
// Throws if the set is not closed.
Subgroup subgroup_from_elements(const Group& g, std::vector<std::int64_t> elems);

// Smallest normal subgroup containing gens.
Subgroup normal_closure(const Group& g, const std::vector<std::int64_t>& gens);

// H^perp = { y : chi_y is trivial on H }. Abelian kind only.
Subgroup orthogonal(const Group& g, const Subgroup& h);

// The distinct subgroups <K,x> (Abelian) or Normal-closure(<K,x>) (general)
// for x ranging over G-K, deduplicated and in canonical order. Every
// subgroup strictly above K contains one of these. K must be normal.
std::vector<Subgroup> minimal_overgroups(const Group& g, const Subgroup& k);

// All distinct normal subgroups of order <= k arising as the normal closure
// of at most t elements, in canonical order (trivial subgroup first). Each
// inspected generator tuple counts against the budget.
std::vector<Subgroup> t_generated_normal_subgroups(
    const Group& g, std::int64_t k, std::int64_t t,
    std::int64_t tuple_budget = kDefaultTupleBudget);

// Complete subgroup lattice by breadth-first closure; small groups only.
std::vector<Subgroup> all_subgroups(const Group& g);

bool is_normal_set(const Group& g, const std::vector<std::int64_t>& elems);

// Serialization: "gens=(4,0);(0,1)" with generators sorted canonically.
std::string format_subgroup(const Group& g, const Subgroup& h);
Subgroup parse_subgroup(const Group& g, std::string_view text);

// Left-coset partition of G by H: coset_of[x] identifies the coset of x,
// reps holds the least element of each coset in discovery (ascending) order.
struct CosetTable {
  std::vector<std::int32_t> coset_of;
  std::vector<std::int64_t> reps;
  std::int64_t count() const { return static_cast<std::int64_t>(reps.size()); }
};
CosetTable left_cosets(const Group& g, const Subgroup& h);

}  // namespace hgt
