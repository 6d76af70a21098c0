#include "hgt/subgroup.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace hgt {

namespace {

// Canonical order on subgroups: by order, then by element list.
bool subgroup_less(const Subgroup& a, const Subgroup& b) {
  if (a.elems.size() != b.elems.size()) return a.elems.size() < b.elems.size();
  return a.elems < b.elems;
}

std::vector<std::int64_t> close_elements(const Group& g,
                                         const std::vector<std::int64_t>& gens) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::deque<std::int64_t> work;
  std::vector<std::int64_t> elems;
  auto push = [&](std::int64_t x) {
    if (!seen[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = 1;
      elems.push_back(x);
      work.push_back(x);
    }
  };
  push(g.identity());
  for (std::int64_t x : gens) {
    if (x < 0 || x >= g.order()) throw std::out_of_range("generator index out of range");
    push(x);
  }
  while (!work.empty()) {
    const std::int64_t x = work.front();
    work.pop_front();
    // words in the generators cover the subgroup; inverses arise as powers
    for (std::int64_t y : gens) push(g.mul(x, y));
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<std::int64_t> reduce_generators(const Group& g,
                                            const std::vector<std::int64_t>& elems) {
  std::vector<std::int64_t> gens;
  std::vector<std::int64_t> closed = {g.identity()};
  for (std::int64_t e : elems) {
    if (!std::binary_search(closed.begin(), closed.end(), e)) {
      gens.push_back(e);
      closed = close_elements(g, gens);
    }
  }
  return gens;
}

Subgroup make_subgroup(const Group& g, std::vector<std::int64_t> elems,
                       std::vector<std::int64_t> gens) {
  Subgroup h;
  h.elems = std::move(elems);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::erase(gens, g.identity());
  h.gens = std::move(gens);
  h.normal = g.is_abelian() || is_normal_set(g, h.elems);
  return h;
}

}  // namespace

bool Subgroup::contains(std::int64_t idx) const {
  return std::binary_search(elems.begin(), elems.end(), idx);
}

bool Subgroup::contains_all(const Subgroup& other) const {
  return std::includes(elems.begin(), elems.end(), other.elems.begin(),
                       other.elems.end());
}

Subgroup trivial_subgroup(const Group& g) {
  Subgroup h;
  h.elems = {g.identity()};
  h.normal = true;
  return h;
}

Subgroup full_subgroup(const Group& g) {
  Subgroup h;
  h.elems.resize(static_cast<std::size_t>(g.order()));
  for (std::int64_t i = 0; i < g.order(); ++i) h.elems[static_cast<std::size_t>(i)] = i;
  h.gens = g.generating_set();
  h.normal = true;
  return h;
}

Subgroup subgroup_close(const Group& g, const std::vector<std::int64_t>& gens) {
  auto elems = close_elements(g, gens);
  return make_subgroup(g, std::move(elems), gens);
}

Subgroup subgroup_from_elements(const Group& g, std::vector<std::int64_t> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  auto gens = reduce_generators(g, elems);
  Subgroup h = make_subgroup(g, std::move(elems), std::move(gens));
  if (close_elements(g, h.gens) != h.elems) {
    throw std::invalid_argument("element set is not closed under the group operation");
  }
  return h;
}

Subgroup normal_closure(const Group& g, const std::vector<std::int64_t>& gens) {
  if (g.is_abelian()) return subgroup_close(g, gens);
  const auto group_gens = g.generating_set();
  std::vector<std::int64_t> seed = gens;
  Subgroup h = subgroup_close(g, seed);
  for (;;) {
    std::vector<std::int64_t> extra;
    for (std::int64_t x : h.elems) {
      for (std::int64_t c : group_gens) {
        const std::int64_t y = g.conj(c, x);
        if (!h.contains(y)) extra.push_back(y);
      }
    }
    if (extra.empty()) break;
    seed.insert(seed.end(), extra.begin(), extra.end());
    h = subgroup_close(g, seed);
  }
  // regenerate so that the stored generators reproduce the closed set
  Subgroup out = make_subgroup(g, h.elems, reduce_generators(g, h.elems));
  out.normal = true;
  return out;
}

Subgroup orthogonal(const Group& g, const Subgroup& h) {
  if (!g.is_abelian()) {
    throw std::invalid_argument("orthogonal subgroup requires an Abelian group; use irrep kernels");
  }
  std::vector<std::int64_t> ys;
  for (std::int64_t y = 0; y < g.order(); ++y) {
    bool trivial = true;
    for (std::int64_t x : h.gens) {
      if (g.character_phase(y, x) != 0) {
        trivial = false;
        break;
      }
    }
    if (trivial) ys.push_back(y);
  }
  return make_subgroup(g, std::move(ys), reduce_generators(g, ys));
}

std::vector<Subgroup> minimal_overgroups(const Group& g, const Subgroup& k) {
  if (!k.normal) throw std::invalid_argument("minimal_overgroups requires a normal base subgroup");
  std::vector<Subgroup> out;
  std::set<std::vector<std::int64_t>> seen;
  for (std::int64_t x = 0; x < g.order(); ++x) {
    if (k.contains(x)) continue;
    std::vector<std::int64_t> gens = k.gens;
    gens.push_back(x);
    Subgroup h = g.is_abelian() ? subgroup_close(g, gens) : normal_closure(g, gens);
    if (seen.insert(h.elems).second) out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(), subgroup_less);
  return out;
}

std::vector<Subgroup> t_generated_normal_subgroups(const Group& g, std::int64_t k,
                                                   std::int64_t t,
                                                   std::int64_t tuple_budget) {
  if (k < 1) throw std::invalid_argument("subgroup size bound must be >= 1");
  if (t < 1) throw std::invalid_argument("generator count bound must be >= 1");
  std::vector<std::int64_t> candidates;
  for (std::int64_t x = 0; x < g.order(); ++x) {
    if (g.element_order(x) <= k) candidates.push_back(x);
  }
  std::vector<Subgroup> out;
  std::set<std::vector<std::int64_t>> seen;
  std::vector<std::int64_t> tuple;
  std::int64_t used = 0;
  // non-decreasing tuples: the closure is order-insensitive and shorter
  // tuples are covered by repeating an entry
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (tuple.size() == static_cast<std::size_t>(t)) {
      if (++used > tuple_budget) {
        throw BudgetExceeded("t-generated subgroup enumeration exceeded its tuple budget");
      }
      Subgroup h = normal_closure(g, tuple);
      if (h.order() <= k && seen.insert(h.elems).second) out.push_back(std::move(h));
      return;
    }
    for (std::size_t i = start; i < candidates.size(); ++i) {
      tuple.push_back(candidates[i]);
      self(self, i);
      tuple.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), subgroup_less);
  return out;
}

std::vector<Subgroup> all_subgroups(const Group& g) {
  if (g.order() > 512) {
    throw std::invalid_argument("all_subgroups is an exhaustive walk; group too large");
  }
  std::vector<Subgroup> out;
  std::set<std::vector<std::int64_t>> seen;
  std::deque<Subgroup> work;
  Subgroup triv = trivial_subgroup(g);
  seen.insert(triv.elems);
  work.push_back(triv);
  out.push_back(std::move(triv));
  while (!work.empty()) {
    Subgroup s = std::move(work.front());
    work.pop_front();
    for (std::int64_t x = 0; x < g.order(); ++x) {
      if (s.contains(x)) continue;
      std::vector<std::int64_t> gens = s.gens;
      gens.push_back(x);
      Subgroup h = subgroup_close(g, gens);
      if (seen.insert(h.elems).second) {
        work.push_back(h);
        out.push_back(std::move(h));
      }
    }
  }
  std::sort(out.begin(), out.end(), subgroup_less);
  return out;
}

bool is_normal_set(const Group& g, const std::vector<std::int64_t>& elems) {
  for (std::int64_t c : g.generating_set()) {
    for (std::int64_t x : elems) {
      if (!std::binary_search(elems.begin(), elems.end(), g.conj(c, x))) return false;
    }
  }
  return true;
}

std::string format_subgroup(const Group& g, const Subgroup& h) {
  std::string s = "gens=";
  for (std::size_t i = 0; i < h.gens.size(); ++i) {
    if (i) s += ";";
    s += g.format_element(h.gens[i]);
  }
  return s;
}

Subgroup parse_subgroup(const Group& g, std::string_view text) {
  constexpr std::string_view prefix = "gens=";
  if (text.substr(0, prefix.size()) != prefix) {
    throw std::invalid_argument("subgroup must be given as gens=(..);(..)");
  }
  text.remove_prefix(prefix.size());
  std::vector<std::int64_t> gens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t sep = text.find(';', pos);
    std::string_view tok = text.substr(pos, sep == std::string_view::npos
                                                ? std::string_view::npos
                                                : sep - pos);
    gens.push_back(g.parse_element(tok));
    if (sep == std::string_view::npos) break;
    pos = sep + 1;
  }
  return subgroup_close(g, gens);
}

CosetTable left_cosets(const Group& g, const Subgroup& h) {
  CosetTable t;
  t.coset_of.assign(static_cast<std::size_t>(g.order()), -1);
  for (std::int64_t x = 0; x < g.order(); ++x) {
    if (t.coset_of[static_cast<std::size_t>(x)] >= 0) continue;
    const auto id = static_cast<std::int32_t>(t.reps.size());
    t.reps.push_back(x);
    for (std::int64_t e : h.elems) {
      t.coset_of[static_cast<std::size_t>(g.mul(x, e))] = id;
    }
  }
  return t;
}

}  // namespace hgt
