#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hgt/group.hpp"

namespace hgt {

// Query-counting table-backed oracle for f : G -> S. Values are integer
// labels in [0, value_universe). Point queries and sampling runs charge
// `queries`; the simulator's whole-table sweeps are tracked separately as
// `simulation_reads` and never count as queries.
class FunctionOracle {
 public:
  FunctionOracle(Group domain, std::vector<std::int64_t> table,
                 std::int64_t value_universe)
      : domain_(std::move(domain)),
        table_(std::move(table)),
        value_universe_(value_universe) {
    if (static_cast<std::int64_t>(table_.size()) != domain_.order()) {
      throw std::invalid_argument("oracle table size must equal group order");
    }
    for (std::int64_t v : table_) {
      if (v < 0 || v >= value_universe_) {
        throw std::invalid_argument("oracle value outside its universe");
      }
    }
  }

  const Group& domain() const { return domain_; }
  std::int64_t value_universe() const { return value_universe_; }

  std::int64_t operator()(std::int64_t x) const {
    ++queries_;
    return table_.at(static_cast<std::size_t>(x));
  }

  // Uncounted access for generators and exact-distance oracles.
  const std::vector<std::int64_t>& table() const { return table_; }

  void charge_query() const { ++queries_; }
  void note_simulation_sweep() const {
    simulation_reads_ += static_cast<std::uint64_t>(domain_.order());
  }

  std::uint64_t queries() const { return queries_; }
  std::uint64_t simulation_reads() const { return simulation_reads_; }

 private:
  Group domain_;
  std::vector<std::int64_t> table_;
  std::int64_t value_universe_;
  mutable std::uint64_t queries_ = 0;
  mutable std::uint64_t simulation_reads_ = 0;
};

// A pair (f0, f1), equivalently one function on G x Z2 with f(x,b) = f_b(x).
// One sampling run on the product group charges a single query.
class PairOracle {
 public:
  PairOracle(Group domain, std::vector<std::int64_t> table0,
             std::vector<std::int64_t> table1, std::int64_t value_universe)
      : domain_(std::move(domain)),
        tables_{std::move(table0), std::move(table1)},
        value_universe_(value_universe) {
    for (const auto& t : tables_) {
      if (static_cast<std::int64_t>(t.size()) != domain_.order()) {
        throw std::invalid_argument("oracle table size must equal group order");
      }
      for (std::int64_t v : t) {
        if (v < 0 || v >= value_universe_) {
          throw std::invalid_argument("oracle value outside its universe");
        }
      }
    }
  }

  const Group& domain() const { return domain_; }
  std::int64_t value_universe() const { return value_universe_; }

  std::int64_t operator()(int b, std::int64_t x) const {
    ++queries_;
    return tables_[b].at(static_cast<std::size_t>(x));
  }

  const std::vector<std::int64_t>& table(int b) const { return tables_[b]; }

  void charge_query() const { ++queries_; }
  void note_simulation_sweep() const {
    simulation_reads_ += 2 * static_cast<std::uint64_t>(domain_.order());
  }

  std::uint64_t queries() const { return queries_; }
  std::uint64_t simulation_reads() const { return simulation_reads_; }

 private:
  Group domain_;
  std::vector<std::int64_t> tables_[2];
  std::int64_t value_universe_;
  mutable std::uint64_t queries_ = 0;
  mutable std::uint64_t simulation_reads_ = 0;
};

}  // namespace hgt
