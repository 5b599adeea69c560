#pragma once

// Fuel-bounded effective search. Every search here is a total function: a
// semidecidable question answered by finite search returns Accept with a
// re-checkable witness, Reject when a bounded range is genuinely exhausted,
// and Unknown when the fuel ran out first. Unknown is always a sound answer.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "constructive/error.hpp"

namespace constructive {

template <class W>
struct Accept {
  W witness;
  std::uint64_t at_step;

  friend bool operator==(const Accept&, const Accept&) = default;
};

struct Reject {
  std::string proof_tag;

  friend bool operator==(const Reject&, const Reject&) = default;
};

struct Unknown {
  std::uint64_t fuel_spent;

  friend bool operator==(const Unknown&, const Unknown&) = default;
};

template <class W>
class SearchOutcome {
 public:
  SearchOutcome(Accept<W> a) : value_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  SearchOutcome(Reject r) : value_(std::move(r)) {}     // NOLINT(google-explicit-constructor)
  SearchOutcome(Unknown u) : value_(u) {}               // NOLINT(google-explicit-constructor)

  bool accepted() const { return std::holds_alternative<Accept<W>>(value_); }
  bool rejected() const { return std::holds_alternative<Reject>(value_); }
  bool unknown() const { return std::holds_alternative<Unknown>(value_); }

  const Accept<W>& accept() const { return std::get<Accept<W>>(value_); }
  const Reject& reject() const { return std::get<Reject>(value_); }
  const Unknown& unknown_info() const { return std::get<Unknown>(value_); }

  /// Witness if accepted.
  std::optional<W> witness() const {
    if (!accepted()) return std::nullopt;
    return accept().witness;
  }

  const std::variant<Accept<W>, Reject, Unknown>& value() const { return value_; }

  friend bool operator==(const SearchOutcome&, const SearchOutcome&) = default;

 private:
  std::variant<Accept<W>, Reject, Unknown> value_;
};

/// A step-enumerable predicate: probing step k either finds a witness or not.
/// Must be deterministic so that an accepting step can be replayed.
template <class W>
using SemiDecider = std::function<std::optional<W>(std::uint64_t step)>;

inline void require_fuel(std::uint64_t fuel) {
  if (fuel == 0) throw Error(ErrorKind::InvalidArgument, "fuel must be at least 1");
}

/// Markov search totalized by fuel: probes steps 1..fuel and accepts the first
/// witness found.
template <class W>
SearchOutcome<W> markov_search(const SemiDecider<W>& sd, std::uint64_t fuel) {
  require_fuel(fuel);
  for (std::uint64_t step = 1; step <= fuel; ++step) {
    if (auto w = sd(step)) return Accept<W>{std::move(*w), step};
  }
  return Unknown{fuel};
}

/// Like markov_search, but the witness is known to lie at a step <= range_end.
/// Exhausting that range within the fuel is a refutation.
template <class W>
SearchOutcome<W> bounded_search(const SemiDecider<W>& sd, std::uint64_t range_end, std::uint64_t fuel) {
  require_fuel(fuel);
  const std::uint64_t limit = std::min(range_end, fuel);
  for (std::uint64_t step = 1; step <= limit; ++step) {
    if (auto w = sd(step)) return Accept<W>{std::move(*w), step};
  }
  if (range_end <= fuel) return Reject{"no witness at steps 1.." + std::to_string(range_end)};
  return Unknown{fuel};
}

template <class W>
struct DovetailEntry {
  std::uint64_t index;
  SearchOutcome<W> outcome;
};

/// Probe order of the triangle schedule. Diagonal d visits the pairs
/// (index, step) with index + step = d + 1, highest index first, so every
/// diagonal opens with a fresh index at step 1.
struct TriangleSchedule {
  std::uint64_t diagonal = 0;
  std::uint64_t offset = 0;

  std::pair<std::uint64_t, std::uint64_t> current() const {
    const std::uint64_t index = diagonal - offset;
    return {index, offset + 1};
  }
  void advance() {
    if (offset == diagonal) {
      ++diagonal;
      offset = 0;
    } else {
      ++offset;
    }
  }
};

namespace detail {

template <class W, class Probe>
std::vector<DovetailEntry<W>> dovetail_impl(Probe&& probe, std::optional<std::uint64_t> pool_size,
                                            std::uint64_t fuel) {
  require_fuel(fuel);
  std::vector<DovetailEntry<W>> entries;
  if (pool_size && *pool_size == 0) return entries;

  // probes[i] counts the steps spent on index i; accepted indices are retired
  // and no longer consume fuel.
  std::vector<std::uint64_t> probes;
  std::vector<std::optional<Accept<W>>> found;
  std::uint64_t open = pool_size.value_or(0);
  std::uint64_t spent = 0;
  TriangleSchedule schedule;
  while (spent < fuel) {
    if (pool_size && open == 0) break;
    auto [index, step] = schedule.current();
    schedule.advance();
    if (pool_size && index >= *pool_size) continue;
    if (index >= probes.size()) {
      probes.resize(index + 1, 0);
      found.resize(index + 1);
    }
    if (found[index]) continue;
    ++spent;
    ++probes[index];
    if (auto w = probe(index, step)) {
      found[index] = Accept<W>{std::move(*w), step};
      if (pool_size) --open;
    }
  }

  for (std::uint64_t i = 0; i < probes.size(); ++i) {
    if (probes[i] == 0) continue;
    if (found[i]) {
      entries.push_back({i, *found[i]});
    } else {
      entries.push_back({i, Unknown{probes[i]}});
    }
  }
  return entries;
}

}  // namespace detail

/// Fair interleaving over a finite pool. Consumes exactly `fuel` probes unless
/// every member accepts earlier. Reports one entry per probed index.
template <class W>
std::vector<DovetailEntry<W>> dovetail(std::span<const SemiDecider<W>> pool, std::uint64_t fuel) {
  return detail::dovetail_impl<W>(
      [&](std::uint64_t index, std::uint64_t step) { return pool[index](step); },
      static_cast<std::uint64_t>(pool.size()), fuel);
}

/// Fair interleaving over an infinite family indexed by naturals.
template <class W>
std::vector<DovetailEntry<W>> dovetail(const std::function<SemiDecider<W>(std::uint64_t)>& family,
                                       std::uint64_t fuel) {
  std::vector<SemiDecider<W>> materialized;
  return detail::dovetail_impl<W>(
      [&](std::uint64_t index, std::uint64_t step) {
        while (materialized.size() <= index) materialized.push_back(family(materialized.size()));
        return materialized[index](step);
      },
      std::nullopt, fuel);
}

}  // namespace constructive
