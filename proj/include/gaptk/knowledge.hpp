#pragma once

#include <cstdint>
#include <vector>

#include "gaptk/sat.hpp"

namespace gaptk::sat {

/// Three-way partition of [0, 2^n) into the free set S (values that may still
/// satisfy), the blocked set M (translated clause values and their forced
/// complements) and the solution set Y (a subset of M). S and M are circular
/// doubly linked lists threaded through one node table: value v lives at slot
/// v+1, slot number 0 is the null link, and each list has a header holding
/// (prev = tail slot, next = head slot). Moves touch a constant number of
/// links, never scan.
class Knowledge {
public:
  enum class List : std::uint8_t { Free, Blocked };

  /// Fresh structure: every value in S in ascending slot order, M empty.
  explicit Knowledge(int bits);

  int bits() const { return bits_; }
  std::uint64_t universe() const { return std::uint64_t{1} << bits_; }

  List list_of(std::uint64_t value) const;
  bool contains(List list, std::uint64_t value) const;
  std::uint64_t size(List list) const { return size_[index(list)]; }

  struct Header {
    std::uint64_t prev = 0;  ///< tail slot, 0 when empty
    std::uint64_t next = 0;  ///< head slot, 0 when empty
  };
  Header header(List list) const { return header_[index(list)]; }

  /// Per-list slot view: absent slots read as the empty marker with zero
  /// links.
  struct SlotView {
    bool present = false;
    std::uint64_t prev = 0;
    std::uint64_t next = 0;
  };
  SlotView slot(List list, std::uint64_t value) const;

  /// Unlinks the value from one list and links it at the head of the other.
  /// Throws when the value is not currently in from_list.
  void move(std::uint64_t value, List from, List to);

  /// Values in list order, head first.
  std::vector<std::uint64_t> values(List list) const;
  /// Values in reverse list order, tail first; must mirror values().
  std::vector<std::uint64_t> values_reversed(List list) const;

  const std::vector<std::uint64_t>& solutions() const { return solutions_; }
  void add_solution(std::uint64_t value) { solutions_.push_back(value); }

private:
  static int index(List list) { return static_cast<int>(list); }
  void check_value(std::uint64_t value) const;

  struct Node {
    std::uint32_t prev = 0;
    std::uint32_t next = 0;
    List tag = List::Free;
  };

  int bits_ = 0;
  std::vector<Node> nodes_;  // index 1..2^n; index 0 unused (null slot)
  Header header_[2];
  std::uint64_t size_[2] = {0, 0};
  std::vector<std::uint64_t> solutions_;
};

/// Translates each clause in order; a value still free is either recorded as
/// a solution (evaluate = 1) or blocked, and its complement is blocked with
/// it, so afterwards every value left in S satisfies the instance. The
/// solution set Y collects satisfying clause values in discovery order.
Knowledge build_knowledge(const SatInstance& instance,
                          int table_bits_limit = kTableBitsLimit);

}  // namespace gaptk::sat
