#include "gaptk/knowledge.hpp"

#include <stdexcept>

namespace gaptk::sat {

Knowledge::Knowledge(int bits) : bits_(bits) {
  if (bits_ < 1 || bits_ > 31)
    throw std::invalid_argument("Knowledge: bits must be in [1, 31]");
  const std::uint64_t count = universe();
  nodes_.resize(count + 1);
  for (std::uint64_t slot = 1; slot <= count; ++slot) {
    nodes_[slot].prev = static_cast<std::uint32_t>(slot == 1 ? count : slot - 1);
    nodes_[slot].next = static_cast<std::uint32_t>(slot == count ? 1 : slot + 1);
    nodes_[slot].tag = List::Free;
  }
  header_[index(List::Free)] = Header{count, 1};
  header_[index(List::Blocked)] = Header{0, 0};
  size_[index(List::Free)] = count;
  size_[index(List::Blocked)] = 0;
}

void Knowledge::check_value(std::uint64_t value) const {
  if (value >= universe())
    throw std::invalid_argument("Knowledge: value out of range");
}

Knowledge::List Knowledge::list_of(std::uint64_t value) const {
  check_value(value);
  return nodes_[value + 1].tag;
}

bool Knowledge::contains(List list, std::uint64_t value) const {
  return list_of(value) == list;
}

Knowledge::SlotView Knowledge::slot(List list, std::uint64_t value) const {
  check_value(value);
  const Node& node = nodes_[value + 1];
  if (node.tag != list) return SlotView{};
  return SlotView{true, node.prev, node.next};
}

void Knowledge::move(std::uint64_t value, List from, List to) {
  check_value(value);
  if (from == to) throw std::invalid_argument("Knowledge::move: from == to");
  const std::uint64_t slot = value + 1;
  Node& node = nodes_[slot];
  if (node.tag != from)
    throw std::invalid_argument("Knowledge::move: value not in from-list");

  Header& src = header_[index(from)];
  if (size_[index(from)] == 1) {
    src = Header{0, 0};
  } else {
    nodes_[node.prev].next = node.next;
    nodes_[node.next].prev = node.prev;
    if (src.next == slot) src.next = node.next;
    if (src.prev == slot) src.prev = node.prev;
  }
  --size_[index(from)];

  // insert at the head of the destination list
  Header& dst = header_[index(to)];
  if (size_[index(to)] == 0) {
    node.prev = node.next = static_cast<std::uint32_t>(slot);
    dst = Header{slot, slot};
  } else {
    const std::uint64_t head = dst.next;
    const std::uint64_t tail = dst.prev;
    node.next = static_cast<std::uint32_t>(head);
    node.prev = static_cast<std::uint32_t>(tail);
    nodes_[head].prev = static_cast<std::uint32_t>(slot);
    nodes_[tail].next = static_cast<std::uint32_t>(slot);
    dst.next = slot;
  }
  ++size_[index(to)];
  node.tag = to;
}

std::vector<std::uint64_t> Knowledge::values(List list) const {
  std::vector<std::uint64_t> out;
  out.reserve(size_[index(list)]);
  const std::uint64_t head = header_[index(list)].next;
  if (head == 0) return out;
  std::uint64_t slot = head;
  do {
    out.push_back(slot - 1);
    slot = nodes_[slot].next;
  } while (slot != head);
  return out;
}

std::vector<std::uint64_t> Knowledge::values_reversed(List list) const {
  std::vector<std::uint64_t> out;
  out.reserve(size_[index(list)]);
  const std::uint64_t tail = header_[index(list)].prev;
  if (tail == 0) return out;
  std::uint64_t slot = tail;
  do {
    out.push_back(slot - 1);
    slot = nodes_[slot].prev;
  } while (slot != tail);
  return out;
}

Knowledge build_knowledge(const SatInstance& instance, int table_bits_limit) {
  if (!instance.simple())
    throw std::invalid_argument("build_knowledge: instance is not simple");
  if (instance.vars() > table_bits_limit)
    throw std::invalid_argument(
        "build_knowledge: variable count exceeds the 2^n table limit");

  Knowledge knowledge(instance.vars());
  for (const std::string& clause : instance.clauses()) {
    const std::uint64_t k = clause_binary_value(clause);
    if (!knowledge.contains(Knowledge::List::Free, k)) continue;
    if (evaluate(instance, k) == 1) knowledge.add_solution(k);
    knowledge.move(k, Knowledge::List::Free, Knowledge::List::Blocked);
    const std::uint64_t kc = complement(k, instance.vars());
    if (knowledge.contains(Knowledge::List::Free, kc))
      knowledge.move(kc, Knowledge::List::Free, Knowledge::List::Blocked);
  }
  return knowledge;
}

}  // namespace gaptk::sat
