#include "manp/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

#include "manp/errors.hpp"

namespace manp {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InvalidArgument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw InvalidArgument("partition parts must be weakly decreasing");
    total_ += parts_[i];
  }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

int Partition::multiplicity(int value) const noexcept {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition CoreSplit::join() const {
  std::vector<int> parts = core.parts();
  parts.insert(parts.end(), static_cast<std::size_t>(ones), 1);
  return Partition(std::move(parts));
}

Partition conjugate(const Partition& p) {
  std::vector<int> out(static_cast<std::size_t>(p.largest()), 0);
  for (int part : p)
    for (int i = 0; i < part; ++i) ++out[static_cast<std::size_t>(i)];
  return Partition(std::move(out));
}

Partition ord(std::span<const int> seq) {
  std::vector<int> parts;
  parts.reserve(seq.size());
  for (int v : seq) {
    if (v < 0) throw InvalidArgument("ord: negative entry");
    if (v > 0) parts.push_back(v);
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw InvalidArgument("enumerate_partitions: negative n");
  std::vector<Partition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> cur{n};
  while (true) {
    out.emplace_back(cur);
    // Rightmost part > 1 is decremented; everything after it is refilled greedily.
    int remainder = 0;
    while (!cur.empty() && cur.back() == 1) {
      ++remainder;
      cur.pop_back();
    }
    if (cur.empty()) break;
    const int cap = --cur.back();
    ++remainder;
    while (remainder > 0) {
      const int part = std::min(cap, remainder);
      cur.push_back(part);
      remainder -= part;
    }
  }
  return out;
}

CoreSplit split_core(const Partition& p) {
  std::vector<int> core;
  int ones = 0;
  for (int part : p) {
    if (part >= 2)
      core.push_back(part);
    else
      ++ones;
  }
  return CoreSplit{Partition(std::move(core)), ones};
}

namespace {

int parse_int(std::string_view token, std::string_view whole) {
  while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
  while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
  int value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc() || ptr != last)
    throw InvalidArgument("bad partition text '" + std::string(whole) + "'");
  return value;
}

}  // namespace

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::string_view rest = text;
  while (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t')) rest.remove_prefix(1);
  while (!rest.empty() && (rest.back() == ' ' || rest.back() == '\t' || rest.back() == '\n'))
    rest.remove_suffix(1);
  if (rest.empty()) return Partition{};

  while (true) {
    const auto comma = rest.find(',');
    std::string_view token = rest.substr(0, comma);
    const auto caret = token.find('^');
    const int value = parse_int(token.substr(0, caret), text);
    int repeat = 1;
    if (caret != std::string_view::npos) repeat = parse_int(token.substr(caret + 1), text);
    if (value <= 0 || repeat < 0)
      throw InvalidArgument("partition parts must be positive in '" + std::string(text) + "'");
    parts.insert(parts.end(), static_cast<std::size_t>(repeat), value);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

}  // namespace manp
