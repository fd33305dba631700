#include <sstream>
#include <stdexcept>

#include "qgue/symschur.hpp"

namespace qgue {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("Partition: negative part");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::hook(int arm, int legs) {
  if (arm < 0 || legs < 0) throw std::invalid_argument("Partition::hook: negative arm or legs");
  std::vector<int> parts{arm + 1};
  parts.insert(parts.end(), static_cast<std::size_t>(legs), 1);
  return Partition(std::move(parts));
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("Partition::parse: bad part '" + item + "' in '" + text + "'");
    }
    while (used < item.size() && item[used] == ' ') ++used;
    if (used != item.size()) throw std::invalid_argument("Partition::parse: bad part '" + item + "' in '" + text + "'");
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

int Partition::weight() const {
  int w = 0;
  for (int p : parts_) w += p;
  return w;
}

int Partition::operator[](int i) const {
  return i >= 0 && i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (int i = 0; i < other.length(); ++i)
    if (other[i] > (*this)[i]) return false;
  return true;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

namespace {

void partitions_rec(int remaining, int max_part, int max_length, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (static_cast<int>(prefix.size()) == max_length) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions_rec(remaining - p, p, max_length, prefix, out);
    prefix.pop_back();
  }
}

void inside_rec(const Partition& kappa, int row, int max_part, std::vector<int>& prefix,
                std::vector<Partition>& out) {
  if (row == kappa.length()) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(max_part, kappa[row]); p >= 0; --p) {
    prefix.push_back(p);
    inside_rec(kappa, row + 1, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_length) {
  std::vector<Partition> out;
  if (n < 0 || max_length < 0) return out;
  std::vector<int> prefix;
  partitions_rec(n, n, max_length, prefix, out);
  return out;
}

std::vector<Partition> partitions_inside(const Partition& kappa) {
  std::vector<Partition> out;
  std::vector<int> prefix;
  inside_rec(kappa, 0, kappa[0], prefix, out);
  return out;
}

}  // namespace qgue
