#include "autgrp/abelian.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace autgrp {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> moduli)
    : moduli_(std::move(moduli)) {
  if (moduli_.empty()) {
    throw std::invalid_argument("group spec is empty");
  }
  for (int m : moduli_) {
    if (m < 1) {
      throw std::invalid_argument("modulus must be >= 1, got " +
                                  std::to_string(m));
    }
  }
  std::sort(moduli_.begin(), moduli_.end());
  order_ = 1;
  for (int m : moduli_) {
    order_ *= m;
    if (order_ > (1LL << 31)) {
      throw std::invalid_argument("group order too large");
    }
  }
  if (order_ < 2) {
    throw std::invalid_argument("group order < 2");
  }
  strides_.assign(moduli_.size(), 1);
  for (int i = static_cast<int>(moduli_.size()) - 2; i >= 0; --i) {
    strides_[i] = strides_[i + 1] * moduli_[i + 1];
  }
}

FiniteAbelianGroup FiniteAbelianGroup::parse(std::string_view spec) {
  std::vector<int> moduli;
  size_t pos = 0;
  while (pos < spec.size()) {
    if (spec[pos] != 'Z' && spec[pos] != 'z') {
      throw std::invalid_argument("bad group spec '" + std::string(spec) +
                                  "': expected 'Z<n>[xZ<m>...]'");
    }
    ++pos;
    int value = 0;
    auto [ptr, ec] = std::from_chars(spec.data() + pos, spec.data() + spec.size(), value);
    if (ec != std::errc() || ptr == spec.data() + pos) {
      throw std::invalid_argument("bad group spec '" + std::string(spec) +
                                  "': missing modulus");
    }
    moduli.push_back(value);
    pos = static_cast<size_t>(ptr - spec.data());
    if (pos == spec.size()) break;
    if (spec[pos] != 'x' && spec[pos] != 'X') {
      throw std::invalid_argument("bad group spec '" + std::string(spec) +
                                  "': expected 'x' separator");
    }
    ++pos;
    if (pos == spec.size()) {
      throw std::invalid_argument("bad group spec '" + std::string(spec) +
                                  "': trailing separator");
    }
  }
  return FiniteAbelianGroup(std::move(moduli));
}

long long FiniteAbelianGroup::exponent() const {
  long long d = 1;
  for (int m : moduli_) d = std::lcm(d, static_cast<long long>(m));
  return d;
}

bool FiniteAbelianGroup::all_elements_have_square_roots() const {
  std::vector<char> hit(static_cast<size_t>(order_), 0);
  for (int i = 0; i < order_; ++i) hit[static_cast<size_t>(add(i, i))] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

int FiniteAbelianGroup::add(int i, int j) const {
  long long res = 0;
  for (size_t k = 0; k < moduli_.size(); ++k) {
    int a = static_cast<int>((i / strides_[k]) % moduli_[k]);
    int b = static_cast<int>((j / strides_[k]) % moduli_[k]);
    res += static_cast<long long>((a + b) % moduli_[k]) * strides_[k];
  }
  return static_cast<int>(res);
}

int FiniteAbelianGroup::negate(int i) const {
  long long res = 0;
  for (size_t k = 0; k < moduli_.size(); ++k) {
    int a = static_cast<int>((i / strides_[k]) % moduli_[k]);
    res += static_cast<long long>((moduli_[k] - a) % moduli_[k]) * strides_[k];
  }
  return static_cast<int>(res);
}

FiniteAbelianGroup::Element FiniteAbelianGroup::element(int index) const {
  if (index < 0 || index >= order_) {
    throw std::invalid_argument("element index out of range");
  }
  Element e(moduli_.size());
  for (size_t k = 0; k < moduli_.size(); ++k) {
    e[k] = static_cast<int>((index / strides_[k]) % moduli_[k]);
  }
  return e;
}

int FiniteAbelianGroup::index_of(const Element& residues) const {
  if (residues.size() != moduli_.size()) {
    throw std::invalid_argument("element has wrong number of coordinates");
  }
  long long idx = 0;
  for (size_t k = 0; k < moduli_.size(); ++k) {
    if (residues[k] < 0 || residues[k] >= moduli_[k]) {
      throw std::invalid_argument("residue out of range");
    }
    idx += static_cast<long long>(residues[k]) * strides_[k];
  }
  return static_cast<int>(idx);
}

FiniteAbelianGroup::Element FiniteAbelianGroup::add(const Element& a,
                                                    const Element& b) const {
  return element(add(index_of(a), index_of(b)));
}

FiniteAbelianGroup::Element FiniteAbelianGroup::negate(const Element& a) const {
  return element(negate(index_of(a)));
}

std::string FiniteAbelianGroup::label(int index) const {
  Element e = element(index);
  std::ostringstream out;
  for (size_t k = 0; k < e.size(); ++k) {
    if (k) out << '.';
    out << e[k];
  }
  return out.str();
}

std::optional<int> FiniteAbelianGroup::index_of_label(
    std::string_view text) const {
  Element e;
  size_t pos = 0;
  while (true) {
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data() + pos) return std::nullopt;
    e.push_back(value);
    pos = static_cast<size_t>(ptr - text.data());
    if (pos == text.size()) break;
    if (text[pos] != '.') return std::nullopt;
    ++pos;
  }
  if (e.size() != moduli_.size()) return std::nullopt;
  for (size_t k = 0; k < e.size(); ++k) {
    if (e[k] < 0 || e[k] >= moduli_[k]) return std::nullopt;
  }
  return index_of(e);
}

std::string FiniteAbelianGroup::spec_string() const {
  std::ostringstream out;
  for (size_t k = 0; k < moduli_.size(); ++k) {
    if (k) out << 'x';
    out << 'Z' << moduli_[k];
  }
  return out.str();
}

}  // namespace autgrp
