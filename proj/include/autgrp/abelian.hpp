#ifndef AUTGRP_ABELIAN_HPP
#define AUTGRP_ABELIAN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace autgrp {

/// Finite abelian group presented as a direct sum of cyclic groups.
///
/// Elements are residue vectors against the moduli list; internally each
/// element is addressed by its index in the lexicographic enumeration of
/// residue vectors (zero element first). Moduli are stored sorted
/// non-decreasing, so Z4xZ2 and Z2xZ4 denote the same group, while Z2xZ2
/// and Z4 stay distinct presentations.
class FiniteAbelianGroup {
 public:
  using Element = std::vector<int>;

  // Throws std::invalid_argument if moduli is empty, contains a value < 1,
  // or the resulting order is < 2.
  explicit FiniteAbelianGroup(std::vector<int> moduli);

  // Parses a spec string such as "Z3" or "Z2xZ4".
  static FiniteAbelianGroup parse(std::string_view spec);

  const std::vector<int>& moduli() const { return moduli_; }
  int rank() const { return static_cast<int>(moduli_.size()); }
  long long order() const { return order_; }

  // Least d > 0 with d*a = 0 for all a; the lcm of the moduli.
  long long exponent() const;

  // True iff x -> x + x is surjective; equivalent to the order being odd.
  bool all_elements_have_square_roots() const;

  // Index arithmetic (indices address the lexicographic enumeration).
  int add(int i, int j) const;
  int negate(int i) const;
  int sub(int i, int j) const { return add(i, negate(j)); }
  int zero() const { return 0; }

  // Residue-vector forms.
  Element element(int index) const;
  int index_of(const Element& residues) const;  // throws on length/range error
  Element add(const Element& a, const Element& b) const;
  Element negate(const Element& a) const;

  // Element labels: residues joined by '.', e.g. "2" or "1.0".
  std::string label(int index) const;
  std::optional<int> index_of_label(std::string_view label) const;

  // Canonical spec string, e.g. "Z2xZ4".
  std::string spec_string() const;

  bool operator==(const FiniteAbelianGroup& other) const {
    return moduli_ == other.moduli_;
  }

 private:
  std::vector<int> moduli_;
  std::vector<long long> strides_;
  long long order_ = 0;
};

}  // namespace autgrp

#endif
