#pragma once

// Exterior algebra on the sum-zero lattice of a finite set of circles.
//
// For circles c_0..c_{k-1} (sorted labels) with pointed circle p the lattice
// V = {x in Z^k : sum x = 0} has basis v_i = e_i - e_p (i != p). A monomial is
// a bitmask over circle positions without bit p: v_{i1} ^ ... ^ v_{ij} with
// i1 < ... < ij.

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace oddkh {

using Mask = std::uint32_t;
using Terms = std::map<Mask, std::int64_t>;

/// Sparse lattice vector in a v-basis: (circle position, coefficient).
using LatticeVec = std::vector<std::pair<int, std::int64_t>>;

/// Sign of A ^ v_b when v_b is moved into sorted position (b not in A).
inline int wedge_sign(Mask a, int b) {
  return (__builtin_popcount(a >> (b + 1)) & 1) ? -1 : 1;
}

/// Sign of A ^ B for disjoint monomials.
int wedge_sign(Mask a, Mask b);

/// Position of a monomial in the 2^(k-1) basis: the mask with bit p squeezed out.
inline std::uint32_t monomial_index(Mask m, int pointed) {
  const Mask low = m & ((Mask{1} << pointed) - 1);
  return low | ((m >> (pointed + 1)) << pointed);
}

inline Mask monomial_from_index(std::uint32_t idx, int pointed) {
  const Mask low = idx & ((Mask{1} << pointed) - 1);
  return low | ((idx >> pointed) << (pointed + 1));
}

class ExteriorElement {
 public:
  ExteriorElement() = default;
  ExteriorElement(std::vector<int> circles, int pointed);

  static ExteriorElement one(std::vector<int> circles, int pointed);
  static ExteriorElement monomial(std::vector<int> circles, int pointed, Mask m,
                                  std::int64_t coef = 1);
  /// v_label = e_label - e_pointed (zero when label is pointed).
  static ExteriorElement generator(std::vector<int> circles, int pointed, int label);
  /// e_a - e_b as a degree one element.
  static ExteriorElement difference(std::vector<int> circles, int pointed, int a, int b);

  const std::vector<int>& circles() const { return circles_; }
  int pointed() const { return pointed_; }
  int pointed_position() const { return pointed_pos_; }
  int position(int label) const;  // -1 when absent
  int circle_count() const { return static_cast<int>(circles_.size()); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coefficient(Mask m) const;

  void add(Mask m, std::int64_t coef);
  ExteriorElement& operator+=(const ExteriorElement& other);
  ExteriorElement& operator-=(const ExteriorElement& other);
  ExteriorElement operator-() const;
  ExteriorElement scaled(std::int64_t s) const;

  bool same_space(const ExteriorElement& other) const {
    return circles_ == other.circles_ && pointed_ == other.pointed_;
  }
  bool operator==(const ExteriorElement& other) const {
    return same_space(other) && terms_ == other.terms_;
  }

 private:
  std::vector<int> circles_;
  int pointed_ = 0;
  int pointed_pos_ = 0;
  Terms terms_;
};

ExteriorElement operator+(ExteriorElement a, const ExteriorElement& b);
ExteriorElement operator-(ExteriorElement a, const ExteriorElement& b);

ExteriorElement wedge(const ExteriorElement& x, const ExteriorElement& y);

/// All basis monomials, in index order.
std::vector<Mask> basis_monomials(int k, int pointed_position);

/// Image of a monomial under the map induced by `images` (images[i] is the
/// image of v_i, given in the target basis), left-multiplied by `prefix`.
Terms wedge_images(Mask m, const std::vector<LatticeVec>& images, const Terms& prefix);

/// Lattice map induced by a function on circle positions:
/// v_i -> e_{f(i)} - e_{f(p)}, written in the target v-basis.
std::vector<LatticeVec> induced_images(const std::vector<int>& position_map, int source_pointed,
                                       int target_pointed);

/// Merge a, b -> c (c may reuse a or b). The merged circle is pointed when
/// either a or b was.
ExteriorElement merge_map(const ExteriorElement& x, int a, int b, int c);

/// Split c -> a (tail, +1) and b (head). `pointed_to` picks which new circle
/// carries the basepoint when c was pointed; defaults to a.
ExteriorElement split_map(const ExteriorElement& x, int c, int a, int b,
                          std::optional<int> pointed_to = std::nullopt);

/// Birth of a new circle a: inclusion of lattices.
ExteriorElement cap_map(const ExteriorElement& x, int a);

/// Death of circle a: contraction with the dual functional of e_a.
ExteriorElement cup_map(const ExteriorElement& x, int a);

/// Renames circles by `perm` (old label -> new label, must be a bijection onto
/// its image) and re-points at `new_pointed` (a new label).
ExteriorElement relabel(const ExteriorElement& x, const std::map<int, int>& perm,
                        int new_pointed);

}  // namespace oddkh
