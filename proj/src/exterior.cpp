#include "oddkh/exterior.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "oddkh/error.hpp"

namespace oddkh {

namespace {

void check_sorted_unique(const std::vector<int>& circles) {
  for (std::size_t i = 1; i < circles.size(); ++i) {
    if (circles[i - 1] >= circles[i]) {
      throw Error(ErrorKind::InvalidArgument, "circle labels must be sorted and distinct");
    }
  }
}

std::vector<int> sorted_labels(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end()) {
    throw Error(ErrorKind::DuplicateCircle, "circle label used twice");
  }
  return v;
}

// Applies the lattice map given by circle function `f` (old label -> new
// label) into the space (target, target_pointed), after `prefix`.
ExteriorElement apply_label_map(const ExteriorElement& x, const std::map<int, int>& f,
                                std::vector<int> target, int target_pointed,
                                const Terms& prefix) {
  ExteriorElement out(std::move(target), target_pointed);
  std::vector<int> pos_map(x.circle_count());
  for (int i = 0; i < x.circle_count(); ++i) {
    pos_map[i] = out.position(f.at(x.circles()[i]));
  }
  const auto images = induced_images(pos_map, x.pointed_position(), out.pointed_position());
  for (const auto& [m, c] : x.terms()) {
    for (const auto& [tm, tc] : wedge_images(m, images, prefix)) out.add(tm, tc * c);
  }
  return out;
}

}  // namespace

int wedge_sign(Mask a, Mask b) {
  int parity = 0;
  while (b) {
    const int bit = __builtin_ctz(b);
    parity += __builtin_popcount(a >> (bit + 1));
    b &= b - 1;
  }
  return (parity & 1) ? -1 : 1;
}

ExteriorElement::ExteriorElement(std::vector<int> circles, int pointed)
    : circles_(std::move(circles)), pointed_(pointed) {
  check_sorted_unique(circles_);
  if (circles_.size() > 31) throw Error(ErrorKind::InvalidArgument, "too many circles");
  pointed_pos_ = position(pointed);
  if (pointed_pos_ < 0) {
    throw Error(ErrorKind::InvalidArgument, "pointed circle not in circle set");
  }
}

ExteriorElement ExteriorElement::one(std::vector<int> circles, int pointed) {
  return monomial(std::move(circles), pointed, 0, 1);
}

ExteriorElement ExteriorElement::monomial(std::vector<int> circles, int pointed, Mask m,
                                          std::int64_t coef) {
  ExteriorElement x(std::move(circles), pointed);
  if (m >> x.circle_count()) throw Error(ErrorKind::InvalidArgument, "monomial out of range");
  if (m & (Mask{1} << x.pointed_pos_)) {
    throw Error(ErrorKind::InvalidArgument, "monomial contains the pointed circle");
  }
  x.add(m, coef);
  return x;
}

ExteriorElement ExteriorElement::generator(std::vector<int> circles, int pointed, int label) {
  ExteriorElement x(std::move(circles), pointed);
  const int pos = x.position(label);
  if (pos < 0) throw Error(ErrorKind::InvalidArgument, "unknown circle");
  if (pos != x.pointed_pos_) x.add(Mask{1} << pos, 1);
  return x;
}

ExteriorElement ExteriorElement::difference(std::vector<int> circles, int pointed, int a,
                                            int b) {
  ExteriorElement x = generator(circles, pointed, a);
  x -= generator(std::move(circles), pointed, b);
  return x;
}

int ExteriorElement::position(int label) const {
  const auto it = std::lower_bound(circles_.begin(), circles_.end(), label);
  if (it == circles_.end() || *it != label) return -1;
  return static_cast<int>(it - circles_.begin());
}

std::int64_t ExteriorElement::coefficient(Mask m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void ExteriorElement::add(Mask m, std::int64_t coef) {
  if (coef == 0) return;
  auto [it, inserted] = terms_.emplace(m, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

ExteriorElement& ExteriorElement::operator+=(const ExteriorElement& other) {
  if (!same_space(other)) throw Error(ErrorKind::MismatchedCircleSets, "different modules");
  for (const auto& [m, c] : other.terms_) add(m, c);
  return *this;
}

ExteriorElement& ExteriorElement::operator-=(const ExteriorElement& other) {
  if (!same_space(other)) throw Error(ErrorKind::MismatchedCircleSets, "different modules");
  for (const auto& [m, c] : other.terms_) add(m, -c);
  return *this;
}

ExteriorElement ExteriorElement::operator-() const { return scaled(-1); }

ExteriorElement ExteriorElement::scaled(std::int64_t s) const {
  ExteriorElement out(circles_, pointed_);
  for (const auto& [m, c] : terms_) out.add(m, c * s);
  return out;
}

ExteriorElement operator+(ExteriorElement a, const ExteriorElement& b) { return a += b; }
ExteriorElement operator-(ExteriorElement a, const ExteriorElement& b) { return a -= b; }

ExteriorElement wedge(const ExteriorElement& x, const ExteriorElement& y) {
  if (!x.same_space(y)) {
    throw Error(ErrorKind::MismatchedCircleSets, "wedge of elements over different circles");
  }
  ExteriorElement out(x.circles(), x.pointed());
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      if (a & b) continue;
      out.add(a | b, wedge_sign(a, b) * ca * cb);
    }
  }
  return out;
}

std::vector<Mask> basis_monomials(int k, int pointed_position) {
  std::vector<Mask> out;
  const std::uint32_t count = std::uint32_t{1} << (k - 1);
  out.reserve(count);
  for (std::uint32_t idx = 0; idx < count; ++idx) {
    out.push_back(monomial_from_index(idx, pointed_position));
  }
  return out;
}

Terms wedge_images(Mask m, const std::vector<LatticeVec>& images, const Terms& prefix) {
  Terms cur = prefix;
  Terms next;
  while (m && !cur.empty()) {
    const int i = __builtin_ctz(m);
    m &= m - 1;
    next.clear();
    for (const auto& [a, ca] : cur) {
      for (const auto& [b, cb] : images[i]) {
        const Mask bit = Mask{1} << b;
        if (a & bit) continue;
        auto& slot = next[a | bit];
        slot += wedge_sign(a, b) * ca * cb;
      }
    }
    cur.clear();
    for (const auto& [a, c] : next) {
      if (c != 0) cur.emplace(a, c);
    }
  }
  return cur;
}

std::vector<LatticeVec> induced_images(const std::vector<int>& position_map,
                                       int source_pointed, int target_pointed) {
  std::vector<LatticeVec> images(position_map.size());
  const int fp = position_map[source_pointed];
  for (std::size_t i = 0; i < position_map.size(); ++i) {
    const int fi = position_map[i];
    if (static_cast<int>(i) == source_pointed || fi == fp) continue;
    if (fi != target_pointed) images[i].push_back({fi, 1});
    if (fp != target_pointed) images[i].push_back({fp, -1});
  }
  return images;
}

ExteriorElement merge_map(const ExteriorElement& x, int a, int b, int c) {
  if (a == b || x.position(a) < 0 || x.position(b) < 0) {
    throw Error(ErrorKind::InvalidRelabeling, "merge needs two distinct source circles");
  }
  std::vector<int> target;
  std::map<int, int> f;
  for (int label : x.circles()) {
    if (label == a || label == b) {
      f[label] = c;
    } else {
      if (label == c) throw Error(ErrorKind::InvalidRelabeling, "merged label already in use");
      f[label] = label;
      target.push_back(label);
    }
  }
  target.push_back(c);
  const int pointed = f.at(x.pointed());
  return apply_label_map(x, f, sorted_labels(target), pointed, Terms{{0, 1}});
}

ExteriorElement split_map(const ExteriorElement& x, int c, int a, int b,
                          std::optional<int> pointed_to) {
  if (x.position(c) < 0 || a == b) {
    throw Error(ErrorKind::InvalidBifurcation, "split needs a source circle and two new labels");
  }
  std::vector<int> target;
  std::map<int, int> f;
  for (int label : x.circles()) {
    if (label == c) {
      f[label] = a;
    } else {
      if (label == a || label == b) {
        throw Error(ErrorKind::InvalidBifurcation, "split label already in use");
      }
      f[label] = label;
      target.push_back(label);
    }
  }
  target.push_back(a);
  target.push_back(b);
  int pointed = x.pointed();
  if (pointed == c) {
    pointed = pointed_to.value_or(a);
    if (pointed != a && pointed != b) {
      throw Error(ErrorKind::InvalidBifurcation, "basepoint must land on a split circle");
    }
  }
  target = sorted_labels(target);
  const auto diff = ExteriorElement::difference(target, pointed, a, b);
  return apply_label_map(x, f, std::move(target), pointed, diff.terms());
}

ExteriorElement cap_map(const ExteriorElement& x, int a) {
  if (x.position(a) >= 0) throw Error(ErrorKind::DuplicateCircle, "circle already present");
  std::vector<int> target = x.circles();
  target.push_back(a);
  std::map<int, int> f;
  for (int label : x.circles()) f[label] = label;
  return apply_label_map(x, f, sorted_labels(target), x.pointed(), Terms{{0, 1}});
}

ExteriorElement cup_map(const ExteriorElement& x, int a) {
  const int pos = x.position(a);
  if (pos < 0) throw Error(ErrorKind::InvalidRelabeling, "circle not present");
  if (a == x.pointed()) {
    throw Error(ErrorKind::CannotRemovePointed, "cannot remove the pointed circle");
  }
  std::vector<int> target;
  for (int label : x.circles()) {
    if (label != a) target.push_back(label);
  }
  ExteriorElement out(std::move(target), x.pointed());
  const Mask bit = Mask{1} << pos;
  const Mask low = bit - 1;
  for (const auto& [m, c] : x.terms()) {
    if (!(m & bit)) continue;
    // e_a^*(v_i) = delta_{ia}; the sign counts the factors before v_a
    const int sign = (__builtin_popcount(m & low) & 1) ? -1 : 1;
    const Mask rest = m & ~bit;
    out.add((rest & low) | ((rest >> (pos + 1)) << pos), sign * c);
  }
  return out;
}

ExteriorElement relabel(const ExteriorElement& x, const std::map<int, int>& perm,
                        int new_pointed) {
  std::vector<int> target;
  std::set<int> seen;
  for (int label : x.circles()) {
    const auto it = perm.find(label);
    if (it == perm.end() || !seen.insert(it->second).second) {
      throw Error(ErrorKind::NotABijection, "relabeling is not a bijection of circles");
    }
    target.push_back(it->second);
  }
  if (perm.size() != x.circles().size()) {
    throw Error(ErrorKind::NotABijection, "relabeling has extra entries");
  }
  if (!seen.count(new_pointed)) {
    throw Error(ErrorKind::InvalidArgument, "new pointed circle not in target");
  }
  return apply_label_map(x, perm, sorted_labels(target), new_pointed, Terms{{0, 1}});
}

}  // namespace oddkh
