#pragma once

// Planar diagram (PD) codes.
//
// A crossing is a quadruple X[a,b,c,d] of arc labels listed counterclockwise,
// starting at the incoming under-strand. The under-strand runs a -> c; the
// over-strand runs d -> b (positive crossing) or b -> d (negative crossing).
// Crossingless components are carried as "free loops" with labels following
// the crossing arcs.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace oddkh {

using Quad = std::array<int, 4>;

struct Diagram {
  std::vector<Quad> crossings;
  int arc_count = 0;   // labels 1..arc_count appear in crossings
  int free_loops = 0;  // labels arc_count+1 .. arc_count+free_loops
  std::vector<int> signs;
  int basepoint_arc = 1;
  std::string name;

  int crossing_count() const { return static_cast<int>(crossings.size()); }
  int total_arcs() const { return arc_count + free_loops; }
  int n_plus() const;
  int n_minus() const;
  int writhe() const { return n_plus() - n_minus(); }
  /// Number of link components (closed strands).
  int component_count() const;

  bool operator==(const Diagram&) const = default;
};

/// Slot of a crossing an arc end sits at.
struct ArcEnd {
  int crossing;
  int slot;
  bool operator==(const ArcEnd&) const = default;
};

/// Both crossing ends of every crossing arc, in orientation order:
/// ends[arc][0] is where the arc starts (tail), ends[arc][1] where it ends.
/// Index 0 is unused; free loops have no ends.
std::vector<std::array<ArcEnd, 2>> oriented_arc_ends(const Diagram& d);

/// Builds a validated diagram from crossings alone. `forced_negative` lists
/// crossing indices whose over-strand must run b -> d; it only matters for
/// components that pass over at all of their crossings, where the PD
/// convention leaves the orientation free.
Diagram make_diagram(std::vector<Quad> crossings, int free_loops,
                     int basepoint_arc = 0, std::string name = {},
                     const std::vector<int>& forced_negative = {});

/// Parses whitespace separated `X[a,b,c,d]` tokens plus optional `BP[k]`
/// (basepoint arc) and `O[k]` (k crossingless components). `#` starts a line
/// comment, an optional `PD[...]` wrapper is accepted, and a leading
/// `label:` sets the name. Empty input is the 0-crossing unknot.
Diagram parse_pd(std::string_view text);

/// Round-trips through parse_pd.
std::string serialize(const Diagram& d);

std::vector<int> crossing_signs(const Diagram& d);

Diagram mirror(const Diagram& d);

/// Replaces crossing `index` by its 0- or 1-smoothing. The result is reoriented
/// where the smoothing is not the oriented one, and arcs are renumbered.
Diagram resolve_crossing(const Diagram& d, int index, int smoothing);

/// Applies a permutation to arc labels: old label i becomes perm[i]
/// (perm[0] ignored). Free loop labels must map to free loop labels.
Diagram relabel_arcs(const Diagram& d, const std::vector<int>& perm);

/// Reorders crossings: new crossing j is old crossing order[j].
Diagram permute_crossings(const Diagram& d, const std::vector<int>& order);

Diagram with_basepoint(const Diagram& d, int arc);

/// Canonical string: the least breadth-first numbering over starting
/// crossings, per connected piece, pieces sorted.
/// The hash is FNV-1a 64 of that string, hex encoded.
std::string canonical_form(const Diagram& d);
std::string canonical_hash(const Diagram& d);

std::string fnv1a_hex(std::string_view bytes);

}  // namespace oddkh
