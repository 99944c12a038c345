#pragma once

#include <vector>

#include "chkit/diagram.hpp"

namespace chkit {

// A direction for every edge of D, consistent through crossings and through
// the negative smoothing of every marked vertex; one bit per component of
// L-(D) determines it.  Free loops carry a bit with no edge data.
struct Orientation {
  std::vector<int> bits;            // per component, canonical order
  std::vector<bool> toward_b;       // per edge: flows from endpoint a to b
};

// Components of L-(D) seen as circuits through D's own edges.
int lminus_component_count(const Diagram& d);

Orientation orientation_from_bits(const Diagram& d, const std::vector<int>& bits);
std::vector<Orientation> enumerate_orientations(const Diagram& d);

// True when the edge's direction points into the node at the given slot.
bool flows_into(const Diagram& d, const Orientation& o, const SlotRef& s);

enum class VType { D, E };

// Per-node classification; crossings are reported as D and ignored upstream.
// A marked vertex is type d iff the four incident directions alternate
// in/out around it, which makes the positive smoothing orientation
// consistent as well.
std::vector<VType> vertex_types(const Diagram& d, const Orientation& o);

// Which L- channel receives the twist crossing, relative to the flow, and
// which strand goes over.  Fixed by calibration against the published
// invariant values; see data/diagrams provenance notes.
struct TwistRule {
  bool at_out_channel = true;  // channel whose first slot flows outward
  bool first_strand_over = true;
};

// Adds one classical crossing at every type-e vertex making it type d.
// The result may not be admissible.
Diagram twist(const Diagram& d, const Orientation& o, const TwistRule& rule = {});

// Replaces every marked vertex by the saddle/dual-saddle pair.  Applied to a
// twisted diagram this presents the mirror cut surface.
Diagram double_vertices(const Diagram& d);

// W(D): mirror-cut presentation for the given orientation.
Diagram mirror_cut(const Diagram& d, const Orientation& o, const TwistRule& rule = {});

// chi of the mirror cut surface from its cross-section table: the caps and
// cups each contribute c(L-) and the two band levels contribute the saddles.
int mc_euler_by_table(const Diagram& d);

// Inserts the two-vertex unknotted handle tangle into the given edge.
Diagram insert_stabilization(const Diagram& d, int edge_id);

}  // namespace chkit
