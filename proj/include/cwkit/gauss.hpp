#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cwkit {

// One end of an arrow, addressed by component index and position in that
// component's cyclic slot sequence.
struct EndpointRef {
  int component = 0;
  int position = 0;
  friend bool operator==(const EndpointRef&, const EndpointRef&) = default;
};

enum class End : uint8_t { Tail, Head };

// A crossing: the arrow points from the over-pass preimage (tail) to the
// under-pass preimage (head) and carries the chiral sign.
struct Arrow {
  EndpointRef tail;
  EndpointRef head;
  int sign = 1;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

// Occupant of one slot on a component.
struct Slot {
  int arrow = 0;
  End end = End::Tail;
  friend bool operator==(const Slot&, const Slot&) = default;
};

// Base point between two consecutive slots: gap g sits immediately before the
// slot at position g (gap 0 = before slot 0, wrapping past the last slot).
struct BasePoint {
  int component = 0;
  int gap = 0;
  friend bool operator==(const BasePoint&, const BasePoint&) = default;
};

struct GaussDiagram {
  std::vector<std::vector<Slot>> components;
  std::vector<Arrow> arrows;
  std::optional<BasePoint> base;

  int component_count() const { return static_cast<int>(components.size()); }
  int arrow_count() const { return static_cast<int>(arrows.size()); }
  const Slot& slot_at(const EndpointRef& e) const { return components[e.component][e.position]; }
  friend bool operator==(const GaussDiagram&, const GaussDiagram&) = default;
};

struct FramedLink {
  GaussDiagram diagram;
  std::vector<long long> framings;
  std::string name;
  friend bool operator==(const FramedLink&, const FramedLink&) = default;
};

// The two loops a self-crossing cuts its component into, with their pairwise
// linking data. `lobe_first` is the arc entered when leaving the self-arrow's
// tail slot in traversal direction; `k` is measured against that lobe. The
// skein identity b*ell - k*(n-k) is symmetric in k <-> n-k, so the choice of
// lobe does not affect it.
struct LobeSplit {
  int self_arrow = 0;
  std::vector<int> lobe_first;   // positions on the crossed component
  std::vector<int> lobe_second;
  long long ell = 0;  // linking number of the two lobes
  long long k = 0;    // linking of lobe_first with the other component
  long long n = 0;    // linking number of the two components
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structural soundness: every slot is one end of exactly one arrow, arrow
// endpoint refs match the slot tables, signs are +-1, base is in range and on
// component 0.
void check_valid(const GaussDiagram& g);
void check_valid(const FramedLink& link);
bool is_valid(const GaussDiagram& g);

// Rebuilds arrows' EndpointRefs from the slot tables. Every structural edit
// goes through this.
void reindex_endpoints(GaussDiagram& g);

// ---- measurements ----

long long writhe(const GaussDiagram& g);

// Half the signed count of arrows connecting components i and j (i != j).
long long linking_number(const GaussDiagram& g, int i, int j);

// Convenience for 2-component diagrams: linking_number(g, 0, 1).
long long linking_number(const GaussDiagram& g);

// ---- local operations (all return new values) ----

// Swaps head and tail of the arrow and negates its sign.
GaussDiagram crossing_change(const GaussDiagram& g, int arrow);

// Oriented smoothing at any crossing. An inter-component crossing merges the
// two circles; a self-crossing splits its circle in two. The arrow's two
// slots disappear; everything else is preserved.
GaussDiagram smooth_crossing(const GaussDiagram& g, int arrow);

// Coherent fusion along an inter-component arrow (smooth_crossing restricted
// to that case, with base-point bookkeeping). Requires the base gap to be
// non-adjacent to the arrow's slots.
GaussDiagram smooth_fusion(const GaussDiagram& g, int arrow);

// Reverses component i's cyclic order; arrows with exactly one endpoint on i
// get their sign negated, over/under roles are kept.
GaussDiagram reverse_component(const GaussDiagram& g, int i);

// All arrow signs negated and over/under roles swapped at every crossing.
GaussDiagram mirror(const GaussDiagram& g);

GaussDiagram move_base_point(const GaussDiagram& g, int new_gap);

// Exchanges components 0 and 1 of a 2-component diagram; the base point is
// re-placed at gap 0 of the new first component.
GaussDiagram swap_components(const GaussDiagram& g);

// Deletes component i and every arrow with an endpoint on it; remaining
// components shift down. A base on a surviving component is kept, otherwise
// re-placed at gap 0 of component 0.
GaussDiagram delete_component(const GaussDiagram& g, int i);

LobeSplit lobe_split(const GaussDiagram& g, int arrow);

FramedLink reverse_component(const FramedLink& link, int i);
FramedLink mirror(const FramedLink& link);  // also negates framings

// ---- file format ----

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

// One record per link; see README for the format. Multiple records are
// separated by blank lines; '#' starts a comment.
std::vector<FramedLink> parse_links(const std::string& text);
FramedLink parse_link(const std::string& text);
std::string serialize(const FramedLink& link);

}  // namespace cwkit
