#include "cwkit/gauss.hpp"

#include <algorithm>

namespace cwkit {

namespace {

int wrap(int x, int n) { return ((x % n) + n) % n; }

void require_arrow(const GaussDiagram& g, int arrow) {
  if (arrow < 0 || arrow >= g.arrow_count())
    throw std::invalid_argument("unknown arrow id " + std::to_string(arrow));
}

}  // namespace

void reindex_endpoints(GaussDiagram& g) {
  for (int c = 0; c < g.component_count(); ++c) {
    for (int p = 0; p < static_cast<int>(g.components[c].size()); ++p) {
      const Slot& s = g.components[c][p];
      Arrow& a = g.arrows[s.arrow];
      (s.end == End::Tail ? a.tail : a.head) = EndpointRef{c, p};
    }
  }
}

void check_valid(const GaussDiagram& g) {
  std::vector<int> tail_seen(g.arrows.size(), 0), head_seen(g.arrows.size(), 0);
  for (int c = 0; c < g.component_count(); ++c) {
    for (int p = 0; p < static_cast<int>(g.components[c].size()); ++p) {
      const Slot& s = g.components[c][p];
      if (s.arrow < 0 || s.arrow >= g.arrow_count())
        throw ValidationError("slot refers to missing arrow");
      const Arrow& a = g.arrows[s.arrow];
      const EndpointRef& e = (s.end == End::Tail) ? a.tail : a.head;
      (s.end == End::Tail ? tail_seen : head_seen)[s.arrow]++;
      if (e.component != c || e.position != p)
        throw ValidationError("arrow endpoint does not match its slot");
    }
  }
  for (size_t i = 0; i < g.arrows.size(); ++i) {
    if (tail_seen[i] != 1 || head_seen[i] != 1)
      throw ValidationError("arrow " + std::to_string(i) + " does not occupy exactly one tail and one head slot");
    if (g.arrows[i].sign != 1 && g.arrows[i].sign != -1)
      throw ValidationError("arrow sign must be +-1");
    if (g.arrows[i].tail == g.arrows[i].head)
      throw ValidationError("arrow tail and head coincide");
  }
  if (g.base) {
    if (g.base->component != 0)
      throw ValidationError("base point must lie on component 0");
    if (g.components.empty()) throw ValidationError("based diagram with no components");
    int len = static_cast<int>(g.components[0].size());
    int gaps = std::max(len, 1);
    if (g.base->gap < 0 || g.base->gap >= gaps)
      throw ValidationError("base gap out of range");
  }
}

void check_valid(const FramedLink& link) {
  check_valid(link.diagram);
  if (static_cast<int>(link.framings.size()) != link.diagram.component_count())
    throw ValidationError("framing count does not match component count");
}

bool is_valid(const GaussDiagram& g) {
  try {
    check_valid(g);
    return true;
  } catch (const ValidationError&) {
    return false;
  }
}

long long writhe(const GaussDiagram& g) {
  long long w = 0;
  for (const Arrow& a : g.arrows) w += a.sign;
  return w;
}

long long linking_number(const GaussDiagram& g, int i, int j) {
  if (i == j) throw std::invalid_argument("linking_number needs two distinct components");
  if (i < 0 || j < 0 || i >= g.component_count() || j >= g.component_count())
    throw std::invalid_argument("component index out of range");
  long long sum = 0;
  long long count = 0;
  for (const Arrow& a : g.arrows) {
    int tc = a.tail.component, hc = a.head.component;
    if ((tc == i && hc == j) || (tc == j && hc == i)) {
      sum += a.sign;
      ++count;
    }
  }
  // Two closed curves cross an even number of times; an odd count means the
  // code does not come from a planar diagram.
  if (count % 2 != 0)
    throw ValidationError("odd inter-component crossing count (diagram not realizable)");
  return sum / 2;
}

long long linking_number(const GaussDiagram& g) { return linking_number(g, 0, 1); }

GaussDiagram crossing_change(const GaussDiagram& g, int arrow) {
  require_arrow(g, arrow);
  GaussDiagram out = g;
  for (auto& comp : out.components)
    for (Slot& s : comp)
      if (s.arrow == arrow) s.end = (s.end == End::Tail) ? End::Head : End::Tail;
  out.arrows[arrow].sign = -out.arrows[arrow].sign;
  reindex_endpoints(out);
  return out;
}

namespace {

// Removes the two slots of `arrow` and rejoins the strands coherently.
// Returns the diagram without base adjustments beyond "keep if possible".
GaussDiagram smooth_impl(const GaussDiagram& g, int arrow) {
  const Arrow& a = g.arrows[arrow];
  int ca = a.tail.component, cb = a.head.component;
  int pa = a.tail.position, pb = a.head.position;

  GaussDiagram out;
  out.arrows = g.arrows;

  auto arc_after = [&](int comp, int from, int upto) {
    // slots strictly after position `from`, cyclically, up to and including
    // `upto`, excluding the removed positions themselves
    std::vector<Slot> arc;
    int len = static_cast<int>(g.components[comp].size());
    for (int p = wrap(from + 1, len); p != upto; p = wrap(p + 1, len)) arc.push_back(g.components[comp][p]);
    return arc;
  };

  if (ca != cb) {
    // Fuse the two circles: after the tail slot continue along the head's
    // circle just past the head slot.
    std::vector<Slot> fused;
    {
      int len_a = static_cast<int>(g.components[ca].size());
      for (int p = wrap(pa + 1, len_a); p != pa; p = wrap(p + 1, len_a)) fused.push_back(g.components[ca][p]);
    }
    {
      int len_b = static_cast<int>(g.components[cb].size());
      for (int p = wrap(pb + 1, len_b); p != pb; p = wrap(p + 1, len_b)) fused.push_back(g.components[cb][p]);
    }
    int lo = std::min(ca, cb);
    for (int c = 0; c < g.component_count(); ++c) {
      if (c == lo) {
        out.components.push_back(fused);
      } else if (c == ca || c == cb) {
        continue;
      } else {
        out.components.push_back(g.components[c]);
      }
    }
  } else {
    // Split one circle into the two lobes.
    out.components.reserve(g.components.size() + 1);
    for (int c = 0; c < g.component_count(); ++c) {
      if (c != ca) {
        out.components.push_back(g.components[c]);
        continue;
      }
      out.components.push_back(arc_after(ca, pa, pb));
      out.components.push_back(arc_after(ca, pb, pa));
    }
  }

  // Drop the smoothed arrow and renumber slots.
  for (auto& comp : out.components)
    for (Slot& s : comp)
      if (s.arrow > arrow) --s.arrow;
  out.arrows.erase(out.arrows.begin() + arrow);
  reindex_endpoints(out);
  return out;
}

}  // namespace

GaussDiagram smooth_crossing(const GaussDiagram& g, int arrow) {
  require_arrow(g, arrow);
  GaussDiagram base_stripped = g;
  base_stripped.base.reset();
  GaussDiagram out = smooth_impl(base_stripped, arrow);
  if (!out.components.empty()) out.base = BasePoint{0, 0};
  return out;
}

GaussDiagram smooth_fusion(const GaussDiagram& g, int arrow) {
  require_arrow(g, arrow);
  const Arrow& a = g.arrows[arrow];
  if (a.tail.component == a.head.component)
    throw std::invalid_argument("smooth_fusion needs an inter-component arrow");
  return smooth_crossing(g, arrow);
}

GaussDiagram reverse_component(const GaussDiagram& g, int i) {
  if (i < 0 || i >= g.component_count()) throw std::invalid_argument("component index out of range");
  GaussDiagram out = g;
  std::reverse(out.components[i].begin(), out.components[i].end());
  for (Arrow& a : out.arrows) {
    bool t = a.tail.component == i, h = a.head.component == i;
    if (t != h) a.sign = -a.sign;
  }
  reindex_endpoints(out);
  if (out.base && out.base->component == i && !out.components[i].empty()) {
    // Gap g (before old slot g) lands before old slot g-1's new successor:
    // reversing maps slot p -> len-1-p, so the gap preceding slot g becomes
    // the gap preceding slot len-g (mod len).
    int len = static_cast<int>(out.components[i].size());
    out.base->gap = wrap(len - out.base->gap, len);
  }
  return out;
}

GaussDiagram mirror(const GaussDiagram& g) {
  GaussDiagram out = g;
  for (auto& comp : out.components)
    for (Slot& s : comp) s.end = (s.end == End::Tail) ? End::Head : End::Tail;
  for (Arrow& a : out.arrows) a.sign = -a.sign;
  reindex_endpoints(out);
  return out;
}

GaussDiagram move_base_point(const GaussDiagram& g, int new_gap) {
  if (!g.base) throw std::invalid_argument("diagram has no base point");
  int len = g.components.empty() ? 0 : static_cast<int>(g.components[0].size());
  int gaps = std::max(len, 1);
  if (new_gap < 0 || new_gap >= gaps) throw std::invalid_argument("base gap out of range");
  GaussDiagram out = g;
  out.base = BasePoint{0, new_gap};
  return out;
}

GaussDiagram swap_components(const GaussDiagram& g) {
  if (g.component_count() != 2) throw std::invalid_argument("swap_components needs 2 components");
  GaussDiagram out = g;
  std::swap(out.components[0], out.components[1]);
  reindex_endpoints(out);
  if (out.base) out.base = BasePoint{0, 0};
  return out;
}

GaussDiagram delete_component(const GaussDiagram& g, int i) {
  if (i < 0 || i >= g.component_count()) throw std::invalid_argument("component index out of range");
  GaussDiagram out;
  std::vector<int> arrow_map(g.arrows.size(), -1);
  int next = 0;
  for (int idx = 0; idx < g.arrow_count(); ++idx) {
    const Arrow& a = g.arrows[idx];
    if (a.tail.component == i || a.head.component == i) continue;
    arrow_map[idx] = next++;
    out.arrows.push_back(a);
  }
  for (int c = 0; c < g.component_count(); ++c) {
    if (c == i) continue;
    std::vector<Slot> comp;
    for (const Slot& s : g.components[c])
      if (arrow_map[s.arrow] >= 0) comp.push_back(Slot{arrow_map[s.arrow], s.end});
    out.components.push_back(std::move(comp));
  }
  reindex_endpoints(out);
  if (!out.components.empty()) {
    // The base convention keeps it on component 0. If that component survives
    // (i > 0) its new gap is the number of surviving slots before the old gap.
    if (g.base && i > 0) {
      int new_gap = 0;
      for (int p = 0; p < g.base->gap; ++p)
        if (arrow_map[g.components[0][p].arrow] >= 0) ++new_gap;
      int gaps = std::max<int>(1, static_cast<int>(out.components[0].size()));
      out.base = BasePoint{0, new_gap % gaps};
    } else {
      out.base = BasePoint{0, 0};
    }
  }
  return out;
}

LobeSplit lobe_split(const GaussDiagram& g, int arrow) {
  require_arrow(g, arrow);
  if (g.component_count() != 2) throw std::invalid_argument("lobe_split needs a 2-component diagram");
  if (!g.base) throw std::invalid_argument("lobe_split needs a based diagram");
  const Arrow& a = g.arrows[arrow];
  if (a.tail.component != a.head.component)
    throw std::invalid_argument("lobe_split needs a self-crossing arrow");

  int comp = a.tail.component;
  int other = 1 - comp;
  int len = static_cast<int>(g.components[comp].size());
  int pt = a.tail.position, ph = a.head.position;

  LobeSplit out;
  out.self_arrow = arrow;
  for (int p = wrap(pt + 1, len); p != ph; p = wrap(p + 1, len)) out.lobe_first.push_back(p);
  for (int p = wrap(ph + 1, len); p != pt; p = wrap(p + 1, len)) out.lobe_second.push_back(p);

  std::vector<int> side(len, 0);  // 1 = first lobe, 2 = second
  for (int p : out.lobe_first) side[p] = 1;
  for (int p : out.lobe_second) side[p] = 2;

  long long ell2 = 0, k2 = 0;
  for (int idx = 0; idx < g.arrow_count(); ++idx) {
    if (idx == arrow) continue;
    const Arrow& b = g.arrows[idx];
    bool t_on = b.tail.component == comp, h_on = b.head.component == comp;
    if (t_on && h_on) {
      if (side[b.tail.position] != side[b.head.position]) ell2 += b.sign;
    } else if (t_on || h_on) {
      int pos = t_on ? b.tail.position : b.head.position;
      if (side[pos] == 1) k2 += b.sign;
    }
  }
  if (ell2 % 2 != 0 || k2 % 2 != 0)
    throw ValidationError("odd lobe crossing count (diagram not realizable)");
  out.ell = ell2 / 2;
  out.k = k2 / 2;
  out.n = linking_number(g, comp, other);
  return out;
}

FramedLink reverse_component(const FramedLink& link, int i) {
  FramedLink out = link;
  out.diagram = reverse_component(link.diagram, i);
  return out;
}

FramedLink mirror(const FramedLink& link) {
  FramedLink out = link;
  out.diagram = mirror(link.diagram);
  for (long long& f : out.framings) f = -f;
  return out;
}

}  // namespace cwkit
