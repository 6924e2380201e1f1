#include <algorithm>
#include <fstream>
#include <sstream>

#include "heegaard/diagram.hpp"

namespace heegaard {

namespace {

Cycle smallest_rotation(const Cycle& cyc) {
  Cycle best = cyc;
  Cycle rot = cyc;
  for (size_t i = 1; i < cyc.size(); ++i) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < best) best = rot;
  }
  return best;
}

}  // namespace

std::string serialize_diagram(const Diagram& d) {
  std::ostringstream out;
  out << "heegaard-diagram v1\n";
  out << "genus " << d.genus << "\n";
  for (const auto& [id, c] : d.curves)
    out << "curve " << id << " family=" << family_name(c.family) << " index=" << c.index << "\n";
  for (const auto& [id, v] : d.vertices)
    out << "vertex " << id << " alpha=" << v.alpha_curve << " beta=" << v.beta_curve << "\n";
  for (const auto& [id, a] : d.arcs) {
    out << "arc " << id << " curve=" << a.curve;
    if (a.closed)
      out << " closed";
    else
      out << " from=" << a.from << ":out to=" << a.to << ":in";
    out << "\n";
  }
  for (const auto& [id, r] : d.regions) {
    out << "region " << id << " genus=" << r.genus << " boundary=";
    std::vector<Cycle> cycles;
    for (const Cycle& cyc : r.cycles) cycles.push_back(smallest_rotation(cyc));
    std::sort(cycles.begin(), cycles.end());
    for (const Cycle& cyc : cycles) {
      out << " (";
      for (SignedArc s : cyc) out << " " << (s.positive ? '+' : '-') << s.arc;
      out << " )";
    }
    out << "\n";
  }
  for (const auto& [id, p] : d.points) out << "point " << id << " region=" << p.region << "\n";
  return out.str();
}

void save_diagram(const Diagram& d, const std::string& path) {
  std::ofstream out(path);
  require(out.good(), Code::Syntax, "cannot write " + path);
  out << serialize_diagram(d);
}

Diagram canonicalize(const Diagram& d) {
  // Breadth-first over vertices from the lowest id; arcs numbered as germ
  // slots are first seen; existing ids break the remaining ties.
  std::map<int, int> vmap, amap;
  std::vector<int> queue;
  auto va = vertex_arcs(d);
  auto push_vertex = [&](int vid) {
    if (vmap.count(vid)) return;
    int next = static_cast<int>(vmap.size());
    vmap[vid] = next;
    queue.push_back(vid);
  };
  auto note_arc = [&](int aid) {
    if (aid >= 0 && !amap.count(aid)) {
      int next = static_cast<int>(amap.size());
      amap[aid] = next;
    }
  };
  size_t head = 0;
  for (const auto& [vid, v] : d.vertices) {
    (void)v;
    push_vertex(vid);
    while (head < queue.size()) {
      const VertexArcs& slots = va.at(queue[head++]);
      for (Family f : {Family::Alpha, Family::Beta})
        for (int aid : {slots.in_arc(f), slots.out_arc(f)}) {
          note_arc(aid);
          const Arc& a = d.arc(aid);
          push_vertex(a.from);
          push_vertex(a.to);
        }
    }
  }
  for (const auto& [aid, a] : d.arcs) {
    (void)a;
    note_arc(aid);
  }

  std::map<int, int> rmap;
  {
    std::vector<std::pair<std::pair<int, int>, int>> keyed;  // ((min new arc, old id), old id)
    for (const auto& [rid, r] : d.regions) {
      int min_arc = INT32_MAX;
      for (const Cycle& cyc : r.cycles)
        for (SignedArc s : cyc) min_arc = std::min(min_arc, amap.at(s.arc));
      keyed.push_back({{min_arc, rid}, rid});
    }
    std::sort(keyed.begin(), keyed.end());
    for (const auto& [key, rid] : keyed) {
      (void)key;
      rmap[rid] = static_cast<int>(rmap.size());
    }
  }
  std::map<int, int> cmap;
  {
    std::vector<std::pair<std::tuple<int, int, int>, int>> keyed;  // ((family, min new arc, old id), old)
    for (const auto& [cid, c] : d.curves) {
      int min_arc = INT32_MAX;
      for (int aid : d.arcs_of_curve(cid)) min_arc = std::min(min_arc, amap.at(aid));
      keyed.push_back({{c.family == Family::Alpha ? 0 : 1, min_arc, cid}, cid});
    }
    std::sort(keyed.begin(), keyed.end());
    for (const auto& [key, cid] : keyed) {
      (void)key;
      cmap[cid] = static_cast<int>(cmap.size());
    }
  }
  std::map<int, int> pmap;
  {
    std::vector<std::pair<std::pair<int, int>, int>> keyed;
    for (const auto& [pid, p] : d.points) keyed.push_back({{rmap.at(p.region), pid}, pid});
    std::sort(keyed.begin(), keyed.end());
    for (const auto& [key, pid] : keyed) {
      (void)key;
      pmap[pid] = static_cast<int>(pmap.size());
    }
  }

  Diagram out;
  out.genus = d.genus;
  std::map<Family, int> family_pos;
  for (const auto& [key, cid] : [&] {
         std::vector<std::pair<int, int>> order;
         for (const auto& [cid, nid] : cmap) order.push_back({nid, cid});
         std::sort(order.begin(), order.end());
         return order;
       }()) {
    (void)key;
    const Curve& c = d.curves.at(cid);
    Curve nc{cmap.at(cid), c.family, family_pos[c.family]++};
    out.curves[nc.id] = nc;
  }
  for (const auto& [vid, v] : d.vertices)
    out.vertices[vmap.at(vid)] = Vertex{vmap.at(vid), cmap.at(v.alpha_curve), cmap.at(v.beta_curve)};
  for (const auto& [aid, a] : d.arcs) {
    Arc na{amap.at(aid), cmap.at(a.curve), a.closed, -1, -1};
    if (!a.closed) {
      na.from = vmap.at(a.from);
      na.to = vmap.at(a.to);
    }
    out.arcs[na.id] = na;
  }
  for (const auto& [rid, r] : d.regions) {
    Region nr{rmap.at(rid), r.genus, {}};
    for (const Cycle& cyc : r.cycles) {
      Cycle nc;
      for (SignedArc s : cyc) nc.push_back({amap.at(s.arc), s.positive});
      nr.cycles.push_back(std::move(nc));
    }
    out.regions[nr.id] = std::move(nr);
  }
  for (const auto& [pid, p] : d.points) out.points[pmap.at(pid)] = MarkedPoint{pmap.at(pid), rmap.at(p.region)};
  return out;
}

}  // namespace heegaard
