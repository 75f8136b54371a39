#include "convexcover/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>

#include "json.hpp"

namespace convexcover {

namespace {

const char* kFills[] = {"#aac4ea", "#a8d8ab", "#eec890", "#d8aed6",
                        "#e2dc96", "#9fd2d8", "#e3a8a4", "#bcb4e4"};
constexpr const char* kHullStroke = "#55554e";
constexpr const char* kRayStroke = "#cc2222";
constexpr const char* kQueueStroke = "#7040c0";
constexpr const char* kBridgeStroke = "#1f5fd0";
constexpr const char* kCoverStroke = "#1f8a3d";

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct Box {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  bool any = false;
  void add(const Point& p) {
    const double x = p.x.to_double(), y = p.y.to_double();
    if (!any) {
      x0 = x1 = x;
      y0 = y1 = y;
      any = true;
    } else {
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
  }
  void add(const Ring& r) {
    for (const Point& p : r) add(p);
  }
};

// One SVG document. World y grows upward; the canvas flips it.
class Canvas {
 public:
  explicit Canvas(const Box& b) {
    if (b.any) {
      x0_ = b.x0;
      y0_ = b.y0;
      w_ = std::max(b.x1 - b.x0, 1.0);
      h_ = std::max(b.y1 - b.y0, 1.0);
      yflip_ = b.y0 + b.y1;
    } else {
      x0_ = y0_ = 0;
      w_ = h_ = 10;
      yflip_ = 10;
    }
    unit_ = std::max(w_, h_) / 220.0;
    margin_ = 8 * unit_;
  }

  double unit() const { return unit_; }

  void polygon(const Ring& ring, const std::string& fill, const std::string& stroke,
               double width, const std::string& dash = "") {
    if (ring.size() == 1) {  // degenerate: a dot
      body_ << "  <circle cx=\"" << fmt(sx(ring[0])) << "\" cy=\"" << fmt(sy(ring[0]))
            << "\" r=\"" << fmt(2 * unit_) << "\" fill=\"" << stroke << "\"/>\n";
      return;
    }
    if (ring.size() == 2) {
      edge(ring[0], ring[1], stroke, width, dash);
      return;
    }
    body_ << "  <polygon points=\"";
    for (const Point& p : ring) body_ << fmt(sx(p)) << "," << fmt(sy(p)) << " ";
    body_ << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\" stroke-width=\""
          << fmt(width * unit_) << "\"";
    if (!dash.empty()) body_ << " stroke-dasharray=\"" << dash << "\"";
    body_ << "/>\n";
  }

  void edge(const Point& a, const Point& b, const std::string& stroke, double width,
            const std::string& dash = "", bool arrow = false) {
    body_ << "  <line x1=\"" << fmt(sx(a)) << "\" y1=\"" << fmt(sy(a)) << "\" x2=\""
          << fmt(sx(b)) << "\" y2=\"" << fmt(sy(b)) << "\" stroke=\"" << stroke
          << "\" stroke-width=\"" << fmt(width * unit_) << "\"";
    if (!dash.empty()) body_ << " stroke-dasharray=\"" << dash << "\"";
    if (arrow) body_ << " marker-end=\"url(#arrow)\"";
    body_ << "/>\n";
  }

  void caption(const std::string& text) { caption_ = text; }

  std::string str() const {
    std::ostringstream out;
    const double vx = x0_ - margin_, vy = y0_ - margin_;
    const double vw = w_ + 2 * margin_, vh = h_ + 2 * margin_ + 10 * unit_;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" viewBox=\""
        << fmt(vx) << " " << fmt(vy) << " " << fmt(vw) << " " << fmt(vh) << "\">\n";
    out << "  <defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\""
           " markerWidth=\"7\" markerHeight=\"7\" orient=\"auto\">"
           "<path d=\"M0,0 L10,5 L0,10 z\" fill=\""
        << kRayStroke << "\"/></marker></defs>\n";
    out << "  <rect x=\"" << fmt(vx) << "\" y=\"" << fmt(vy) << "\" width=\"" << fmt(vw)
        << "\" height=\"" << fmt(vh) << "\" fill=\"#fdfdf8\"/>\n";
    out << body_.str();
    if (!caption_.empty())
      out << "  <text x=\"" << fmt(vx + 2 * unit_) << "\" y=\""
          << fmt(vy + vh - 3 * unit_) << "\" font-size=\"" << fmt(7 * unit_)
          << "\" font-family=\"sans-serif\" fill=\"#333\">" << caption_ << "</text>\n";
    out << "</svg>\n";
    return out.str();
  }

 private:
  double sx(const Point& p) const { return p.x.to_double(); }
  double sy(const Point& p) const { return yflip_ - p.y.to_double(); }

  double x0_, y0_, w_, h_, yflip_, unit_, margin_;
  std::ostringstream body_;
  std::string caption_;
};

Box bounds_of(const TraceArtifacts& t) {
  Box b;
  for (const Ring& r : t.inputs) b.add(r);
  for (const Ring& r : t.initial_hulls) b.add(r);
  for (const CoverElement& e : t.cover.elements) b.add(e.hull);
  return b;
}

void draw_inputs(Canvas& c, const std::vector<Ring>& inputs) {
  for (std::size_t i = 0; i < inputs.size(); ++i)
    c.polygon(inputs[i], kFills[i % (sizeof kFills / sizeof kFills[0])], "#333", 0.9);
}

void draw_rays(Canvas& c, const std::vector<TraceEvent>& events, std::size_t upto) {
  for (std::size_t i = 0; i < upto && i < events.size(); ++i)
    c.edge(events[i].task.p1, events[i].hit.point, kRayStroke, 0.8, "", true);
}

}  // namespace

TraceArtifacts run_traced(const std::vector<Ring>& inputs, EngineKind kind) {
  TraceArtifacts t;
  t.inputs = inputs;
  ConvexifyRun run(inputs, kind);
  t.initial_hulls.resize(inputs.size());
  for (const auto& [id, poly] : run.live()) t.initial_hulls[id] = poly.vertices();
  t.initial_queue.assign(run.queue().begin(), run.queue().end());
  run.set_trace_sink([&t](const TraceEvent& ev) { t.events.push_back(ev); });
  t.cover = run.finish();
  t.stats = run.stats();
  return t;
}

std::vector<std::string> render_trace_frames(const TraceArtifacts& t) {
  const Box box = bounds_of(t);
  std::vector<std::string> frames;

  {
    Canvas c(box);
    draw_inputs(c, t.inputs);
    c.caption("input polygons");
    frames.push_back(c.str());
  }
  {
    Canvas c(box);
    draw_inputs(c, t.inputs);
    for (const Ring& h : t.initial_hulls) c.polygon(h, "none", kHullStroke, 1.2);
    c.caption("convex hulls of the inputs");
    frames.push_back(c.str());
  }
  {
    Canvas c(box);
    draw_inputs(c, t.inputs);
    for (const Ring& h : t.initial_hulls) c.polygon(h, "none", kHullStroke, 1.2);
    for (const EdgeTask& e : t.initial_queue)
      c.edge(e.p1, e.p2, kQueueStroke, 1.4, "3,2");
    c.caption("initial edge queue (" + std::to_string(t.initial_queue.size()) +
              " edges)");
    frames.push_back(c.str());
  }

  // Hull states replay alongside the events; each merge gets a panel showing
  // the pre-merge hulls, every ray so far, and the newly queued bridge edges.
  std::map<int, Ring> live;
  for (std::size_t i = 0; i < t.initial_hulls.size(); ++i)
    live[static_cast<int>(i)] = t.initial_hulls[i];
  int merge_no = 0;
  for (std::size_t i = 0; i < t.events.size(); ++i) {
    const TraceEvent& ev = t.events[i];
    if (!ev.merged) continue;
    ++merge_no;
    Canvas c(box);
    draw_inputs(c, t.inputs);
    for (const auto& [id, h] : live) c.polygon(h, "none", kHullStroke, 1.2);
    draw_rays(c, t.events, i + 1);
    c.polygon(ev.merged_hull, "none", kBridgeStroke, 1.4, "6,3");
    for (const EdgeTask& e : ev.new_tasks) c.edge(e.p1, e.p2, kBridgeStroke, 2.2);
    c.caption("merge " + std::to_string(merge_no) + ": collision queues " +
              std::to_string(ev.new_tasks.size()) + " bridge edges");
    frames.push_back(c.str());
    live.erase(ev.root_from);
    live.erase(ev.root_hit);
    live[ev.root_new] = ev.merged_hull;
  }

  {
    Canvas c(box);
    draw_inputs(c, t.inputs);
    draw_rays(c, t.events, t.events.size());
    for (const CoverElement& e : t.cover.elements)
      c.polygon(e.hull, "none", kCoverStroke, 2.0);
    c.caption("all " + std::to_string(t.events.size()) + " rays and the final cover");
    frames.push_back(c.str());
  }
  return frames;
}

std::string render_cover_svg(const std::vector<Ring>& inputs, const Cover& cover) {
  Box box;
  for (const Ring& r : inputs) box.add(r);
  for (const CoverElement& e : cover.elements) box.add(e.hull);
  Canvas c(box);
  draw_inputs(c, inputs);
  for (const CoverElement& e : cover.elements) c.polygon(e.hull, "none", kCoverStroke, 2.0);
  c.caption(std::to_string(cover.elements.size()) + " cover elements, area " +
            cover.total_area().str());
  return c.str();
}

std::string trace_log_json(const TraceArtifacts& t) {
  std::ostringstream out;
  for (const TraceEvent& ev : t.events) {
    nlohmann::ordered_json j;
    j["from"] = {ev.task.p1.x.str(), ev.task.p1.y.str()};
    j["toward"] = {ev.task.p2.x.str(), ev.task.p2.y.str()};
    j["hit"] = {ev.hit.point.x.str(), ev.hit.point.y.str()};
    j["owner"] = ev.task.owner1;
    j["hit_owner"] = ev.hit.obstacle_owner;
    j["merged"] = ev.merged;
    if (ev.merged) {
      nlohmann::ordered_json bridges = nlohmann::ordered_json::array();
      for (const EdgeTask& e : ev.new_tasks) {
        nlohmann::ordered_json b = nlohmann::ordered_json::array();
        b.push_back(nlohmann::ordered_json::array({e.p1.x.str(), e.p1.y.str()}));
        b.push_back(nlohmann::ordered_json::array({e.p2.x.str(), e.p2.y.str()}));
        bridges.push_back(std::move(b));
      }
      j["bridges"] = std::move(bridges);
    }
    out << j.dump() << "\n";
  }
  return out.str();
}

}  // namespace convexcover
