#pragma once

#include <string>
#include <vector>

#include "convexcover/convexify.hpp"
#include "convexcover/geom.hpp"

namespace convexcover {

// A full execution recording: the states a drawing needs that the final
// cover alone cannot reconstruct.
struct TraceArtifacts {
  std::vector<Ring> inputs;
  std::vector<Ring> initial_hulls;      // indexed by input id
  std::vector<EdgeTask> initial_queue;
  std::vector<TraceEvent> events;       // one per ray shot
  Cover cover;
  RunStats stats;
};

// Runs the solver on polygon inputs while recording every ray event.
TraceArtifacts run_traced(const std::vector<Ring>& inputs, EngineKind kind);

// One SVG document per panel: the inputs, their hulls, the initial edge
// queue, one panel per merge (all rays so far, the bridge edges and the new
// hull highlighted), and a final panel with every ray over the finished
// cover. Panel count = 4 + merges.
std::vector<std::string> render_trace_frames(const TraceArtifacts& t);

// Single document: the finished cover outlined over its filled inputs.
std::string render_cover_svg(const std::vector<Ring>& inputs, const Cover& cover);

// One JSON object per line, one line per ray event, exact coordinates.
std::string trace_log_json(const TraceArtifacts& t);

}  // namespace convexcover
