#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "netinterp/graph.hpp"
#include "netinterp/interpolation.hpp"

namespace netinterp {

struct Event {
    int u = 0;  // dense indices via the label map
    int v = 0;
    int64_t t = 0;
};

struct EventList {
    int n = 0;
    std::vector<Event> events;  // nondecreasing timestamps
    std::vector<std::string> labels;  // dense index -> external label
    std::unordered_map<std::string, int> label_map;
};

struct SnapshotSet {
    std::vector<Graph> snapshots;
    std::vector<int64_t> cutoffs;
};

// Whitespace-separated `u v [t]` lines; `#` starts a comment line; labels map
// to dense indices in first-appearance order; events missing a timestamp get
// their line order; the result is stably sorted by timestamp.
EventList read_edge_list(const std::string& path);

// Coauthorship-style lines `t a1 a2 ... ak`: one event per author pair.
// Lines with more than max_authors authors are skipped.
EventList read_author_list(const std::string& path, int max_authors = 10);

enum class AggregationMode { Cumulative };

// Snapshot k holds an edge iff some event between the pair has t <= cutoff_k.
// Self-loop events are dropped; duplicate pairs collapse to one edge.
SnapshotSet aggregate_snapshots(const EventList& events, const std::vector<int64_t>& cutoffs,
                                AggregationMode mode = AggregationMode::Cumulative,
                                bool directed = false);

void write_graph(const std::string& path, const Graph& g);
Graph read_graph(const std::string& path);

void write_trace(const std::string& path, const Trace& trace);
Trace read_trace(const std::string& path);

std::string graph_to_string(const Graph& g);
Graph graph_from_string(const std::string& text);
std::string trace_to_string(const Trace& trace);
Trace trace_from_string(const std::string& text);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace netinterp
