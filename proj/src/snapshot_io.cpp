#include "netinterp/snapshot_io.hpp"

#include <algorithm>
#include <cctype>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace netinterp {

namespace {

int map_label(EventList& ev, const std::string& label) {
    auto [it, inserted] = ev.label_map.try_emplace(label, ev.n);
    if (inserted) {
        ev.labels.push_back(label);
        ++ev.n;
    }
    return it->second;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> toks;
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

int64_t parse_int64(const std::string& tok, const std::string& path, size_t lineno) {
    try {
        size_t pos = 0;
        int64_t v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected an integer, got '" + tok + "'");
    }
}

}  // namespace

EventList read_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_edge_list: cannot open " + path);
    EventList ev;
    std::string line;
    size_t lineno = 0;
    int64_t order = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_comment_or_blank(line)) continue;
        auto toks = tokens_of(line);
        if (toks.size() != 2 && toks.size() != 3)
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected 'u v [t]', got " + std::to_string(toks.size()) + " fields");
        Event e;
        e.u = map_label(ev, toks[0]);
        e.v = map_label(ev, toks[1]);
        e.t = toks.size() == 3 ? parse_int64(toks[2], path, lineno) : order;
        ev.events.push_back(e);
        ++order;
    }
    std::stable_sort(ev.events.begin(), ev.events.end(), [](const Event& a, const Event& b) { return a.t < b.t; });
    return ev;
}

EventList read_author_list(const std::string& path, int max_authors) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_author_list: cannot open " + path);
    EventList ev;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_comment_or_blank(line)) continue;
        auto toks = tokens_of(line);
        if (toks.size() < 2)
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected 't a1 [a2 ...]'");
        int64_t t = parse_int64(toks[0], path, lineno);
        int authors = static_cast<int>(toks.size()) - 1;
        if (authors > max_authors) continue;
        std::vector<int> ids;
        ids.reserve(static_cast<size_t>(authors));
        for (int i = 1; i <= authors; ++i) ids.push_back(map_label(ev, toks[static_cast<size_t>(i)]));
        for (size_t i = 0; i < ids.size(); ++i)
            for (size_t j = i + 1; j < ids.size(); ++j) ev.events.push_back(Event{ids[i], ids[j], t});
    }
    std::stable_sort(ev.events.begin(), ev.events.end(), [](const Event& a, const Event& b) { return a.t < b.t; });
    return ev;
}

SnapshotSet aggregate_snapshots(const EventList& events, const std::vector<int64_t>& cutoffs,
                                AggregationMode mode, bool directed) {
    (void)mode;
    for (size_t i = 1; i < cutoffs.size(); ++i)
        if (cutoffs[i] <= cutoffs[i - 1]) throw std::invalid_argument("aggregate_snapshots: cutoffs must increase");

    SnapshotSet out;
    out.cutoffs = cutoffs;
    int n = std::max(events.n, 1);
    Graph acc(n, directed);
    size_t next = 0;
    for (int64_t cutoff : cutoffs) {
        while (next < events.events.size() && events.events[next].t <= cutoff) {
            const Event& e = events.events[next++];
            if (e.u != e.v && !acc.has_edge(e.u, e.v)) acc.add_edge(e.u, e.v);
        }
        out.snapshots.push_back(acc);
    }
    return out;
}

std::string graph_to_string(const Graph& g) {
    std::ostringstream os;
    os << "n " << g.vertex_count() << " directed " << (g.directed() ? 1 : 0) << '\n';
    for (const Edge& e : g.sorted_edges()) os << e.u << ' ' << e.v << '\n';
    return os.str();
}

Graph graph_from_string(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;
    int n = -1, directed = -1;
    Graph g(1, false);
    while (std::getline(in, line)) {
        ++lineno;
        if (is_comment_or_blank(line)) continue;
        auto toks = tokens_of(line);
        if (n < 0) {
            if (toks.size() != 4 || toks[0] != "n" || toks[2] != "directed")
                throw std::runtime_error("graph: line " + std::to_string(lineno) +
                                         ": expected header 'n <N> directed <0|1>'");
            n = static_cast<int>(parse_int64(toks[1], "graph", lineno));
            directed = static_cast<int>(parse_int64(toks[3], "graph", lineno));
            g = Graph(n, directed != 0);
            continue;
        }
        if (toks.size() != 2)
            throw std::runtime_error("graph: line " + std::to_string(lineno) + ": expected 'u v'");
        g.add_edge(static_cast<Vertex>(parse_int64(toks[0], "graph", lineno)),
                   static_cast<Vertex>(parse_int64(toks[1], "graph", lineno)));
    }
    if (n < 0) throw std::runtime_error("graph: missing header line");
    return g;
}

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

constexpr const char* kTraceMagic = "netinterp-trace";
constexpr int kTraceVersion = 1;

}  // namespace

std::string trace_to_string(const Trace& trace) {
    std::ostringstream os;
    os << kTraceMagic << ' ' << kTraceVersion << '\n';
    os << "n " << trace.n << " directed " << (trace.directed ? 1 : 0) << '\n';
    os << "seed " << trace.config.seed << '\n';
    os << "rate " << format_double(trace.config.rate) << " target_distance " << trace.config.target_distance
       << " mode " << to_string(trace.config.mode) << " steps " << trace.config.steps
       << " allow_false_edges " << (trace.config.allow_false_edges ? 1 : 0) << " max_steps "
       << trace.config.max_steps << " stat_every " << trace.config.stat_sample_every << '\n';
    os << "initial_distance " << trace.initial_distance << '\n';
    os << "step_count " << trace.steps.size() << '\n';
    for (const TraceStep& s : trace.steps) {
        char dir = s.advancing ? (s.fallback ? 'f' : 'a') : 'r';
        os << dir << ' ' << s.edge.u << ' ' << s.edge.v << ' ' << s.sign << '\n';
    }
    return os.str();
}

Trace trace_from_string(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    auto next_line = [&](const char* what) {
        if (!std::getline(in, line)) throw std::runtime_error(std::string("trace: truncated before ") + what);
        return tokens_of(line);
    };

    auto magic = next_line("magic");
    if (magic.size() != 2 || magic[0] != kTraceMagic)
        throw std::runtime_error("trace: not a netinterp trace file");
    if (std::stoi(magic[1]) != kTraceVersion)
        throw std::runtime_error("trace: unsupported version " + magic[1]);

    Trace t;
    auto hdr = next_line("graph header");
    if (hdr.size() != 4 || hdr[0] != "n" || hdr[2] != "directed") throw std::runtime_error("trace: bad graph header");
    t.n = std::stoi(hdr[1]);
    t.directed = std::stoi(hdr[3]) != 0;

    auto seed = next_line("seed");
    if (seed.size() != 2 || seed[0] != "seed") throw std::runtime_error("trace: bad seed line");
    t.config.seed = std::stoull(seed[1]);

    auto cfg = next_line("config");
    if (cfg.size() != 14 || cfg[0] != "rate") throw std::runtime_error("trace: bad config line");
    t.config.rate = std::stod(cfg[1]);
    t.config.target_distance = std::stoll(cfg[3]);
    t.config.mode = stop_mode_from_string(cfg[5]);
    t.config.steps = std::stoll(cfg[7]);
    t.config.allow_false_edges = std::stoi(cfg[9]) != 0;
    t.config.max_steps = std::stoll(cfg[11]);
    t.config.stat_sample_every = std::stoll(cfg[13]);

    auto d0 = next_line("initial distance");
    if (d0.size() != 2 || d0[0] != "initial_distance") throw std::runtime_error("trace: bad initial_distance line");
    t.initial_distance = std::stoll(d0[1]);

    auto count = next_line("step count");
    if (count.size() != 2 || count[0] != "step_count") throw std::runtime_error("trace: bad step_count line");
    int64_t steps = std::stoll(count[1]);

    int64_t d = t.initial_distance;
    t.steps.reserve(static_cast<size_t>(steps));
    for (int64_t i = 0; i < steps; ++i) {
        auto s = next_line("step");
        if (s.size() != 4) throw std::runtime_error("trace: bad step line " + std::to_string(i));
        TraceStep st;
        if (s[0] == "a" || s[0] == "f") {
            st.advancing = true;
            st.fallback = s[0] == "f";
        } else if (s[0] == "r") {
            st.advancing = false;
        } else {
            throw std::runtime_error("trace: bad direction '" + s[0] + "'");
        }
        st.edge.u = std::stoi(s[1]);
        st.edge.v = std::stoi(s[2]);
        st.sign = std::stoi(s[3]);
        d += st.advancing ? -1 : +1;
        st.d_after = d;
        t.steps.push_back(st);
    }
    return t;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_graph(const std::string& path, const Graph& g) { write_text_file(path, graph_to_string(g)); }

Graph read_graph(const std::string& path) { return graph_from_string(read_text_file(path)); }

void write_trace(const std::string& path, const Trace& trace) { write_text_file(path, trace_to_string(trace)); }

Trace read_trace(const std::string& path) { return trace_from_string(read_text_file(path)); }

}  // namespace netinterp
