#ifndef MINLAT_TRACE_HPP
#define MINLAT_TRACE_HPP

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "minlat/contact_graph.hpp"

namespace minlat {

/// One recorded contact between two devices.
struct ContactEvent {
    NodeId a;
    NodeId b;
    double start; // seconds
    double end;   // seconds
};

/// Time-ordered contact log. Node ids are compact ([0, N)); the original
/// trace labels are kept in `original_ids`.
struct ContactTrace {
    std::vector<ContactEvent> events; // sorted by start time
    double horizon = 0.0;
    std::vector<long long> original_ids;

    int node_count() const { return static_cast<int>(original_ids.size()); }
};

class TraceParseError : public std::runtime_error {
public:
    TraceParseError(int line, const std::string& what)
        : std::runtime_error("trace line " + std::to_string(line) + ": " + what), line_no(line) {}
    int line_no;
};

/// Parses `a b start end [ack]` lines. `#` starts a comment; blank lines are
/// skipped. Events with ack=0 (one-sided contacts) are dropped; a missing ack
/// column means acknowledged. Node ids are compacted to [0, N) in ascending
/// order of the original labels.
inline ContactTrace parse_trace(std::istream& is) {
    struct RawEvent {
        long long a, b;
        double start, end;
    };
    std::vector<RawEvent> raw;
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        long long a, b;
        double start, end;
        if (!(ls >> a))
            continue; // blank or comment-only line
        if (!(ls >> b >> start >> end))
            throw TraceParseError(line_no, "expected `a b start end [ack]`");
        int ack = 1;
        if (ls >> ack && ack != 0 && ack != 1)
            throw TraceParseError(line_no, "ack column must be 0 or 1");
        std::string extra;
        if (ls >> extra)
            throw TraceParseError(line_no, "trailing fields");
        if (a == b)
            throw TraceParseError(line_no, "self-contact");
        if (end < start)
            throw TraceParseError(line_no, "negative-duration event");
        if (start < 0.0)
            throw TraceParseError(line_no, "negative start time");
        if (ack == 0)
            continue;
        raw.push_back({a, b, start, end});
    }

    ContactTrace trace;
    std::map<long long, NodeId> compact;
    for (const auto& e : raw) {
        compact.emplace(e.a, 0);
        compact.emplace(e.b, 0);
    }
    for (auto& [orig, id] : compact) {
        id = static_cast<NodeId>(trace.original_ids.size());
        trace.original_ids.push_back(orig);
    }
    trace.events.reserve(raw.size());
    for (const auto& e : raw)
        trace.events.push_back({compact[e.a], compact[e.b], e.start, e.end});
    std::stable_sort(trace.events.begin(), trace.events.end(),
                     [](const ContactEvent& x, const ContactEvent& y) { return x.start < y.start; });
    for (const auto& e : trace.events)
        trace.horizon = std::max(trace.horizon, e.end);
    return trace;
}

/// Pairwise meeting rates from a trace: lambda = (#gaps) / (sum of gaps),
/// gaps measured start-to-start between consecutive contacts of a pair.
/// Pairs with fewer than two meetings get rate 0.
inline std::vector<std::vector<double>> empirical_rates(const ContactTrace& trace) {
    const int n = trace.node_count();
    std::vector<std::vector<double>> rates(n, std::vector<double>(n, 0.0));
    std::map<std::pair<NodeId, NodeId>, std::vector<double>> starts;
    for (const auto& e : trace.events) {
        auto key = std::minmax(e.a, e.b);
        starts[{key.first, key.second}].push_back(e.start);
    }
    for (auto& [pair, times] : starts) {
        if (times.size() < 2)
            continue;
        std::sort(times.begin(), times.end());
        double gap_sum = times.back() - times.front();
        if (gap_sum <= 0.0)
            continue;
        double lambda = static_cast<double>(times.size() - 1) / gap_sum;
        rates[pair.first][pair.second] = lambda;
        rates[pair.second][pair.first] = lambda;
    }
    return rates;
}

} // namespace minlat

#endif
