#include "bennequin/front.hpp"

#include <array>
#include <charconv>
#include <cstddef>
#include <utility>

#include "bennequin/errors.hpp"

namespace bennequin {

namespace {

char kind_letter(FrontEventKind kind) {
  switch (kind) {
    case FrontEventKind::left_cusp: return 'L';
    case FrontEventKind::right_cusp: return 'R';
    case FrontEventKind::crossing: return 'X';
  }
  return '?';
}

std::string event_token(const FrontEvent& event) {
  return kind_letter(event.kind) + std::to_string(event.position);
}

[[noreturn]] void fail_event(int ordinal, const FrontEvent& event,
                             const std::string& reason) {
  throw parse_error("front event " + std::to_string(ordinal) + " (" +
                    event_token(event) + "): " + reason);
}

// One-pass simulation; returns the left-cusp count (== right-cusp count for
// a valid front). Throws parse_error on any invariant violation.
int validate_events(const std::vector<FrontEvent>& events) {
  int strands = 0;
  int left_cusps = 0;
  int right_cusps = 0;
  int ordinal = 0;
  for (const FrontEvent& event : events) {
    ++ordinal;
    switch (event.kind) {
      case FrontEventKind::left_cusp:
        if (event.position < 1 || event.position > strands + 1) {
          fail_event(ordinal, event,
                     "left cusp position out of range 1.." +
                         std::to_string(strands + 1) + " at a slice with " +
                         std::to_string(strands) + " strands");
        }
        strands += 2;
        ++left_cusps;
        break;
      case FrontEventKind::right_cusp:
      case FrontEventKind::crossing:
        if (event.position < 1 || event.position > strands - 1) {
          fail_event(ordinal, event,
                     std::string(event.kind == FrontEventKind::right_cusp
                                     ? "right cusp"
                                     : "crossing") +
                         " position out of range 1.." +
                         std::to_string(strands - 1) + " at a slice with " +
                         std::to_string(strands) + " strands");
        }
        if (event.kind == FrontEventKind::right_cusp) {
          strands -= 2;
          ++right_cusps;
        }
        break;
    }
  }
  // strands == 2 * (left_cusps - right_cusps), so a nonzero end count and a
  // cusp-count mismatch are the same defect; one message covers both.
  if (strands != 0) {
    throw parse_error("front ends with " + std::to_string(strands) +
                      " open strands (" + std::to_string(left_cusps) +
                      " left cusps vs " + std::to_string(right_cusps) +
                      " right cusps)");
  }
  return left_cusps;
}

// Segment connectivity: each segment has a left end (side 0) and a right end
// (side 1); cusps and crossing continuations pair these ends, so the whole
// diagram is a disjoint union of cycles.
struct EndLink {
  int segment = -1;
  int side = -1;
};

struct CuspPair {
  int upper = -1;
  int lower = -1;
};

struct CrossingPair {
  int upper_in = -1;  // segment entering position i
  int lower_in = -1;  // segment entering position i+1
};

struct SegmentGraph {
  std::vector<std::array<EndLink, 2>> links;
  std::vector<CuspPair> left_cusps;   // in event order
  std::vector<CuspPair> right_cusps;  // in event order
  std::vector<CrossingPair> crossings;

  int new_segment() {
    links.push_back({});
    return static_cast<int>(links.size()) - 1;
  }
  void connect(int a, int a_side, int b, int b_side) {
    links[static_cast<std::size_t>(a)][static_cast<std::size_t>(a_side)] = {
        b, b_side};
    links[static_cast<std::size_t>(b)][static_cast<std::size_t>(b_side)] = {
        a, a_side};
  }
};

// Events must already be validated.
SegmentGraph build_graph(const std::vector<FrontEvent>& events) {
  SegmentGraph graph;
  std::vector<int> active;  // segment ids top to bottom at the current slice
  for (const FrontEvent& event : events) {
    std::size_t i = static_cast<std::size_t>(event.position) - 1;
    switch (event.kind) {
      case FrontEventKind::left_cusp: {
        int upper = graph.new_segment();
        int lower = graph.new_segment();
        graph.connect(upper, 0, lower, 0);
        graph.left_cusps.push_back({upper, lower});
        active.insert(active.begin() + static_cast<std::ptrdiff_t>(i),
                      {upper, lower});
        break;
      }
      case FrontEventKind::right_cusp: {
        int upper = active[i];
        int lower = active[i + 1];
        graph.connect(upper, 1, lower, 1);
        graph.right_cusps.push_back({upper, lower});
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(i),
                     active.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        break;
      }
      case FrontEventKind::crossing: {
        int upper = active[i];
        int lower = active[i + 1];
        int upper_out = graph.new_segment();  // continues upper, now below
        int lower_out = graph.new_segment();  // continues lower, now above
        graph.connect(upper, 1, upper_out, 0);
        graph.connect(lower, 1, lower_out, 0);
        graph.crossings.push_back({upper, lower});
        active[i] = lower_out;
        active[i + 1] = upper_out;
        break;
      }
    }
  }
  return graph;
}

// Walks every cycle once; calls visit(segment, heading) for each segment with
// the x-direction (+1 rightward / -1 leftward) it is traversed in. Starting
// headings: each unvisited segment is entered rightward.
template <typename Visit>
int walk_cycles(const SegmentGraph& graph, Visit visit) {
  std::vector<char> visited(graph.links.size(), 0);
  int cycles = 0;
  for (int start = 0; start < static_cast<int>(graph.links.size()); ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    ++cycles;
    int segment = start;
    int heading = 1;
    do {
      visited[static_cast<std::size_t>(segment)] = 1;
      visit(segment, heading);
      // Leave via the end we are heading toward, enter the linked segment at
      // the linked end; entering on the left means moving rightward.
      const EndLink& link =
          graph.links[static_cast<std::size_t>(segment)]
                     [heading == 1 ? 1u : 0u];
      segment = link.segment;
      heading = (link.side == 0) ? 1 : -1;
    } while (segment != start || heading != 1);
  }
  return cycles;
}

int count_right_cusps(const std::vector<FrontEvent>& events) {
  int count = 0;
  for (const FrontEvent& event : events) {
    if (event.kind == FrontEventKind::right_cusp) ++count;
  }
  return count;
}

}  // namespace

FrontDiagram::FrontDiagram(std::vector<FrontEvent> events)
    : events_(std::move(events)) {
  int left_cusps = validate_events(events_);
  int crossings = 0;
  for (const FrontEvent& event : events_) {
    if (event.kind == FrontEventKind::crossing) ++crossings;
  }
  segment_count_ = 2 * left_cusps + 2 * crossings;
}

FrontDiagram FrontDiagram::parse(std::string_view text) {
  std::vector<FrontEvent> events;
  std::size_t i = 0;
  int ordinal = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' ||
                               text[i] == '\n' || text[i] == '\r')) {
      ++i;
    }
    if (i >= text.size()) break;
    std::size_t start = i;
    while (i < text.size() && text[i] != ' ' && text[i] != '\t' &&
           text[i] != '\n' && text[i] != '\r') {
      ++i;
    }
    std::string_view token = text.substr(start, i - start);
    ++ordinal;
    FrontEventKind kind;
    switch (token.front()) {
      case 'L': kind = FrontEventKind::left_cusp; break;
      case 'R': kind = FrontEventKind::right_cusp; break;
      case 'X': kind = FrontEventKind::crossing; break;
      default:
        throw parse_error("front token " + std::to_string(ordinal) + " ('" +
                          std::string(token) +
                          "'): expected L<i>, R<i>, or X<i>");
    }
    std::string_view digits = token.substr(1);
    int position = 0;
    auto [end, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), position);
    if (ec != std::errc() || end != digits.data() + digits.size() ||
        position < 1) {
      throw parse_error("front token " + std::to_string(ordinal) + " ('" +
                        std::string(token) +
                        "'): expected a positive integer position");
    }
    events.push_back({kind, position});
  }
  return FrontDiagram(std::move(events));
}

int component_count(const FrontDiagram& front) {
  SegmentGraph graph = build_graph(front.events());
  return walk_cycles(graph, [](int, int) {});
}

OrientedFront::OrientedFront(FrontDiagram front,
                             std::vector<StrandDirection> directions)
    : front_(std::move(front)), directions_(std::move(directions)) {
  if (static_cast<int>(directions_.size()) != front_.segment_count()) {
    throw domain_error("orientation has " +
                       std::to_string(directions_.size()) +
                       " direction flags for " +
                       std::to_string(front_.segment_count()) + " segments");
  }
}

OrientedFront orient(const FrontDiagram& front) {
  int components = component_count(front);
  if (components != 1) {
    throw domain_error("front has " + std::to_string(components) +
                       " components; knot operations require exactly 1");
  }
  SegmentGraph graph = build_graph(front.events());
  std::vector<StrandDirection> directions(
      graph.links.size(), StrandDirection::rightward);
  // Single component: the walk starts at segment 0, the upper strand of the
  // first left cusp, heading rightward — the canonical basepoint.
  walk_cycles(graph, [&directions](int segment, int heading) {
    directions[static_cast<std::size_t>(segment)] =
        heading == 1 ? StrandDirection::rightward : StrandDirection::leftward;
  });
  return OrientedFront(front, std::move(directions));
}

OrientedFront reverse_orientation(const OrientedFront& oriented) {
  std::vector<StrandDirection> flipped = oriented.directions();
  for (StrandDirection& direction : flipped) {
    direction = direction == StrandDirection::rightward
                    ? StrandDirection::leftward
                    : StrandDirection::rightward;
  }
  return OrientedFront(oriented.diagram(), std::move(flipped));
}

std::vector<int> crossing_signs(const OrientedFront& oriented) {
  SegmentGraph graph = build_graph(oriented.diagram().events());
  const auto& directions = oriented.directions();
  std::vector<int> signs;
  signs.reserve(graph.crossings.size());
  for (const CrossingPair& crossing : graph.crossings) {
    int upper = static_cast<int>(
        directions[static_cast<std::size_t>(crossing.upper_in)]);
    int lower = static_cast<int>(
        directions[static_cast<std::size_t>(crossing.lower_in)]);
    signs.push_back(upper * lower);
  }
  return signs;
}

long long thurston_bennequin(const OrientedFront& oriented) {
  long long writhe = 0;
  for (int sign : crossing_signs(oriented)) writhe += sign;
  return writhe - count_right_cusps(oriented.diagram().events());
}

long long rotation_number(const OrientedFront& oriented) {
  SegmentGraph graph = build_graph(oriented.diagram().events());
  const auto& directions = oriented.directions();
  auto direction_of = [&directions](int segment) {
    return directions[static_cast<std::size_t>(segment)];
  };
  long long down = 0;
  long long up = 0;
  // A cusp is down-oriented when the traversal passes upper -> lower: at a
  // left cusp that means entering the upper branch leftward, at a right cusp
  // entering it rightward.
  for (const CuspPair& cusp : graph.left_cusps) {
    (direction_of(cusp.upper) == StrandDirection::leftward ? down : up) += 1;
  }
  for (const CuspPair& cusp : graph.right_cusps) {
    (direction_of(cusp.upper) == StrandDirection::rightward ? down : up) += 1;
  }
  return (down - up) / 2;
}

long long transverse_pushoff_sl(const OrientedFront& oriented, int sign) {
  if (sign != 1 && sign != -1) {
    throw domain_error("push-off sign must be +1 or -1, got " +
                       std::to_string(sign));
  }
  return thurston_bennequin(oriented) - sign * rotation_number(oriented);
}

std::string render(const FrontDiagram& front) {
  std::string text;
  bool first = true;
  for (const FrontEvent& event : front.events()) {
    if (!first) text += ' ';
    first = false;
    text += event_token(event);
  }
  return text;
}

}  // namespace bennequin
