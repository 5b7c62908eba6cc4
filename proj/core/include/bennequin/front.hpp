#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bennequin {

enum class FrontEventKind : std::uint8_t { left_cusp, right_cusp, crossing };

// One slice event of a front diagram, at a 1-based position into the
// top-to-bottom order of strands alive at that slice.
struct FrontEvent {
  FrontEventKind kind;
  int position;

  bool operator==(const FrontEvent&) const = default;
};

// A Legendrian front encoded as slice events read left to right:
//   L<i>  left cusp: births two strands at positions i, i+1
//   R<i>  right cusp: joins and removes the strands at positions i, i+1
//   X<i>  crossing: swaps the strands at positions i, i+1
// A valid diagram starts and ends with zero strands; every event position
// must be in range for the strand count at its slice.
class FrontDiagram {
 public:
  explicit FrontDiagram(std::vector<FrontEvent> events);  // validates
  static FrontDiagram parse(std::string_view text);

  const std::vector<FrontEvent>& events() const noexcept { return events_; }
  // Number of maximal smooth arcs between events (two per left cusp).
  int segment_count() const noexcept { return segment_count_; }

  bool operator==(const FrontDiagram& other) const {
    return events_ == other.events_;
  }

 private:
  std::vector<FrontEvent> events_;
  int segment_count_ = 0;
};

int component_count(const FrontDiagram& front);

enum class StrandDirection : std::int8_t { leftward = -1, rightward = 1 };

// A single-component front with a traversal orientation: one x-direction flag
// per segment, segments numbered in creation order of the left-to-right sweep.
class OrientedFront {
 public:
  OrientedFront(FrontDiagram front, std::vector<StrandDirection> directions);

  const FrontDiagram& diagram() const noexcept { return front_; }
  const std::vector<StrandDirection>& directions() const noexcept {
    return directions_;
  }

 private:
  FrontDiagram front_;
  std::vector<StrandDirection> directions_;
};

// Orients the unique component, starting rightward along the upper branch of
// the first left cusp. Requires component_count == 1.
OrientedFront orient(const FrontDiagram& front);

OrientedFront reverse_orientation(const OrientedFront& oriented);

// Signs of the crossings in event order (+1 iff the two strands entering the
// crossing point in the same x-direction).
std::vector<int> crossing_signs(const OrientedFront& oriented);

// tb = writhe - (number of right cusps).
long long thurston_bennequin(const OrientedFront& oriented);

// rot = (down cusps - up cusps) / 2.
long long rotation_number(const OrientedFront& oriented);

// Self-linking number of the transverse push-off: tb - sign * rot,
// sign in {+1, -1}.
long long transverse_pushoff_sl(const OrientedFront& oriented, int sign);

// Canonical text form: events as L<i>/R<i>/X<i> separated by single spaces.
std::string render(const FrontDiagram& front);

}  // namespace bennequin
