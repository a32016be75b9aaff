#pragma once

#include <array>
#include <string>
#include <vector>

namespace ks {

// Planar diagram code.  Each crossing is a 4-tuple of arc labels listed
// counterclockwise starting from the incoming under-strand.
struct PDCode {
    std::vector<std::array<int, 4>> crossings;
};

// Braid word on `strands` strands; letter i means generator sigma_|i| with
// sign(i) the crossing sign.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;
};

// A validated diagram: arcs relabeled 0..2c-1, orientation inferred,
// crossing signs resolved.  Always a single knot component.
class OrientedPD {
  public:
    // Validates arc counts, connectivity, single-componentness and infers
    // the orientation.  Throws input_error on malformed diagrams.
    explicit OrientedPD(const PDCode& pd);

    const PDCode& pd() const { return pd_; }
    int crossing_count() const { return static_cast<int>(pd_.crossings.size()); }
    int arc_count() const { return arc_count_; }
    // +1 or -1 per crossing.
    const std::vector<int>& signs() const { return signs_; }
    int writhe() const;
    // Crossings with internal 0-based arc labels.
    const std::vector<std::array<int, 4>>& tuples() const { return tuples_; }

  private:
    PDCode pd_;
    int arc_count_ = 0;
    std::vector<std::array<int, 4>> tuples_;
    std::vector<int> signs_;
};

PDCode parse_pd(const std::string& text);
BraidWord parse_braid(const std::string& text);

// Number of components of the braid closure (permutation cycle count).
int closure_components(const BraidWord& b);

// Validates strand bounds and single-component closure.
void validate_braid_knot(const BraidWord& b);

// Sum of letter signs.
int braid_writhe(const BraidWord& b);

// Mirror image: every letter sign flipped.
BraidWord mirror(const BraidWord& b);

// The closure diagram of the braid.
PDCode braid_to_pd(const BraidWord& b);

// A braid on q*strands whose closure is the (p,q)-cable of closure(b).
// The blackboard q-parallel carries framing equal to the writhe; the framing
// correction (sigma_1...sigma_{q-1})^(p - q*writhe) is appended at the end.
BraidWord cable_braid(const BraidWord& b, long p, long q);

std::string pd_to_string(const PDCode& pd);
std::string braid_to_string(const BraidWord& b);

}  // namespace ks
