#ifndef QH_DESCRIPTOR_HPP
#define QH_DESCRIPTOR_HPP

#include <memory>
#include <string>
#include <vector>

#include "qh/cohomology.hpp"
#include "qh/semisimple.hpp"

namespace qh {

// Line-oriented descriptor text: `#` comments, key-value lines
//   name: <id>
//   ambient: P3|Q3
//   curve: <j> degree=<d>
//   basis: q<i> = <integer combination of L0, F1, F2>
//   geom: I(<class expr> | <insertions>) = <rational>
// Unknown keys are errors; syntax errors carry the line number.
ThreefoldDescriptor parse_descriptor(const std::string& text);
ThreefoldDescriptor load_descriptor(const std::string& path);

// Canonical rendering; parse(render(d)) == d.
std::string render_descriptor(const ThreefoldDescriptor& d);

struct ExpectedData {
  long essential_count = -1;  // N
  int dim_a = -1;
  long deg_a = -1;
  std::vector<std::string> relations;  // canonical polynomial text
};

ExpectedData parse_expected(const std::string& text);
ExpectedData load_expected(const std::string& path);

// Stand-alone presentation file (for sanity inputs such as P3):
//   presentation
//   generator: <name> weight=<w>
//   qvar: <name> weight=<w>
//   relation: <canonical polynomial>
struct LoadedPresentation {
  std::unique_ptr<PolyRing> ring;
  PresentationInput input;  // views into *ring
};

LoadedPresentation parse_presentation(const std::string& text);
LoadedPresentation load_presentation(const std::string& path);

bool looks_like_presentation(const std::string& text);

std::string read_file(const std::string& path);

}  // namespace qh

#endif
